#pragma once

#include "gca/grading.hpp"
#include "gca/linalg.hpp"
#include "gca/scalar.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace gca {

struct BasisVector {
    std::string label;
    Degree degree;
    friend bool operator==(const BasisVector&, const BasisVector&) = default;
};

struct Term {
    std::size_t index;
    Scalar coeff;
    friend bool operator==(const Term&, const Term&) = default;
};

/// e_i * e_j = sum of terms; sorted by index, no zero coefficients.
using Product = std::vector<Term>;

struct StructureConstant {
    std::size_t i;
    std::size_t j;
    Product terms;
};

/// Sparse linear combination of basis vectors with no stored zeros.
class Element {
public:
    Element() = default;
    static Element basis(std::size_t i, Scalar c = 1);
    static Element from_vector(const Vector& v);
    static Element from_terms(const Product& terms);

    const std::map<std::size_t, Scalar>& coefficients() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }
    Scalar coeff(std::size_t i) const;
    void add(std::size_t i, const Scalar& c);  // drops the entry when it cancels

    Vector to_vector(std::size_t dim) const;

    Element& operator+=(const Element& o);
    Element& operator-=(const Element& o);
    friend Element operator+(Element a, const Element& b) { return a += b; }
    friend Element operator-(Element a, const Element& b) { return a -= b; }
    friend Element operator*(const Scalar& s, const Element& e);
    friend bool operator==(const Element&, const Element&) = default;

private:
    std::map<std::size_t, Scalar> coeffs_;
};

/// Finite-dimensional (Z2)^m-graded algebra given by exact structure constants.
/// Immutable once built; every instance has passed the grading (and unit) checks.
class GradedAlgebra {
public:
    /// Validates indices, the grading invariant, label uniqueness and (if given) the unit law.
    static GradedAlgebra make(Field field, int width, std::vector<BasisVector> basis,
                              const std::vector<StructureConstant>& constants, BilinearFormZ2 form,
                              std::optional<std::size_t> unit = std::nullopt);

    Field field() const { return field_; }
    int width() const { return width_; }
    std::size_t dim() const { return basis_.size(); }
    const std::vector<BasisVector>& basis() const { return basis_; }
    const BasisVector& basis(std::size_t i) const { return basis_[i]; }
    const Degree& degree(std::size_t i) const { return basis_[i].degree; }
    const BilinearFormZ2& form() const { return form_; }
    std::optional<std::size_t> unit() const { return unit_; }

    const Product& product(std::size_t i, std::size_t j) const { return table_[i * basis_.size() + j]; }
    /// Nonzero structure constants in (i, j) order.
    std::vector<StructureConstant> constants() const;

    std::optional<std::size_t> index_of(const std::string& label) const;
    std::size_t at(const std::string& label) const;  // throws SchemaError for unknown labels

    /// Basis element by label, as an Element.
    Element operator[](const std::string& label) const { return Element::basis(at(label)); }

    friend bool operator==(const GradedAlgebra&, const GradedAlgebra&) = default;

private:
    GradedAlgebra() = default;

    Field field_ = Field::Rational;
    int width_ = 0;
    std::vector<BasisVector> basis_;
    std::vector<Product> table_;
    BilinearFormZ2 form_;
    std::optional<std::size_t> unit_;
};

Element multiply(const GradedAlgebra& a, const Element& x, const Element& y);

/// sum_gamma (-1)^{form(d, gamma)} x_gamma, so that a x = twist(x, deg a) a for homogeneous a.
Element twist(const GradedAlgebra& a, const Element& x, const Degree& d);

/// Span of the basis vectors of degree gamma.
Subspace component(const GradedAlgebra& a, const Degree& gamma);

std::vector<std::size_t> component_indices(const GradedAlgebra& a, const Degree& gamma);

struct ParitySplit {
    std::vector<std::size_t> even;
    std::vector<std::size_t> odd;
};

/// Splits the basis by parity of the degree; throws StructuralError if the even part is not closed.
ParitySplit parity_split(const GradedAlgebra& a);

GradedAlgebra even_part_algebra(const GradedAlgebra& a);

enum class Side { Left, Right };

/// Matrix of b -> x b (Left) or b -> b x (Right); column j is the image of e_j.
Matrix multiplication_operator(const GradedAlgebra& a, const Element& x, Side side);

/// {b : x b = 0} for Left, {b : b x = 0} for Right.
Subspace annihilator(const GradedAlgebra& a, const Element& x, Side side);

/// Keeps the listed degree coordinates (in the given order) and swaps in a new form.
GradedAlgebra project_grading(const GradedAlgebra& a, const std::vector<int>& keep, const BilinearFormZ2& new_form);

/// Same constants, different form (width must match).
GradedAlgebra with_form(const GradedAlgebra& a, const BilinearFormZ2& form);

/// A two-sided identity when one exists, found by solving the linear system.
std::optional<Element> find_unit(const GradedAlgebra& a);

/// Renders an element as "1/2 a_k - i" using basis labels.
std::string render(const GradedAlgebra& a, const Element& x);

}  // namespace gca
