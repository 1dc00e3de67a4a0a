#include "gca/algebra.hpp"

#include "gca/errors.hpp"

#include <algorithm>
#include <set>

namespace gca {

Element Element::basis(std::size_t i, Scalar c) {
    Element e;
    e.add(i, c);
    return e;
}

Element Element::from_vector(const Vector& v) {
    Element e;
    for (std::size_t i = 0; i < v.size(); ++i)
        if (!v[i].is_zero()) e.coeffs_.emplace(i, v[i]);
    return e;
}

Element Element::from_terms(const Product& terms) {
    Element e;
    for (const auto& t : terms) e.add(t.index, t.coeff);
    return e;
}

Scalar Element::coeff(std::size_t i) const {
    auto it = coeffs_.find(i);
    return it == coeffs_.end() ? Scalar() : it->second;
}

void Element::add(std::size_t i, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = coeffs_.try_emplace(i, c);
    if (inserted) return;
    it->second += c;
    if (it->second.is_zero()) coeffs_.erase(it);
}

Vector Element::to_vector(std::size_t dim) const {
    Vector v(dim);
    for (const auto& [i, c] : coeffs_) {
        if (i >= dim) throw DimensionError("element index " + std::to_string(i) + " outside dimension");
        v[i] = c;
    }
    return v;
}

Element& Element::operator+=(const Element& o) {
    for (const auto& [i, c] : o.coeffs_) add(i, c);
    return *this;
}

Element& Element::operator-=(const Element& o) {
    for (const auto& [i, c] : o.coeffs_) add(i, -c);
    return *this;
}

Element operator*(const Scalar& s, const Element& e) {
    Element out;
    if (s.is_zero()) return out;
    for (const auto& [i, c] : e.coeffs_) out.coeffs_.emplace(i, s * c);
    return out;
}

GradedAlgebra GradedAlgebra::make(Field field, int width, std::vector<BasisVector> basis,
                                  const std::vector<StructureConstant>& constants, BilinearFormZ2 form,
                                  std::optional<std::size_t> unit) {
    if (width < 0 || width > kMaxDegreeWidth) throw DimensionError("grading width outside [0, 64]");
    if (form.width() != width)
        throw DimensionError("form width " + std::to_string(form.width()) + " does not match grading width " +
                             std::to_string(width));
    const std::size_t n = basis.size();
    std::set<std::string> labels;
    for (std::size_t i = 0; i < n; ++i) {
        if (basis[i].degree.width() != width)
            throw DimensionError("basis element '" + basis[i].label + "' has degree width " +
                                 std::to_string(basis[i].degree.width()) + ", expected " + std::to_string(width));
        if (basis[i].label.empty()) throw SchemaError("basis element " + std::to_string(i) + " has an empty label");
        if (!labels.insert(basis[i].label).second) throw SchemaError("duplicate basis label '" + basis[i].label + "'");
    }

    GradedAlgebra a;
    a.field_ = field;
    a.width_ = width;
    a.basis_ = std::move(basis);
    a.form_ = std::move(form);
    a.table_.assign(n * n, {});

    std::vector<bool> seen(n * n, false);
    for (const auto& sc : constants) {
        if (sc.i >= n || sc.j >= n)
            throw SchemaError("structure constant index (" + std::to_string(sc.i) + "," + std::to_string(sc.j) +
                              ") out of range");
        if (seen[sc.i * n + sc.j])
            throw SchemaError("duplicate structure constant for (" + std::to_string(sc.i) + "," + std::to_string(sc.j) +
                              ")");
        seen[sc.i * n + sc.j] = true;
        Element acc;
        for (const auto& t : sc.terms) {
            if (t.index >= n)
                throw SchemaError("structure constant term index " + std::to_string(t.index) + " out of range");
            if (field == Field::Rational && !t.coeff.is_real())
                throw SchemaError("imaginary coefficient in an algebra over Q at (" + std::to_string(sc.i) + "," +
                                  std::to_string(sc.j) + ")");
            acc.add(t.index, t.coeff);
        }
        Product& p = a.table_[sc.i * n + sc.j];
        for (const auto& [k, c] : acc.coefficients()) {
            const Degree expected = a.basis_[sc.i].degree + a.basis_[sc.j].degree;
            if (a.basis_[k].degree != expected)
                throw GradingViolation(sc.i, sc.j, k,
                                       "grading violation at triple (" + std::to_string(sc.i) + "," +
                                           std::to_string(sc.j) + "," + std::to_string(k) + "): " +
                                           a.basis_[sc.i].label + " * " + a.basis_[sc.j].label + " has a component on " +
                                           a.basis_[k].label + " of degree " + a.basis_[k].degree.str() + ", expected " +
                                           expected.str());
            p.push_back({k, c});
        }
    }

    if (unit) {
        if (*unit >= n) throw SchemaError("unit index " + std::to_string(*unit) + " out of range");
        const std::size_t u = *unit;
        for (std::size_t x = 0; x < n; ++x) {
            const Product expected{{x, Scalar(1)}};
            if (a.product(u, x) != expected || a.product(x, u) != expected)
                throw UnitViolation(x, "unit law fails: " + a.basis_[u].label + " does not act as identity on " +
                                           a.basis_[x].label);
        }
        a.unit_ = unit;
    }
    return a;
}

std::vector<StructureConstant> GradedAlgebra::constants() const {
    std::vector<StructureConstant> out;
    const std::size_t n = dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (!product(i, j).empty()) out.push_back({i, j, product(i, j)});
    return out;
}

std::optional<std::size_t> GradedAlgebra::index_of(const std::string& label) const {
    for (std::size_t i = 0; i < basis_.size(); ++i)
        if (basis_[i].label == label) return i;
    return std::nullopt;
}

std::size_t GradedAlgebra::at(const std::string& label) const {
    if (auto i = index_of(label)) return *i;
    throw SchemaError("unknown basis label '" + label + "'");
}

Element multiply(const GradedAlgebra& a, const Element& x, const Element& y) {
    Element out;
    for (const auto& [i, ci] : x.coefficients())
        for (const auto& [j, cj] : y.coefficients()) {
            const Product& p = a.product(i, j);
            if (p.empty()) continue;
            const Scalar c = ci * cj;
            for (const auto& t : p) out.add(t.index, c * t.coeff);
        }
    return out;
}

Element twist(const GradedAlgebra& a, const Element& x, const Degree& d) {
    Element out;
    for (const auto& [i, c] : x.coefficients()) out.add(i, a.form().eval(d, a.degree(i)) ? -c : c);
    return out;
}

std::vector<std::size_t> component_indices(const GradedAlgebra& a, const Degree& gamma) {
    if (gamma.width() != a.width()) throw DimensionError("component degree width does not match the algebra");
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < a.dim(); ++i)
        if (a.degree(i) == gamma) idx.push_back(i);
    return idx;
}

Subspace component(const GradedAlgebra& a, const Degree& gamma) {
    std::vector<Vector> vs;
    for (auto i : component_indices(a, gamma)) vs.push_back(Element::basis(i).to_vector(a.dim()));
    return Subspace::span(a.dim(), vs);
}

ParitySplit parity_split(const GradedAlgebra& a) {
    ParitySplit s;
    std::vector<bool> odd(a.dim(), false);
    for (std::size_t i = 0; i < a.dim(); ++i) {
        odd[i] = parity(a.degree(i), a.form()) != 0;
        (odd[i] ? s.odd : s.even).push_back(i);
    }
    for (auto i : s.even)
        for (auto j : s.even)
            for (const auto& t : a.product(i, j))
                if (odd[t.index])
                    throw StructuralError("even part not closed: " + a.basis(i).label + " * " + a.basis(j).label +
                                          " has an odd component on " + a.basis(t.index).label);
    return s;
}

GradedAlgebra even_part_algebra(const GradedAlgebra& a) {
    const ParitySplit split = parity_split(a);
    std::vector<std::size_t> new_index(a.dim(), a.dim());
    std::vector<BasisVector> basis;
    for (std::size_t k = 0; k < split.even.size(); ++k) {
        new_index[split.even[k]] = k;
        basis.push_back(a.basis(split.even[k]));
    }
    std::vector<StructureConstant> constants;
    for (auto i : split.even)
        for (auto j : split.even) {
            if (a.product(i, j).empty()) continue;
            Product p;
            for (const auto& t : a.product(i, j)) p.push_back({new_index[t.index], t.coeff});
            constants.push_back({new_index[i], new_index[j], std::move(p)});
        }
    std::optional<std::size_t> unit;
    if (a.unit() && new_index[*a.unit()] < a.dim()) unit = new_index[*a.unit()];
    else {
        // the even part may be unital even when the whole algebra is not
        for (auto u : split.even) {
            bool ok = true;
            for (auto x : split.even) {
                const Product e{{x, Scalar(1)}};
                if (a.product(u, x) != e || a.product(x, u) != e) {
                    ok = false;
                    break;
                }
            }
            if (ok) {
                unit = new_index[u];
                break;
            }
        }
    }
    return GradedAlgebra::make(a.field(), a.width(), std::move(basis), constants, a.form(), unit);
}

Matrix multiplication_operator(const GradedAlgebra& a, const Element& x, Side side) {
    const std::size_t n = a.dim();
    Matrix m(n, n);
    for (const auto& [i, c] : x.coefficients())
        for (std::size_t j = 0; j < n; ++j) {
            const Product& p = side == Side::Left ? a.product(i, j) : a.product(j, i);
            for (const auto& t : p) m(t.index, j) += c * t.coeff;
        }
    return m;
}

Subspace annihilator(const GradedAlgebra& a, const Element& x, Side side) {
    const Matrix op = multiplication_operator(a, x, side);
    const Matrix ns = nullspace(op);
    std::vector<Vector> rows;
    for (std::size_t r = 0; r < ns.rows(); ++r) rows.push_back(ns.row_vector(r));
    return Subspace::span(a.dim(), rows);
}

GradedAlgebra project_grading(const GradedAlgebra& a, const std::vector<int>& keep, const BilinearFormZ2& new_form) {
    const int width = static_cast<int>(keep.size());
    if (new_form.width() != width)
        throw DimensionError("projected form width " + std::to_string(new_form.width()) + " differs from " +
                             std::to_string(width) + " kept coordinates");
    for (int c : keep)
        if (c < 0 || c >= a.width()) throw DimensionError("kept coordinate " + std::to_string(c) + " out of range");
    std::vector<BasisVector> basis;
    for (const auto& b : a.basis()) {
        std::uint64_t bits = 0;
        for (int k = 0; k < width; ++k)
            if (b.degree.at(keep[k])) bits |= std::uint64_t{1} << k;
        basis.push_back({b.label, Degree(width, bits)});
    }
    return GradedAlgebra::make(a.field(), width, std::move(basis), a.constants(), new_form, a.unit());
}

GradedAlgebra with_form(const GradedAlgebra& a, const BilinearFormZ2& form) {
    return GradedAlgebra::make(a.field(), a.width(), a.basis(), a.constants(), form, a.unit());
}

std::optional<Element> find_unit(const GradedAlgebra& a) {
    if (a.unit()) return Element::basis(*a.unit());
    const std::size_t n = a.dim();
    if (n == 0) return std::nullopt;
    // unknown u: for every j, u e_j = e_j and e_j u = e_j  (2 n^2 equations, n unknowns, augmented)
    Matrix sys(2 * n * n, n + 1);
    std::size_t row = 0;
    for (std::size_t j = 0; j < n; ++j)
        for (int side = 0; side < 2; ++side) {
            for (std::size_t i = 0; i < n; ++i) {
                const Product& p = side == 0 ? a.product(i, j) : a.product(j, i);
                for (const auto& t : p) sys(row + t.index, i) += t.coeff;
            }
            sys(row + j, n) = 1;
            row += n;
        }
    const auto pivots = rref(sys);
    if (!pivots.empty() && pivots.back() == n) return std::nullopt;  // inconsistent
    Vector u(n);
    for (std::size_t k = 0; k < pivots.size(); ++k) u[pivots[k]] = sys(k, n);
    // free variables set to zero; the identity is unique when it exists
    return Element::from_vector(u);
}

std::string render(const GradedAlgebra& a, const Element& x) {
    if (x.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [i, c] : x.coefficients()) {
        const std::string& label = a.basis(i).label;
        std::string term;
        bool negative = false;
        if (c.is_real()) {
            negative = sgn(c.re()) < 0;
            const mpq_class mag = abs(c.re());
            term = mag == 1 ? label : mag.get_str() + " " + label;
        } else {
            term = "(" + c.str() + ") " + label;
        }
        if (first)
            out = negative ? "-" + term : term;
        else
            out += negative ? " - " + term : " + " + term;
        first = false;
    }
    return out;
}

}  // namespace gca
