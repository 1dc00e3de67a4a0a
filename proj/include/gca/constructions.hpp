#pragma once

#include "gca/algebra.hpp"
#include "gca/derivations.hpp"

#include <string>
#include <vector>

namespace gca {

inline constexpr int kMaxCliffordGenerators = 6;
inline constexpr int kMaxExtendedGenerators = 5;

struct CliffordSignature {
    int p = 0;
    int q = 0;
    bool complex = false;  // forces q = 0 and Gaussian scalars

    int n() const { return p + q; }
    static CliffordSignature real(int p, int q) { return {p, q, false}; }
    static CliffordSignature complexified(int n) { return {n, 0, true}; }
};

/// H with the triple degree: eps (0,0,0), i (0,1,1), j (1,0,1), k (1,1,0).
GradedAlgebra quaternions(Field field = Field::Rational);

/// Monomial basis ordered by length then index; generator g has degree e_g + e_n.
GradedAlgebra clifford(const CliffordSignature& sig);

/// Monomial of generator bitmask s, labelled as in clifford().
std::string clifford_label(const CliffordSignature& sig, std::uint64_t mask);

/// eps a = a eps = a/2, eps b = b eps = b/2 + lambda a, ab = eps = -ba.
GradedAlgebra lambda_family(Field field, const Scalar& lambda);
GradedAlgebra k3(Field field = Field::Rational);

/// Even part = base; odd part = base x {a, b} with degrees shifted by (1,...,1).
/// base must be unital and graded by the scalar product.
GradedAlgebra extend(const GradedAlgebra& base);
GradedAlgebra extended_clifford(const CliffordSignature& sig);
GradedAlgebra extended_quaternions();

struct TableDiscrepancy {
    std::size_t i;
    std::size_t j;
    Product reference;
    Product derived;
};

struct UnitalExtension {
    GradedAlgebra algebra;
    std::vector<TableDiscrepancy> discrepancies;  // derived constants that differ from the reference table
    std::vector<std::string> rejected;            // reference entries that contradicted the constraints
};

/// 4|4 unital algebra on {eps,i,j,k; a,a_i,a_j,a_k} with constants solved from the
/// unit law, grading, graded commutativity, the a-row, the parameters and the odd
/// derivation T(1,1,1). Reference table entries are then adopted where consistent.
UnitalExtension unital_extension(const Scalar& lambda, const Scalar& mu, const Scalar& nu);

/// The reference table taken literally.
GradedAlgebra unital_reference(const Scalar& lambda, const Scalar& mu, const Scalar& nu);

/// eps,i,j,k -> 0,a_i,a_j,a_k; a,a_i,a_j,a_k -> eps,0,0,0.
HomDerivation unital_odd_derivation(const GradedAlgebra& unital);

/// Q(i)-algebra seen as a Q-algebra on the basis {x} then {i.x}.
GradedAlgebra realify(const GradedAlgebra& a);

struct MatrixModel {
    std::size_t dimension = 0;
    std::vector<Matrix> generators;
};

/// Chain construction from the Pauli matrices; 1 <= m <= 3.
MatrixModel clifford_matrix_model(int m);

/// Every generator squares to I and distinct generators anticommute.
bool matrix_model_relations_hold(const MatrixModel& model);

/// Rank of the 4^m ordered monomials flattened into vectors.
std::size_t matrix_model_monomial_rank(const MatrixModel& model);

}  // namespace gca
