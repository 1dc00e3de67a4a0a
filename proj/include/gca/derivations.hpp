#pragma once

#include "gca/algebra.hpp"
#include "gca/report.hpp"

#include <vector>

namespace gca {

/// Homogeneous linear map of degree tau; column j of matrix is T(e_j).
struct HomDerivation {
    Degree degree;
    Matrix matrix;
    friend bool operator==(const HomDerivation&, const HomDerivation&) = default;
};

struct DerivationSector {
    Degree degree;
    std::vector<HomDerivation> basis;  // canonical echelon order
};

struct DerivationSpace {
    std::vector<DerivationSector> sectors;  // nonzero sectors only, by degree bits
    std::size_t even_dim = 0;
    std::size_t odd_dim = 0;

    std::vector<HomDerivation> all() const;
};

inline constexpr int kMaxDerivationWidth = 16;

Element apply(const HomDerivation& t, const Element& x);

/// True when every column of the matrix lands in the shifted component.
bool respects_degree(const GradedAlgebra& a, const HomDerivation& t);

/// T(e_i e_j) = T(e_i) e_j + (-1)^{form(tau, deg i)} e_i T(e_j) over all basis pairs.
CheckReport is_derivation(const GradedAlgebra& a, const HomDerivation& t);

/// Exact nullspace of the Leibniz system, sector by sector.
DerivationSpace derivation_space(const GradedAlgebra& a);

/// [S,T] = ST - (-1)^{form(sigma,tau)} TS. Throws StructuralError if the result is not a derivation.
HomDerivation graded_bracket(const GradedAlgebra& a, const HomDerivation& s, const HomDerivation& t);

CheckReport check_bracket_closure(const GradedAlgebra& a, const DerivationSpace& d);

/// Coordinates of t in the span of the sector with t's degree, if it lies there.
std::optional<Vector> coordinates_in(const DerivationSpace& d, const HomDerivation& t);

struct PairQuery {
    std::size_t u;
    std::size_t v;
    bool equal_images;  // some T in Der has T(u) = T(v) != 0
    bool maps_to;       // some T in Der has T(u) = v
};

/// Both readings of "T(a) = T(b)" for every ordered pair of distinct basis elements.
std::vector<PairQuery> derivation_pair_query(const GradedAlgebra& a, const DerivationSpace& d);

}  // namespace gca
