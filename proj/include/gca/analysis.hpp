#pragma once

#include "gca/algebra.hpp"
#include "gca/report.hpp"

#include <cstdint>
#include <optional>
#include <string>

namespace gca {

CheckReport check_graded_commutative(const GradedAlgebra& a);
CheckReport check_associative(const GradedAlgebra& a);

/// eps(z,x) x(yz) + eps(x,y) y(zx) + eps(y,z) z(xy) = 0 over odd basis triples, eps = (-1)^form.
CheckReport check_odd_graded_jacobi(const GradedAlgebra& a);

/// Smallest two-sided ideal containing x (fixpoint of single-sided products).
Subspace ideal_closure(const GradedAlgebra& a, const Element& x);

/// s is nonzero, proper, and closed under left and right multiplication.
bool is_proper_ideal(const GradedAlgebra& a, const Subspace& s);

enum class SimplicityStatus { Simple, NotSimple, ProbablySimple, Undecided };
std::string_view status_name(SimplicityStatus s);

struct SimplicityVerdict {
    SimplicityStatus status = SimplicityStatus::Undecided;
    std::optional<Element> witness;
    std::optional<std::size_t> ideal_dim;
    std::optional<std::size_t> trials;
    std::string reason;
};

inline constexpr std::uint64_t kDefaultSeed = 20240917;
inline constexpr std::size_t kDefaultTrials = 32;

struct SimplicityOptions {
    std::uint64_t seed = kDefaultSeed;
    std::size_t trials = kDefaultTrials;
};

SimplicityVerdict is_simple(const GradedAlgebra& a, const SimplicityOptions& opt = {});

// The individual tiers, exposed for soundness tests.

/// Associative algebras only: radical by the trace form, then the center. nullopt if not associative.
std::optional<SimplicityVerdict> simplicity_tier_a(const GradedAlgebra& a);

inline constexpr std::size_t kMaxMultiplicationAlgebraDim = 24;

/// True when the multiplication algebra (reduced mod a large prime) is all of End(A).
/// A full rank mod p forces full rank over the ground field; a deficient rank proves nothing.
bool simplicity_tier_b(const GradedAlgebra& a);

/// NotSimple with the first basis element whose closure is proper.
std::optional<SimplicityVerdict> simplicity_tier_c(const GradedAlgebra& a);

/// Closures of seeded random elements with small integer coefficients.
SimplicityVerdict simplicity_tier_d(const GradedAlgebra& a, const SimplicityOptions& opt);

/// Both annihilators of every basis element are zero.
CheckReport zero_divisor_scan(const GradedAlgebra& a);

enum class ZeroComponentKind { RealLine, ComplexLine, Other };

struct ZeroComponentClass {
    ZeroComponentKind kind = ZeroComponentKind::Other;
    std::size_t dim = 0;
    std::optional<Element> imaginary_unit;  // an element squaring to -unit, when rational
};

ZeroComponentClass classify_zero_component(const GradedAlgebra& a);
std::string zero_component_name(const ZeroComponentClass& c);

/// c with v^2 = c unit for each basis vector v of degree gamma (c = 0 allowed when v^2 = 0).
std::vector<Scalar> component_square_class(const GradedAlgebra& a, const Degree& gamma);

struct OddPairing {
    Matrix gram;
    std::size_t rank = 0;
    bool skew = false;
};

/// Odd x odd products read off in the coordinate of the one-dimensional even part.
OddPairing odd_pairing(const GradedAlgebra& a);

}  // namespace gca
