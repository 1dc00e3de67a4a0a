#include "gca/analysis.hpp"

#include "gca/errors.hpp"

#include <deque>
#include <random>

namespace gca {

namespace {

Scalar sign_of(const BilinearFormZ2& f, const Degree& x, const Degree& y) { return f.eval(x, y) ? -1 : 1; }

std::string triple(const GradedAlgebra& a, std::size_t i, std::size_t j, std::size_t k) {
    return "(" + a.basis(i).label + ", " + a.basis(j).label + ", " + a.basis(k).label + ")";
}

bool all_products_zero(const GradedAlgebra& a) {
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j)
            if (!a.product(i, j).empty()) return false;
    return true;
}

SimplicityVerdict not_simple(const GradedAlgebra& a, Element witness, std::string reason) {
    const Subspace ideal = ideal_closure(a, witness);
    if (!is_proper_ideal(a, ideal))
        throw StructuralError("witness " + render(a, witness) + " does not generate a proper ideal");
    SimplicityVerdict v;
    v.status = SimplicityStatus::NotSimple;
    v.ideal_dim = ideal.dim();
    v.witness = std::move(witness);
    v.reason = std::move(reason);
    return v;
}

SimplicityVerdict verdict(SimplicityStatus s, std::string reason) {
    SimplicityVerdict v;
    v.status = s;
    v.reason = std::move(reason);
    return v;
}

// Subspace of solutions x with sum_i x_i M_i = 0 for a family of matrices, by rows stacked per entry.
Matrix center_system(const GradedAlgebra& a) {
    const std::size_t n = a.dim();
    Matrix sys(n * n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t z = 0; z < n; ++z) {
            for (const auto& t : a.product(i, z)) sys(z * n + t.index, i) += t.coeff;
            for (const auto& t : a.product(z, i)) sys(z * n + t.index, i) -= t.coeff;
        }
    return sys;
}

// coordinates of v in the basis {u, z}; nullopt if v is outside
std::optional<std::pair<Scalar, Scalar>> in_plane(const Vector& u, const Vector& z, const Vector& v) {
    Matrix aug(u.size(), 3);
    for (std::size_t e = 0; e < u.size(); ++e) {
        aug(e, 0) = u[e];
        aug(e, 1) = z[e];
        aug(e, 2) = v[e];
    }
    const auto piv = rref(aug);
    if (!piv.empty() && piv.back() == 2) return std::nullopt;
    Scalar cu, cz;
    for (std::size_t p = 0; p < piv.size(); ++p) (piv[p] == 0 ? cu : cz) = aug(p, 2);
    return std::pair{cu, cz};
}

// ---- arithmetic mod p for the multiplication-algebra certificate

constexpr std::uint64_t kPrime = 998244353;  // p = 1 mod 4

std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e) {
    std::uint64_t r = 1;
    b %= kPrime;
    while (e) {
        if (e & 1) r = r * b % kPrime;
        b = b * b % kPrime;
        e >>= 1;
    }
    return r;
}

std::uint64_t inv_mod(std::uint64_t x) { return pow_mod(x, kPrime - 2); }

std::optional<std::uint64_t> reduce_rational(const mpq_class& q) {
    const std::uint64_t den = mpz_fdiv_ui(q.get_den_mpz_t(), kPrime);
    if (den == 0) return std::nullopt;
    const std::uint64_t num = mpz_fdiv_ui(q.get_num_mpz_t(), kPrime);
    return num * inv_mod(den) % kPrime;
}

std::optional<std::uint64_t> reduce_scalar(const Scalar& s) {
    static const std::uint64_t sqrt_minus_one = pow_mod(3, (kPrime - 1) / 4);
    const auto re = reduce_rational(s.re());
    const auto im = reduce_rational(s.im());
    if (!re || !im) return std::nullopt;
    return (*re + *im * sqrt_minus_one) % kPrime;
}

using ModMatrix = std::vector<std::uint64_t>;  // n x n row-major

ModMatrix mod_mul(const ModMatrix& x, const ModMatrix& y, std::size_t n) {
    ModMatrix r(n * n, 0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            const std::uint64_t a = x[i * n + k];
            if (!a) continue;
            for (std::size_t j = 0; j < n; ++j) r[i * n + j] = (r[i * n + j] + a * y[k * n + j]) % kPrime;
        }
    return r;
}

class ModEchelon {
public:
    explicit ModEchelon(std::size_t len) : len_(len) {}
    std::size_t dim() const { return rows_.size(); }
    bool insert(ModMatrix v) {
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            const std::uint64_t f = v[piv_[r]];
            if (!f) continue;
            for (std::size_t c = 0; c < len_; ++c)
                if (rows_[r][c]) v[c] = (v[c] + kPrime - f * rows_[r][c] % kPrime) % kPrime;
        }
        std::size_t p = 0;
        while (p < len_ && v[p] == 0) ++p;
        if (p == len_) return false;
        const std::uint64_t inv = inv_mod(v[p]);
        for (auto& x : v) x = x * inv % kPrime;
        rows_.push_back(std::move(v));
        piv_.push_back(p);
        return true;
    }

private:
    std::size_t len_;
    std::vector<ModMatrix> rows_;
    std::vector<std::size_t> piv_;
};

}  // namespace

CheckReport check_graded_commutative(const GradedAlgebra& a) {
    CheckReport r;
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j) {
            const Element ei = Element::basis(i), ej = Element::basis(j);
            const Element lhs = multiply(a, ei, ej);
            const Element rhs = sign_of(a.form(), a.degree(i), a.degree(j)) * multiply(a, ej, ei);
            if (lhs != rhs)
                r.violations.push_back({i, j,
                                        a.basis(i).label + " " + a.basis(j).label + " = " + render(a, lhs) +
                                            " but the sign rule gives " + render(a, rhs)});
        }
    return r;
}

CheckReport check_associative(const GradedAlgebra& a) {
    CheckReport r;
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j) {
            const Element ij = Element::from_terms(a.product(i, j));
            for (std::size_t k = 0; k < a.dim(); ++k) {
                const Element left = multiply(a, ij, Element::basis(k));
                const Element right = multiply(a, Element::basis(i), Element::from_terms(a.product(j, k)));
                if (left != right)
                    r.violations.push_back({i, j,
                                            "at " + triple(a, i, j, k) + ": (xy)z = " + render(a, left) +
                                                ", x(yz) = " + render(a, right)});
            }
        }
    return r;
}

CheckReport check_odd_graded_jacobi(const GradedAlgebra& a) {
    CheckReport r;
    const ParitySplit split = parity_split(a);
    const auto& f = a.form();
    for (auto x : split.odd)
        for (auto y : split.odd)
            for (auto z : split.odd) {
                const Element ex = Element::basis(x), ey = Element::basis(y), ez = Element::basis(z);
                const Degree &dx = a.degree(x), &dy = a.degree(y), &dz = a.degree(z);
                Element j = sign_of(f, dz, dx) * multiply(a, ex, multiply(a, ey, ez));
                j += sign_of(f, dx, dy) * multiply(a, ey, multiply(a, ez, ex));
                j += sign_of(f, dy, dz) * multiply(a, ez, multiply(a, ex, ey));
                if (!j.is_zero()) r.violations.push_back({x, y, "at " + triple(a, x, y, z) + ": " + render(a, j)});
            }
    return r;
}

Subspace ideal_closure(const GradedAlgebra& a, const Element& x) {
    const std::size_t n = a.dim();
    EchelonBasis span(n);
    std::deque<Vector> queue;
    const Vector start = x.to_vector(n);
    if (span.insert(start)) queue.push_back(start);
    while (!queue.empty() && span.dim() < n) {
        const Element v = Element::from_vector(queue.front());
        queue.pop_front();
        for (std::size_t i = 0; i < n && span.dim() < n; ++i) {
            const Element e = Element::basis(i);
            for (const Element& p : {multiply(a, e, v), multiply(a, v, e)}) {
                const Vector pv = p.to_vector(n);
                if (span.insert(pv)) queue.push_back(pv);
            }
        }
    }
    return Subspace::span(n, span.rows());
}

bool is_proper_ideal(const GradedAlgebra& a, const Subspace& s) {
    if (s.is_zero() || s.is_full()) return false;
    for (const auto& row : s.rows()) {
        const Element v = Element::from_vector(row);
        for (std::size_t i = 0; i < a.dim(); ++i) {
            const Element e = Element::basis(i);
            if (!s.contains(multiply(a, e, v).to_vector(a.dim())) || !s.contains(multiply(a, v, e).to_vector(a.dim())))
                return false;
        }
    }
    return true;
}

std::string_view status_name(SimplicityStatus s) {
    switch (s) {
    case SimplicityStatus::Simple: return "Simple";
    case SimplicityStatus::NotSimple: return "NotSimple";
    case SimplicityStatus::ProbablySimple: return "ProbablySimple";
    case SimplicityStatus::Undecided: return "Undecided";
    }
    return "Undecided";
}

std::optional<SimplicityVerdict> simplicity_tier_a(const GradedAlgebra& a) {
    if (!check_associative(a).passed()) return std::nullopt;
    const std::size_t n = a.dim();

    // trace form G_ij = tr(L_{e_i e_j}) = sum_k c_ij^k tr(L_k)
    std::vector<Scalar> tr(n);
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t j = 0; j < n; ++j)
            for (const auto& t : a.product(k, j))
                if (t.index == j) tr[k] += t.coeff;
    Matrix g(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (const auto& t : a.product(i, j)) g(i, j) += t.coeff * tr[t.index];
    const Matrix radical = nullspace(g);
    if (radical.rows() > 0)
        return not_simple(a, Element::from_vector(radical.row_vector(0)),
                          "radical of dimension " + std::to_string(radical.rows()) + " (trace form)");

    const Matrix center = nullspace(center_system(a));
    if (center.rows() == 1) return verdict(SimplicityStatus::Simple, "semisimple with one-dimensional center");
    if (center.rows() >= 3)
        return verdict(SimplicityStatus::Undecided, "center of dimension " + std::to_string(center.rows()));

    const auto unit = find_unit(a);
    if (!unit) return verdict(SimplicityStatus::Undecided, "semisimple without a unit");
    const Vector u = unit->to_vector(n);
    Vector z = center.row_vector(0);
    if (!in_plane(u, Vector(n), z).has_value()) {
        // z already independent of u
    } else {
        z = center.row_vector(1);
    }
    const Element ze = Element::from_vector(z);
    const auto sq = in_plane(u, z, multiply(a, ze, ze).to_vector(n));
    if (!sq) throw StructuralError("center is not closed under multiplication");
    const auto& [alpha, beta] = *sq;
    // w = z - beta/2 u,  w^2 = delta u
    const Scalar half = Scalar::rational(1, 2);
    const Element w = ze - (beta * half) * *unit;
    const Scalar delta = alpha + beta * beta * half * half;
    if (delta.is_zero()) throw StructuralError("nilpotent central element in a semisimple algebra");

    std::optional<Scalar> root;
    if (a.field() == Field::Rational) {
        if (sgn(delta.re()) < 0)
            return verdict(SimplicityStatus::Simple, "center is a field: w^2 = " + delta.str() + " unit");
        if (auto r = rational_sqrt(delta.re())) root = Scalar(*r);
    } else {
        root = gaussian_sqrt(delta);
    }
    if (!root)
        return verdict(SimplicityStatus::Undecided,
                       "two-dimensional center with w^2 = " + delta.str() + " unit and no square root in the field");
    return not_simple(a, *unit + (Scalar(1) / *root) * w, "center splits: w^2 = " + delta.str() + " unit");
}

bool simplicity_tier_b(const GradedAlgebra& a) {
    const std::size_t n = a.dim();
    if (n == 0 || n > kMaxMultiplicationAlgebraDim) return false;
    std::vector<ModMatrix> gens;
    for (std::size_t x = 0; x < n; ++x)
        for (Side side : {Side::Left, Side::Right}) {
            const Matrix m = multiplication_operator(a, Element::basis(x), side);
            ModMatrix mm(n * n);
            for (std::size_t e = 0; e < n * n; ++e) {
                const auto r = reduce_scalar(m.data()[e]);
                if (!r) return false;
                mm[e] = *r;
            }
            gens.push_back(std::move(mm));
        }
    ModEchelon span(n * n);
    std::deque<ModMatrix> queue;
    ModMatrix id(n * n, 0);
    for (std::size_t i = 0; i < n; ++i) id[i * n + i] = 1;
    span.insert(id);
    queue.push_back(id);
    while (!queue.empty() && span.dim() < n * n) {
        const ModMatrix cur = std::move(queue.front());
        queue.pop_front();
        for (const auto& g : gens) {
            ModMatrix p = mod_mul(g, cur, n);
            if (span.insert(p)) queue.push_back(std::move(p));
            if (span.dim() == n * n) break;
        }
    }
    return span.dim() == n * n;
}

std::optional<SimplicityVerdict> simplicity_tier_c(const GradedAlgebra& a) {
    for (std::size_t i = 0; i < a.dim(); ++i) {
        const Subspace s = ideal_closure(a, Element::basis(i));
        if (!s.is_full())
            return not_simple(a, Element::basis(i), "basis element " + a.basis(i).label + " generates a proper ideal");
    }
    return std::nullopt;
}

SimplicityVerdict simplicity_tier_d(const GradedAlgebra& a, const SimplicityOptions& opt) {
    std::mt19937_64 rng(opt.seed);
    std::uniform_int_distribution<int> coeff(-3, 3);
    const std::size_t n = a.dim();
    for (std::size_t t = 0; t < opt.trials; ++t) {
        Vector v(n);
        bool nonzero = false;
        for (std::size_t e = 0; e < n; ++e) {
            v[e] = Scalar(static_cast<long>(coeff(rng)));
            nonzero = nonzero || !v[e].is_zero();
        }
        if (!nonzero) v[0] = 1;
        const Element x = Element::from_vector(v);
        if (!ideal_closure(a, x).is_full())
            return not_simple(a, x, "random element " + std::to_string(t) + " generates a proper ideal");
    }
    SimplicityVerdict v = verdict(SimplicityStatus::ProbablySimple, "every sampled element generates the algebra");
    v.trials = opt.trials;
    return v;
}

SimplicityVerdict is_simple(const GradedAlgebra& a, const SimplicityOptions& opt) {
    if (a.dim() == 0) return verdict(SimplicityStatus::Undecided, "zero algebra");
    if (all_products_zero(a)) {
        if (a.dim() >= 2) return not_simple(a, Element::basis(0), "all products vanish");
        return verdict(SimplicityStatus::NotSimple, "all products vanish");
    }
    std::optional<SimplicityVerdict> first = simplicity_tier_a(a);
    if (first && first->status != SimplicityStatus::Undecided) return *first;
    if (simplicity_tier_b(a)) return verdict(SimplicityStatus::Simple, "multiplication algebra is all of End(A)");
    if (auto c = simplicity_tier_c(a)) return *c;
    if (first) return *first;  // associative but undecided by the center
    return simplicity_tier_d(a, opt);
}

CheckReport zero_divisor_scan(const GradedAlgebra& a) {
    CheckReport r;
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (Side side : {Side::Left, Side::Right}) {
            const Subspace ann = annihilator(a, Element::basis(i), side);
            if (!ann.is_zero())
                r.violations.push_back({i, i,
                                        std::string(side == Side::Left ? "left" : "right") + " annihilator of " +
                                            a.basis(i).label + " has dimension " + std::to_string(ann.dim())});
        }
    return r;
}

ZeroComponentClass classify_zero_component(const GradedAlgebra& a) {
    const auto idx = component_indices(a, Degree::zero(a.width()));
    ZeroComponentClass out;
    out.dim = idx.size();
    const auto unit = find_unit(a);
    const std::size_t n = a.dim();
    const Subspace comp = component(a, Degree::zero(a.width()));
    if (!unit || !comp.contains(unit->to_vector(n))) return out;
    if (idx.size() == 1) {
        out.kind = ZeroComponentKind::RealLine;
        return out;
    }
    if (idx.size() != 2 || a.field() != Field::Rational) return out;
    const Vector u = unit->to_vector(n);
    Vector z = Element::basis(idx[0]).to_vector(n);
    if (in_plane(u, Vector(n), z)) z = Element::basis(idx[1]).to_vector(n);
    const Element ze = Element::from_vector(z);
    const auto sq = in_plane(u, z, multiply(a, ze, ze).to_vector(n));
    if (!sq) return out;
    const Scalar half = Scalar::rational(1, 2);
    const Element w = ze - (sq->second * half) * *unit;
    const Scalar delta = sq->first + sq->second * sq->second * half * half;
    if (sgn(delta.re()) >= 0) return out;
    out.kind = ZeroComponentKind::ComplexLine;
    if (auto r = rational_sqrt(-delta.re())) out.imaginary_unit = (Scalar(1) / Scalar(*r)) * w;
    return out;
}

std::string zero_component_name(const ZeroComponentClass& c) {
    switch (c.kind) {
    case ZeroComponentKind::RealLine: return "RealLine";
    case ZeroComponentKind::ComplexLine: return "ComplexLine";
    case ZeroComponentKind::Other: return "Other(" + std::to_string(c.dim) + ")";
    }
    return "Other";
}

std::vector<Scalar> component_square_class(const GradedAlgebra& a, const Degree& gamma) {
    const auto idx = component_indices(a, gamma);
    if (idx.empty()) throw PreconditionError("component " + gamma.str() + " is zero");
    const auto unit = find_unit(a);
    std::vector<Scalar> out;
    for (auto v : idx) {
        const Element sq = Element::from_terms(a.product(v, v));
        if (sq.is_zero()) {
            out.emplace_back(0);
            continue;
        }
        if (!unit) throw PreconditionError(a.basis(v).label + " squares to a nonzero element and there is no unit");
        // sq = c unit: read c off any coordinate of the unit
        const auto& [k, uk] = *unit->coefficients().begin();
        const Scalar c = sq.coeff(k) / uk;
        if (sq != c * *unit)
            throw PreconditionError(a.basis(v).label + "^2 = " + render(a, sq) + " is not in the unit line");
        out.push_back(c);
    }
    return out;
}

OddPairing odd_pairing(const GradedAlgebra& a) {
    const ParitySplit split = parity_split(a);
    if (split.even.size() != 1)
        throw PreconditionError("odd pairing needs a one-dimensional even part, got " + std::to_string(split.even.size()));
    const std::size_t e = split.even.front();
    const std::size_t m = split.odd.size();
    OddPairing out{Matrix(m, m), 0, true};
    for (std::size_t x = 0; x < m; ++x)
        for (std::size_t y = 0; y < m; ++y) {
            const Product& p = a.product(split.odd[x], split.odd[y]);
            for (const auto& t : p) {
                if (t.index != e) throw StructuralError("odd product leaves the even line");
                out.gram(x, y) = t.coeff;
            }
        }
    out.rank = rank(out.gram);
    out.skew = out.gram.transpose() == out.gram.scaled(-1);
    return out;
}

}  // namespace gca
