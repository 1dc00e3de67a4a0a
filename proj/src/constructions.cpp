#include "gca/constructions.hpp"

#include "gca/errors.hpp"

#include <bit>
#include <map>

namespace gca {

namespace {

const char* const kEps = "ε";

Product single(std::size_t k, const Scalar& c) {
    if (c.is_zero()) return {};
    return {{k, c}};
}

}  // namespace

GradedAlgebra quaternions(Field field) {
    const int w = 3;
    auto deg = [](int a, int b, int c) {
        const int coords[3] = {a, b, c};
        return Degree::from_bits(coords);
    };
    std::vector<BasisVector> basis{{kEps, deg(0, 0, 0)}, {"i", deg(0, 1, 1)}, {"j", deg(1, 0, 1)}, {"k", deg(1, 1, 0)}};
    std::vector<StructureConstant> cs;
    for (std::size_t x = 0; x < 4; ++x) {
        cs.push_back({0, x, single(x, 1)});
        if (x) cs.push_back({x, 0, single(x, 1)});
    }
    for (std::size_t x = 1; x < 4; ++x) cs.push_back({x, x, single(0, -1)});
    // ij = k, jk = i, ki = j
    const std::size_t cyc[3][3] = {{1, 2, 3}, {2, 3, 1}, {3, 1, 2}};
    for (const auto& c : cyc) {
        cs.push_back({c[0], c[1], single(c[2], 1)});
        cs.push_back({c[1], c[0], single(c[2], -1)});
    }
    return GradedAlgebra::make(field, w, std::move(basis), cs, BilinearFormZ2::scalar_product(w), 0);
}

std::string clifford_label(const CliffordSignature& sig, std::uint64_t mask) {
    if (mask == 0) return kEps;
    if (!sig.complex && sig.p == 0 && sig.q == 2) {
        static const char* const names[4] = {"", "i", "j", "k"};
        return names[mask];
    }
    std::string s;
    for (int g = 0; g < sig.n(); ++g)
        if ((mask >> g) & 1u) s += "α" + std::to_string(g + 1);
    return s;
}

namespace {

void check_signature(const CliffordSignature& sig, int cap) {
    if (sig.p < 0 || sig.q < 0) throw DimensionError("Clifford signature must be nonnegative");
    if (sig.complex && sig.q != 0) throw DimensionError("complex Clifford algebras take q = 0");
    if (sig.n() > cap)
        throw SizeError("Clifford algebra with " + std::to_string(sig.n()) + " generators exceeds the cap of " +
                        std::to_string(cap));
}

// masks ordered by length, then lexicographically by generator indices
std::vector<std::uint64_t> monomial_order(int n) {
    std::vector<std::uint64_t> masks;
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) masks.push_back(m);
    auto key = [](std::uint64_t m) {
        std::vector<int> idx;
        for (int g = 0; g < 64; ++g)
            if ((m >> g) & 1u) idx.push_back(g);
        return idx;
    };
    std::stable_sort(masks.begin(), masks.end(), [&](std::uint64_t a, std::uint64_t b) {
        if (std::popcount(a) != std::popcount(b)) return std::popcount(a) < std::popcount(b);
        return key(a) < key(b);
    });
    return masks;
}

// sign of e_s e_t = sign * e_{s xor t}
int monomial_sign(const CliffordSignature& sig, std::uint64_t s, std::uint64_t t) {
    int swaps = 0;
    for (int g = 0; g < sig.n(); ++g)
        if ((t >> g) & 1u) swaps += std::popcount(s >> (g + 1));
    int sign = (swaps & 1) ? -1 : 1;
    for (int g = sig.p; g < sig.n(); ++g)
        if (((s & t) >> g) & 1u) sign = -sign;
    return sign;
}

}  // namespace

GradedAlgebra clifford(const CliffordSignature& sig) {
    check_signature(sig, kMaxCliffordGenerators);
    const int n = sig.n();
    const int w = n + 1;
    const auto masks = monomial_order(n);
    std::map<std::uint64_t, std::size_t> index;
    std::vector<BasisVector> basis;
    for (auto m : masks) {
        std::uint64_t bits = 0;
        for (int g = 0; g < n; ++g)
            if ((m >> g) & 1u) bits ^= (std::uint64_t{1} << g) | (std::uint64_t{1} << n);
        index[m] = basis.size();
        basis.push_back({clifford_label(sig, m), Degree(w, bits)});
    }
    std::vector<StructureConstant> cs;
    for (auto s : masks)
        for (auto t : masks) cs.push_back({index[s], index[t], single(index[s ^ t], monomial_sign(sig, s, t))});
    return GradedAlgebra::make(sig.complex ? Field::Gaussian : Field::Rational, w, std::move(basis), cs,
                               BilinearFormZ2::scalar_product(w), 0);
}

GradedAlgebra lambda_family(Field field, const Scalar& lambda) {
    if (field == Field::Rational && !lambda.is_real()) throw SchemaError("imaginary lambda over Q");
    std::vector<BasisVector> basis{{kEps, Degree(1, 0)}, {"a", Degree(1, 1)}, {"b", Degree(1, 1)}};
    const Scalar half = Scalar::rational(1, 2);
    Product eb{{2, half}};
    if (!lambda.is_zero()) eb.insert(eb.begin(), Term{1, lambda});
    std::vector<StructureConstant> cs{
        {0, 0, single(0, 1)}, {0, 1, single(1, half)}, {1, 0, single(1, half)}, {0, 2, eb},
        {2, 0, eb},           {1, 2, single(0, 1)},    {2, 1, single(0, -1)},
    };
    return GradedAlgebra::make(field, 1, std::move(basis), cs, BilinearFormZ2::scalar_product(1));
}

GradedAlgebra k3(Field field) { return lambda_family(field, 0); }

GradedAlgebra extend(const GradedAlgebra& base) {
    if (!base.unit()) throw PreconditionError("extension needs a unital even algebra");
    if (base.form() != BilinearFormZ2::scalar_product(base.width()))
        throw PreconditionError("extension needs the scalar-product form");
    const std::size_t m = base.dim();
    const int w = base.width();
    const Degree shift = Degree::ones(w);
    const std::size_t u = *base.unit();

    std::vector<BasisVector> basis = base.basis();
    for (const char* t : {"a", "b"})
        for (std::size_t x = 0; x < m; ++x)
            basis.push_back({x == u ? std::string(t) : std::string(t) + "_" + base.basis(x).label, base.degree(x) + shift});

    const Scalar half = Scalar::rational(1, 2);
    const std::size_t n = 3 * m;
    std::vector<Product> table(n * n);
    auto shifted = [&](const Product& p, std::size_t block, const Scalar& c) {
        Product out;
        for (const auto& t : p) out.push_back({t.index + block * m, c * t.coeff});
        return out;
    };
    for (std::size_t x = 0; x < m; ++x)
        for (std::size_t y = 0; y < m; ++y) {
            const Product& p = base.product(x, y);
            table[x * n + y] = p;
            table[x * n + (y + m)] = shifted(p, 1, half);       // x (y a) = 1/2 (xy) a
            table[x * n + (y + 2 * m)] = shifted(p, 2, half);   // x (y b) = 1/2 (xy) b
            table[(x + m) * n + (y + 2 * m)] = p;               // (x a)(y b) = xy
        }
    const BilinearFormZ2 form = BilinearFormZ2::scalar_product(w);
    auto mirror = [&](std::size_t x, std::size_t y) {
        const Scalar s = form.eval(basis[x].degree, basis[y].degree) ? Scalar(-1) : Scalar(1);
        Product out;
        for (const auto& t : table[y * n + x]) out.push_back({t.index, s * t.coeff});
        table[x * n + y] = std::move(out);
    };
    for (std::size_t x = 0; x < m; ++x)
        for (std::size_t y = m; y < n; ++y) mirror(y, x);
    for (std::size_t x = 0; x < m; ++x)
        for (std::size_t y = 0; y < m; ++y) mirror(y + 2 * m, x + m);

    std::vector<StructureConstant> cs;
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
            if (!table[x * n + y].empty()) cs.push_back({x, y, table[x * n + y]});
    return GradedAlgebra::make(base.field(), w, std::move(basis), cs, form);
}

GradedAlgebra extended_clifford(const CliffordSignature& sig) {
    check_signature(sig, kMaxExtendedGenerators);
    return extend(clifford(sig));
}

GradedAlgebra extended_quaternions() { return extend(quaternions()); }

namespace {

// The 4|4 unital family. Basis eps,i,j,k,a,a_i,a_j,a_k; each degree carries exactly one basis vector.
constexpr std::size_t kU = 8;

std::vector<BasisVector> unital_basis() {
    const GradedAlgebra h = quaternions();
    std::vector<BasisVector> basis = h.basis();
    const Degree shift = Degree::ones(3);
    for (std::size_t x = 0; x < 4; ++x) basis.push_back({x == 0 ? "a" : "a_" + h.basis(x).label, h.degree(x) + shift});
    return basis;
}

std::size_t target_of(const std::vector<BasisVector>& basis, std::size_t x, std::size_t y) {
    const Degree d = basis[x].degree + basis[y].degree;
    for (std::size_t k = 0; k < basis.size(); ++k)
        if (basis[k].degree == d) return k;
    throw StructuralError("no basis vector of degree " + d.str());
}

// reference coefficient of e_x e_y on its unique target; params are lambda, mu, nu
Scalar reference_coeff(std::size_t x, std::size_t y, const Scalar (&params)[3]) {
    // 0..6 are the rationals {0, 1, -1, 1/2, -1/2}; 7..9 are lambda, mu, nu
    static const int cell[kU][kU] = {
        {1, 1, 1, 1, 1, 1, 1, 1},  // eps
        {1, 2, 1, 2, 7, 0, 3, 4},  // i
        {1, 2, 2, 1, 8, 4, 0, 3},  // j
        {1, 1, 2, 2, 9, 3, 4, 0},  // k
        {1, 7, 8, 9, 0, 1, 1, 1},  // a
        {1, 0, 4, 3, 2, 0, 0, 0},  // a_i
        {1, 3, 0, 4, 2, 0, 0, 0},  // a_j
        {1, 4, 3, 0, 2, 0, 0, 0},  // a_k
    };
    switch (cell[x][y]) {
    case 0: return 0;
    case 1: return 1;
    case 2: return -1;
    case 3: return Scalar::rational(1, 2);
    case 4: return Scalar::rational(-1, 2);
    default: return params[cell[x][y] - 7];
    }
}

Field parameter_field(const Scalar& l, const Scalar& m, const Scalar& n) {
    return l.is_real() && m.is_real() && n.is_real() ? Field::Rational : Field::Gaussian;
}

// Incremental linear system over unknowns u_0..u_{n-1}; each row remembers the constraints it came from.
class ConstraintSystem {
public:
    explicit ConstraintSystem(std::size_t unknowns) : n_(unknowns) {}

    struct Outcome {
        bool conflict = false;
        std::vector<std::size_t> culprits;  // earlier constraints involved in a conflict
    };

    // sum coeffs[u] x_u = rhs
    Outcome add(const std::map<std::size_t, Scalar>& coeffs, const Scalar& rhs, std::size_t id, bool commit = true) {
        Vector v(n_ + 1);
        for (const auto& [u, c] : coeffs) v[u] += c;
        v[n_] = rhs;
        std::vector<bool> prov(id + 1, false);
        prov[id] = true;
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            const std::size_t p = pivots_[r];
            if (v[p].is_zero()) continue;
            const Scalar f = v[p];
            for (std::size_t c = 0; c <= n_; ++c)
                if (!rows_[r][c].is_zero()) v[c] -= f * rows_[r][c];
            merge(prov, prov_[r]);
        }
        std::size_t p = 0;
        while (p < n_ && v[p].is_zero()) ++p;
        Outcome out;
        if (p == n_) {
            if (!v[n_].is_zero()) {
                out.conflict = true;
                for (std::size_t k = 0; k < prov.size(); ++k)
                    if (prov[k] && k != id) out.culprits.push_back(k);
            }
            return out;
        }
        if (!commit) return out;
        const Scalar inv = Scalar(1) / v[p];
        for (auto& s : v) s *= inv;
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            if (rows_[r][p].is_zero()) continue;
            const Scalar f = rows_[r][p];
            for (std::size_t c = 0; c <= n_; ++c)
                if (!v[c].is_zero()) rows_[r][c] -= f * v[c];
            merge(prov_[r], prov);
        }
        rows_.push_back(std::move(v));
        pivots_.push_back(p);
        prov_.push_back(std::move(prov));
        return out;
    }

    // value of u when the system pins it
    std::optional<Scalar> value(std::size_t u) const {
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            if (pivots_[r] != u) continue;
            for (std::size_t c = 0; c < n_; ++c)
                if (c != u && !rows_[r][c].is_zero()) return std::nullopt;
            return rows_[r][n_];
        }
        return std::nullopt;
    }

private:
    static void merge(std::vector<bool>& into, const std::vector<bool>& from) {
        if (into.size() < from.size()) into.resize(from.size(), false);
        for (std::size_t k = 0; k < from.size(); ++k)
            if (from[k]) into[k] = true;
    }

    std::size_t n_;
    std::vector<Vector> rows_;
    std::vector<std::size_t> pivots_;
    std::vector<std::vector<bool>> prov_;
};

// T(1,1,1) as an index map, -1 for zero
constexpr int kTImage[kU] = {-1, 5, 6, 7, 0, -1, -1, -1};

}  // namespace

HomDerivation unital_odd_derivation(const GradedAlgebra& unital) {
    if (unital.dim() != kU) throw PreconditionError("T(1,1,1) is defined on the 4|4 unital family");
    HomDerivation t{Degree::ones(3), Matrix(kU, kU)};
    for (std::size_t x = 0; x < kU; ++x)
        if (kTImage[x] >= 0) t.matrix(static_cast<std::size_t>(kTImage[x]), x) = 1;
    return t;
}

GradedAlgebra unital_reference(const Scalar& lambda, const Scalar& mu, const Scalar& nu) {
    const auto basis = unital_basis();
    const Scalar params[3] = {lambda, mu, nu};
    std::vector<StructureConstant> cs;
    for (std::size_t x = 0; x < kU; ++x)
        for (std::size_t y = 0; y < kU; ++y) {
            const Scalar c = reference_coeff(x, y, params);
            if (!c.is_zero()) cs.push_back({x, y, single(target_of(basis, x, y), c)});
        }
    return GradedAlgebra::make(parameter_field(lambda, mu, nu), 3, basis, cs, BilinearFormZ2::scalar_product(3), 0);
}

UnitalExtension unital_extension(const Scalar& lambda, const Scalar& mu, const Scalar& nu) {
    const auto basis = unital_basis();
    const GradedAlgebra h = quaternions();
    const BilinearFormZ2 form = BilinearFormZ2::scalar_product(3);
    const Scalar params[3] = {lambda, mu, nu};
    auto odd = [](std::size_t x) { return x >= 4; };
    auto label = [&](std::size_t x) { return basis[x].label; };

    // one unknown per product with an odd factor
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> unknown;
    for (std::size_t x = 0; x < kU; ++x)
        for (std::size_t y = 0; y < kU; ++y)
            if (odd(x) || odd(y)) unknown.emplace(std::pair{x, y}, unknown.size());

    // coefficient of e_x e_y on its target, as (unknown, constant)
    struct Lin {
        std::optional<std::size_t> u;
        Scalar c;
    };
    auto prod = [&](std::size_t x, std::size_t y) -> Lin {
        if (odd(x) || odd(y)) return {unknown.at({x, y}), 0};
        const Product& p = h.product(x, y);
        return {std::nullopt, p.empty() ? Scalar(0) : p.front().coeff};
    };

    ConstraintSystem sys(unknown.size());
    std::vector<std::string> names;
    auto hard = [&](const std::map<std::size_t, Scalar>& coeffs, const Scalar& rhs, std::string name) {
        const std::size_t id = names.size();
        names.push_back(std::move(name));
        const auto r = sys.add(coeffs, rhs, id);
        if (r.conflict) {
            const std::string other = r.culprits.empty() ? names[id] : names[r.culprits.front()];
            throw ConstraintConflict(names[id], other,
                                     "unital extension constraints are inconsistent: '" + names[id] + "' contradicts '" +
                                         other + "'");
        }
    };

    for (std::size_t y = 4; y < kU; ++y) {
        hard({{unknown.at({0, y}), 1}}, 1, "unit law: ε " + label(y) + " = " + label(y));
        hard({{unknown.at({y, 0}), 1}}, 1, "unit law: " + label(y) + " ε = " + label(y));
    }
    for (std::size_t x = 0; x < kU; ++x)
        for (std::size_t y = x; y < kU; ++y) {
            if (!odd(x) && !odd(y)) continue;
            const Scalar s = form.eval(basis[x].degree, basis[y].degree) ? Scalar(-1) : Scalar(1);
            std::map<std::size_t, Scalar> row;
            row[unknown.at({x, y})] += 1;
            row[unknown.at({y, x})] -= s;
            hard(row, 0, "graded commutativity at (" + label(x) + ", " + label(y) + ")");
        }
    hard({{unknown.at({4, 4}), 1}}, 0, "a-row: a a = 0");
    for (std::size_t x = 1; x < 4; ++x)
        hard({{unknown.at({4, x + 4}), 1}}, 1, "a-row: a " + label(x + 4) + " = " + label(x));
    for (std::size_t x = 1; x < 4; ++x)
        hard({{unknown.at({x, 4}), 1}}, params[x - 1], "parameter: " + label(x) + " a");

    // T(e_x e_y) = T(e_x) e_y + (-1)^{<tau, deg x>} e_x T(e_y), one scalar equation per pair
    const Degree tau = Degree::ones(3);
    auto t_coeff = [](std::size_t z) { return kTImage[z] >= 0 ? Scalar(1) : Scalar(0); };
    for (std::size_t x = 0; x < kU; ++x)
        for (std::size_t y = 0; y < kU; ++y) {
            std::map<std::size_t, Scalar> row;
            Scalar constant = 0;  // moved to the right-hand side
            auto add = [&](const Lin& l, const Scalar& c) {
                if (c.is_zero()) return;
                if (l.u) row[*l.u] += c;
                else constant += c * l.c;
            };
            const std::size_t z = target_of(basis, x, y);
            add(prod(x, y), t_coeff(z));
            if (kTImage[x] >= 0) add(prod(static_cast<std::size_t>(kTImage[x]), y), -1);
            if (kTImage[y] >= 0)
                add(prod(x, static_cast<std::size_t>(kTImage[y])), form.eval(tau, basis[x].degree) ? Scalar(1) : Scalar(-1));
            std::erase_if(row, [](const auto& kv) { return kv.second.is_zero(); });
            if (row.empty() && constant.is_zero()) continue;
            hard(row, -constant, "T(1,1,1) Leibniz at (" + label(x) + ", " + label(y) + ")");
        }

    // reference entries, row by row, adopted only when consistent
    UnitalExtension out{GradedAlgebra::make(Field::Rational, 0, {}, {}, BilinearFormZ2::scalar_product(0)), {}, {}};
    for (std::size_t x = 0; x < kU; ++x)
        for (std::size_t y = 0; y < kU; ++y) {
            if (!odd(x) && !odd(y)) continue;
            const Scalar c = reference_coeff(x, y, params);
            const std::size_t id = names.size();
            names.push_back("reference entry " + label(x) + " " + label(y));
            if (sys.add({{unknown.at({x, y}), 1}}, c, id).conflict) out.rejected.push_back(names[id]);
        }

    std::vector<StructureConstant> cs;
    for (std::size_t x = 0; x < kU; ++x)
        for (std::size_t y = 0; y < kU; ++y) {
            Scalar c;
            if (odd(x) || odd(y)) {
                const auto v = sys.value(unknown.at({x, y}));
                if (!v) throw StructuralError("unital extension constant " + label(x) + " " + label(y) + " is not determined");
                c = *v;
            } else {
                c = prod(x, y).c;
            }
            const std::size_t k = target_of(basis, x, y);
            if (!c.is_zero()) cs.push_back({x, y, single(k, c)});
            const Scalar reference = reference_coeff(x, y, params);
            if (reference != c) out.discrepancies.push_back({x, y, single(k, reference), single(k, c)});
        }
    out.algebra = GradedAlgebra::make(parameter_field(lambda, mu, nu), 3, basis, cs, form, 0);
    return out;
}

GradedAlgebra realify(const GradedAlgebra& a) {
    const std::size_t n = a.dim();
    std::vector<BasisVector> basis = a.basis();
    for (std::size_t x = 0; x < n; ++x) basis.push_back({"i·" + a.basis(x).label, a.degree(x)});
    std::vector<StructureConstant> cs;
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y) {
            const Product& p = a.product(x, y);
            if (p.empty()) continue;
            Product rr, ri, ii;  // e_x e_y, (i e_x) e_y = e_x (i e_y), (i e_x)(i e_y)
            for (const auto& t : p) {
                const Scalar re(t.coeff.re()), im(t.coeff.im());
                if (!re.is_zero()) rr.push_back({t.index, re});
                if (!im.is_zero()) ri.push_back({t.index, -im});
                if (!re.is_zero()) ii.push_back({t.index, -re});
            }
            for (const auto& t : p) {
                const Scalar re(t.coeff.re()), im(t.coeff.im());
                if (!im.is_zero()) rr.push_back({t.index + n, im});
                if (!re.is_zero()) ri.push_back({t.index + n, re});
                if (!im.is_zero()) ii.push_back({t.index + n, -im});
            }
            cs.push_back({x, y, rr});
            cs.push_back({x + n, y, ri});
            cs.push_back({x, y + n, ri});
            cs.push_back({x + n, y + n, ii});
        }
    return GradedAlgebra::make(Field::Rational, a.width(), std::move(basis), cs, a.form(), a.unit());
}

MatrixModel clifford_matrix_model(int m) {
    if (m < 1 || m > 3) throw SizeError("matrix model needs 1 <= m <= 3");
    const Scalar i = Scalar::imaginary_unit();
    const Matrix id = Matrix::identity(2);
    const Matrix x = Matrix::from_rows({{0, 1}, {1, 0}}, 2);
    const Matrix y = Matrix::from_rows({{0, -i}, {i, 0}}, 2);
    const Matrix z = Matrix::from_rows({{1, 0}, {0, -1}}, 2);
    MatrixModel model;
    model.dimension = std::size_t{1} << m;
    for (int k = 1; k <= m; ++k)
        for (const Matrix* p : {&x, &y}) {
            Matrix g = Matrix::identity(1);
            for (int f = 1; f <= m; ++f) g = kronecker(g, f < k ? z : (f == k ? *p : id));
            model.generators.push_back(std::move(g));
        }
    return model;
}

bool matrix_model_relations_hold(const MatrixModel& model) {
    const Matrix id = Matrix::identity(model.dimension);
    const Matrix zero(model.dimension, model.dimension);
    for (std::size_t a = 0; a < model.generators.size(); ++a) {
        if (model.generators[a] * model.generators[a] != id) return false;
        for (std::size_t b = a + 1; b < model.generators.size(); ++b)
            if (model.generators[a] * model.generators[b] + model.generators[b] * model.generators[a] != zero) return false;
    }
    return true;
}

std::size_t matrix_model_monomial_rank(const MatrixModel& model) {
    const std::size_t g = model.generators.size();
    std::vector<Vector> rows;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << g); ++mask) {
        Matrix p = Matrix::identity(model.dimension);
        for (std::size_t k = 0; k < g; ++k)
            if ((mask >> k) & 1u) p = p * model.generators[k];
        rows.push_back(p.data());
    }
    return rank(Matrix::from_rows(rows, model.dimension * model.dimension));
}

}  // namespace gca
