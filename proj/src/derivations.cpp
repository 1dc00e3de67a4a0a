#include "gca/derivations.hpp"

#include "gca/errors.hpp"

#include <map>

namespace gca {

namespace {

using SparseRow = std::map<std::size_t, Scalar>;

void accumulate(SparseRow& row, std::size_t unknown, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = row.try_emplace(unknown, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) row.erase(it);
    }
}

Vector flatten(const Matrix& m) { return m.data(); }

bool is_zero_vector(const Vector& v) {
    for (const auto& s : v)
        if (!s.is_zero()) return false;
    return true;
}

// x with sum_k x_k vectors[k] = target, when it exists
std::optional<Vector> solve_in_span(const std::vector<Vector>& vectors, const Vector& target) {
    const std::size_t r = vectors.size();
    const std::size_t n = target.size();
    Matrix aug(n, r + 1);
    for (std::size_t k = 0; k < r; ++k)
        for (std::size_t e = 0; e < n; ++e) aug(e, k) = vectors[k][e];
    for (std::size_t e = 0; e < n; ++e) aug(e, r) = target[e];
    const auto pivots = rref(aug);
    if (!pivots.empty() && pivots.back() == r) return std::nullopt;
    Vector x(r);
    for (std::size_t p = 0; p < pivots.size(); ++p) x[pivots[p]] = aug(p, r);
    return x;
}

std::string describe(const GradedAlgebra& a, const Element& e) { return render(a, e); }

}  // namespace

std::vector<HomDerivation> DerivationSpace::all() const {
    std::vector<HomDerivation> out;
    for (const auto& s : sectors) out.insert(out.end(), s.basis.begin(), s.basis.end());
    return out;
}

Element apply(const HomDerivation& t, const Element& x) {
    Element out;
    for (const auto& [j, c] : x.coefficients())
        for (std::size_t k = 0; k < t.matrix.rows(); ++k)
            if (!t.matrix(k, j).is_zero()) out.add(k, c * t.matrix(k, j));
    return out;
}

bool respects_degree(const GradedAlgebra& a, const HomDerivation& t) {
    if (t.matrix.rows() != a.dim() || t.matrix.cols() != a.dim()) return false;
    for (std::size_t j = 0; j < a.dim(); ++j)
        for (std::size_t k = 0; k < a.dim(); ++k)
            if (!t.matrix(k, j).is_zero() && a.degree(k) != a.degree(j) + t.degree) return false;
    return true;
}

CheckReport is_derivation(const GradedAlgebra& a, const HomDerivation& t) {
    if (t.matrix.rows() != a.dim() || t.matrix.cols() != a.dim())
        throw DimensionError("derivation matrix does not match the algebra dimension");
    CheckReport report;
    if (!respects_degree(a, t)) report.violations.push_back({0, 0, "matrix does not shift degrees by " + t.degree.str()});
    for (std::size_t x = 0; x < a.dim(); ++x) {
        const Element ex = Element::basis(x);
        const Element tx = apply(t, ex);
        const bool flip = a.form().eval(t.degree, a.degree(x)) != 0;
        for (std::size_t y = 0; y < a.dim(); ++y) {
            const Element ey = Element::basis(y);
            const Element lhs = apply(t, multiply(a, ex, ey));
            Element rhs = multiply(a, tx, ey);
            const Element second = multiply(a, ex, apply(t, ey));
            rhs = flip ? rhs - second : rhs + second;
            if (lhs != rhs)
                report.violations.push_back({x, y,
                                             "T(" + a.basis(x).label + " " + a.basis(y).label + ") = " + describe(a, lhs) +
                                                 " but Leibniz gives " + describe(a, rhs)});
        }
    }
    return report;
}

DerivationSpace derivation_space(const GradedAlgebra& a) {
    const int width = a.width();
    if (width > kMaxDerivationWidth)
        throw SizeError("derivation solver handles grading width <= " + std::to_string(kMaxDerivationWidth));
    const std::size_t n = a.dim();
    DerivationSpace space;

    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << width); ++bits) {
        const Degree tau(width, bits);
        // unknown T[k][j] allowed iff deg k = deg j + tau
        std::map<std::pair<std::size_t, std::size_t>, std::size_t> unknown;
        std::vector<std::pair<std::size_t, std::size_t>> slots;
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                if (a.degree(k) == a.degree(j) + tau) {
                    unknown.emplace(std::pair{k, j}, slots.size());
                    slots.emplace_back(k, j);
                }
        if (slots.empty()) continue;
        const std::size_t u = slots.size();
        std::vector<std::vector<std::size_t>> image_of(n);  // k with an unknown T[k][j]
        for (const auto& [k, j] : slots) image_of[j].push_back(k);

        EchelonBasis eqs(u);
        for (std::size_t x = 0; x < n && eqs.dim() < u; ++x) {
            const Scalar sx = a.form().eval(tau, a.degree(x)) ? Scalar(-1) : Scalar(1);
            for (std::size_t y = 0; y < n && eqs.dim() < u; ++y) {
                std::map<std::size_t, SparseRow> rows;  // output index -> equation
                for (const auto& tz : a.product(x, y))
                    for (auto k : image_of[tz.index]) accumulate(rows[k], unknown.at({k, tz.index}), tz.coeff);
                for (auto k : image_of[x])
                    for (const auto& tw : a.product(k, y)) accumulate(rows[tw.index], unknown.at({k, x}), -tw.coeff);
                for (auto k : image_of[y])
                    for (const auto& tw : a.product(x, k))
                        accumulate(rows[tw.index], unknown.at({k, y}), -(sx * tw.coeff));
                for (const auto& [w, row] : rows) {
                    if (row.empty()) continue;
                    Vector v(u);
                    for (const auto& [idx, c] : row) v[idx] = c;
                    eqs.insert(v);
                }
            }
        }
        const Matrix system = Matrix::from_rows(eqs.rows(), u);
        const Matrix sol = nullspace(system);
        if (sol.rows() == 0) continue;

        DerivationSector sector{tau, {}};
        for (std::size_t r = 0; r < sol.rows(); ++r) {
            HomDerivation t{tau, Matrix(n, n)};
            for (std::size_t s = 0; s < u; ++s) t.matrix(slots[s].first, slots[s].second) = sol(r, s);
            sector.basis.push_back(std::move(t));
        }
        (parity(tau, a.form()) ? space.odd_dim : space.even_dim) += sector.basis.size();
        space.sectors.push_back(std::move(sector));
    }
    return space;
}

HomDerivation graded_bracket(const GradedAlgebra& a, const HomDerivation& s, const HomDerivation& t) {
    HomDerivation out{s.degree + t.degree, {}};
    const Matrix st = s.matrix * t.matrix;
    const Matrix ts = t.matrix * s.matrix;
    out.matrix = a.form().eval(s.degree, t.degree) ? st + ts : st - ts;
    const CheckReport r = is_derivation(a, out);
    if (!r.passed())
        throw StructuralError("graded bracket of degree " + out.degree.str() + " is not a derivation: " +
                              r.violations.front().detail);
    return out;
}

std::optional<Vector> coordinates_in(const DerivationSpace& d, const HomDerivation& t) {
    std::vector<Vector> vs;
    for (const auto& s : d.sectors)
        if (s.degree == t.degree)
            for (const auto& b : s.basis) vs.push_back(flatten(b.matrix));
    const Vector target = flatten(t.matrix);
    if (vs.empty()) {
        if (is_zero_vector(target)) return Vector{};
        return std::nullopt;
    }
    return solve_in_span(vs, target);
}

CheckReport check_bracket_closure(const GradedAlgebra& a, const DerivationSpace& d) {
    CheckReport report;
    const auto all = d.all();
    for (std::size_t x = 0; x < all.size(); ++x)
        for (std::size_t y = 0; y < all.size(); ++y) {
            try {
                const HomDerivation b = graded_bracket(a, all[x], all[y]);
                if (!coordinates_in(d, b))
                    report.violations.push_back({x, y, "bracket of degree " + b.degree.str() + " leaves the span"});
            } catch (const StructuralError& e) {
                report.violations.push_back({x, y, e.what()});
            }
        }
    return report;
}

std::vector<PairQuery> derivation_pair_query(const GradedAlgebra& a, const DerivationSpace& d) {
    const auto all = d.all();
    const std::size_t n = a.dim();
    std::vector<Vector> images(n * all.size());
    for (std::size_t k = 0; k < all.size(); ++k)
        for (std::size_t x = 0; x < n; ++x) images[x * all.size() + k] = all[k].matrix.column(x);

    std::vector<PairQuery> out;
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = 0; v < n; ++v) {
            if (u == v) continue;
            PairQuery q{u, v, false, false};
            if (!all.empty()) {
                std::vector<Vector> tu(images.begin() + u * all.size(), images.begin() + (u + 1) * all.size());
                q.maps_to = solve_in_span(tu, Element::basis(v).to_vector(n)).has_value();
                Matrix diff(n, all.size());
                for (std::size_t k = 0; k < all.size(); ++k)
                    for (std::size_t e = 0; e < n; ++e) diff(e, k) = images[u * all.size() + k][e] - images[v * all.size() + k][e];
                const Matrix ker = nullspace(diff);
                for (std::size_t r = 0; r < ker.rows() && !q.equal_images; ++r) {
                    Vector img(n);
                    for (std::size_t k = 0; k < all.size(); ++k)
                        for (std::size_t e = 0; e < n; ++e) img[e] += ker(r, k) * tu[k][e];
                    q.equal_images = !is_zero_vector(img);
                }
            }
            out.push_back(q);
        }
    return out;
}

}  // namespace gca
