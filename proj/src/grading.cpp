#include "gca/grading.hpp"

#include "gca/errors.hpp"

#include <bit>

namespace gca {

namespace {

std::uint64_t width_mask(int width) { return width >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << width) - 1; }

void check_width(int width) {
    if (width < 0 || width > kMaxDegreeWidth)
        throw DimensionError("degree width " + std::to_string(width) + " outside [0, 64]");
}

int parity_of(std::uint64_t v) { return std::popcount(v) & 1; }

}  // namespace

Degree::Degree(int width, std::uint64_t bits) : width_(width), bits_(bits) {
    check_width(width);
    if (bits & ~width_mask(width)) throw DimensionError("degree bits exceed width " + std::to_string(width));
}

Degree Degree::ones(int width) {
    check_width(width);
    return {width, width_mask(width)};
}

Degree Degree::from_bits(std::span<const int> coords) {
    const int width = static_cast<int>(coords.size());
    check_width(width);
    std::uint64_t bits = 0;
    for (int c = 0; c < width; ++c) {
        if (coords[c] != 0 && coords[c] != 1)
            throw DimensionError("degree coordinate must be 0 or 1, got " + std::to_string(coords[c]));
        if (coords[c]) bits |= std::uint64_t{1} << c;
    }
    return {width, bits};
}

int Degree::weight() const { return std::popcount(bits_); }

Degree Degree::operator+(const Degree& o) const {
    if (width_ != o.width_)
        throw DimensionError("degree width mismatch: " + std::to_string(width_) + " vs " + std::to_string(o.width_));
    return {width_, bits_ ^ o.bits_};
}

std::vector<int> Degree::coords() const {
    std::vector<int> out(width_);
    for (int c = 0; c < width_; ++c) out[c] = at(c) ? 1 : 0;
    return out;
}

std::string Degree::str() const {
    std::string s = "(";
    for (int c = 0; c < width_; ++c) {
        if (c) s += ',';
        s += at(c) ? '1' : '0';
    }
    return s + ")";
}

std::string Degree::bitstring() const {
    std::string s;
    for (int c = 0; c < width_; ++c) s += at(c) ? '1' : '0';
    return s;
}

BilinearFormZ2 BilinearFormZ2::scalar_product(int width) {
    check_width(width);
    BilinearFormZ2 f;
    f.kind_ = Kind::ScalarProduct;
    f.width_ = width;
    return f;
}

BilinearFormZ2 BilinearFormZ2::albuquerque_majid(int width) {
    check_width(width);
    BilinearFormZ2 f;
    f.kind_ = Kind::AlbuquerqueMajid;
    f.width_ = width;
    return f;
}

BilinearFormZ2 BilinearFormZ2::custom(int width, std::vector<std::uint64_t> rows) {
    check_width(width);
    if (static_cast<int>(rows.size()) != width)
        throw DimensionError("custom form needs " + std::to_string(width) + " rows, got " + std::to_string(rows.size()));
    const std::uint64_t mask = width_mask(width);
    for (int i = 0; i < width; ++i) {
        if (rows[i] & ~mask) throw DimensionError("custom form row " + std::to_string(i) + " exceeds width");
        for (int j = 0; j < i; ++j)
            if (((rows[i] >> j) & 1u) != ((rows[j] >> i) & 1u))
                throw DimensionError("custom form is not symmetric at (" + std::to_string(i) + "," + std::to_string(j) +
                                     ")");
    }
    BilinearFormZ2 f;
    f.kind_ = Kind::Custom;
    f.width_ = width;
    f.rows_ = std::move(rows);
    return f;
}

BilinearFormZ2 BilinearFormZ2::custom(const std::vector<std::vector<int>>& matrix) {
    const int width = static_cast<int>(matrix.size());
    std::vector<std::uint64_t> rows(width, 0);
    for (int i = 0; i < width; ++i) {
        if (static_cast<int>(matrix[i].size()) != width) throw DimensionError("custom form matrix is not square");
        for (int j = 0; j < width; ++j) {
            if (matrix[i][j] != 0 && matrix[i][j] != 1)
                throw DimensionError("custom form entries must be 0 or 1");
            if (matrix[i][j]) rows[i] |= std::uint64_t{1} << j;
        }
    }
    return custom(width, std::move(rows));
}

bool BilinearFormZ2::entry(int i, int j) const {
    switch (kind_) {
    case Kind::ScalarProduct:
        return i == j;
    case Kind::AlbuquerqueMajid:
        return i != j;  // delta_ij + 1
    case Kind::Custom:
        return (rows_[i] >> j) & 1u;
    }
    return false;
}

int BilinearFormZ2::eval(const Degree& x, const Degree& y) const {
    if (x.width() != width_ || y.width() != width_)
        throw DimensionError("form of width " + std::to_string(width_) + " applied to degrees of width " +
                             std::to_string(x.width()) + " and " + std::to_string(y.width()));
    switch (kind_) {
    case Kind::ScalarProduct:
        return parity_of(x.bits() & y.bits());
    case Kind::AlbuquerqueMajid:
        return (parity_of(x.bits() & y.bits()) + parity_of(x.bits()) * parity_of(y.bits())) & 1;
    case Kind::Custom: {
        int acc = 0;
        for (int i = 0; i < width_; ++i)
            if (x.at(i)) acc ^= parity_of(rows_[i] & y.bits());
        return acc;
    }
    }
    return 0;
}

std::vector<std::vector<int>> BilinearFormZ2::matrix() const {
    std::vector<std::vector<int>> m(width_, std::vector<int>(width_, 0));
    for (int i = 0; i < width_; ++i)
        for (int j = 0; j < width_; ++j) m[i][j] = entry(i, j) ? 1 : 0;
    return m;
}

int form_eval(const BilinearFormZ2& form, const Degree& x, const Degree& y) { return form.eval(x, y); }

int parity(const Degree& x, const BilinearFormZ2& form) { return form.eval(x, x); }

namespace {

void validate_beta(const std::vector<std::vector<int>>& beta, std::size_t n) {
    if (beta.size() != n) throw SchemaError("beta must be " + std::to_string(n) + "x" + std::to_string(n));
    for (std::size_t i = 0; i < n; ++i) {
        if (beta[i].size() != n) throw SchemaError("beta row " + std::to_string(i) + " has wrong length");
        for (std::size_t j = 0; j < n; ++j) {
            if (beta[i][j] != 0 && beta[i][j] != 1)
                throw SchemaError("beta entries must be 0 or 1 (row " + std::to_string(i) + ")");
            if (beta[i][j] != beta[j][i])
                throw SchemaError("beta is not symmetric at (" + std::to_string(i) + "," + std::to_string(j) + ")");
        }
    }
}

bool is_odd_torsion(std::uint64_t modulus) { return modulus != 0 && modulus % 2 == 1; }

}  // namespace

GroupReduction reduce_group(const FgGroupSpec& spec, bool drop_insignificant) {
    const std::size_t n = spec.moduli.size();
    validate_beta(spec.beta, n);
    for (std::size_t g = 0; g < n; ++g) {
        if (spec.moduli[g] == 1) throw SchemaError("modulus 1 (trivial factor) at generator " + std::to_string(g));
        if (!is_odd_torsion(spec.moduli[g])) continue;
        for (std::size_t h = 0; h < n; ++h)
            if (spec.beta[g][h])
                throw SchemaError("beta is nonzero on odd-torsion generator " + std::to_string(g) + " (Z_" +
                                  std::to_string(spec.moduli[g]) + " has no nontrivial map to Z2)");
    }

    std::vector<std::size_t> kept;
    for (std::size_t g = 0; g < n; ++g) {
        if (is_odd_torsion(spec.moduli[g])) {
            if (!drop_insignificant) kept.push_back(g);  // keeps a zero coordinate for reproducibility
            continue;
        }
        bool significant = false;
        for (std::size_t h = 0; h < n; ++h) significant = significant || spec.beta[g][h] != 0;
        if (significant || !drop_insignificant) kept.push_back(g);
    }
    if (kept.size() > static_cast<std::size_t>(kMaxDegreeWidth)) throw SizeError("group reduction exceeds 64 coordinates");

    const int width = static_cast<int>(kept.size());
    GroupReduction out;
    out.target_width = width;
    out.kept_generators = kept;
    out.generator_images.assign(n, Degree::zero(width));
    for (int c = 0; c < width; ++c) {
        const std::size_t g = kept[c];
        if (!is_odd_torsion(spec.moduli[g])) out.generator_images[g] = Degree(width, std::uint64_t{1} << c);
    }
    std::vector<std::uint64_t> rows(width, 0);
    for (int a = 0; a < width; ++a)
        for (int b = 0; b < width; ++b)
            if (spec.beta[kept[a]][kept[b]]) rows[a] |= std::uint64_t{1} << b;
    out.induced_form = BilinearFormZ2::custom(width, std::move(rows));
    return out;
}

ReductionMap reduce_form_to_scalar(const std::vector<std::vector<int>>& beta) {
    const std::size_t n = beta.size();
    validate_beta(beta, n);
    if (2 * n > static_cast<std::size_t>(kMaxDegreeWidth))
        throw SizeError("form rank " + std::to_string(n) + " could need more than 64 target coordinates");

    // Stage 1: lower-triangular sigma_i with <sigma_i, sigma_j> = beta_ij for i != j.
    std::vector<std::uint64_t> sigma(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        sigma[i] = std::uint64_t{1} << i;
        for (std::size_t j = 0; j < i; ++j) {
            const int overlap = parity_of(sigma[i] & sigma[j] & ((std::uint64_t{1} << j) - 1));
            if ((beta[j][i] ^ overlap) & 1) sigma[i] |= std::uint64_t{1} << j;
        }
    }
    // Stage 2: one private coordinate per generator whose self-pairing is wrong.
    int width = static_cast<int>(n);
    for (std::size_t i = 0; i < n; ++i)
        if (parity_of(sigma[i]) != beta[i][i]) sigma[i] |= std::uint64_t{1} << width++;

    ReductionMap out;
    out.source_rank = static_cast<int>(n);
    out.target_width = width;
    for (std::size_t i = 0; i < n; ++i) out.images.emplace_back(width, sigma[i]);
    return out;
}

}  // namespace gca
