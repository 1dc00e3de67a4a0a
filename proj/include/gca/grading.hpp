#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace gca {

inline constexpr int kMaxDegreeWidth = 64;

/// Element of (Z2)^m packed into one word. Coordinate c (0-based, in the order the
/// vector is written) lives in bit c.
class Degree {
public:
    Degree() = default;
    Degree(int width, std::uint64_t bits);
    static Degree zero(int width) { return {width, 0}; }
    static Degree ones(int width);
    static Degree from_bits(std::span<const int> coords);

    int width() const { return width_; }
    std::uint64_t bits() const { return bits_; }
    bool at(int c) const { return (bits_ >> c) & 1u; }
    bool is_zero() const { return bits_ == 0; }
    int weight() const;

    Degree operator+(const Degree& o) const;  // xor; throws DimensionError on width mismatch
    friend bool operator==(const Degree&, const Degree&) = default;

    std::vector<int> coords() const;
    std::string str() const;  // "(0,1,1)"
    std::string bitstring() const;  // "011"

private:
    int width_ = 0;
    std::uint64_t bits_ = 0;
};

/// Symmetric bilinear form on (Z2)^m.
class BilinearFormZ2 {
public:
    enum class Kind { ScalarProduct, AlbuquerqueMajid, Custom };

    static BilinearFormZ2 scalar_product(int width);
    static BilinearFormZ2 albuquerque_majid(int width);
    /// rows[i] holds row i of the matrix as a bitmask; must be symmetric.
    static BilinearFormZ2 custom(int width, std::vector<std::uint64_t> rows);
    static BilinearFormZ2 custom(const std::vector<std::vector<int>>& matrix);

    Kind kind() const { return kind_; }
    int width() const { return width_; }
    const std::vector<std::uint64_t>& rows() const { return rows_; }
    bool entry(int i, int j) const;

    int eval(const Degree& x, const Degree& y) const;  // 0 or 1
    std::vector<std::vector<int>> matrix() const;

    friend bool operator==(const BilinearFormZ2&, const BilinearFormZ2&) = default;

private:
    Kind kind_ = Kind::ScalarProduct;
    int width_ = 0;
    std::vector<std::uint64_t> rows_;  // populated for Custom only
};

int form_eval(const BilinearFormZ2& form, const Degree& x, const Degree& y);
int parity(const Degree& x, const BilinearFormZ2& form);

/// (-1)^{form(x,y)}
inline int commutation_sign(const BilinearFormZ2& form, const Degree& x, const Degree& y) {
    return form.eval(x, y) ? -1 : 1;
}

/// A finitely generated abelian group with a form on its generators.
/// Modulus 0 stands for Z, k >= 2 for Z_k.
struct FgGroupSpec {
    std::vector<std::uint64_t> moduli;
    std::vector<std::vector<int>> beta;
};

struct GroupReduction {
    int target_width = 0;
    std::vector<Degree> generator_images;
    BilinearFormZ2 induced_form;
    std::vector<std::size_t> kept_generators;  // source generator behind each target coordinate
};

/// Replaces every Z or Z_{2^k} factor by Z2 and sends odd torsion to zero.
/// With drop_insignificant, coordinates on which the form vanishes identically are removed.
GroupReduction reduce_group(const FgGroupSpec& spec, bool drop_insignificant = false);

struct ReductionMap {
    int source_rank = 0;
    int target_width = 0;
    std::vector<Degree> images;
};

/// Embeds an arbitrary symmetric form on (Z2)^n into the scalar product on (Z2)^N, N <= 2n.
ReductionMap reduce_form_to_scalar(const std::vector<std::vector<int>>& beta);

}  // namespace gca
