#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>

namespace gca {

/// Ground field of an algebra. Rational models the reals, Gaussian the complex numbers.
enum class Field { Rational, Gaussian };

std::string_view field_name(Field f);  // "Q" / "Qi"

/// Exact element of Q or Q(i). Values over Q simply carry a zero imaginary part.
class Scalar {
public:
    Scalar() = default;
    Scalar(long v) : re_(v) {}  // NOLINT(google-explicit-constructor)
    Scalar(mpq_class re) : re_(std::move(re)) { re_.canonicalize(); }  // NOLINT
    Scalar(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) {
        re_.canonicalize();
        im_.canonicalize();
    }

    static Scalar rational(long num, long den) { return Scalar(mpq_class(num, den)); }
    static Scalar imaginary_unit() { return Scalar(mpq_class(0), mpq_class(1)); }

    const mpq_class& re() const { return re_; }
    const mpq_class& im() const { return im_; }

    bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
    bool is_one() const { return re_ == 1 && sgn(im_) == 0; }
    bool is_real() const { return sgn(im_) == 0; }

    Scalar conj() const { return {re_, -im_}; }
    Scalar operator-() const { return {-re_, -im_}; }

    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);
    Scalar& operator/=(const Scalar& o);  // throws std::domain_error on division by zero

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
    friend bool operator==(const Scalar& a, const Scalar& b) { return a.re_ == b.re_ && a.im_ == b.im_; }

    /// "p/q", "p/q+r/s i", "r/s i"; integers print without a denominator.
    std::string str() const;

    /// Inverse of str(); also accepts "i", "-i", "2i", "1/2 - i".
    static Scalar parse(std::string_view text);

private:
    mpq_class re_{0};
    mpq_class im_{0};
};

/// Square root in Q when it exists.
std::optional<mpq_class> rational_sqrt(const mpq_class& q);

/// A square root of s inside Q(i), when one exists.
std::optional<Scalar> gaussian_sqrt(const Scalar& s);

}  // namespace gca
