#include "gca/scalar.hpp"

#include <cctype>
#include <stdexcept>

namespace gca {

std::string_view field_name(Field f) { return f == Field::Rational ? "Q" : "Qi"; }

Scalar& Scalar::operator+=(const Scalar& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
    if (sgn(im_) == 0 && sgn(o.im_) == 0) {
        re_ *= o.re_;
        return *this;
    }
    mpq_class re = re_ * o.re_ - im_ * o.im_;
    mpq_class im = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
    if (o.is_zero()) throw std::domain_error("division by zero scalar");
    if (sgn(o.im_) == 0) {
        re_ /= o.re_;
        im_ /= o.re_;
        return *this;
    }
    mpq_class norm = o.re_ * o.re_ + o.im_ * o.im_;
    *this *= o.conj();
    re_ /= norm;
    im_ /= norm;
    return *this;
}

std::string Scalar::str() const {
    if (sgn(im_) == 0) return re_.get_str();
    std::string imag;
    if (im_ == 1)
        imag = "i";
    else if (im_ == -1)
        imag = "-i";
    else
        imag = im_.get_str() + " i";
    if (sgn(re_) == 0) return imag;
    if (sgn(im_) > 0) return re_.get_str() + "+" + imag;
    return re_.get_str() + imag;  // imag carries its own minus sign
}

namespace {

mpq_class parse_rational(std::string_view t, std::string_view whole) {
    if (t.empty()) throw std::invalid_argument("malformed scalar: '" + std::string(whole) + "'");
    for (char c : t)
        if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '/' || c == '-' || c == '+'))
            throw std::invalid_argument("malformed scalar: '" + std::string(whole) + "'");
    if (t.front() == '+') t.remove_prefix(1);
    mpq_class q;
    if (q.set_str(std::string(t), 10) != 0)
        throw std::invalid_argument("malformed scalar: '" + std::string(whole) + "'");
    if (sgn(q.get_den()) == 0)
        throw std::invalid_argument("zero denominator in scalar: '" + std::string(whole) + "'");
    q.canonicalize();
    return q;
}

}  // namespace

Scalar Scalar::parse(std::string_view text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    if (s.empty()) throw std::invalid_argument("empty scalar");
    if (s.back() != 'i') return Scalar(parse_rational(s, text));

    s.pop_back();
    // split "re+im" / "re-im" at the last sign that is not the leading one
    std::size_t cut = std::string::npos;
    for (std::size_t k = s.size(); k-- > 1;)
        if (s[k] == '+' || s[k] == '-') {
            cut = k;
            break;
        }
    std::string re_part = cut == std::string::npos ? "" : s.substr(0, cut);
    std::string im_part = cut == std::string::npos ? s : s.substr(cut);
    if (im_part.empty() || im_part == "+") im_part = "1";
    if (im_part == "-") im_part = "-1";
    mpq_class re = re_part.empty() ? mpq_class(0) : parse_rational(re_part, text);
    return {re, parse_rational(im_part, text)};
}

std::optional<mpq_class> rational_sqrt(const mpq_class& q) {
    if (sgn(q) < 0) return std::nullopt;
    const mpz_class& num = q.get_num();
    const mpz_class& den = q.get_den();
    if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t())) return std::nullopt;
    mpz_class rn = sqrt(num);
    mpz_class rd = sqrt(den);
    return mpq_class(rn, rd);
}

std::optional<Scalar> gaussian_sqrt(const Scalar& s) {
    const mpq_class& a = s.re();
    const mpq_class& b = s.im();
    if (sgn(b) == 0) {
        if (sgn(a) >= 0) {
            if (auto r = rational_sqrt(a)) return Scalar(*r);
            return std::nullopt;
        }
        if (auto r = rational_sqrt(mpq_class(-a))) return Scalar(mpq_class(0), *r);
        return std::nullopt;
    }
    // (x + y i)^2 = a + b i  with  x^2 = (a + |s|) / 2,  y = b / (2x)
    auto modulus = rational_sqrt(mpq_class(a * a + b * b));
    if (!modulus) return std::nullopt;
    auto x = rational_sqrt(mpq_class((a + *modulus) / 2));
    if (!x || sgn(*x) == 0) return std::nullopt;
    mpq_class y = b / (2 * *x);
    return Scalar(*x, y);
}

}  // namespace gca
