#ifndef STARQ_ALGEBRA_GAUSSIAN_RATIONAL_HPP
#define STARQ_ALGEBRA_GAUSSIAN_RATIONAL_HPP

#include <compare>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace starq
{

/// Exact complex number re + i*im with arbitrary-precision rational parts.
///
/// Both parts are kept in canonical (reduced) form by GMP after every
/// operation, so structural equality is value equality.
class GaussianRational
{
public:
    GaussianRational() = default;
    GaussianRational(long v) : re_(v) {}
    GaussianRational(mpq_class re) : re_(std::move(re)) { re_.canonicalize(); }
    GaussianRational(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im))
    {
        re_.canonicalize();
        im_.canonicalize();
    }

    static GaussianRational i() { return {mpq_class(0), mpq_class(1)}; }
    static GaussianRational fraction(long num, long den);
    // Parses "a", "a/b" with optional sign; throws parse_error.
    static mpq_class parse_rational(std::string_view text);

    const mpq_class &re() const noexcept { return re_; }
    const mpq_class &im() const noexcept { return im_; }

    bool is_zero() const noexcept { return sgn(re_) == 0 && sgn(im_) == 0; }
    bool is_real() const noexcept { return sgn(im_) == 0; }
    bool is_one() const noexcept { return sgn(im_) == 0 && re_ == 1; }

    GaussianRational conj() const { return {re_, -im_}; }

    GaussianRational &operator+=(const GaussianRational &o);
    GaussianRational &operator-=(const GaussianRational &o);
    GaussianRational &operator*=(const GaussianRational &o);
    GaussianRational &operator/=(const GaussianRational &o);

    friend GaussianRational operator+(GaussianRational a, const GaussianRational &b) { return a += b; }
    friend GaussianRational operator-(GaussianRational a, const GaussianRational &b) { return a -= b; }
    friend GaussianRational operator*(GaussianRational a, const GaussianRational &b) { return a *= b; }
    friend GaussianRational operator/(GaussianRational a, const GaussianRational &b) { return a /= b; }
    GaussianRational operator-() const { return {-re_, -im_}; }

    friend bool operator==(const GaussianRational &a, const GaussianRational &b)
    {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }

    // Human-readable form: "3/4", "-i", "1/2 + 3/5*i".
    std::string to_string() const;

private:
    mpq_class re_{0};
    mpq_class im_{0};
};

// "a/b" (or "a" when b == 1).
std::string rational_to_string(const mpq_class &q);

GaussianRational pow(const GaussianRational &base, unsigned exponent);

// n! as an exact rational.
mpq_class factorial(unsigned n);

} // namespace starq

#endif
