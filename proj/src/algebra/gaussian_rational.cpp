#include <starq/algebra/gaussian_rational.hpp>

#include <cctype>

#include <starq/error.hpp>

namespace starq
{

GaussianRational GaussianRational::fraction(long num, long den)
{
    if (den == 0) {
        throw invalid_argument("zero denominator");
    }
    mpq_class q(num, den);
    q.canonicalize();
    return GaussianRational(std::move(q));
}

mpq_class GaussianRational::parse_rational(std::string_view text)
{
    std::string s(text);
    if (s.empty()) {
        throw parse_error("empty rational literal");
    }
    std::size_t pos = 0;
    if (s[0] == '+' || s[0] == '-') {
        pos = 1;
    }
    bool seen_slash = false;
    bool digit_before = false;
    bool digit_after = false;
    for (std::size_t k = pos; k < s.size(); ++k) {
        const char c = s[k];
        if (c == '/') {
            if (seen_slash) {
                throw parse_error("malformed rational literal '" + s + "'");
            }
            seen_slash = true;
        } else if (std::isdigit(static_cast<unsigned char>(c)) != 0) {
            (seen_slash ? digit_after : digit_before) = true;
        } else {
            throw parse_error("malformed rational literal '" + s + "'");
        }
    }
    if (!digit_before || (seen_slash && !digit_after)) {
        throw parse_error("malformed rational literal '" + s + "'");
    }
    if (s[0] == '+') {
        s.erase(0, 1);
    }
    mpq_class q;
    if (q.set_str(s, 10) != 0) {
        throw parse_error("malformed rational literal '" + s + "'");
    }
    if (q.get_den() == 0) {
        throw parse_error("zero denominator in '" + s + "'");
    }
    q.canonicalize();
    return q;
}

GaussianRational &GaussianRational::operator+=(const GaussianRational &o)
{
    re_ += o.re_;
    if (sgn(o.im_) != 0) {
        im_ += o.im_;
    }
    return *this;
}

GaussianRational &GaussianRational::operator-=(const GaussianRational &o)
{
    re_ -= o.re_;
    if (sgn(o.im_) != 0) {
        im_ -= o.im_;
    }
    return *this;
}

GaussianRational &GaussianRational::operator*=(const GaussianRational &o)
{
    const bool a_real = sgn(im_) == 0;
    const bool b_real = sgn(o.im_) == 0;
    if (a_real && b_real) {
        re_ *= o.re_;
        return *this;
    }
    if (b_real) {
        re_ *= o.re_;
        im_ *= o.re_;
        return *this;
    }
    if (a_real) {
        im_ = re_ * o.im_;
        re_ *= o.re_;
        return *this;
    }
    mpq_class re = re_ * o.re_ - im_ * o.im_;
    mpq_class im = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
}

GaussianRational &GaussianRational::operator/=(const GaussianRational &o)
{
    if (o.is_zero()) {
        throw invalid_argument("division by zero");
    }
    if (sgn(o.im_) == 0) {
        re_ /= o.re_;
        im_ /= o.re_;
        return *this;
    }
    const mpq_class norm = o.re_ * o.re_ + o.im_ * o.im_;
    *this *= o.conj();
    re_ /= norm;
    im_ /= norm;
    return *this;
}

std::string rational_to_string(const mpq_class &q)
{
    if (q.get_den() == 1) {
        return q.get_num().get_str();
    }
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string GaussianRational::to_string() const
{
    if (sgn(im_) == 0) {
        return rational_to_string(re_);
    }
    std::string imag;
    if (im_ == 1) {
        imag = "i";
    } else if (im_ == -1) {
        imag = "-i";
    } else {
        imag = rational_to_string(im_) + "*i";
    }
    if (sgn(re_) == 0) {
        return imag;
    }
    if (sgn(im_) < 0) {
        const mpq_class abs_im = -im_;
        return rational_to_string(re_) + " - " + (abs_im == 1 ? std::string("i") : rational_to_string(abs_im) + "*i");
    }
    return rational_to_string(re_) + " + " + imag;
}

GaussianRational pow(const GaussianRational &base, unsigned exponent)
{
    GaussianRational result(1);
    for (unsigned k = 0; k < exponent; ++k) {
        result *= base;
    }
    return result;
}

mpq_class factorial(unsigned n)
{
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return mpq_class(f);
}

} // namespace starq
