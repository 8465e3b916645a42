#ifndef STARQ_ALGEBRA_HBAR_SERIES_HPP
#define STARQ_ALGEBRA_HBAR_SERIES_HPP

#include <cstddef>
#include <utility>
#include <vector>

#include <starq/algebra/gaussian_rational.hpp>
#include <starq/algebra/poly.hpp>
#include <starq/error.hpp>

namespace starq
{

/// Formal power series in hbar truncated after order N: c_0 + c_1 hbar + ... + c_N hbar^N.
/// Every operation discards contributions of order > N.
template <typename T>
class HbarSeries
{
public:
    HbarSeries() = default;
    // All coefficients set to `zero`.
    HbarSeries(std::size_t order, const T &zero) : coeffs_(order + 1, zero) {}
    explicit HbarSeries(std::vector<T> coeffs) : coeffs_(std::move(coeffs))
    {
        if (coeffs_.empty()) {
            throw invalid_argument("hbar series needs at least the order-0 coefficient");
        }
    }

    std::size_t order() const noexcept { return coeffs_.size() - 1; }
    const T &operator[](std::size_t k) const { return coeffs_.at(k); }
    T &operator[](std::size_t k) { return coeffs_.at(k); }
    const std::vector<T> &coefficients() const noexcept { return coeffs_; }

    HbarSeries &operator+=(const HbarSeries &o)
    {
        check_order(o);
        for (std::size_t k = 0; k < coeffs_.size(); ++k) {
            coeffs_[k] += o.coeffs_[k];
        }
        return *this;
    }
    HbarSeries &operator-=(const HbarSeries &o)
    {
        check_order(o);
        for (std::size_t k = 0; k < coeffs_.size(); ++k) {
            coeffs_[k] -= o.coeffs_[k];
        }
        return *this;
    }
    friend HbarSeries operator+(HbarSeries a, const HbarSeries &b) { return a += b; }
    friend HbarSeries operator-(HbarSeries a, const HbarSeries &b) { return a -= b; }

    HbarSeries &operator*=(const GaussianRational &c)
    {
        for (auto &x : coeffs_) {
            x *= c;
        }
        return *this;
    }

    // Same coefficients, truncated at a lower order.
    HbarSeries truncated(std::size_t order) const
    {
        if (order > this->order()) {
            throw order_mismatch("cannot raise the truncation order of a series");
        }
        return HbarSeries(std::vector<T>(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(order) + 1));
    }

    friend bool operator==(const HbarSeries &a, const HbarSeries &b) = default;

    void check_order(const HbarSeries &o) const
    {
        if (o.order() != order()) {
            throw order_mismatch("hbar series truncation orders differ");
        }
    }

private:
    std::vector<T> coeffs_;
};

/// Truncated Cauchy product with a caller-supplied coefficient product.
template <typename T, typename Mul>
HbarSeries<T> series_product(const HbarSeries<T> &a, const HbarSeries<T> &b, const T &zero, Mul &&mul)
{
    a.check_order(b);
    HbarSeries<T> r(a.order(), zero);
    for (std::size_t i = 0; i <= a.order(); ++i) {
        for (std::size_t j = 0; i + j <= a.order(); ++j) {
            r[i + j] += mul(a[i], b[j]);
        }
    }
    return r;
}

using PolySeries = HbarSeries<Poly>;

// Coefficient of hbar^k is sum_{l<=k} a_l * b_{k-l}; orders must agree.
PolySeries series_mul(const PolySeries &a, const PolySeries &b);

// Series with `p` at order 0 and zeros elsewhere.
PolySeries constant_series(const Poly &p, std::size_t order);

// Divides by hbar: requires a zero order-0 coefficient; result has order N-1.
PolySeries divide_by_hbar(const PolySeries &s);

bool is_zero(const PolySeries &s);

} // namespace starq

#endif
