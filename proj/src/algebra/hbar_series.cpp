#include <starq/algebra/hbar_series.hpp>

namespace starq
{

PolySeries series_mul(const PolySeries &a, const PolySeries &b)
{
    return series_product(a, b, Poly(a[0].dim()), [](const Poly &x, const Poly &y) { return x * y; });
}

PolySeries constant_series(const Poly &p, std::size_t order)
{
    PolySeries s(order, Poly(p.dim()));
    s[0] = p;
    return s;
}

PolySeries divide_by_hbar(const PolySeries &s)
{
    if (!s[0].is_zero()) {
        throw invalid_argument("series has a nonzero order-0 term and is not divisible by hbar");
    }
    if (s.order() == 0) {
        throw order_mismatch("cannot divide an order-0 series by hbar");
    }
    std::vector<Poly> c(s.coefficients().begin() + 1, s.coefficients().end());
    return PolySeries(std::move(c));
}

bool is_zero(const PolySeries &s)
{
    for (const auto &c : s.coefficients()) {
        if (!c.is_zero()) {
            return false;
        }
    }
    return true;
}

} // namespace starq
