#include <starq/starproducts/star_product.hpp>

#include <algorithm>
#include <string>

#include <starq/error.hpp>

namespace starq
{

StarProduct truncated(const StarProduct &s, std::size_t order)
{
    if (order > s.order()) {
        throw order_mismatch("cannot truncate a product of order " + std::to_string(s.order()) + " at order " +
                             std::to_string(order));
    }
    StarProduct t = s;
    t.c.resize(order + 1);
    t.associative_order = std::min(s.associative_order, order);
    return t;
}

PolySeries star(const StarProduct &s, const Poly &f, const Poly &g)
{
    PolySeries out(s.order(), Poly(s.dim()));
    for (std::size_t k = 0; k <= s.order(); ++k) {
        out[k] = bidiff_apply(s.c[k], f, g);
    }
    return out;
}

PolySeries star(const StarProduct &s, const PolySeries &f, const PolySeries &g)
{
    const std::size_t n = s.order();
    if (f.order() != n || g.order() != n) {
        throw order_mismatch("series order differs from the star-product order");
    }
    PolySeries out(n, Poly(s.dim()));
    for (std::size_t i = 0; i <= n; ++i) {
        if (f[i].is_zero()) {
            continue;
        }
        for (std::size_t j = 0; i + j <= n; ++j) {
            if (g[j].is_zero()) {
                continue;
            }
            for (std::size_t k = 0; i + j + k <= n; ++k) {
                out[i + j + k] += bidiff_apply(s.c[k], f[i], g[j]);
            }
        }
    }
    return out;
}

PolySeries star_bracket(const StarProduct &s, const Poly &f, const Poly &g)
{
    if (s.order() == 0) {
        throw order_mismatch("the deformed bracket needs a product of order >= 1");
    }
    PolySeries comm = star(s, f, g) - star(s, g, f);
    PolySeries shifted = divide_by_hbar(comm);
    // 1 / i = -i
    shifted *= -GaussianRational::i();
    return shifted;
}

} // namespace starq
