#ifndef STARQ_STARPRODUCTS_STAR_PRODUCT_HPP
#define STARQ_STARPRODUCTS_STAR_PRODUCT_HPP

#include <cstddef>
#include <string>
#include <vector>

#include <starq/algebra/hbar_series.hpp>
#include <starq/operators/bidiff_op.hpp>
#include <starq/starproducts/poisson_tensor.hpp>

namespace starq
{

/// f * g = sum_{k <= N} hbar^k C_k(f, g), truncated at order N.
struct StarProduct {
    std::string kind;
    PoissonTensor poisson;
    std::vector<BiDiffOp> c; // C_0 .. C_N
    // Declared symmetry C_k(f, g) = (-1)^k C_k(g, f).
    bool parity = false;
    // Highest hbar-order at which associativity is claimed (N unless truncated).
    std::size_t associative_order = 0;

    std::size_t order() const noexcept { return c.empty() ? 0 : c.size() - 1; }
    std::size_t dim() const noexcept { return poisson.dim(); }
};

// Same product with C_k dropped for k > order.
StarProduct truncated(const StarProduct &s, std::size_t order);

// sum_k hbar^k C_k(f, g).
PolySeries star(const StarProduct &s, const Poly &f, const Poly &g);
// C[[hbar]]-bilinear extension, truncated at the product's order.
PolySeries star(const StarProduct &s, const PolySeries &f, const PolySeries &g);

// (f * g - g * f) / (i hbar). The order-0 part of the commutator must vanish;
// the result is truncated at order N - 1.
PolySeries star_bracket(const StarProduct &s, const Poly &f, const Poly &g);

} // namespace starq

#endif
