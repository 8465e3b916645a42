#include <starq/starproducts/poisson_tensor.hpp>

#include <algorithm>

#include <starq/error.hpp>
#include <starq/geometry/connection.hpp>

namespace starq
{

PoissonTensor::PoissonTensor(std::size_t n, std::size_t casimirs, std::vector<Poly> components)
    : n_(n), casimirs_(casimirs), p_(std::move(components))
{
    const std::size_t d = dim();
    if (d == 0 || p_.size() != d * d) {
        throw invalid_argument("Poisson tensor needs d*d components");
    }
    for (std::size_t a = 0; a < d; ++a) {
        for (std::size_t b = 0; b < d; ++b) {
            if (p_[a * d + b].dim() != d) {
                throw dimension_mismatch(p_[a * d + b].dim(), d);
            }
            if (!(p_[a * d + b] == -p_[b * d + a])) {
                throw invalid_argument("Poisson tensor is not antisymmetric");
            }
        }
    }
}

PoissonTensor PoissonTensor::canonical(std::size_t n, std::size_t casimirs)
{
    const std::size_t d = 2 * n + casimirs;
    const auto m = canonical_poisson_matrix(n, casimirs);
    std::vector<Poly> comps;
    comps.reserve(d * d);
    for (int v : m) {
        comps.emplace_back(d, GaussianRational(v));
    }
    return PoissonTensor(n, casimirs, std::move(comps));
}

bool PoissonTensor::is_constant() const noexcept
{
    return std::all_of(p_.begin(), p_.end(), [](const Poly &p) { return p.is_constant(); });
}

GaussianRational PoissonTensor::constant(std::size_t m, std::size_t v) const
{
    const Poly &p = (*this)(m, v);
    if (!p.is_constant()) {
        throw invalid_argument("Poisson tensor entry is not constant");
    }
    return p.constant_term();
}

BiDiffOp PoissonTensor::bivector() const
{
    const std::size_t d = dim();
    BiDiffOp b(d);
    for (std::size_t m = 0; m < d; ++m) {
        for (std::size_t v = 0; v < d; ++v) {
            b.add_term(MultiIndex::unit(d, m), MultiIndex::unit(d, v), (*this)(m, v));
        }
    }
    return b;
}

Poly PoissonTensor::bracket(const Poly &f, const Poly &g) const
{
    return bidiff_apply(bivector(), f, g);
}

} // namespace starq
