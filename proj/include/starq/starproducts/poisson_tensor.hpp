#ifndef STARQ_STARPRODUCTS_POISSON_TENSOR_HPP
#define STARQ_STARPRODUCTS_POISSON_TENSOR_HPP

#include <cstddef>
#include <vector>

#include <starq/algebra/poly.hpp>
#include <starq/operators/bidiff_op.hpp>

namespace starq
{

/// Antisymmetric bivector P^{mn} on d = 2n + k coordinates.
class PoissonTensor
{
public:
    PoissonTensor() = default;
    // Throws invalid_argument unless `components` (row-major d x d) is antisymmetric.
    PoissonTensor(std::size_t n, std::size_t casimirs, std::vector<Poly> components);

    // Block form with n conjugate pairs (q^i, p_i) and k Casimir directions.
    static PoissonTensor canonical(std::size_t n, std::size_t casimirs = 0);

    std::size_t n() const noexcept { return n_; }
    std::size_t casimirs() const noexcept { return casimirs_; }
    std::size_t dim() const noexcept { return 2 * n_ + casimirs_; }
    const Poly &operator()(std::size_t m, std::size_t v) const { return p_[m * dim() + v]; }

    bool is_constant() const noexcept;
    // Constant entry; requires is_constant().
    GaussianRational constant(std::size_t m, std::size_t v) const;

    // (f, g) -> P^{mn} d_m f d_n g.
    BiDiffOp bivector() const;
    Poly bracket(const Poly &f, const Poly &g) const;

    friend bool operator==(const PoissonTensor &a, const PoissonTensor &b) = default;

private:
    std::size_t n_ = 0;
    std::size_t casimirs_ = 0;
    std::vector<Poly> p_;
};

} // namespace starq

#endif
