#ifndef STARQ_STARPRODUCTS_CONSTRUCTORS_HPP
#define STARQ_STARPRODUCTS_CONSTRUCTORS_HPP

#include <cstddef>
#include <vector>

#include <starq/geometry/connection.hpp>
#include <starq/operators/diff_op.hpp>
#include <starq/starproducts/poisson_tensor.hpp>
#include <starq/starproducts/star_product.hpp>

namespace starq
{

inline constexpr std::size_t default_truncation_order = 4;

/// d vector fields D_m = sum_a D_m^a d_a with polynomial components.
class VectorFieldFrame
{
public:
    VectorFieldFrame() = default;
    // Each field must be a first-order operator without zeroth-order part.
    explicit VectorFieldFrame(std::vector<DiffOp> fields);

    static VectorFieldFrame coordinate(std::size_t dim);

    std::size_t dim() const noexcept { return fields_.size(); }
    const DiffOp &operator[](std::size_t m) const { return fields_.at(m); }
    const std::vector<DiffOp> &fields() const noexcept { return fields_; }

    bool is_commuting() const;
    // P'^{ab} = sum P^{mn} D_m^a D_n^b with the canonical P of the given shape.
    std::vector<Poly> induced_bivector(std::size_t n, std::size_t casimirs) const;

private:
    std::vector<DiffOp> fields_;
};

// C_k = (1/k!) (i/2)^k P^{m1 n1}...P^{mk nk} d_{m1..mk} (x) d_{n1..nk}. Requires constant P.
StarProduct moyal(const PoissonTensor &p, std::size_t order = default_truncation_order);

// Same expansion with d_m replaced by commuting frame fields D_m; the frame must
// reproduce `p` through P = P^{mn} D_m (x) D_n with canonical P^{mn}.
StarProduct vf_product(const VectorFieldFrame &frame, const PoissonTensor &p,
                       std::size_t order = default_truncation_order);

// Moyal-type expansion with covariant derivatives of the cotangent lift of a
// flat base connection. Order at most 4.
StarProduct natural_tstar(const Connection &c, std::size_t order = default_truncation_order);

// Second-order product of a symplectic torsion-free connection, including the
// -a R_{m1 m2} correction in C_2. Associativity holds through order 2.
StarProduct truncated_symplectic(const SymplecticConnectionSpec &spec);

} // namespace starq

#endif
