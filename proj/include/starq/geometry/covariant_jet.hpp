#ifndef STARQ_GEOMETRY_COVARIANT_JET_HPP
#define STARQ_GEOMETRY_COVARIANT_JET_HPP

#include <cstddef>
#include <span>
#include <vector>

#include <starq/algebra/poly.hpp>
#include <starq/geometry/connection.hpp>
#include <starq/operators/diff_op.hpp>

namespace starq
{

/// Differential operators J_{m1...mk} with J_{m1...mk}(f) = (nabla...nabla f)_{m1...mk},
/// the k-th iterated covariant derivative of a scalar. The newest derivative
/// carries the first index:
///   J_m = d_m,
///   J_{m n1..nk} = d_m o J_{n1..nk} - sum_j G^l_{m nj} J_{n1..l..nk}.
/// Rank k is stored densely over dim^k tuples, first index most significant.
class CovariantJets
{
public:
    // Builds ranks 1..max_rank; throws order_limit_exceeded above the operator order limit.
    CovariantJets(const Christoffel &g, std::size_t max_rank);

    std::size_t dim() const noexcept { return dim_; }
    std::size_t max_rank() const noexcept { return jets_.size(); }
    const DiffOp &at(std::span<const std::size_t> indices) const;
    const std::vector<DiffOp> &rank(std::size_t k) const { return jets_.at(k - 1); }

private:
    std::size_t dim_;
    std::vector<std::vector<DiffOp>> jets_;
};

// Components of the k-th covariant derivative of f, dense over dim^k tuples.
std::vector<Poly> covariant_jet(const LiftedConnection &c, std::size_t k, const Poly &f);
std::vector<Poly> covariant_jet(const Christoffel &g, std::size_t k, const Poly &f);

} // namespace starq

#endif
