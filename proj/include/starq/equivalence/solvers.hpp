#ifndef STARQ_EQUIVALENCE_SOLVERS_HPP
#define STARQ_EQUIVALENCE_SOLVERS_HPP

#include <cstddef>
#include <span>
#include <vector>

#include <starq/operators/diff_op.hpp>
#include <starq/starproducts/star_product.hpp>

namespace starq
{

// Right-hand side of [S_k, x^a] = F^a for every coordinate a, given S_0..S_{k-1}:
//   F^a = 1/2 sum_{l=1..k} (C_l(x^a, .) + C_l(., x^a)) o S_{k-l}.
// With `parity_reduced` the product is assumed to satisfy the parity relation and
//   F^a = sum_{l even} C_l(x^a, .) o S_{k-l}
// is used instead.
std::vector<DiffOp> rhs_F(const StarProduct &s, std::span<const DiffOp> lower, std::size_t k,
                          bool parity_reduced = false);

// The unique eta with eta(1) = eta(x^a) = 0 and [eta, x^a] = F^a, built from
//   eta = sum_K c_K d_K,  c_K = sum_a phi^{a, K - e_a} / |K|.
// Throws invalid_argument naming the first coordinate whose F^a is not reproduced.
DiffOp eta_from_phi(std::span<const DiffOp> F);

// sum_{n>=1} 1/n! [x^{a1}, ... [x^{a(n-1)}, F^{an}]] o d_{a1..an}, with
// [A, B] = A o B - B o A. Throws order_limit_exceeded if the nesting does not terminate.
DiffOp nested_commutator_solution(std::span<const DiffOp> F);

} // namespace starq

#endif
