#ifndef STARQ_STARPRODUCTS_CLOSED_FORM_HPP
#define STARQ_STARPRODUCTS_CLOSED_FORM_HPP

#include <cstddef>
#include <vector>

#include <starq/geometry/connection.hpp>
#include <starq/operators/diff_op.hpp>

namespace starq
{

// Closed-form operators f -> C_k(x^a, f) of the natural cotangent product, one
// per phase-space coordinate (q^1..q^n, p_1..p_n), built from iterated base
// covariant derivatives and the f-tensors. k >= 1; the connection must be flat.
std::vector<DiffOp> ck_coordinate_closed_form(const Connection &c, std::size_t k);

} // namespace starq

#endif
