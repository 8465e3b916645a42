#ifndef STARQ_STARPRODUCTS_CHECKS_HPP
#define STARQ_STARPRODUCTS_CHECKS_HPP

#include <cstddef>

#include <starq/check_report.hpp>
#include <starq/starproducts/star_product.hpp>

namespace starq
{

// Axioms (i)-(v) plus the declared parity. Associativity is checked pointwise at
// every order k <= min(N, associative_order) on all monomial triples of total
// degree <= max_degree; the first failing triple is recorded.
CheckReport check_axioms(const StarProduct &s, unsigned max_degree);

// [[x^m, x^n]] == P^{mn} at every retained order, one entry per pair m < n.
CheckReport quantum_canonicity_check(const StarProduct &s);

} // namespace starq

#endif
