#ifndef STARQ_EQUIVALENCE_VERIFICATION_HPP
#define STARQ_EQUIVALENCE_VERIFICATION_HPP

#include <cstddef>

#include <starq/check_report.hpp>
#include <starq/equivalence/derivation.hpp>
#include <starq/starproducts/star_product.hpp>

namespace starq
{

// S(f *_M g) == Sf * Sg for all monomial pairs with total degree <= max_degree at
// every order <= S.order(), plus the one-sided relations
// S(x^a *_M f) == x^a * Sf and S(f *_M x^a) == Sf * x^a for deg f < max_degree.
CheckReport verify_intertwining(const EquivalenceMorphism &m, const StarProduct &s, unsigned max_degree);

// [S_k, x^a] == F^a for every k and a, recomputing F from the product.
CheckReport verify_defining_relation(const EquivalenceMorphism &m, const StarProduct &s);

// apply(S, x^I) == symmetrized star power of x^I for all monomials of degree <= max_degree.
CheckReport verify_symmetrization(const EquivalenceMorphism &m, const StarProduct &s, unsigned max_degree);

// Recorded solver agreement and parity facts of a recursive derivation.
CheckReport derivation_checks(const EquivalenceMorphism &m, bool parity);

} // namespace starq

#endif
