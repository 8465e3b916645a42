#ifndef STARQ_EQUIVALENCE_DERIVATION_HPP
#define STARQ_EQUIVALENCE_DERIVATION_HPP

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include <starq/algebra/hbar_series.hpp>
#include <starq/operators/diff_op.hpp>
#include <starq/starproducts/star_product.hpp>

namespace starq
{

/// Per-order record of a derivation.
struct DerivationStep {
    std::size_t order = 0;
    std::vector<DiffOp> F;
    DiffOp eta;
    DiffOp nested;
    bool solvers_agree = true;
    // Parity product at even order: the reduced right-hand side was used and
    // compared against the general one.
    bool parity_reduced = false;
    bool reduced_matches_general = true;
};

/// S = id + sum_k hbar^k S_k relating the Moyal product to another product.
struct EquivalenceMorphism {
    HbarSeries<DiffOp> S;
    std::string provenance; // "recursion" or "closed-form"
    std::vector<DerivationStep> trace;

    std::size_t order() const noexcept { return S.order(); }
    std::size_t dim() const noexcept { return S[0].dim(); }
};

struct DerivationOptions {
    // Also solve every order with nested commutators and record agreement.
    bool cross_check = true;
    // Refuse products that fail quantum canonicity.
    bool require_canonicity = true;
};

// Solves [S_k, x^a] = F^a order by order up to N <= s.order(). For parity
// products even orders use the reduced right-hand side and odd orders must
// vanish. Throws on canonicity failure, on a nonzero odd order of a parity
// product, and if some S_k fails to annihilate 1 or a coordinate.
EquivalenceMorphism derive_equivalence(const StarProduct &s, std::size_t N, const DerivationOptions &options = {});

// Morphism with the given S_1..S_N (S_0 = id).
EquivalenceMorphism closed_form_morphism(std::size_t dim, std::span<const DiffOp> higher);

PolySeries apply(const EquivalenceMorphism &m, const Poly &f);
PolySeries apply(const EquivalenceMorphism &m, const PolySeries &f);

// (1/r!) sum over permutations of x^{s(a1)} * ... * x^{s(ar)}, computed over
// distinct orderings with multiplicity weights. r = 0 gives 1.
PolySeries symmetrized_S_on_monomial(const StarProduct &s, std::span<const std::size_t> indices);

} // namespace starq

#endif
