#include <starq/equivalence/derivation.hpp>

#include <algorithm>
#include <string>

#include <starq/equivalence/solvers.hpp>
#include <starq/error.hpp>
#include <starq/starproducts/checks.hpp>

namespace starq
{

EquivalenceMorphism derive_equivalence(const StarProduct &s, std::size_t N, const DerivationOptions &options)
{
    if (N > s.order()) {
        throw order_mismatch("requested order " + std::to_string(N) + " exceeds the product order " +
                             std::to_string(s.order()));
    }
    const std::size_t d = s.dim();
    if (options.require_canonicity && N > 0) {
        const CheckReport canon = quantum_canonicity_check(s);
        if (const CheckEntry *bad = canon.first_failure()) {
            throw invalid_argument("coordinates are not quantum canonical: " + bad->name + " " + bad->detail);
        }
    }
    EquivalenceMorphism m;
    m.provenance = "recursion";
    std::vector<DiffOp> S{DiffOp::identity(d)};
    for (std::size_t k = 1; k <= N; ++k) {
        DerivationStep step;
        step.order = k;
        std::vector<DiffOp> general = rhs_F(s, S, k);
        if (s.parity && k % 2 == 0) {
            step.F = rhs_F(s, S, k, true);
            step.parity_reduced = true;
            step.reduced_matches_general = step.F == general;
        } else {
            step.F = std::move(general);
        }
        step.eta = eta_from_phi(step.F);
        if (options.cross_check) {
            step.nested = nested_commutator_solution(step.F);
            step.solvers_agree = op_equal(step.eta, step.nested);
        }
        if (s.parity && k % 2 == 1 && !step.eta.is_zero()) {
            throw invalid_argument("parity product produced a nonzero S_" + std::to_string(k));
        }
        for (const auto &[index, c] : step.eta.terms()) {
            if (index.length() <= 1) {
                throw invalid_argument("S_" + std::to_string(k) + " does not annihilate 1 and the coordinates");
            }
        }
        S.push_back(step.eta);
        m.trace.push_back(std::move(step));
    }
    m.S = HbarSeries<DiffOp>(std::move(S));
    return m;
}

EquivalenceMorphism closed_form_morphism(std::size_t dim, std::span<const DiffOp> higher)
{
    std::vector<DiffOp> S{DiffOp::identity(dim)};
    for (const auto &op : higher) {
        if (op.dim() != dim) {
            throw dimension_mismatch(op.dim(), dim);
        }
        S.push_back(op);
    }
    EquivalenceMorphism m;
    m.S = HbarSeries<DiffOp>(std::move(S));
    m.provenance = "closed-form";
    return m;
}

PolySeries apply(const EquivalenceMorphism &m, const Poly &f)
{
    PolySeries out(m.order(), Poly(m.dim()));
    for (std::size_t k = 0; k <= m.order(); ++k) {
        out[k] = apply(m.S[k], f);
    }
    return out;
}

PolySeries apply(const EquivalenceMorphism &m, const PolySeries &f)
{
    if (f.order() != m.order()) {
        throw order_mismatch("series order differs from the morphism order");
    }
    PolySeries out(m.order(), Poly(m.dim()));
    for (std::size_t i = 0; i <= m.order(); ++i) {
        for (std::size_t j = 0; i + j <= m.order(); ++j) {
            if (!f[j].is_zero()) {
                out[i + j] += apply(m.S[i], f[j]);
            }
        }
    }
    return out;
}

PolySeries symmetrized_S_on_monomial(const StarProduct &s, std::span<const std::size_t> indices)
{
    const std::size_t d = s.dim();
    const std::size_t N = s.order();
    for (std::size_t a : indices) {
        if (a >= d) {
            throw invalid_argument("coordinate index out of range");
        }
    }
    if (indices.empty()) {
        return constant_series(Poly(d, GaussianRational(1)), N);
    }
    std::vector<std::size_t> perm(indices.begin(), indices.end());
    std::sort(perm.begin(), perm.end());
    // Each distinct ordering stands for prod m_i! permutations.
    mpq_class weight(1);
    for (std::size_t i = 0; i < perm.size();) {
        std::size_t j = i;
        while (j < perm.size() && perm[j] == perm[i]) {
            ++j;
        }
        weight *= factorial(static_cast<unsigned>(j - i));
        i = j;
    }
    weight /= factorial(static_cast<unsigned>(perm.size()));
    PolySeries total(N, Poly(d));
    do {
        PolySeries acc = constant_series(Poly::coordinate(d, perm[0]), N);
        for (std::size_t i = 1; i < perm.size(); ++i) {
            acc = star(s, acc, constant_series(Poly::coordinate(d, perm[i]), N));
        }
        total += acc;
    } while (std::next_permutation(perm.begin(), perm.end()));
    total *= GaussianRational(weight);
    return total;
}

} // namespace starq
