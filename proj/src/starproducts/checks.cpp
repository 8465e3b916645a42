#include <starq/starproducts/checks.hpp>

#include <algorithm>
#include <string>
#include <vector>

namespace starq
{

namespace
{

std::string monomial_name(const MultiIndex &m, std::span<const std::string> names)
{
    return Poly::monomial(m).to_string(names);
}

} // namespace

CheckReport check_axioms(const StarProduct &s, unsigned max_degree)
{
    CheckReport report;
    const std::size_t d = s.dim();
    const std::size_t order = s.order();
    const auto names = phase_space_names(s.poisson.n(), s.poisson.casimirs());

    // (i) finitely many bidifferential operators C_0..C_N on the right space.
    {
        bool ok = !s.c.empty();
        std::string detail = "orders:";
        for (const auto &ck : s.c) {
            ok = ok && ck.dim() == d;
            detail += " (" + std::to_string(ck.order(Slot::left)) + "," + std::to_string(ck.order(Slot::right)) + ")";
        }
        report.add("axiom-i-bidifferential", ok, detail);
    }

    // (ii) C_0(f, g) = fg.
    report.add("axiom-ii-pointwise", !s.c.empty() && s.c[0] == BiDiffOp::pointwise_product(d));

    // (iii) C_1(f, g) - C_1(g, f) = i {f, g}.
    if (order >= 1) {
        const BiDiffOp lhs = s.c[1] - s.c[1].swapped();
        const BiDiffOp rhs = s.poisson.bivector() * GaussianRational::i();
        report.add("axiom-iii-bracket", lhs == rhs);
    }

    // (iv) associativity, pointwise on monomial triples.
    {
        const std::size_t top = std::min(order, s.associative_order);
        const auto monomials = all_multi_indices(d, max_degree);
        std::vector<Poly> polys;
        polys.reserve(monomials.size());
        for (const auto &m : monomials) {
            polys.push_back(Poly::monomial(m));
        }
        // pair_products[(a, b)] = [C_0(a, b), ..., C_top(a, b)] for |a| + |b| <= max_degree
        std::map<std::pair<std::size_t, std::size_t>, std::vector<Poly>> pair_products;
        auto products = [&](std::size_t a, std::size_t b) -> const std::vector<Poly> & {
            auto it = pair_products.find({a, b});
            if (it == pair_products.end()) {
                std::vector<Poly> v;
                for (std::size_t k = 0; k <= top; ++k) {
                    v.push_back(bidiff_apply(s.c[k], polys[a], polys[b]));
                }
                it = pair_products.emplace(std::make_pair(a, b), std::move(v)).first;
            }
            return it->second;
        };
        std::vector<bool> ok(top + 1, true);
        std::vector<std::string> first(top + 1);
        std::size_t triples = 0;
        for (std::size_t a = 0; a < monomials.size(); ++a) {
            for (std::size_t b = 0; b < monomials.size(); ++b) {
                if (monomials[a].length() + monomials[b].length() > max_degree) {
                    break;
                }
                for (std::size_t c = 0; c < monomials.size(); ++c) {
                    if (monomials[a].length() + monomials[b].length() + monomials[c].length() > max_degree) {
                        break;
                    }
                    ++triples;
                    const auto &fg = products(a, b);
                    const auto &gh = products(b, c);
                    for (std::size_t k = 1; k <= top; ++k) {
                        if (!ok[k]) {
                            continue;
                        }
                        Poly sum(d);
                        for (std::size_t l = 0; l <= k; ++l) {
                            sum += bidiff_apply(s.c[l], fg[k - l], polys[c]);
                            sum -= bidiff_apply(s.c[l], polys[a], gh[k - l]);
                        }
                        if (!sum.is_zero()) {
                            ok[k] = false;
                            first[k] = "first failing triple (" + monomial_name(monomials[a], names) + ", " +
                                       monomial_name(monomials[b], names) + ", " +
                                       monomial_name(monomials[c], names) + "): residual " + sum.to_string(names);
                        }
                    }
                }
            }
        }
        for (std::size_t k = 1; k <= top; ++k) {
            report.add("axiom-iv-associativity-order-" + std::to_string(k), ok[k],
                       ok[k] ? std::to_string(triples) + " monomial triples, total degree <= " +
                                   std::to_string(max_degree)
                             : first[k]);
        }
    }

    // (v) C_k(f, 1) = C_k(1, f) = 0 for k >= 1.
    {
        bool ok = true;
        std::string detail;
        for (std::size_t k = 1; k <= order; ++k) {
            if (!s.c[k].vanishes_on_constants()) {
                ok = false;
                detail = "C_" + std::to_string(k) + " acts on constants";
                break;
            }
        }
        report.add("axiom-v-constants", ok, detail);
    }

    if (s.parity) {
        bool ok = true;
        std::string detail;
        for (std::size_t k = 0; k <= order; ++k) {
            const BiDiffOp expected = k % 2 == 0 ? s.c[k].swapped() : s.c[k].swapped() * GaussianRational(-1);
            if (!(s.c[k] == expected)) {
                ok = false;
                detail = "C_" + std::to_string(k) + " violates C_k(f,g) = (-1)^k C_k(g,f)";
                break;
            }
        }
        report.add("parity", ok, detail);
    }
    return report;
}

CheckReport quantum_canonicity_check(const StarProduct &s)
{
    CheckReport report;
    const std::size_t d = s.dim();
    const auto names = phase_space_names(s.poisson.n(), s.poisson.casimirs());
    if (s.order() == 0) {
        report.add("canonicity", false, "product of order 0 has no deformed bracket");
        return report;
    }
    for (std::size_t m = 0; m < d; ++m) {
        for (std::size_t v = m + 1; v < d; ++v) {
            const PolySeries bracket = star_bracket(s, Poly::coordinate(d, m), Poly::coordinate(d, v));
            const PolySeries expected = constant_series(s.poisson(m, v), bracket.order());
            std::string detail;
            const bool ok = bracket == expected;
            if (!ok) {
                for (std::size_t k = 0; k <= bracket.order(); ++k) {
                    if (!(bracket[k] == expected[k])) {
                        detail = "order " + std::to_string(k) + ": got " + bracket[k].to_string(names) +
                                 ", expected " + expected[k].to_string(names);
                        break;
                    }
                }
            }
            report.add("canonicity[" + names[m] + "," + names[v] + "]", ok, detail);
        }
    }
    return report;
}

} // namespace starq
