#include <starq/equivalence/verification.hpp>

#include <string>
#include <vector>

#include <starq/equivalence/solvers.hpp>
#include <starq/starproducts/constructors.hpp>

namespace starq
{

namespace
{

std::string first_difference(const PolySeries &a, const PolySeries &b, std::span<const std::string> names)
{
    for (std::size_t k = 0; k <= a.order(); ++k) {
        if (!(a[k] == b[k])) {
            return "order " + std::to_string(k) + ": " + a[k].to_string(names) + " vs " + b[k].to_string(names);
        }
    }
    return {};
}

} // namespace

CheckReport verify_intertwining(const EquivalenceMorphism &m, const StarProduct &s, unsigned max_degree)
{
    CheckReport report;
    const std::size_t N = m.order();
    const std::size_t d = s.dim();
    const StarProduct star_n = truncated(s, N);
    const StarProduct moyal_n = moyal(PoissonTensor::canonical(s.poisson.n(), s.poisson.casimirs()), N);
    const auto names = phase_space_names(s.poisson.n(), s.poisson.casimirs());
    const auto monomials = all_multi_indices(d, max_degree);

    std::vector<Poly> polys;
    std::vector<PolySeries> images;
    for (const auto &mi : monomials) {
        polys.push_back(Poly::monomial(mi));
        images.push_back(apply(m, polys.back()));
    }
    auto name = [&](std::size_t i) { return polys[i].to_string(names); };

    bool ok = true;
    std::string detail;
    std::size_t pairs = 0;
    for (std::size_t a = 0; a < monomials.size() && ok; ++a) {
        for (std::size_t b = 0; b < monomials.size(); ++b) {
            if (monomials[a].length() + monomials[b].length() > max_degree) {
                break;
            }
            ++pairs;
            const PolySeries lhs = apply(m, star(moyal_n, polys[a], polys[b]));
            const PolySeries rhs = star(star_n, images[a], images[b]);
            if (!(lhs == rhs)) {
                ok = false;
                detail = "first failing pair (" + name(a) + ", " + name(b) + "), " + first_difference(lhs, rhs, names);
                break;
            }
        }
    }
    report.add("intertwining", ok,
               ok ? std::to_string(pairs) + " monomial pairs, total degree <= " + std::to_string(max_degree) : detail);

    for (int side = 0; side < 2; ++side) {
        bool side_ok = true;
        std::string side_detail;
        for (std::size_t alpha = 0; alpha < d && side_ok; ++alpha) {
            const Poly x = Poly::coordinate(d, alpha);
            const PolySeries xs = constant_series(x, N);
            for (std::size_t b = 0; b < monomials.size(); ++b) {
                if (monomials[b].length() + 1 > max_degree) {
                    break;
                }
                PolySeries lhs = side == 0 ? apply(m, star(moyal_n, x, polys[b])) : apply(m, star(moyal_n, polys[b], x));
                PolySeries rhs = side == 0 ? star(star_n, xs, images[b]) : star(star_n, images[b], xs);
                if (!(lhs == rhs)) {
                    side_ok = false;
                    side_detail = "coordinate " + names[alpha] + ", f = " + name(b) + ", " +
                                  first_difference(lhs, rhs, names);
                    break;
                }
            }
        }
        report.add(side == 0 ? "one-sided-left" : "one-sided-right", side_ok, side_detail);
    }
    return report;
}

CheckReport verify_defining_relation(const EquivalenceMorphism &m, const StarProduct &s)
{
    CheckReport report;
    const std::size_t d = s.dim();
    const auto names = phase_space_names(s.poisson.n(), s.poisson.casimirs());
    const auto &S = m.S.coefficients();
    for (std::size_t k = 1; k <= m.order(); ++k) {
        const auto F = rhs_F(s, S, k);
        bool ok = true;
        std::string detail;
        for (std::size_t a = 0; a < d; ++a) {
            if (!(commutator_with_coordinate(S[k], a) == F[a])) {
                ok = false;
                detail = "[S_" + std::to_string(k) + ", " + names[a] + "] differs from the right-hand side";
                break;
            }
        }
        report.add("defining-relation-order-" + std::to_string(k), ok, detail);
    }
    return report;
}

CheckReport verify_symmetrization(const EquivalenceMorphism &m, const StarProduct &s, unsigned max_degree)
{
    CheckReport report;
    const StarProduct star_n = truncated(s, m.order());
    const auto names = phase_space_names(s.poisson.n(), s.poisson.casimirs());
    bool ok = true;
    std::string detail;
    std::size_t count = 0;
    for (const auto &mi : all_multi_indices(s.dim(), max_degree)) {
        ++count;
        const Poly mono = Poly::monomial(mi);
        const PolySeries direct = apply(m, mono);
        const PolySeries sym = symmetrized_S_on_monomial(star_n, mi.to_indices());
        if (!(direct == sym)) {
            ok = false;
            detail = "monomial " + mono.to_string(names) + ", " + first_difference(direct, sym, names);
            break;
        }
    }
    report.add("symmetrization", ok,
               ok ? std::to_string(count) + " monomials, degree <= " + std::to_string(max_degree) : detail);
    return report;
}

CheckReport derivation_checks(const EquivalenceMorphism &m, bool parity)
{
    CheckReport report;
    bool agree = true;
    bool reduced = true;
    std::string agree_detail;
    std::string reduced_detail;
    for (const auto &step : m.trace) {
        if (!step.solvers_agree && agree) {
            agree = false;
            agree_detail = "solvers disagree at order " + std::to_string(step.order);
        }
        if (!step.reduced_matches_general && reduced) {
            reduced = false;
            reduced_detail = "reduced right-hand side differs at order " + std::to_string(step.order);
        }
    }
    report.add("solver-agreement", agree, agree_detail);
    if (parity) {
        report.add("parity-reduced-rhs", reduced, reduced_detail);
        bool odd_zero = true;
        for (std::size_t k = 1; k <= m.order(); k += 2) {
            odd_zero = odd_zero && m.S[k].is_zero();
        }
        report.add("parity-odd-orders-vanish", odd_zero);
    }
    bool normalized = true;
    for (std::size_t k = 1; k <= m.order(); ++k) {
        for (const auto &[index, c] : m.S[k].terms()) {
            normalized = normalized && index.length() >= 2;
        }
    }
    report.add("normalization", normalized);
    return report;
}

} // namespace starq
