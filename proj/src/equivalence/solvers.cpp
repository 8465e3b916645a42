#include <starq/equivalence/solvers.hpp>

#include <map>
#include <string>

#include <starq/error.hpp>
#include <starq/operators/bidiff_op.hpp>

namespace starq
{

std::vector<DiffOp> rhs_F(const StarProduct &s, std::span<const DiffOp> lower, std::size_t k, bool parity_reduced)
{
    if (k == 0 || k > s.order()) {
        throw order_mismatch("rhs_F needs 1 <= k <= N");
    }
    if (lower.size() < k) {
        throw order_mismatch("rhs_F needs S_0..S_" + std::to_string(k - 1));
    }
    const std::size_t d = s.dim();
    const GaussianRational half(mpq_class(1, 2));
    std::vector<DiffOp> F(d, DiffOp(d));
    for (std::size_t a = 0; a < d; ++a) {
        for (std::size_t l = 1; l <= k; ++l) {
            const DiffOp &lower_s = lower[k - l];
            if (lower_s.is_zero()) {
                continue;
            }
            if (parity_reduced) {
                if (l % 2 == 0) {
                    F[a] += compose(slot_fix(s.c[l], a, Slot::left), lower_s);
                }
                continue;
            }
            const DiffOp sum = slot_fix(s.c[l], a, Slot::left) + slot_fix(s.c[l], a, Slot::right);
            F[a] += compose(sum, lower_s) * half;
        }
    }
    return F;
}

DiffOp eta_from_phi(std::span<const DiffOp> F)
{
    if (F.empty()) {
        throw invalid_argument("empty coordinate family");
    }
    const std::size_t d = F.size();
    DiffOp eta(d);
    for (std::size_t a = 0; a < d; ++a) {
        if (F[a].dim() != d) {
            throw dimension_mismatch(F[a].dim(), d);
        }
        for (const auto &[J, phi] : F[a].terms()) {
            if (J.is_zero()) {
                throw invalid_argument("incompatible family: F^" + std::to_string(a) + " does not vanish on constants");
            }
            const MultiIndex K = J.incremented(a);
            eta.add_term(K, phi * GaussianRational(mpq_class(1, K.length())));
        }
    }
    for (std::size_t a = 0; a < d; ++a) {
        if (!(commutator_with_coordinate(eta, a) == F[a])) {
            throw invalid_argument("incompatible family: [eta, x^" + std::to_string(a) + "] != F^" + std::to_string(a));
        }
    }
    return eta;
}

DiffOp nested_commutator_solution(std::span<const DiffOp> F)
{
    if (F.empty()) {
        throw invalid_argument("empty coordinate family");
    }
    const std::size_t d = F.size();
    std::vector<DiffOp> x;
    for (std::size_t a = 0; a < d; ++a) {
        x.push_back(DiffOp::multiplication(Poly::coordinate(d, a)));
    }
    DiffOp out(d);
    const unsigned limit = max_operator_order();
    for (std::size_t an = 0; an < d; ++an) {
        // nested[M] = [x^{b1}, ... [x^{bm}, F^{an}]] for the multiset M = {b1..bm};
        // nested commutators with coordinates commute, so only multisets matter.
        std::map<MultiIndex, DiffOp> level{{MultiIndex(d), F[an]}};
        for (unsigned m = 0; !level.empty(); ++m) {
            if (m > limit) {
                throw order_limit_exceeded("nested commutators did not terminate below the order limit");
            }
            // weight 1/n! * (n-1)! / prod M_i! = 1 / (n prod M_i!), n = m + 1
            for (const auto &[M, op] : level) {
                mpq_class w(1, m + 1);
                for (std::size_t i = 0; i < d; ++i) {
                    w /= factorial(M[i]);
                }
                out += op.right_derivative(M.incremented(an)) * GaussianRational(w);
            }
            std::map<MultiIndex, DiffOp> next;
            for (const auto &[M, op] : level) {
                for (std::size_t b = 0; b < d; ++b) {
                    const MultiIndex grown = M.incremented(b);
                    if (next.contains(grown)) {
                        continue;
                    }
                    DiffOp c = commutator(x[b], op);
                    if (!c.is_zero()) {
                        next.emplace(grown, std::move(c));
                    }
                }
            }
            level = std::move(next);
        }
    }
    return out;
}

} // namespace starq
