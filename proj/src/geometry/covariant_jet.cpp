#include <starq/geometry/covariant_jet.hpp>

#include <string>

#include <starq/error.hpp>

namespace starq
{

CovariantJets::CovariantJets(const Christoffel &g, std::size_t max_rank) : dim_(g.dim())
{
    if (max_rank > max_operator_order()) {
        throw order_limit_exceeded("covariant jet rank " + std::to_string(max_rank) + " exceeds the order limit " +
                                   std::to_string(max_operator_order()));
    }
    const std::size_t d = dim_;
    if (max_rank == 0) {
        return;
    }
    std::vector<DiffOp> first;
    for (std::size_t m = 0; m < d; ++m) {
        first.push_back(DiffOp::derivative(MultiIndex::unit(d, m)));
    }
    jets_.push_back(std::move(first));
    for (std::size_t k = 1; k < max_rank; ++k) {
        const auto &prev = jets_.back();
        const std::size_t stride = prev.size();
        std::vector<DiffOp> next;
        next.reserve(stride * d);
        for (std::size_t m = 0; m < d; ++m) {
            for (std::size_t t = 0; t < stride; ++t) {
                DiffOp op = compose(jets_.front()[m], prev[t]);
                // Replace each slot of the old tuple in turn by the dummy index l.
                std::size_t place = stride;
                for (std::size_t slot = 0; slot < k; ++slot) {
                    place /= d;
                    const std::size_t digit = (t / place) % d;
                    const std::size_t without = t - digit * place;
                    for (std::size_t l = 0; l < d; ++l) {
                        const Poly &gamma = g(l, m, digit);
                        if (gamma.is_zero()) {
                            continue;
                        }
                        op -= prev[without + l * place].left_multiplied(gamma);
                    }
                }
                next.push_back(std::move(op));
            }
        }
        jets_.push_back(std::move(next));
    }
}

const DiffOp &CovariantJets::at(std::span<const std::size_t> indices) const
{
    if (indices.empty() || indices.size() > jets_.size()) {
        throw invalid_argument("covariant jet rank out of range");
    }
    std::size_t off = 0;
    for (auto i : indices) {
        off = off * dim_ + i;
    }
    return jets_[indices.size() - 1][off];
}

std::vector<Poly> covariant_jet(const Christoffel &g, std::size_t k, const Poly &f)
{
    if (k == 0) {
        return {f};
    }
    const CovariantJets jets(g, k);
    std::vector<Poly> out;
    for (const auto &op : jets.rank(k)) {
        out.push_back(apply(op, f));
    }
    return out;
}

std::vector<Poly> covariant_jet(const LiftedConnection &c, std::size_t k, const Poly &f)
{
    return covariant_jet(c.symbols(), k, f);
}

} // namespace starq
