#include <starq/starproducts/constructors.hpp>

#include <string>

#include <starq/error.hpp>
#include <starq/geometry/covariant_jet.hpp>

namespace starq
{

namespace
{

// (1/k!) (i/2)^k
GaussianRational moyal_weight(std::size_t k)
{
    GaussianRational half_i(mpq_class(0), mpq_class(1, 2));
    return pow(half_i, static_cast<unsigned>(k)) / GaussianRational(factorial(static_cast<unsigned>(k)));
}

std::vector<GaussianRational> constant_matrix(const PoissonTensor &p)
{
    if (!p.is_constant()) {
        throw invalid_argument("the Poisson tensor must be constant");
    }
    const std::size_t d = p.dim();
    std::vector<GaussianRational> m;
    m.reserve(d * d);
    for (std::size_t a = 0; a < d; ++a) {
        for (std::size_t b = 0; b < d; ++b) {
            m.push_back(p.constant(a, b));
        }
    }
    return m;
}

// weight * sum_{mu, nu} prod_j P^{mu_j nu_j} left[mu] (x) right[nu], where both
// families are dense over d^k tuples with the first index most significant.
BiDiffOp contract(std::span<const DiffOp> left, std::span<const DiffOp> right, std::span<const GaussianRational> p,
                  std::size_t d, std::size_t k, const GaussianRational &weight)
{
    BiDiffOp out(d);
    std::vector<std::size_t> mu(k, 0);
    std::vector<std::size_t> nu(k, 0);
    std::size_t count = 1;
    for (std::size_t j = 0; j < k; ++j) {
        count *= d;
    }
    // Nonzero entries per row.
    std::vector<std::vector<std::size_t>> row_support(d);
    for (std::size_t a = 0; a < d; ++a) {
        for (std::size_t b = 0; b < d; ++b) {
            if (!p[a * d + b].is_zero()) {
                row_support[a].push_back(b);
            }
        }
    }
    for (std::size_t t = 0; t < count; ++t) {
        const DiffOp &l = left[t];
        if (l.is_zero()) {
            continue;
        }
        std::size_t rest = t;
        for (std::size_t j = k; j-- > 0;) {
            mu[j] = rest % d;
            rest /= d;
        }
        // Walk every nu with prod P^{mu_j nu_j} != 0.
        std::vector<std::size_t> pick(k, 0);
        bool empty = false;
        for (std::size_t j = 0; j < k; ++j) {
            if (row_support[mu[j]].empty()) {
                empty = true;
            }
        }
        if (empty) {
            continue;
        }
        while (true) {
            GaussianRational w = weight;
            std::size_t idx = 0;
            for (std::size_t j = 0; j < k; ++j) {
                nu[j] = row_support[mu[j]][pick[j]];
                w *= p[mu[j] * d + nu[j]];
                idx = idx * d + nu[j];
            }
            const DiffOp &r = right[idx];
            for (const auto &[i, ca] : l.terms()) {
                for (const auto &[jj, cb] : r.terms()) {
                    out.add_term(i, jj, (ca * cb) * w);
                }
            }
            std::size_t j = k;
            while (j > 0) {
                --j;
                if (++pick[j] < row_support[mu[j]].size()) {
                    break;
                }
                pick[j] = 0;
                if (j == 0) {
                    j = k + 1;
                    break;
                }
            }
            if (j == k + 1 || k == 0) {
                break;
            }
        }
    }
    return out;
}

std::vector<DiffOp> derivative_tuples(std::size_t d, std::size_t k)
{
    std::vector<DiffOp> out;
    std::size_t count = 1;
    for (std::size_t j = 0; j < k; ++j) {
        count *= d;
    }
    std::vector<std::size_t> tuple(k);
    for (std::size_t t = 0; t < count; ++t) {
        std::size_t rest = t;
        for (std::size_t j = k; j-- > 0;) {
            tuple[j] = rest % d;
            rest /= d;
        }
        out.push_back(DiffOp::derivative(MultiIndex::from_indices(d, tuple)));
    }
    return out;
}

StarProduct assemble(std::string kind, const PoissonTensor &p, std::size_t order,
                     const std::function<BiDiffOp(std::size_t)> &ck)
{
    StarProduct s;
    s.kind = std::move(kind);
    s.poisson = p;
    s.parity = true;
    s.associative_order = order;
    s.c.push_back(BiDiffOp::pointwise_product(p.dim()));
    for (std::size_t k = 1; k <= order; ++k) {
        s.c.push_back(ck(k));
    }
    return s;
}

} // namespace

VectorFieldFrame::VectorFieldFrame(std::vector<DiffOp> fields) : fields_(std::move(fields))
{
    const std::size_t d = fields_.size();
    for (const auto &f : fields_) {
        if (f.dim() != d) {
            throw dimension_mismatch(f.dim(), d);
        }
        for (const auto &[index, c] : f.terms()) {
            if (index.length() != 1) {
                throw invalid_argument("frame fields must be vector fields (first-order, no zeroth-order part)");
            }
        }
    }
}

VectorFieldFrame VectorFieldFrame::coordinate(std::size_t dim)
{
    std::vector<DiffOp> fields;
    for (std::size_t m = 0; m < dim; ++m) {
        fields.push_back(DiffOp::derivative(MultiIndex::unit(dim, m)));
    }
    return VectorFieldFrame(std::move(fields));
}

bool VectorFieldFrame::is_commuting() const
{
    for (std::size_t a = 0; a < fields_.size(); ++a) {
        for (std::size_t b = a + 1; b < fields_.size(); ++b) {
            if (!commutator(fields_[a], fields_[b]).is_zero()) {
                return false;
            }
        }
    }
    return true;
}

std::vector<Poly> VectorFieldFrame::induced_bivector(std::size_t n, std::size_t casimirs) const
{
    const std::size_t d = dim();
    if (2 * n + casimirs != d) {
        throw dimension_mismatch(2 * n + casimirs, d);
    }
    const auto canon = canonical_poisson_matrix(n, casimirs);
    std::vector<Poly> out(d * d, Poly(d));
    for (std::size_t m = 0; m < d; ++m) {
        for (std::size_t v = 0; v < d; ++v) {
            const int w = canon[m * d + v];
            if (w == 0) {
                continue;
            }
            for (std::size_t a = 0; a < d; ++a) {
                const Poly da = fields_[m].coefficient(MultiIndex::unit(d, a));
                if (da.is_zero()) {
                    continue;
                }
                for (std::size_t b = 0; b < d; ++b) {
                    out[a * d + b] += (da * fields_[v].coefficient(MultiIndex::unit(d, b))) * GaussianRational(w);
                }
            }
        }
    }
    return out;
}

StarProduct moyal(const PoissonTensor &p, std::size_t order)
{
    const auto pm = constant_matrix(p);
    const std::size_t d = p.dim();
    return assemble("moyal", p, order, [&](std::size_t k) {
        const auto tuples = derivative_tuples(d, k);
        return contract(tuples, tuples, pm, d, k, moyal_weight(k));
    });
}

StarProduct vf_product(const VectorFieldFrame &frame, const PoissonTensor &p, std::size_t order)
{
    const std::size_t d = p.dim();
    if (frame.dim() != d) {
        throw dimension_mismatch(frame.dim(), d);
    }
    if (!frame.is_commuting()) {
        throw invalid_argument("frame vector fields do not commute pairwise");
    }
    const auto induced = frame.induced_bivector(p.n(), p.casimirs());
    for (std::size_t a = 0; a < d; ++a) {
        for (std::size_t b = 0; b < d; ++b) {
            if (!(induced[a * d + b] == p(a, b))) {
                throw invalid_argument("frame does not reproduce the Poisson tensor (entry " + std::to_string(a) +
                                       "," + std::to_string(b) + ")");
            }
        }
    }
    const auto canon = constant_matrix(PoissonTensor::canonical(p.n(), p.casimirs()));
    // products[k][tuple] = D_{m1} o ... o D_{mk}
    std::vector<std::vector<DiffOp>> products{frame.fields()};
    StarProduct s = assemble("vector-field", p, order, [&](std::size_t k) {
        while (products.size() < k) {
            const auto &prev = products.back();
            std::vector<DiffOp> next;
            next.reserve(prev.size() * d);
            for (std::size_t m = 0; m < d; ++m) {
                for (const auto &op : prev) {
                    next.push_back(compose(frame[m], op));
                }
            }
            products.push_back(std::move(next));
        }
        return contract(products[k - 1], products[k - 1], canon, d, k, moyal_weight(k));
    });
    return s;
}

StarProduct natural_tstar(const Connection &c, std::size_t order)
{
    if (order > 4) {
        throw invalid_argument("the natural product is supported up to order 4");
    }
    if (!curvature(c.symbols()).is_zero()) {
        throw invalid_argument("the natural product needs a flat base connection");
    }
    const LiftedConnection lifted = lift_connection(c);
    const PoissonTensor p = PoissonTensor::canonical(c.n());
    const auto pm = constant_matrix(p);
    const CovariantJets jets(lifted.symbols(), order);
    return assemble("natural-cotangent", p, order, [&](std::size_t k) {
        return contract(jets.rank(k), jets.rank(k), pm, p.dim(), k, moyal_weight(k));
    });
}

StarProduct truncated_symplectic(const SymplecticConnectionSpec &spec)
{
    const PoissonTensor p = PoissonTensor::canonical(spec.n());
    const auto pm = constant_matrix(p);
    const std::size_t d = p.dim();
    const CovariantJets jets(spec.raised(), 2);
    const RicciTensor ric = ricci(spec);
    StarProduct s = assemble("symplectic-truncated", p, 2, [&](std::size_t k) {
        BiDiffOp ck = contract(jets.rank(k), jets.rank(k), pm, d, k, moyal_weight(k));
        if (k == 2 && !spec.a().is_zero()) {
            // -(1/2)(i/2)^2 a P^{m1 n1} P^{m2 n2} R_{m1 m2} d_{n1} (x) d_{n2}
            const GaussianRational w = -(moyal_weight(2) * spec.a());
            for (std::size_t m1 = 0; m1 < d; ++m1) {
                for (std::size_t n1 = 0; n1 < d; ++n1) {
                    if (pm[m1 * d + n1].is_zero()) {
                        continue;
                    }
                    for (std::size_t m2 = 0; m2 < d; ++m2) {
                        for (std::size_t n2 = 0; n2 < d; ++n2) {
                            if (pm[m2 * d + n2].is_zero() || ric(m1, m2).is_zero()) {
                                continue;
                            }
                            ck.add_term(MultiIndex::unit(d, n1), MultiIndex::unit(d, n2),
                                        ric(m1, m2) * (w * pm[m1 * d + n1] * pm[m2 * d + n2]));
                        }
                    }
                }
            }
        }
        return ck;
    });
    return s;
}

} // namespace starq
