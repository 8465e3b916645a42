#include <starq/starproducts/closed_form.hpp>

#include <starq/error.hpp>
#include <starq/geometry/covariant_jet.hpp>
#include <starq/geometry/f_tensors.hpp>

namespace starq
{

namespace
{

GaussianRational half_i_power(std::size_t k)
{
    return pow(GaussianRational(mpq_class(0), mpq_class(1, 2)), static_cast<unsigned>(k));
}

GaussianRational inverse_factorial(std::size_t k)
{
    return GaussianRational(mpq_class(1) / factorial(static_cast<unsigned>(k)));
}

// d_{p_{i1}} ... d_{p_{ik}} (optionally times d_{q^l}) on 2n coordinates.
MultiIndex momentum_derivative(std::size_t n, std::span<const std::size_t> tuple)
{
    MultiIndex m(2 * n);
    for (std::size_t i : tuple) {
        m = m + MultiIndex::unit(2 * n, n + i);
    }
    return m;
}

} // namespace

std::vector<DiffOp> ck_coordinate_closed_form(const Connection &c, std::size_t k)
{
    if (k == 0) {
        throw invalid_argument("closed form needs k >= 1");
    }
    if (!curvature(c.symbols()).is_zero()) {
        throw invalid_argument("closed form needs a flat connection");
    }
    const std::size_t n = c.n();
    const std::size_t d = 2 * n;
    std::vector<DiffOp> out(d, DiffOp(d));

    // C_k(q^i, .) = (1/k!)(i/2)^k (nabla^k q^i)_{i1..ik} d_{p_i1}..d_{p_ik}
    const GaussianRational wq = inverse_factorial(k) * half_i_power(k);
    const auto tuples_k = index_tuples(n, k);
    for (std::size_t i = 0; i < n; ++i) {
        const auto jet = covariant_jet(c.symbols(), k, Poly::coordinate(n, i));
        for (std::size_t t = 0; t < tuples_k.size(); ++t) {
            if (!jet[t].is_zero()) {
                out[i].add_term(momentum_derivative(n, tuples_k[t]), jet[t].embed(d) * wq);
            }
        }
    }

    // C_k(p_i, .), written with m = k - 1 lower f-indices.
    const std::size_t m = k - 1;
    const auto f = f_tensors(c, k);
    const auto tuples_m = index_tuples(n, m);
    const GaussianRational w1 = inverse_factorial(k) * half_i_power(k);
    const GaussianRational w2 = inverse_factorial(m) * half_i_power(k);
    auto gamma = [&](std::size_t a, std::size_t b, std::size_t e) { return c(a, b, e); };
    for (std::size_t i = 0; i < n; ++i) {
        DiffOp &op = out[n + i];
        // (f^l_{i1..ik i} - k G^l_{j ik} f^j_{i1..i(k-1) i}) p_l d_{p_i1..p_ik}
        for (const auto &tuple : tuples_k) {
            const std::span<const std::size_t> head(tuple.data(), m);
            for (std::size_t l = 0; l < n; ++l) {
                Poly v = f[k].at(l, tuple, i);
                for (std::size_t j = 0; j < n; ++j) {
                    v -= gamma(l, j, tuple[k - 1]) * f[m].at(j, head, i) * GaussianRational(static_cast<long>(k));
                }
                if (!v.is_zero()) {
                    op.add_term(momentum_derivative(n, tuple), v.embed(d) * Poly::coordinate(d, n + l) * w1);
                }
            }
        }
        for (const auto &tuple : tuples_m) {
            const MultiIndex dp = momentum_derivative(n, tuple);
            Poly scalar(n);
            for (std::size_t l = 0; l < n; ++l) {
                // -f^l_{i1..i(k-1) i} d_{q^l} d_{p...}
                const Poly &fl = f[m].at(l, tuple, i);
                if (!fl.is_zero()) {
                    op.add_term(dp + MultiIndex::unit(d, l), -(fl.embed(d) * w2));
                }
                // f^l_{i1..i(k-1) l i} - f^l_{i1..i(k-1) i, l} - G^l_{l j} f^j_{i1..i(k-1) i}
                std::vector<std::size_t> extended(tuple);
                extended.push_back(l);
                scalar += f[k].at(l, extended, i);
                scalar -= fl.diff(l);
                for (std::size_t j = 0; j < n; ++j) {
                    scalar -= gamma(l, l, j) * f[m].at(j, tuple, i);
                }
            }
            if (!scalar.is_zero()) {
                op.add_term(dp, scalar.embed(d) * w2);
            }
        }
    }
    return out;
}

} // namespace starq
