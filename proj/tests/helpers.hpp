#ifndef STARQ_TESTS_HELPERS_HPP
#define STARQ_TESTS_HELPERS_HPP

#include <random>
#include <string>
#include <vector>

#include <starq/algebra/poly.hpp>
#include <starq/algebra/poly_parser.hpp>
#include <starq/operators/bidiff_op.hpp>
#include <starq/operators/diff_op.hpp>

namespace test
{

inline const std::vector<std::string> &qp()
{
    static const std::vector<std::string> names = starq::phase_space_names(1);
    return names;
}

inline starq::Poly P(const std::string &text, const std::vector<std::string> &names = qp())
{
    return starq::parse_poly(text, names);
}

inline starq::MultiIndex I(std::initializer_list<unsigned> e)
{
    return starq::MultiIndex(e.size(), e);
}

inline std::vector<std::string> base_names(std::size_t n)
{
    std::vector<std::string> q;
    for (std::size_t i = 0; i < n; ++i) {
        q.push_back("q" + std::to_string(i + 1));
    }
    return q;
}

/// Seeded generator of small random polynomials and operators.
class Random
{
public:
    explicit Random(std::uint64_t seed) : rng_(seed) {}

    long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }

    starq::GaussianRational scalar()
    {
        const long den = integer(1, 4);
        return {mpq_class(integer(-4, 4), den), integer(0, 2) == 0 ? mpq_class(integer(-3, 3), den) : mpq_class(0)};
    }

    starq::Poly poly(std::size_t dim, unsigned degree, int terms = 4)
    {
        const auto monomials = starq::all_multi_indices(dim, degree);
        starq::Poly p(dim);
        for (int t = 0; t < terms; ++t) {
            const auto &m = monomials[static_cast<std::size_t>(integer(0, static_cast<long>(monomials.size()) - 1))];
            p += starq::Poly::monomial(m, scalar());
        }
        return p;
    }

    starq::DiffOp op(std::size_t dim, unsigned order, unsigned degree, int terms = 3)
    {
        const auto indices = starq::all_multi_indices(dim, order);
        starq::DiffOp o(dim);
        for (int t = 0; t < terms; ++t) {
            o.add_term(indices[static_cast<std::size_t>(integer(0, static_cast<long>(indices.size()) - 1))],
                       poly(dim, degree, 2));
        }
        return o;
    }

    starq::BiDiffOp bidiff(std::size_t dim, unsigned order, unsigned degree, int terms = 4)
    {
        const auto indices = starq::all_multi_indices(dim, order);
        auto pick = [&] {
            return indices[static_cast<std::size_t>(integer(0, static_cast<long>(indices.size()) - 1))];
        };
        starq::BiDiffOp c(dim);
        for (int t = 0; t < terms; ++t) {
            c.add_term(pick(), pick(), poly(dim, degree, 2));
        }
        return c;
    }

private:
    std::mt19937_64 rng_;
};

} // namespace test

#endif
