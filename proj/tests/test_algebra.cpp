#include <doctest.h>

#include <starq/algebra/gaussian_rational.hpp>
#include <starq/algebra/hbar_series.hpp>
#include <starq/algebra/multi_index.hpp>
#include <starq/algebra/poly.hpp>
#include <starq/algebra/poly_parser.hpp>
#include <starq/error.hpp>

#include "helpers.hpp"

using namespace starq;
using test::I;
using test::P;

TEST_CASE("gaussian rationals are exact and reduced")
{
    const GaussianRational half = GaussianRational::fraction(2, 4);
    CHECK(half.re() == mpq_class(1, 2));
    CHECK(half.to_string() == "1/2");
    const GaussianRational z(mpq_class(1, 3), mpq_class(-2, 5));
    CHECK((z * z.conj()).is_real());
    CHECK(z * z.conj() == GaussianRational(mpq_class(1, 9) + mpq_class(4, 25)));
    CHECK(z / z == GaussianRational(1));
    CHECK(GaussianRational::i() * GaussianRational::i() == GaussianRational(-1));
    CHECK((-GaussianRational::i()).to_string() == "-i");
    CHECK(GaussianRational(mpq_class(1, 2), mpq_class(3, 5)).to_string() == "1/2 + 3/5*i");
    CHECK(pow(GaussianRational(mpq_class(0), mpq_class(1, 2)), 2) == GaussianRational::fraction(-1, 4));
    CHECK(factorial(6) == 720);
    CHECK_THROWS_AS(GaussianRational(1) / GaussianRational(0), starq::error);
}

TEST_CASE("rational parsing")
{
    CHECK(GaussianRational::parse_rational("-3/7") == mpq_class(-3, 7));
    CHECK(GaussianRational::parse_rational("4/6") == mpq_class(2, 3));
    CHECK(GaussianRational::parse_rational("+5") == 5);
    CHECK_THROWS_AS(GaussianRational::parse_rational("1/0"), parse_error);
    CHECK_THROWS_AS(GaussianRational::parse_rational("1.5"), parse_error);
    CHECK_THROWS_AS(GaussianRational::parse_rational(""), parse_error);
}

TEST_CASE("multi-index length and graded order")
{
    const MultiIndex a = I({2, 1});
    CHECK(a.length() == 3);
    CHECK(MultiIndex(2).is_zero());
    CHECK(I({1, 0}) < I({0, 2}));
    CHECK(I({1, 0}) < I({0, 1}));
    CHECK(a - I({1, 1}) == I({1, 0}));
    CHECK(I({1, 1}).divides(a));
    CHECK_FALSE(I({0, 2}).divides(a));
    CHECK(divisors(a).size() == 6);
    CHECK(all_multi_indices(2, 2).size() == 6);
    CHECK(MultiIndex::from_indices(2, std::vector<std::size_t>{1, 0, 1}) == I({1, 2}));
    CHECK(falling_factorial(I({3, 0}), I({2, 0})) == 6);
    CHECK_THROWS(MultiIndex(max_dim + 1));
}

TEST_CASE("poly_arith examples")
{
    CHECK(P("q1+p1") + P("q1-p1") == P("2*q1"));
    CHECK(P("q1") * P("p1") == P("q1*p1"));
    CHECK(P("q1^2*p1") * GaussianRational(mpq_class(0), mpq_class(1, 2)) == P("i/2*q1^2*p1"));
    CHECK((P("q1") - P("q1")).is_zero());
    CHECK(P("q1-q1").size() == 0);
    CHECK_THROWS_AS(P("q1") + Poly(3), dimension_mismatch);
}

TEST_CASE("poly_diff examples")
{
    CHECK(P("q1^2*p1").diff(0) == P("2*q1*p1"));
    CHECK(P("q1^2").diff(I({0, 2})).is_zero());
    CHECK(P("q1^2*p1^2").diff(I({1, 1})) == P("4*q1*p1"));
}

TEST_CASE("series_mul examples")
{
    const Poly zero(2);
    const PolySeries a(std::vector<Poly>{P("1"), P("q1"), zero});
    const PolySeries b(std::vector<Poly>{P("1"), P("-q1"), zero});
    CHECK(series_mul(a, b) == PolySeries(std::vector<Poly>{P("1"), zero, P("-q1^2")}));

    const PolySeries c(std::vector<Poly>{zero, zero, P("p1")});
    const PolySeries d(std::vector<Poly>{zero, zero, P("q1")});
    CHECK(is_zero(series_mul(c, d)));

    const PolySeries e(std::vector<Poly>{P("1"), P("1")});
    CHECK(series_mul(e, e) == PolySeries(std::vector<Poly>{P("1"), P("2")}));

    CHECK_THROWS_AS(series_mul(a, e), order_mismatch);
}

TEST_CASE("hbar series division and truncation")
{
    const Poly zero(2);
    const PolySeries s(std::vector<Poly>{zero, P("q1"), P("p1")});
    CHECK(divide_by_hbar(s) == PolySeries(std::vector<Poly>{P("q1"), P("p1")}));
    CHECK_THROWS(divide_by_hbar(PolySeries(std::vector<Poly>{P("1"), zero})));
    CHECK(s.truncated(1).order() == 1);
    CHECK(constant_series(P("q1"), 3)[0] == P("q1"));
}

TEST_CASE("polynomial parser")
{
    CHECK(P("(q1 + p1)^2") == P("q1^2 + 2*q1*p1 + p1^2"));
    CHECK(P("-q1/2 + i*p1") == Poly::monomial(I({1, 0}), GaussianRational::fraction(-1, 2)) +
                                    Poly::monomial(I({0, 1}), GaussianRational::i()));
    CHECK(P("3/6") == Poly(2, GaussianRational::fraction(1, 2)));
    CHECK(P("0").is_zero());
    CHECK_THROWS_AS(P("q1 +"), parse_error);
    CHECK_THROWS_AS(P("x1"), parse_error);
    CHECK_THROWS_AS(P("q1/p1"), parse_error);
    CHECK_THROWS_AS(P("q1/0"), parse_error);
    CHECK_THROWS_AS(P("(q1"), parse_error);
    CHECK_THROWS_AS(P("q1^^2"), parse_error);
}

TEST_CASE("poly helpers")
{
    const Poly p = P("q1^2*p1 + 3");
    CHECK(p.degree() == 3);
    CHECK(p.degree_in(0) == 2);
    CHECK(Poly(2).degree() == -1);
    CHECK(p.constant_term() == GaussianRational(3));
    CHECK(p.pow(2) == p * p);
    const Poly e = p.embed(4, 1);
    CHECK(e.dim() == 4);
    CHECK(e.restrict(2, 1) == p);
    CHECK_THROWS(e.restrict(1, 1));
    const std::vector<Poly> values{P("q1 + p1"), P("2")};
    CHECK(P("q1*p1").substitute(values) == P("2*q1 + 2*p1"));
    CHECK(P("q1^2 - i*p1").to_string(test::qp()) == "q1^2 - i*p1");
}

TEST_CASE("ring axioms hold on random polynomials")
{
    test::Random r(11);
    for (int trial = 0; trial < 40; ++trial) {
        const Poly a = r.poly(3, 3);
        const Poly b = r.poly(3, 3);
        const Poly c = r.poly(3, 2);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * b == b * a);
        CHECK(a + b - b == a);
        CHECK((a - a).is_zero());
    }
}

TEST_CASE("partial derivatives commute")
{
    test::Random r(12);
    for (int trial = 0; trial < 40; ++trial) {
        const Poly f = r.poly(3, 5, 6);
        const auto ids = all_multi_indices(3, 2);
        const MultiIndex &a = ids[static_cast<std::size_t>(r.integer(0, static_cast<long>(ids.size()) - 1))];
        const MultiIndex &b = ids[static_cast<std::size_t>(r.integer(0, static_cast<long>(ids.size()) - 1))];
        CHECK(f.diff(a).diff(b) == f.diff(b).diff(a));
        CHECK(f.diff(a).diff(b) == f.diff(a + b));
    }
}

TEST_CASE("series products never exceed the truncation order")
{
    test::Random r(13);
    for (int trial = 0; trial < 20; ++trial) {
        const std::size_t N = static_cast<std::size_t>(r.integer(0, 4));
        std::vector<Poly> ac;
        std::vector<Poly> bc;
        for (std::size_t k = 0; k <= N; ++k) {
            ac.push_back(r.poly(2, 2));
            bc.push_back(r.poly(2, 2));
        }
        const PolySeries prod = series_mul(PolySeries(ac), PolySeries(bc));
        CHECK(prod.order() == N);
        for (std::size_t k = 0; k <= N; ++k) {
            Poly expected(2);
            for (std::size_t l = 0; l <= k; ++l) {
                expected += ac[l] * bc[k - l];
            }
            CHECK(prod[k] == expected);
        }
    }
}
