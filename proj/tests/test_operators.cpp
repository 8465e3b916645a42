#include <doctest.h>

#include <starq/error.hpp>
#include <starq/operators/bidiff_op.hpp>
#include <starq/operators/diff_op.hpp>
#include <starq/operators/serialize.hpp>
#include <starq/starproducts/constructors.hpp>

#include "helpers.hpp"

using namespace starq;
using test::I;
using test::P;

namespace
{

DiffOp D(std::initializer_list<unsigned> e, const Poly &c)
{
    DiffOp op(c.dim());
    op.add_term(I(e), c);
    return op;
}

struct OrderLimitGuard {
    unsigned saved = max_operator_order();
    ~OrderLimitGuard() { set_max_operator_order(saved); }
};

} // namespace

TEST_CASE("op_apply example")
{
    CHECK(apply(D({0, 1}, P("p1")), P("p1^3")) == P("3*p1^3"));
    CHECK(apply(DiffOp::identity(2), P("q1*p1 + 2")) == P("q1*p1 + 2"));
    CHECK(apply(DiffOp::multiplication(P("q1")), P("p1")) == P("q1*p1"));
}

TEST_CASE("op_compose examples")
{
    const DiffOp dq = DiffOp::derivative(I({1, 0}));
    const DiffOp q = DiffOp::multiplication(P("q1"));
    CHECK(compose(dq, q) == D({1, 0}, P("q1")) + DiffOp::identity(2));
    CHECK(commutator(dq, q) == DiffOp::identity(2));

    const DiffOp half_laplace = D({2, 0}, P("1/2"));
    CHECK(commutator(half_laplace, q) == dq);
    CHECK(commutator_with_coordinate(half_laplace, 0) == dq);
}

TEST_CASE("moyal first coefficient fixed at q")
{
    const StarProduct s = moyal(PoissonTensor::canonical(1), 2);
    CHECK(slot_fix(s.c[1], 0, Slot::left) == D({0, 1}, P("i/2")));
    CHECK(slot_fix(s.c[1], 1, Slot::left) == D({1, 0}, P("-i/2")));
    CHECK(slot_fix(s.c[0], 0, Slot::left) == DiffOp::multiplication(P("q1")));
}

TEST_CASE("composition is associative and agrees with application")
{
    test::Random r(21);
    for (int trial = 0; trial < 25; ++trial) {
        const DiffOp a = r.op(2, 2, 2);
        const DiffOp b = r.op(2, 2, 2);
        const DiffOp c = r.op(2, 1, 2);
        const Poly f = r.poly(2, 4, 5);
        CHECK(compose(compose(a, b), c) == compose(a, compose(b, c)));
        CHECK(apply(compose(a, b), f) == apply(a, apply(b, f)));
        CHECK(apply(commutator(a, b), f) == apply(a, apply(b, f)) - apply(b, apply(a, f)));
    }
}

TEST_CASE("commutator with a coordinate agrees with the general commutator")
{
    test::Random r(22);
    for (int trial = 0; trial < 25; ++trial) {
        const DiffOp a = r.op(3, 3, 2);
        for (std::size_t alpha = 0; alpha < 3; ++alpha) {
            CHECK(commutator_with_coordinate(a, alpha) ==
                  commutator(a, DiffOp::multiplication(Poly::coordinate(3, alpha))));
        }
    }
}

TEST_CASE("slot_fix agrees with bidiff_apply")
{
    test::Random r(23);
    for (int trial = 0; trial < 25; ++trial) {
        const BiDiffOp c = r.bidiff(2, 2, 2);
        const Poly f = r.poly(2, 4, 4);
        for (std::size_t alpha = 0; alpha < 2; ++alpha) {
            const Poly x = Poly::coordinate(2, alpha);
            CHECK(apply(slot_fix(c, alpha, Slot::left), f) == bidiff_apply(c, x, f));
            CHECK(apply(slot_fix(c, alpha, Slot::right), f) == bidiff_apply(c, f, x));
        }
        CHECK(bidiff_apply(c.swapped(), f, Poly::coordinate(2, 0)) == bidiff_apply(c, Poly::coordinate(2, 0), f));
    }
}

TEST_CASE("bidifferential helpers")
{
    const BiDiffOp m = BiDiffOp::pointwise_product(2);
    CHECK(bidiff_apply(m, P("q1"), P("p1^2")) == P("q1*p1^2"));
    CHECK_FALSE(m.vanishes_on_constants());
    const BiDiffOp t = BiDiffOp::tensor(DiffOp::derivative(I({1, 0})), DiffOp::derivative(I({0, 1})));
    CHECK(t.vanishes_on_constants());
    CHECK(t.order(Slot::left) == 1);
    CHECK(bidiff_apply(t, P("q1^2"), P("p1^3")) == P("6*q1*p1^2"));
    CHECK(BiDiffOp(2).order(Slot::right) == -1);
}

TEST_CASE("right derivative and left multiplication")
{
    const DiffOp a = D({1, 0}, P("p1"));
    CHECK(a.right_derivative(I({0, 1})) == compose(a, DiffOp::derivative(I({0, 1}))));
    CHECK(a.left_multiplied(P("q1")) == compose(DiffOp::multiplication(P("q1")), a));
    CHECK(a.order() == 1);
    CHECK(DiffOp(2).order() == -1);
}

TEST_CASE("term differences list exactly the differing terms")
{
    const DiffOp a = D({1, 0}, P("1")) + D({0, 2}, P("q1"));
    const DiffOp b = D({1, 0}, P("1")) + D({0, 2}, P("p1"));
    const auto diff = term_differences(a, b);
    REQUIRE(diff.size() == 1);
    CHECK(diff[0].index == I({0, 2}));
    CHECK(diff[0].left == P("q1"));
    CHECK(diff[0].right == P("p1"));
    CHECK(term_differences(a, a).empty());
    CHECK(op_equal(a, a));
    CHECK_FALSE(op_equal(a, b));
}

TEST_CASE("serialization round trips")
{
    test::Random r(24);
    for (int trial = 0; trial < 10; ++trial) {
        const Poly p = r.poly(2, 3);
        const DiffOp op = r.op(2, 3, 2);
        const BiDiffOp c = r.bidiff(2, 2, 2);
        CHECK(poly_from_json(to_json(p), 2) == p);
        CHECK(diff_op_from_json(to_json(op)) == op);
        CHECK(bidiff_op_from_json(to_json(c)) == c);
    }
    const auto j = to_json(GaussianRational(mpq_class(1, 2), mpq_class(-3, 4)));
    CHECK(j["re"] == "1/2");
    CHECK(j["im"] == "-3/4");
    CHECK(gaussian_from_json(j) == GaussianRational(mpq_class(1, 2), mpq_class(-3, 4)));
    CHECK_THROWS_AS(gaussian_from_json(nlohmann::json{{"re", "1/2"}}), parse_error);
    CHECK_THROWS_AS(gaussian_from_json(nlohmann::json{{"re", "x"}, {"im", "0"}}), parse_error);
    CHECK_THROWS_AS(poly_from_json(nlohmann::json::parse(R"([{"m":[1],"c":{"re":"1","im":"0"}}])"), 2),
                    parse_error);
}

TEST_CASE("operator order guard")
{
    OrderLimitGuard guard;
    set_max_operator_order(3);
    CHECK(max_operator_order() == 3);
    DiffOp op(2);
    CHECK_NOTHROW(op.add_term(I({2, 1}), P("1")));
    CHECK_THROWS_AS(op.add_term(I({2, 2}), P("1")), order_limit_exceeded);
    CHECK_THROWS_AS(compose(DiffOp::derivative(I({2, 0})), DiffOp::derivative(I({0, 2}))), order_limit_exceeded);
    BiDiffOp c(2);
    CHECK_THROWS_AS(c.add_term(I({4, 0}), I({0, 0}), P("1")), order_limit_exceeded);
}

TEST_CASE("dimension mismatches are rejected")
{
    CHECK_THROWS_AS(compose(DiffOp::identity(2), DiffOp::identity(3)), dimension_mismatch);
    CHECK_THROWS_AS(apply(DiffOp::identity(2), Poly(3)), dimension_mismatch);
    CHECK_THROWS_AS(bidiff_apply(BiDiffOp(2), Poly(2), Poly(4)), dimension_mismatch);
}
