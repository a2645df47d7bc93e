#include <doctest.h>

#include "ccsym/random.hpp"
#include "helpers.hpp"

using namespace ccsym;
using ccsym::test::E;
using ccsym::test::S;

TEST_CASE("ring descriptors") {
    RingDescriptor k = parse_ring("Fp:5,eps:3");
    CHECK(k == RingDescriptor::prime_field(5, 3));
    CHECK(to_string(k) == "Fp:5,eps:3");
    CHECK(parse_ring("Q") == RingDescriptor::rationals());
    CHECK(parse_ring("Q,eps:4") == RingDescriptor::rationals(4));
    CHECK(to_string(RingDescriptor::prime_field(7)) == "Fp:7");
    CHECK_THROWS_AS(parse_ring("Fp:4"), NonPrimeModulus);
    CHECK_THROWS_AS(parse_ring("Zp:5"), SyntaxError);
}

TEST_CASE("series grammar") {
    RingDescriptor f5 = RingDescriptor::prime_field(5);
    LaurentSeries a = S(f5, "t^-1 + 2");
    CHECK(a.ord() == -1);
    CHECK(a.coeff(-1) == E(f5, "1"));
    CHECK(a.coeff(0) == E(f5, "2"));

    RingDescriptor k = RingDescriptor::prime_field(3, 2);
    LaurentSeries b = S(k, "(1+e)*t");
    CHECK(b.ord() == 1);
    CHECK(b.coeff(1) == E(k, "1+e"));

    LaurentSeries c = S(k, "2*t^2*t^-3 + e");
    CHECK(c.coeff(-1) == E(k, "2"));
    CHECK(c.coeff(0) == E(k, "e"));

    CHECK(S(f5, "t^3 @prec=9").prec() == 9);
}

TEST_CASE("syntax errors carry offsets") {
    RingDescriptor f5 = RingDescriptor::prime_field(5);
    try {
        parse_series("t^", f5);
        FAIL("expected a syntax error");
    } catch (const SyntaxError& e) {
        CHECK(e.offset() == 2);
    }
    CHECK_THROWS_AS(parse_series("t + + t", f5), SyntaxError);
    CHECK_THROWS_AS(parse_series("t @prec", f5), SyntaxError);
    CHECK_THROWS_AS(parse_element("1/0", f5), SyntaxError);
    CHECK_THROWS_AS(parse_element("e$", f5), SyntaxError);
    CHECK_THROWS_AS(parse_element("1/5", f5), DomainError);
}

TEST_CASE("element round trips") {
    RandomSource rng(43);
    for (const auto& ring :
         {RingDescriptor::prime_field(5, 3), RingDescriptor::rationals(4),
          RingDescriptor::prime_field(2, 2), RingDescriptor::rationals()}) {
        for (int i = 0; i < 200; ++i) {
            RingElement x = rng.element(ring);
            CHECK(parse_element(to_string(x), ring) == x);
        }
    }
}

TEST_CASE("series round trips") {
    RandomSource rng(47);
    for (const auto& ring :
         {RingDescriptor::prime_field(5, 2), RingDescriptor::rationals(3)}) {
        for (int i = 0; i < 150; ++i) {
            LaurentSeries f = rng.unit_series(ring, 2);
            CHECK(parse_series(to_string(f), ring) == f);
            LaurentSeries z = LaurentSeries::zero(ring, rng.range(-3, 9));
            CHECK(parse_series(to_string(z), ring) == z);
        }
    }
}

TEST_CASE("rational function grammar") {
    RingDescriptor f7 = RingDescriptor::prime_field(7);
    RationalFunctionOverK h = parse_ratfunc("1 / (t-0)^1*(t-1)^2", f7);
    CHECK(h.den().size() == 2);
    CHECK(h.den_degree() == 3);
    CHECK(to_string(h) == "1 / (t-0)*(t-1)^2");
    RationalFunctionOverK back = parse_ratfunc(to_string(h), f7);
    CHECK(to_string(back) == to_string(h));

    RingDescriptor q = RingDescriptor::rationals();
    RationalFunctionOverK neg = parse_ratfunc("t / (t+1/2)", q);
    CHECK(neg.den()[0].first == mpq_class(-1, 2));
    CHECK(to_string(neg) == "t / (t+1/2)");

    CHECK_THROWS_AS(parse_ratfunc("t^-1", f7), SyntaxError);
    CHECK_THROWS_AS(parse_ratfunc("1 / (t-0)^0", f7), SyntaxError);
    CHECK_THROWS_AS(parse_ratfunc("1 / (t-0)*(t-0)", f7), BadParameter);
}

TEST_CASE("points") {
    RingDescriptor f7 = RingDescriptor::prime_field(7);
    auto S = parse_points("0,1,inf", f7);
    REQUIRE(S.size() == 3);
    CHECK(S[0] == PointOnP1::finite(0));
    CHECK(S[1] == PointOnP1::finite(1));
    CHECK(S[2].is_infinity());
    CHECK(to_string(S[2]) == "inf");
    // residues are canonicalized
    CHECK(parse_point("-1", f7) == PointOnP1::finite(6));

    RingDescriptor q = RingDescriptor::rationals();
    CHECK(parse_point("-1/2", q) == PointOnP1::finite(mpq_class(-1, 2)));
}

TEST_CASE("witt vector lists") {
    RingDescriptor q = RingDescriptor::rationals();
    WittVectorK x = parse_witt_vector("[3, 1]", q);
    REQUIRE(x.N() == 2);
    CHECK(x.at(1) == E(q, "3"));
    CHECK(x.at(2) == E(q, "1"));
    CHECK(witt_vector_strings(x) == std::vector<std::string>{"3", "1"});
    CHECK(parse_witt_vector("[]", q).N() == 0);
    CHECK_THROWS_AS(parse_witt_vector("[1,", q), SyntaxError);
}
