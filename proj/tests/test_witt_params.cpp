#include <doctest.h>

#include "ccsym/random.hpp"
#include "ccsym/witt_params.hpp"
#include "helpers.hpp"

using namespace ccsym;
using ccsym::test::E;
using ccsym::test::S;

TEST_CASE("unipotent factorization, single factor") {
    RingDescriptor q = RingDescriptor::rationals();
    // 1 - 3u factors with x_1 = 3
    auto x = unipotent_factor(q, {E(q, "-3")});
    REQUIRE(x.size() == 1);
    CHECK(x[0] == E(q, "3"));
}

TEST_CASE("unipotent factorization over F5") {
    RingDescriptor f5 = RingDescriptor::prime_field(5);
    auto x = unipotent_factor(f5, {E(f5, "1"), E(f5, "1")});  // 1 + u + u^2
    REQUIRE(x.size() == 2);
    CHECK(x[0] == E(f5, "4"));
    CHECK(x[1] == E(f5, "4"));

    auto zeros = unipotent_factor(f5, {E(f5, "0"), E(f5, "0"), E(f5, "0")});
    for (const auto& v : zeros) CHECK(v.is_zero());
}

TEST_CASE("factorization of t - e") {
    RingDescriptor k = RingDescriptor::prime_field(3, 2);
    WittParameters p = witt_factor(S(k, "t - e @prec=6"));
    CHECK(p.w == 1);
    CHECK(p.a0 == RingElement::one(k));
    REQUIRE(p.neg.size() == 1);
    CHECK(p.neg.at(1) == E(k, "e"));
    for (long i = 1; i <= p.pos_prec(); ++i) CHECK(p.pos_at(i).is_zero());
}

TEST_CASE("factorization of a constant unit") {
    RingDescriptor k = RingDescriptor::prime_field(3, 2);
    WittParameters p = witt_factor(S(k, "2 + e @prec=8"));
    CHECK(p.w == 0);
    CHECK(p.a0 == E(k, "2+e"));
    CHECK(p.neg.empty());
    for (long i = 1; i <= p.pos_prec(); ++i) CHECK(p.pos_at(i).is_zero());
}

TEST_CASE("factorization with both tails") {
    RingDescriptor k = RingDescriptor::prime_field(5, 2);
    WittParameters p = witt_factor(S(k, "1 - e*t^-1 - e*t @prec=6"));
    CHECK(p.w == 0);
    CHECK(p.a0 == RingElement::one(k));
    REQUIRE(p.neg.size() == 1);
    CHECK(p.neg.at(1) == E(k, "e"));
    CHECK(p.pos_at(1) == E(k, "e"));
    for (long i = 2; i <= p.pos_prec(); ++i) CHECK(p.pos_at(i).is_zero());
}

TEST_CASE("assembly") {
    RingDescriptor k = RingDescriptor::prime_field(3, 2);
    WittParameters p{k, 1, RingElement::one(k), {{1, E(k, "e")}}, {}};
    LaurentSeries f = witt_assemble(p, 2);
    CHECK(f.coeff(0) == E(k, "-e"));
    CHECK(f.coeff(1) == E(k, "1"));

    WittParameters c{k, 0, E(k, "2+e"), {}, {}};
    CHECK(witt_assemble(c, 1).coeff(0) == E(k, "2+e"));

    CHECK_THROWS_AS(witt_assemble(p, 10), InsufficientPrecision);
}

TEST_CASE("factor then assemble is the identity on windows") {
    RandomSource rng(17);
    for (const auto& k :
         {RingDescriptor::prime_field(3, 3), RingDescriptor::prime_field(5, 2),
          RingDescriptor::rationals(4), RingDescriptor::prime_field(7)}) {
        for (int i = 0; i < 60; ++i) {
            LaurentSeries f = rng.unit_series(k, 2);
            WittParameters p = witt_factor(f);
            if (k.is_field()) CHECK(p.neg.empty());
            LaurentSeries back =
                witt_assemble(p, std::min(f.prec(), max_assemble_prec(p)));
            CHECK(back.agrees_with(f));
        }
    }
}

TEST_CASE("factorization needs a stored unit coefficient") {
    RingDescriptor k = RingDescriptor::prime_field(3, 2);
    // the window ends before the unit coefficient, so nothing certifies a unit
    CHECK_THROWS_AS(witt_factor(S(k, "t^2 @prec=2")), NotAUnit);
    CHECK_THROWS_AS(witt_factor(S(k, "e*t @prec=4")), NotAUnit);
}
