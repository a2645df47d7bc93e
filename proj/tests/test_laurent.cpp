#include <doctest.h>

#include "ccsym/random.hpp"
#include "helpers.hpp"

using namespace ccsym;
using ccsym::test::E;
using ccsym::test::S;

TEST_CASE("inversion with a nilpotent principal part") {
    RingDescriptor k = RingDescriptor::prime_field(3, 2);
    LaurentSeries f = S(k, "t - e @prec=4");
    LaurentSeries g = f.inv();
    CHECK(g.coeff(-2) == E(k, "e"));
    CHECK(g.coeff(-1) == E(k, "1"));
    CHECK(g.coeff(0).is_zero());
    CHECK((f * g).agrees_with(LaurentSeries::one(k)));
}

TEST_CASE("monomial inverses") {
    RingDescriptor f5 = RingDescriptor::prime_field(5);
    LaurentSeries t = S(f5, "t @prec=6");
    LaurentSeries tinv = S(f5, "t^-1 @prec=6");
    CHECK((t * tinv).agrees_with(LaurentSeries::one(f5)));
    CHECK(t.inv().agrees_with(tinv));
}

TEST_CASE("series with no unit coefficient cannot be inverted") {
    RingDescriptor k = RingDescriptor::prime_field(3, 2);
    CHECK_THROWS_AS(S(k, "e + e*t @prec=5").inv(), NotAUnit);
    CHECK_THROWS_AS(S(k, "0 @prec=5").winding_number(), NotAUnit);
}

TEST_CASE("winding numbers") {
    RingDescriptor f5 = RingDescriptor::prime_field(5);
    CHECK(S(f5, "3*t^-2 + t").winding_number() == -2);
    RingDescriptor k = RingDescriptor::prime_field(3, 2);
    CHECK(S(k, "t - e @prec=5").winding_number() == 1);
    CHECK(S(k, "t^4 @prec=6").winding_number() == 4);
    CHECK(S(k, "e*t^-3 + 2 @prec=5").winding_number() == 0);
}

TEST_CASE("derivative and residue") {
    RingDescriptor f7 = RingDescriptor::prime_field(7);
    LaurentSeries f = S(f7, "2*t^-3 + t^-1 + 4*t @prec=6");
    LaurentSeries d = f.derivative();
    CHECK(d.coeff(-4) == E(f7, "1"));
    CHECK(d.coeff(-2) == E(f7, "6"));
    CHECK(d.coeff(0) == E(f7, "4"));
    CHECK(f.residue() == E(f7, "1"));
    CHECK(S(f7, "t^-1").residue() == E(f7, "1"));
    CHECK(d.residue().is_zero());
    CHECK(f.derivative().residue().is_zero());
}

TEST_CASE("residue needs the degree -1 coefficient inside the window") {
    RingDescriptor f7 = RingDescriptor::prime_field(7);
    LaurentSeries f = S(f7, "t^-3 + t^-2 @prec=-1");
    CHECK_THROWS_AS(f.residue(), InsufficientPrecision);
}

TEST_CASE("substitution") {
    RingDescriptor f7 = RingDescriptor::prime_field(7);
    LaurentSeries f = S(f7, "t^2 @prec=5");
    LaurentSeries tau = S(f7, "t + t^2 @prec=5");
    LaurentSeries sub = f.substitute(tau);
    CHECK(sub.coeff(2) == E(f7, "1"));
    CHECK(sub.coeff(3) == E(f7, "2"));
    CHECK(sub.coeff(4) == E(f7, "1"));

    RingDescriptor k = RingDescriptor::prime_field(5, 2);
    LaurentSeries g = S(k, "t^-1 @prec=4");
    LaurentSeries tau2 = S(k, "t + e*t^2 @prec=6");
    LaurentSeries sub2 = g.substitute(tau2);
    CHECK(sub2.coeff(-1) == E(k, "1"));
    CHECK(sub2.coeff(0) == E(k, "4*e"));

    LaurentSeries h = S(k, "2*t^-2 + 3 + t @prec=6");
    CHECK(h.substitute(S(k, "t @prec=12")).agrees_with(h));

    CHECK_THROWS_AS(f.substitute(S(f7, "t^2 @prec=5")), BadParameter);
}

TEST_CASE("window bookkeeping") {
    RingDescriptor f5 = RingDescriptor::prime_field(5);
    LaurentSeries a = S(f5, "t^-1 + 1 @prec=3");
    LaurentSeries b = S(f5, "t @prec=5");
    CHECK((a + b).prec() == 3);
    CHECK((a * b).prec() == std::min(-1 + 5, 1 + 3));
    CHECK(a.derivative().prec() == 2);
}

TEST_CASE("randomized inversion round trips") {
    RandomSource rng(11);
    for (const auto& k : {RingDescriptor::prime_field(3, 3), RingDescriptor::rationals(2)}) {
        for (int i = 0; i < 100; ++i) {
            LaurentSeries f = rng.unit_series(k, 2);
            CHECK((f * f.inv()).agrees_with(LaurentSeries::one(k)));
        }
    }
}

TEST_CASE("winding is additive and substitution is multiplicative") {
    RandomSource rng(13);
    RingDescriptor k = RingDescriptor::prime_field(5, 2);
    for (int i = 0; i < 50; ++i) {
        LaurentSeries f = rng.unit_series(k, 1, 8);
        LaurentSeries g = rng.unit_series(k, 1, 8);
        CHECK((f * g).winding_number() == f.winding_number() + g.winding_number());
        LaurentSeries tau = rng.reparameterization(k, true, 16);
        CHECK((f * g).substitute(tau).agrees_with(f.substitute(tau) * g.substitute(tau)));
    }
}
