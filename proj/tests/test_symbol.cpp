#include <doctest.h>

#include "ccsym/random.hpp"
#include "ccsym/symbol.hpp"
#include "helpers.hpp"

using namespace ccsym;
using ccsym::test::E;
using ccsym::test::S;

TEST_CASE("<t, t> = -1") {
    RingDescriptor f5 = RingDescriptor::prime_field(5);
    CHECK(contou_carrere(S(f5, "t"), S(f5, "t")) == E(f5, "4"));
    RingDescriptor q3 = RingDescriptor::rationals(3);
    CHECK(contou_carrere(S(q3, "t"), S(q3, "t")) == E(q3, "-1"));
}

TEST_CASE("<1 - e t^-1, 1 - e t> = 1 + e^2") {
    for (const auto& k :
         {RingDescriptor::prime_field(5, 3), RingDescriptor::rationals(3)}) {
        RingElement v = contou_carrere(S(k, "1 - e*t^-1 @prec=12"),
                                       S(k, "1 - e*t @prec=12"));
        CHECK(v == E(k, "1+e^2"));
    }
}

TEST_CASE("principal units over a field pair trivially") {
    RingDescriptor f7 = RingDescriptor::prime_field(7);
    RingElement v = contou_carrere(S(f7, "1 + 2*t + t^3 @prec=10"),
                                   S(f7, "1 + 3*t^2 @prec=10"));
    CHECK(v == RingElement::one(f7));
}

TEST_CASE("tame symbol") {
    RingDescriptor f5 = RingDescriptor::prime_field(5);
    CHECK(tame_symbol(S(f5, "t"), S(f5, "2")) == E(f5, "3"));
    CHECK(tame_symbol(S(f5, "t"), S(f5, "t")) == E(f5, "4"));
    RingDescriptor f7 = RingDescriptor::prime_field(7);
    CHECK(tame_symbol(S(f7, "t"), S(f7, "1 - t")) == E(f7, "1"));

    RingDescriptor k = RingDescriptor::prime_field(5, 2);
    CHECK_THROWS_AS(tame_symbol(S(k, "t @prec=6"), S(k, "t @prec=6")), FieldOnly);
}

TEST_CASE("tame symbol agrees with the closed formula over fields") {
    RandomSource rng(23);
    RingDescriptor f7 = RingDescriptor::prime_field(7);
    for (int i = 0; i < 100; ++i) {
        LaurentSeries f = rng.unit_series(f7, 0);
        LaurentSeries g = rng.unit_series(f7, 0);
        CHECK(tame_symbol(f, g) == contou_carrere(f, g));
    }
}

TEST_CASE("residue recovery") {
    RingDescriptor f7 = RingDescriptor::prime_field(7);
    CHECK(residue_from_symbol(S(f7, "t^-1 @prec=10"), S(f7, "t @prec=10")) ==
          E(f7, "-1"));
    CHECK(residue_from_symbol(S(f7, "t @prec=10"), S(f7, "1 + t + t^2 @prec=10"))
              .is_zero());
    RingDescriptor f5 = RingDescriptor::prime_field(5);
    CHECK(residue_from_symbol(S(f5, "t^-2 @prec=10"), S(f5, "3*t @prec=10"))
              .is_zero());
    RingDescriptor q = RingDescriptor::rationals();
    CHECK(residue_from_symbol(S(q, "t^-1 @prec=10"), S(q, "t @prec=10")) ==
          E(q, "-1"));
}

TEST_CASE("exp-log form") {
    RingDescriptor k = RingDescriptor::rationals(3);
    CHECK(symbol_exp_log(S(k, "1 @prec=10"), S(k, "t @prec=10")) ==
          RingElement::one(k));
    CHECK(symbol_exp_log(S(k, "1 - e*t^-1 @prec=12"), S(k, "1 - e*t @prec=12")) ==
          E(k, "1+e^2"));

    // exp of the constant term of log f when g = t
    LaurentSeries f = S(k, "1 + 2*e + e*t @prec=12");
    CHECK(symbol_exp_log(f, S(k, "t @prec=12")) == E(k, "1+2*e"));
    CHECK(symbol_exp_log(f, S(k, "t @prec=12")) ==
          contou_carrere(f, S(k, "t @prec=12")));

    RingDescriptor f5 = RingDescriptor::prime_field(5, 3);
    CHECK_THROWS_AS(symbol_exp_log(S(f5, "1 @prec=8"), S(f5, "t @prec=8")),
                    DomainError);
    CHECK_THROWS_AS(symbol_exp_log(S(k, "2 @prec=8"), S(k, "t @prec=8")),
                    DomainError);
}

TEST_CASE("antisymmetry and Steinberg-adjacent sanity") {
    RandomSource rng(29);
    RingDescriptor k = RingDescriptor::prime_field(3, 3);
    for (int i = 0; i < 50; ++i) {
        LaurentSeries f = rng.unit_series(k, 1, 8);
        LaurentSeries g = rng.unit_series(k, 1, 8);
        CHECK(contou_carrere(f, g) * contou_carrere(g, f) == RingElement::one(k));
        RingElement s = contou_carrere(f, f);
        CHECK(s * s == RingElement::one(k));
    }
}

TEST_CASE("precision precondition is enforced") {
    RingDescriptor k = RingDescriptor::prime_field(3, 3);
    // deep pole against a short window: the finite products need more tail
    LaurentSeries f = S(k, "1 - e*t^-4 @prec=3");
    LaurentSeries g = S(k, "1 - e*t @prec=3");
    CHECK_THROWS_AS(contou_carrere(g, f), InsufficientPrecision);
}
