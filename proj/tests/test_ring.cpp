#include <doctest.h>

#include "ccsym/random.hpp"
#include "helpers.hpp"

using namespace ccsym;
using ccsym::test::E;

TEST_CASE("ring construction") {
    RingDescriptor k = RingDescriptor::prime_field(5, 3);
    CHECK(k.modulus() == 5);
    CHECK(k.eps_order() == 3);
    CHECK_FALSE(k.is_field());

    RingDescriptor q = RingDescriptor::rationals(1);
    CHECK(q.is_field());
    CHECK(q.rational_base());

    CHECK_THROWS_AS(RingDescriptor::prime_field(4, 2), NonPrimeModulus);
    CHECK_THROWS_AS(RingDescriptor::prime_field(5, 0), InvalidOrder);
    CHECK_THROWS_AS(RingDescriptor::rationals(-1), InvalidOrder);

    CHECK(RingDescriptor::prime_field(5, 3) == RingDescriptor::prime_field(5, 3));
    CHECK(RingDescriptor::prime_field(5, 3) != RingDescriptor::prime_field(5, 2));
}

TEST_CASE("arithmetic in F5[e]/(e^2)") {
    RingDescriptor k = RingDescriptor::prime_field(5, 2);
    CHECK(E(k, "2+e").inv() == E(k, "3+e"));
    CHECK(E(k, "2+e") * E(k, "3+e") == RingElement::one(k));
    CHECK(E(k, "2+e").pow(-1) == E(k, "3+e"));
}

TEST_CASE("arithmetic in Q[e]/(e^3)") {
    RingDescriptor k = RingDescriptor::rationals(3);
    CHECK(E(k, "1+e") * E(k, "1-e") == E(k, "1-e^2"));
    CHECK(E(k, "1/2") + E(k, "1/3") == E(k, "5/6"));
    CHECK(E(k, "1/2+e").inv() == E(k, "2-4*e+8*e^2"));
}

TEST_CASE("zero is never a unit") {
    RingDescriptor f3 = RingDescriptor::prime_field(3);
    CHECK_THROWS_AS(RingElement::zero(f3).inv(), NotAUnit);
    CHECK_THROWS_AS(E(f3, "0").pow(-2), NotAUnit);
}

TEST_CASE("unit and maximal-ideal predicates") {
    RingDescriptor k = RingDescriptor::prime_field(5, 3);
    RingElement eps = RingElement::eps(k);
    CHECK_FALSE(eps.is_unit());
    CHECK(eps.in_maximal_ideal());
    CHECK(E(k, "2+e").is_unit());
    CHECK_FALSE(E(k, "2+e").in_maximal_ideal());

    RingDescriptor q = RingDescriptor::rationals();
    CHECK(RingElement::zero(q).in_maximal_ideal());
}

TEST_CASE("nilpotency index of m") {
    CHECK(m_nilpotency_index(RingDescriptor::prime_field(5, 3)) == 3);
    CHECK(m_nilpotency_index(RingDescriptor::rationals()) == 1);
    CHECK(m_nilpotency_index(RingDescriptor::prime_field(2, 8)) == 8);
}

TEST_CASE("mixing rings is rejected") {
    RingDescriptor a = RingDescriptor::prime_field(5, 2);
    RingDescriptor b = RingDescriptor::prime_field(7, 2);
    CHECK_THROWS_AS(E(a, "1") + E(b, "1"), RingMismatch);
}

TEST_CASE("randomized unit inverses and nilpotents") {
    RandomSource rng(7);
    for (const auto& k : {RingDescriptor::prime_field(3, 4), RingDescriptor::rationals(3)}) {
        for (int i = 0; i < 200; ++i) {
            RingElement u = rng.unit(k);
            CHECK(u * u.inv() == RingElement::one(k));
            RingElement n = rng.nilpotent(k);
            CHECK(n.pow(k.nilpotency_index()).is_zero());
        }
    }
}
