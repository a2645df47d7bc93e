#include <doctest.h>

#include "ccsym/random.hpp"
#include "ccsym/witt.hpp"
#include "helpers.hpp"

using namespace ccsym;
using ccsym::test::E;
using ccsym::test::S;

namespace {

WittVectorK W(const RingDescriptor& ring, const std::vector<std::string>& coords) {
    std::vector<RingElement> c;
    for (const auto& s : coords) c.push_back(parse_element(s, ring));
    return WittVectorK{std::move(c)};
}

}  // namespace

TEST_CASE("addition law") {
    RingDescriptor q = RingDescriptor::rationals();
    CHECK(witt_add(W(q, {"2"}), W(q, {"3"})).coords == W(q, {"5"}).coords);
    CHECK(witt_add(W(q, {"1", "0"}), W(q, {"1", "0"})).coords ==
          W(q, {"2", "-1"}).coords);

    WittVectorK x = W(q, {"2", "3", "5"});
    CHECK(witt_add(x, witt_zero(q, 3)).coords == x.coords);

    CHECK_THROWS_AS(witt_add(W(q, {"1"}), W(q, {"1", "2"})), ShapeMismatch);
}

TEST_CASE("multiplication law") {
    RingDescriptor q = RingDescriptor::rationals();
    WittVectorK x = W(q, {"2", "1/2", "7", "-1"});
    CHECK(witt_mul(x, witt_one(q, 4)).coords == x.coords);
    for (const auto& v : witt_mul(x, witt_zero(q, 4)).coords) CHECK(v.is_zero());

    // ghost multiplicativity
    WittVectorK y = W(q, {"1/3", "2", "0", "5"});
    GhostVector<RingElement> gp = ghost(witt_mul(x, y));
    GhostVector<RingElement> gx = ghost(x);
    GhostVector<RingElement> gy = ghost(y);
    for (long i = 1; i <= 4; ++i) CHECK(gp.at(i) == gx.at(i) * gy.at(i));
}

TEST_CASE("ghost coordinates") {
    RingDescriptor q = RingDescriptor::rationals();
    GhostVector<RingElement> g = ghost(W(q, {"3", "1"}));
    CHECK(g.at(1) == E(q, "3"));
    CHECK(g.at(2) == E(q, "11"));

    GhostVector<RingElement> unit = ghost(witt_one(q, 4));
    for (long i = 1; i <= 4; ++i) CHECK(unit.at(i) == E(q, "1"));

    for (const auto& v : ghost(witt_zero(q, 3)).coords) CHECK(v.is_zero());
}

TEST_CASE("unghost") {
    RingDescriptor q = RingDescriptor::rationals();
    CHECK(unghost(q, GhostVector<RingElement>{W(q, {"1", "1"}).coords}).coords ==
          W(q, {"1", "0"}).coords);
    CHECK(unghost(q, GhostVector<RingElement>{W(q, {"0", "2"}).coords}).coords ==
          W(q, {"0", "1"}).coords);

    RandomSource rng(37);
    for (int i = 0; i < 50; ++i) {
        WittVectorK x = rng.witt_vector(q, rng.range(1, 8));
        CHECK(unghost(q, ghost(x)).coords == x.coords);
    }

    RingDescriptor f5 = RingDescriptor::prime_field(5);
    CHECK_THROWS_AS(unghost(f5, GhostVector<RingElement>{W(f5, {"1"}).coords}),
                    DomainError);
}

TEST_CASE("pairing with the zero vector is zero") {
    RingDescriptor q = RingDescriptor::rationals();
    std::vector<LaurentSeries> xs = {S(q, "0 @prec=8"), S(q, "0 @prec=8")};
    WittVectorK r = res_w(S(q, "t @prec=8"), WittVectorSeries{xs});
    for (const auto& v : r.coords) CHECK(v.is_zero());
}

TEST_CASE("pairing of t with constants") {
    RingDescriptor q = RingDescriptor::rationals();
    std::vector<LaurentSeries> xs = {S(q, "3 @prec=10")};
    WittVectorK r = res_w(S(q, "t @prec=10"), WittVectorSeries{xs});
    REQUIRE(r.N() == 1);
    CHECK(r.at(1) == E(q, "3"));

    std::vector<LaurentSeries> ys = {S(q, "3*t^-1 @prec=10")};
    WittVectorK r2 = res_w(S(q, "t @prec=10"), WittVectorSeries{ys});
    CHECK(r2.at(1).is_zero());
}

TEST_CASE("p-typical projection indices") {
    CHECK(p_typical_indices(2, 4) == std::vector<long>{1, 2, 4});
    CHECK(p_typical_indices(3, 3) == std::vector<long>{1, 3});
    CHECK(p_typical_indices(2, 1) == std::vector<long>{1});
}
