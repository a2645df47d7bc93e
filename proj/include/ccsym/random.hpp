#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "ccsym/laurent.hpp"
#include "ccsym/p1.hpp"
#include "ccsym/ring.hpp"
#include "ccsym/witt.hpp"

namespace ccsym {

// Deterministic instance generator for the randomized suites; a fixed seed
// pins every generated instance, so suite output is reproducible.
class RandomSource {
public:
    explicit RandomSource(std::uint64_t seed) : rng_(seed) {}

    std::uint64_t next() { return rng_(); }
    long below(long n) { return static_cast<long>(next() % static_cast<std::uint64_t>(n)); }
    long range(long lo, long hi) { return lo + below(hi - lo + 1); }
    bool chance(long num, long den) { return below(den) < num; }

    mpq_class base_value(const RingDescriptor& ring);
    mpq_class nonzero_base_value(const RingDescriptor& ring);
    RingElement element(const RingDescriptor& ring);
    RingElement unit(const RingDescriptor& ring);
    RingElement nilpotent(const RingDescriptor& ring);

    // unit of k((t)): bounded winding and principal depth, window sized for
    // symbol computations against peers of similar depth
    LaurentSeries unit_series(const RingDescriptor& ring, long max_depth = 2,
                              long extra_prec = 0);
    // element of 1 + m((t)) with finite principal part
    LaurentSeries series_in_one_plus_m(const RingDescriptor& ring, long max_depth = 2,
                                       long extra_prec = 0);
    // arbitrary series over a field (any order, any coefficients)
    LaurentSeries field_series(const RingDescriptor& ring, long extra_prec = 0);
    // winding-number-1 substitution parameter
    LaurentSeries reparameterization(const RingDescriptor& ring, bool allow_principal,
                                     long extra_prec = 0);

    WittVectorK witt_vector(const RingDescriptor& ring, long N);
    WittVectorK integer_witt_vector(const RingDescriptor& ring, long N, long bound);

    // distinct points; always includes infinity when force_inf is set
    std::vector<PointOnP1> point_set(const RingDescriptor& ring, long max_finite,
                                     bool force_inf);
    // element of R_0^x (x) k: divisor supported on S, optional nilpotent part
    RationalFunctionOverK unit_ratfunc(const RingDescriptor& ring,
                                       const std::vector<PointOnP1>& S);
    // element of R_0 (x) k with poles confined to S
    RationalFunctionOverK member_ratfunc(const RingDescriptor& ring,
                                         const std::vector<PointOnP1>& S);

private:
    std::mt19937_64 rng_;
};

}  // namespace ccsym
