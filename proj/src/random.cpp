#include "ccsym/random.hpp"

#include <algorithm>

namespace ccsym {

mpq_class RandomSource::base_value(const RingDescriptor& ring) {
    if (ring.base() == BaseField::PrimeField)
        return mpq_class(below(ring.modulus()));
    mpq_class q(range(-6, 6), range(1, 4));
    q.canonicalize();
    return q;
}

mpq_class RandomSource::nonzero_base_value(const RingDescriptor& ring) {
    for (;;) {
        mpq_class q = base_value(ring);
        if (q != 0) return q;
    }
}

RingElement RandomSource::element(const RingDescriptor& ring) {
    std::vector<mpq_class> c;
    c.reserve(static_cast<std::size_t>(ring.eps_order()));
    for (int i = 0; i < ring.eps_order(); ++i) c.push_back(base_value(ring));
    return RingElement(ring, std::move(c));
}

RingElement RandomSource::unit(const RingDescriptor& ring) {
    std::vector<mpq_class> c;
    c.push_back(nonzero_base_value(ring));
    for (int i = 1; i < ring.eps_order(); ++i) c.push_back(base_value(ring));
    return RingElement(ring, std::move(c));
}

RingElement RandomSource::nilpotent(const RingDescriptor& ring) {
    std::vector<mpq_class> c;
    c.push_back(0);
    for (int i = 1; i < ring.eps_order(); ++i) c.push_back(base_value(ring));
    return RingElement(ring, std::move(c));
}

LaurentSeries RandomSource::unit_series(const RingDescriptor& ring, long max_depth,
                                        long extra_prec) {
    const long e = ring.nilpotency_index();
    long w = range(-2, 2);
    long L = ring.is_field() ? 0 : below(max_depth + 1);
    long prec = w + e * (L + 2) + 12 + extra_prec;
    std::vector<RingElement> c;
    for (long d = w - L; d < w; ++d) c.push_back(nilpotent(ring));
    c.push_back(unit(ring));
    for (long d = w + 1; d < prec; ++d)
        c.push_back(chance(2, 3) ? element(ring) : RingElement::zero(ring));
    return LaurentSeries(ring, w - L, std::move(c), prec);
}

LaurentSeries RandomSource::series_in_one_plus_m(const RingDescriptor& ring,
                                                 long max_depth, long extra_prec) {
    const long e = ring.nilpotency_index();
    long L = ring.is_field() ? 0 : below(max_depth + 1);
    long prec = e * (L + 2) + 12 + extra_prec;
    std::vector<RingElement> c;
    for (long d = -L; d < prec; ++d) {
        RingElement v = chance(2, 3) ? nilpotent(ring) : RingElement::zero(ring);
        if (d == 0) v += RingElement::one(ring);
        c.push_back(v);
    }
    return LaurentSeries(ring, -L, std::move(c), prec);
}

LaurentSeries RandomSource::field_series(const RingDescriptor& ring, long extra_prec) {
    long lo = range(-3, 1);
    long prec = 16 + extra_prec;
    std::vector<RingElement> c;
    for (long d = lo; d < prec; ++d)
        c.push_back(chance(1, 2) ? element(ring) : RingElement::zero(ring));
    return LaurentSeries(ring, lo, std::move(c), prec);
}

LaurentSeries RandomSource::reparameterization(const RingDescriptor& ring,
                                               bool allow_principal, long extra_prec) {
    const long e = ring.nilpotency_index();
    long L = (allow_principal && !ring.is_field()) ? below(2) : 0;
    long prec = e * 3 + 16 + extra_prec;
    std::vector<RingElement> c;
    for (long d = 1 - L; d < 1; ++d) c.push_back(nilpotent(ring));
    c.push_back(unit(ring));
    for (long d = 2; d < prec; ++d)
        c.push_back(chance(1, 2) ? element(ring) : RingElement::zero(ring));
    return LaurentSeries(ring, 1 - L, std::move(c), prec);
}

WittVectorK RandomSource::witt_vector(const RingDescriptor& ring, long N) {
    std::vector<RingElement> c;
    for (long i = 0; i < N; ++i) c.push_back(element(ring));
    return WittVectorK{std::move(c)};
}

WittVectorK RandomSource::integer_witt_vector(const RingDescriptor& ring, long N,
                                              long bound) {
    std::vector<RingElement> c;
    for (long i = 0; i < N; ++i)
        c.push_back(RingElement::from_integer(ring, below(bound)));
    return WittVectorK{std::move(c)};
}

std::vector<PointOnP1> RandomSource::point_set(const RingDescriptor& ring,
                                               long max_finite, bool force_inf) {
    std::vector<PointOnP1> S;
    long pool = ring.base() == BaseField::PrimeField
                    ? std::min(ring.modulus(), 7L)
                    : 7L;
    long want = std::min(range(1, max_finite), pool);
    std::vector<long> values;
    for (long v = 0; v < pool; ++v) values.push_back(v);
    for (long i = 0; i < want; ++i) {
        long j = range(i, pool - 1);
        std::swap(values[static_cast<std::size_t>(i)],
                  values[static_cast<std::size_t>(j)]);
        S.push_back(PointOnP1::finite(detail::base_reduce(
            ring.base_field(), mpq_class(values[static_cast<std::size_t>(i)]))));
    }
    if (force_inf || chance(2, 3)) S.push_back(PointOnP1::infinity());
    return S;
}

namespace {

Polynomial poly_from_roots(const RingDescriptor& ring,
                           const std::vector<std::pair<mpq_class, int>>& roots) {
    Polynomial acc = Polynomial::constant(RingElement::one(ring));
    for (const auto& [root, mult] : roots) {
        Polynomial lin(ring,
                       {-RingElement::from_base(ring, root), RingElement::one(ring)});
        acc = acc * lin.pow(mult);
    }
    return acc;
}

}  // namespace

RationalFunctionOverK RandomSource::unit_ratfunc(const RingDescriptor& ring,
                                                 const std::vector<PointOnP1>& S) {
    bool has_inf = contains(S, PointOnP1::infinity());
    std::vector<std::pair<mpq_class, long>> divisor;  // finite point -> exponent
    long total = 0;
    for (const auto& s : S) {
        if (s.is_infinity()) continue;
        long ord = range(-2, 2);
        divisor.emplace_back(s.lambda(), ord);
        total += ord;
    }
    if (!has_inf && !divisor.empty()) {
        // principal divisors have degree zero; absorb the excess at the last point
        divisor.back().second -= total;
    } else if (!has_inf && divisor.empty()) {
        // only constants are invertible away from every declared point
    }

    std::vector<std::pair<mpq_class, int>> zeros, poles;
    for (const auto& [lambda, ord] : divisor) {
        if (ord > 0) zeros.emplace_back(lambda, static_cast<int>(ord));
        if (ord < 0) poles.emplace_back(lambda, static_cast<int>(-ord));
    }
    Polynomial num = poly_from_roots(ring, zeros).scaled(unit(ring));
    std::vector<std::pair<mpq_class, int>> den = poles;

    if (!ring.is_field() && chance(3, 4)) {
        // multiply by 1 + mu r with mu in m and r in R_0, poles inside S:
        // the reduction mod m is unchanged, so unit membership survives
        RationalFunctionOverK r = member_ratfunc(ring, S);
        long den_r_deg = r.den_degree();
        Polynomial den_r = poly_from_roots(ring, r.den());
        Polynomial bump = den_r + r.num().scaled(nilpotent(ring));
        if (!has_inf && bump.degree() > den_r_deg)
            return RationalFunctionOverK(std::move(num), std::move(den));
        num = num * bump;
        for (const auto& [root, mult] : r.den()) {
            bool merged = false;
            for (auto& [root2, mult2] : den)
                if (root2 == root) {
                    mult2 += mult;
                    merged = true;
                }
            if (!merged) den.emplace_back(root, mult);
        }
    }
    return RationalFunctionOverK(std::move(num), std::move(den));
}

RationalFunctionOverK RandomSource::member_ratfunc(const RingDescriptor& ring,
                                                   const std::vector<PointOnP1>& S) {
    bool has_inf = contains(S, PointOnP1::infinity());
    std::vector<std::pair<mpq_class, int>> den;
    for (const auto& s : S) {
        if (s.is_infinity()) continue;
        long m = below(3);
        if (m > 0) den.emplace_back(s.lambda(), static_cast<int>(m));
    }
    long den_deg = 0;
    for (const auto& [root, mult] : den) den_deg += mult;
    long max_deg = has_inf ? den_deg + 2 : den_deg;
    long deg = below(std::max(max_deg, 0L) + 1);
    std::vector<RingElement> c;
    for (long i = 0; i <= deg; ++i) c.push_back(element(ring));
    Polynomial num(ring, std::move(c));
    return RationalFunctionOverK(std::move(num), std::move(den));
}

}  // namespace ccsym
