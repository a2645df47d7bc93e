#include "ccsym/witt.hpp"

#include <numeric>

#include "ccsym/symbol.hpp"
#include "ccsym/witt_params.hpp"

namespace ccsym {

namespace {

void check_shapes(const WittVectorK& x, const WittVectorK& y) {
    if (x.N() != y.N())
        throw ShapeMismatch("vectors of length " + std::to_string(x.N()) + " and " +
                            std::to_string(y.N()));
    if (x.N() > 0 && x.coords[0].ring() != y.coords[0].ring())
        throw ShapeMismatch("coefficient rings differ");
}

// truncated polynomials 1 + sum_{d=1}^{N} c_d u^d, stored as c_1..c_N
using Trunc = std::vector<RingElement>;

// multiply the accumulator by (1 - a u^j)^pw, truncating at u^{N+1}
void trunc_mul_binomial(Trunc& acc, const RingElement& a, long j, long pw) {
    const long N = static_cast<long>(acc.size());
    for (long rep = 0; rep < pw; ++rep) {
        Trunc next = acc;
        for (long l = j; l <= N; ++l) {
            RingElement prev = (l == j) ? RingElement::one(a.ring())
                                        : acc[static_cast<std::size_t>(l - j - 1)];
            next[static_cast<std::size_t>(l - 1)] -= a * prev;
        }
        acc = std::move(next);
    }
}

WittVectorK refactor(const RingDescriptor& ring, Trunc c) {
    return WittVectorK{unipotent_factor(ring, std::move(c))};
}

}  // namespace

WittVectorK witt_zero(const RingDescriptor& ring, long N) {
    return WittVectorK{std::vector<RingElement>(static_cast<std::size_t>(N),
                                                RingElement::zero(ring))};
}

WittVectorK witt_one(const RingDescriptor& ring, long N) {
    WittVectorK x = witt_zero(ring, N);
    if (N >= 1) x.coords[0] = RingElement::one(ring);
    return x;
}

WittVectorK witt_add(const WittVectorK& x, const WittVectorK& y) {
    check_shapes(x, y);
    const long N = x.N();
    if (N == 0) return x;
    const RingDescriptor& ring = x.coords[0].ring();
    Trunc acc(static_cast<std::size_t>(N), RingElement::zero(ring));
    for (long i = 1; i <= N; ++i) {
        trunc_mul_binomial(acc, x.at(i), i, 1);
        trunc_mul_binomial(acc, y.at(i), i, 1);
    }
    // the refactorization recovers A_1..A_N
    WittVectorK out = refactor(ring, std::move(acc));
    return out;
}

WittVectorK witt_mul(const WittVectorK& x, const WittVectorK& y) {
    check_shapes(x, y);
    const long N = x.N();
    if (N == 0) return x;
    const RingDescriptor& ring = x.coords[0].ring();
    Trunc acc(static_cast<std::size_t>(N), RingElement::zero(ring));
    for (long i = 1; i <= N; ++i) {
        if (x.at(i).is_zero()) continue;
        for (long j = 1; j <= N; ++j) {
            long g = std::gcd(i, j);
            if (i * j / g > N) continue;
            if (y.at(j).is_zero()) continue;
            trunc_mul_binomial(acc, x.at(i).pow(j / g) * y.at(j).pow(i / g), i * j / g,
                               g);
        }
    }
    return refactor(ring, std::move(acc));
}

namespace {

template <class T, class Pow, class ScaleInt>
std::vector<T> ghost_coords(const std::vector<T>& x, Pow pow_fn, ScaleInt scale_fn) {
    std::vector<T> g;
    if (x.empty()) return g;
    const long N = static_cast<long>(x.size());
    g.reserve(x.size());
    for (long n = 1; n <= N; ++n) {
        T acc = scale_fn(x[0], 0);  // zero of the right shape
        for (long d = 1; d <= n; ++d) {
            if (n % d != 0) continue;
            acc = acc + scale_fn(pow_fn(x[static_cast<std::size_t>(d - 1)], n / d), d);
        }
        g.push_back(acc);
    }
    return g;
}

}  // namespace

GhostVector<RingElement> ghost(const WittVectorK& x) {
    return GhostVector<RingElement>{ghost_coords(
        x.coords, [](const RingElement& v, long e) { return v.pow(e); },
        [](const RingElement& v, long c) {
            return v * RingElement::from_integer(v.ring(), c);
        })};
}

GhostVector<LaurentSeries> ghost(const WittVectorSeries& x) {
    return GhostVector<LaurentSeries>{ghost_coords(
        x.coords, [](const LaurentSeries& v, long e) { return v.pow(e); },
        [](const LaurentSeries& v, long c) {
            return v.scaled(RingElement::from_integer(v.ring(), c));
        })};
}

WittVectorK unghost(const RingDescriptor& ring, const GhostVector<RingElement>& g) {
    if (!ring.rational_base())
        throw DomainError("ghost coordinates only invert over a Q-algebra");
    const long N = g.N();
    std::vector<RingElement> x;
    x.reserve(static_cast<std::size_t>(N));
    for (long n = 1; n <= N; ++n) {
        RingElement acc = g.at(n);
        for (long d = 1; d < n; ++d) {
            if (n % d != 0) continue;
            acc -= x[static_cast<std::size_t>(d - 1)].pow(n / d) *
                   RingElement::from_integer(ring, d);
        }
        x.push_back(acc * RingElement::from_base(ring, mpq_class(1, n)));
    }
    return WittVectorK{std::move(x)};
}

WittVectorK res_w(const LaurentSeries& f, const WittVectorSeries& x) {
    const long N = x.N();
    if (N == 0) return WittVectorK{{}};
    const RingDescriptor F = f.ring();
    if (!F.is_field())
        throw DomainError("the pairing takes series over the base field");
    RingDescriptor k = F.with_eps_order(static_cast<int>(N) + 1);

    LaurentSeries g = LaurentSeries::one(k);
    for (long i = 1; i <= N; ++i) {
        if (x.at(i).ring() != F) throw ShapeMismatch("coordinate over a different field");
        LaurentSeries term =
            x.at(i).lifted(k).scaled(RingElement::eps(k, static_cast<int>(i)));
        g = g * (LaurentSeries::one(k) - term);
    }
    RingElement s = contou_carrere(g, f.lifted(k));
    if (s.coeff(0) != 1)
        throw InternalError("pairing value is not congruent to 1 mod m");
    std::vector<RingElement> c;
    c.reserve(static_cast<std::size_t>(N));
    for (long d = 1; d <= N; ++d)
        c.push_back(RingElement::from_base(F, s.coeff(static_cast<int>(d))));
    return WittVectorK{unipotent_factor(F, std::move(c))};
}

std::vector<long> p_typical_indices(long p, long N) {
    std::vector<long> out;
    for (long q = 1; q <= N; q *= p) {
        out.push_back(q);
        if (q > N / p) break;
    }
    return out;
}

WittVectorK p_typical_projection(const WittVectorK& x, long p) {
    std::vector<RingElement> out;
    for (long q : p_typical_indices(p, x.N())) out.push_back(x.at(q));
    return WittVectorK{std::move(out)};
}

}  // namespace ccsym
