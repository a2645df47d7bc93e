#include "ccsym/witt_params.hpp"

#include <utility>

namespace ccsym {

namespace {

// positive tail length reported when the input carries an exact window
constexpr long kExactTailCap = 64;

}  // namespace

std::vector<RingElement> unipotent_factor(const RingDescriptor&,
                                          std::vector<RingElement> c) {
    const long D = static_cast<long>(c.size());
    std::vector<RingElement> x;
    x.reserve(c.size());
    // c holds the residual (1 + sum_d c_d u^d) / prod_{d' < d} (1 - x_{d'} u^{d'});
    // dividing by (1 - x_d u^d) is the in-place ascending recurrence
    // c_l += x_d c_{l-d} (with c_0 = 1 implicit)
    for (long d = 1; d <= D; ++d) {
        RingElement xd = -c[static_cast<std::size_t>(d - 1)];
        x.push_back(xd);
        if (xd.is_zero()) continue;
        c[static_cast<std::size_t>(d - 1)] += xd;
        for (long l = d + 1; l <= D; ++l) {
            const RingElement& prev = c[static_cast<std::size_t>(l - d - 1)];
            if (!prev.is_zero()) c[static_cast<std::size_t>(l - 1)] += xd * prev;
        }
    }
    return x;
}

namespace {

// principal part (degrees < 0) as an exact finite series
LaurentSeries principal_part(const LaurentSeries& f) {
    if (f.is_zero() || f.ord() >= 0) return LaurentSeries::zero(f.ring());
    std::vector<RingElement> c;
    for (long d = f.ord(); d < 0; ++d) c.push_back(f.coeff(d));
    return LaurentSeries(f.ring(), f.ord(), std::move(c), kExactPrec);
}

// u of winding number 0 with negative support splits uniquely as n * r with
// n in 1 + m[t^{-1}] and r in k[[t]]^x; solved layer by layer in powers of e
// over the base field.
void separate_negative_part(const LaurentSeries& u, LaurentSeries& n_out,
                            LaurentSeries& r_out) {
    const RingDescriptor& ring = u.ring();
    if (u.ord() >= 0) {
        n_out = LaurentSeries::one(ring);
        r_out = u;
        return;
    }
    const int e = ring.nilpotency_index();
    LaurentSeries r0 = u.eps_slice(0);
    if (r0.is_zero() || r0.ord() != 0)
        throw InternalError("winding-0 unit with nonzero order modulo m");
    LaurentSeries ir0 = r0.inv();

    RingDescriptor F = ring.base_field();
    std::vector<LaurentSeries> n_slices, r_slices;
    n_slices.push_back(LaurentSeries::one(F));
    r_slices.push_back(r0);
    for (int j = 1; j < e; ++j) {
        LaurentSeries vj = u.eps_slice(j);
        for (int i = 1; i < j; ++i)
            vj = vj - n_slices[static_cast<std::size_t>(i)] *
                          r_slices[static_cast<std::size_t>(j - i)];
        LaurentSeries qj = vj * ir0;
        if (qj.prec() < 0)
            throw InsufficientPrecision(
                "window too short to split off the principal part (prec " +
                std::to_string(u.prec()) + ")");
        LaurentSeries nj = principal_part(qj);
        n_slices.push_back(nj);
        r_slices.push_back(vj - nj * r0);
    }
    n_out = LaurentSeries::from_eps_slices(ring, n_slices);
    r_out = LaurentSeries::from_eps_slices(ring, r_slices);
}

}  // namespace

WittParameters witt_factor(const LaurentSeries& f) {
    const RingDescriptor& ring = f.ring();
    const long w = f.winding_number();
    LaurentSeries u = f.shifted(-w);
    if (u.prec() < 1)
        throw InsufficientPrecision("factorization needs prec > " + std::to_string(w) +
                                    ", have " + std::to_string(f.prec()));

    LaurentSeries n = LaurentSeries::one(ring);
    LaurentSeries r = u;
    separate_negative_part(u, n, r);

    WittParameters out{ring, w, RingElement::one(ring), {}, {}};

    if (!n.is_zero() && n.ord() < 0) {
        const long D0 = -n.ord();
        const long e = ring.nilpotency_index();
        // stripping lives inside m, so indices beyond D0*(e-1) cannot survive
        const long D = D0 * (e - 1);
        std::vector<RingElement> c(static_cast<std::size_t>(D),
                                   RingElement::zero(ring));
        for (long d = 1; d <= D; ++d)
            if (-d >= n.ord()) c[static_cast<std::size_t>(d - 1)] = n.coeff(-d);
        std::vector<RingElement> x = unipotent_factor(ring, std::move(c));
        for (long d = 1; d <= D; ++d) {
            const RingElement& xd = x[static_cast<std::size_t>(d - 1)];
            if (xd.is_zero()) continue;
            if (xd.is_unit())
                throw InternalError("negative-direction parameter not in m");
            out.neg.emplace(d, xd);
        }
    }

    out.a0 = r.coeff(0);
    if (!out.a0.is_unit())
        throw InternalError("constant term of the power-series part is not a unit");
    LaurentSeries tail = r.scaled(out.a0.inv());
    long P = std::min(tail.prec() - 1, kExactTailCap);
    std::vector<RingElement> c(static_cast<std::size_t>(std::max(P, 0L)),
                               RingElement::zero(ring));
    for (long d = 1; d <= P; ++d) c[static_cast<std::size_t>(d - 1)] = tail.coeff(d);
    out.pos = unipotent_factor(ring, std::move(c));
    return out;
}

namespace {

LaurentSeries neg_and_constant_part(const WittParameters& p) {
    LaurentSeries acc = LaurentSeries::constant(p.a0);
    for (const auto& [i, a] : p.neg)
        acc = acc * (LaurentSeries::one(p.ring) - LaurentSeries::monomial(a, -i));
    return acc;
}

}  // namespace

long max_assemble_prec(const WittParameters& p) {
    return p.w + p.pos_prec() + 1 + neg_and_constant_part(p).ord();
}

LaurentSeries witt_assemble(const WittParameters& p, long out_prec) {
    const RingDescriptor& ring = p.ring;
    if (out_prec - p.w - 1 > p.pos_prec())
        throw InsufficientPrecision(
            "assembly to prec " + std::to_string(out_prec) + " needs tail index " +
            std::to_string(out_prec - p.w - 1) + ", known up to " +
            std::to_string(p.pos_prec()));

    LaurentSeries acc = neg_and_constant_part(p);
    const long neg_ord = acc.ord();
    acc = acc.restricted(out_prec - p.w);
    for (long i = 1; i <= p.pos_prec(); ++i) {
        if (i + neg_ord >= out_prec - p.w) break;
        const RingElement& a = p.pos[static_cast<std::size_t>(i - 1)];
        if (a.is_zero()) continue;
        acc = (acc * (LaurentSeries::one(ring) - LaurentSeries::monomial(a, i)))
                  .restricted(out_prec - p.w);
    }
    return acc.shifted(p.w).restricted(out_prec);
}

}  // namespace ccsym
