#include "ccsym/symbol.hpp"

#include <numeric>

#include "ccsym/witt_params.hpp"

namespace ccsym {

namespace {

long max_neg_index(const WittParameters& p) {
    return p.neg.empty() ? 0 : p.neg.rbegin()->first;
}

// prod over i >= 1, j in neg(q) of (1 - pos_i^{j/(i,j)} neg_{-j}^{i/(i,j)})^{(i,j)}.
// Factors with i/(i,j) >= e are 1 because neg values are nilpotent, so the
// i-range [1, e*J] is exhaustive.
RingElement cross_product(const WittParameters& pos_side,
                          const WittParameters& neg_side, long i_bound) {
    RingElement acc = RingElement::one(pos_side.ring);
    const int e = pos_side.ring.nilpotency_index();
    for (const auto& [j, b] : neg_side.neg) {
        for (long i = 1; i <= i_bound; ++i) {
            long g = std::gcd(i, j);
            if (i / g >= e) continue;  // nilpotent power vanishes
            RingElement a = pos_side.pos_at(i);
            if (a.is_zero()) continue;
            RingElement term =
                RingElement::one(pos_side.ring) - a.pow(j / g) * b.pow(i / g);
            acc *= term.pow(g);
        }
    }
    return acc;
}

}  // namespace

RingElement contou_carrere(const LaurentSeries& f, const LaurentSeries& g) {
    if (f.ring() != g.ring()) throw RingMismatch("arguments over different rings");
    const RingDescriptor& ring = f.ring();
    WittParameters pf = witt_factor(f);
    WittParameters pg = witt_factor(g);

    const long e = ring.nilpotency_index();
    const long J = max_neg_index(pg);
    const long I = max_neg_index(pf);
    if (pf.pos_prec() < e * J)
        throw InsufficientPrecision("first argument needs positive tail to index " +
                                    std::to_string(e * J) + ", have " +
                                    std::to_string(pf.pos_prec()));
    if (pg.pos_prec() < e * I)
        throw InsufficientPrecision("second argument needs positive tail to index " +
                                    std::to_string(e * I) + ", have " +
                                    std::to_string(pg.pos_prec()));

    RingElement value = pf.a0.pow(pg.w) * pg.a0.pow(-pf.w);
    if ((pf.w * pg.w) % 2 != 0) value = -value;
    value *= cross_product(pf, pg, e * J);         // numerator: a_i against b_{-j}
    value *= cross_product(pg, pf, e * I).inv();   // denominator: b_j against a_{-i}
    return value;
}

RingElement tame_symbol(const LaurentSeries& f, const LaurentSeries& g) {
    if (f.ring() != g.ring()) throw RingMismatch("arguments over different rings");
    if (!f.ring().is_field())
        throw FieldOnly("tame symbol is defined over a field (eps order 1)");
    long wf = f.winding_number();
    long wg = g.winding_number();
    RingElement value = f.coeff(wf).pow(wg) * g.coeff(wg).pow(-wf);
    if ((wf * wg) % 2 != 0) value = -value;
    return value;
}

RingElement residue_from_symbol(const LaurentSeries& f, const LaurentSeries& g) {
    if (f.ring() != g.ring()) throw RingMismatch("arguments over different rings");
    if (!f.ring().is_field())
        throw FieldOnly("residue extraction starts from series over a field");
    RingDescriptor k3 = f.ring().with_eps_order(3);
    RingElement eps = RingElement::eps(k3);
    LaurentSeries lf = LaurentSeries::one(k3) - f.lifted(k3).scaled(eps);
    LaurentSeries lg = LaurentSeries::one(k3) - g.lifted(k3).scaled(eps);
    RingElement s = contou_carrere(lf, lg);
    if (s.coeff(0) != 1 || s.coeff(1) != 0)
        throw InternalError("symbol of (1-ef, 1-eg) is not of the form 1 + e^2 r");
    return RingElement::from_base(f.ring(), -s.coeff(2));
}

RingElement symbol_exp_log(const LaurentSeries& f, const LaurentSeries& g) {
    if (f.ring() != g.ring()) throw RingMismatch("arguments over different rings");
    const RingDescriptor& ring = f.ring();
    if (!ring.rational_base())
        throw DomainError("exp-log form needs a Q-algebra base");
    LaurentSeries h = f - LaurentSeries::one(ring);
    for (long d = h.ord(); d <= h.top_degree(); ++d)
        if (h.coeff(d).is_unit())
            throw DomainError("first argument must lie in 1 + m((t))");

    const int e = ring.nilpotency_index();
    // log f = -sum_{j<e} (-h)^j / j; terminates because h has nilpotent coeffs
    LaurentSeries logf = LaurentSeries::zero(ring, h.prec());
    LaurentSeries p = h;
    for (int j = 1; j < e && !p.is_zero(); ++j) {
        RingElement c = RingElement::from_base(ring, mpq_class(((j % 2) ? 1 : -1), j));
        logf = logf + p.scaled(c);
        p = p * h;
    }
    LaurentSeries dlogg = g.derivative() * g.inv();
    RingElement r = (logf * dlogg).residue();
    if (r.is_unit()) throw InternalError("residue of log f dlog g not in m");

    RingElement value = RingElement::one(ring);
    RingElement pw = r;
    mpz_class fact = 1;
    for (int j = 1; j < e && !pw.is_zero(); ++j) {
        fact *= j;
        value += pw * RingElement::from_base(ring, mpq_class(mpz_class(1), fact));
        pw *= r;
    }
    return value;
}

}  // namespace ccsym
