#include "ccsym/det_oracle.hpp"

#include <utility>

#include "ccsym/witt_params.hpp"

namespace ccsym {

DistinguishedPoly::DistinguishedPoly(RingDescriptor ring, std::vector<RingElement> low)
    : ring_(ring), low_(std::move(low)) {
    if (low_.empty())
        throw BadParameter("distinguished polynomial must have positive degree");
    for (const auto& c : low_) {
        if (c.ring() != ring_) throw RingMismatch("coefficient in wrong ring");
        if (c.is_unit())
            throw BadParameter("non-leading coefficient of a distinguished polynomial "
                               "must lie in m");
    }
}

Polynomial DistinguishedPoly::as_poly() const {
    std::vector<RingElement> c = low_;
    c.push_back(RingElement::one(ring_));
    return Polynomial(ring_, std::move(c));
}

LaurentSeries DistinguishedPoly::as_series(long prec) const {
    return as_poly().as_series(prec);
}

TduFactorization factor_tdu(const LaurentSeries& f) {
    WittParameters p = witt_factor(f);
    TduFactorization out{p.w, {}, LaurentSeries::one(p.ring)};
    for (const auto& [i, a] : p.neg) {
        // (1 - a t^{-i}) = t^{-i} (t^i - a)
        std::vector<RingElement> low(static_cast<std::size_t>(i),
                                     RingElement::zero(p.ring));
        low[0] = -a;
        out.dist.emplace_back(p.ring, std::move(low));
        out.t_power -= i;
    }
    WittParameters unit_part{p.ring, 0, p.a0, {}, p.pos};
    out.unit = witt_assemble(unit_part, p.pos_prec() + 1);
    return out;
}

MatrixOverK mult_matrix(const LaurentSeries& g, const DistinguishedPoly& f) {
    if (g.ring() != f.ring()) throw RingMismatch("arguments over different rings");
    if (!g.is_zero() && g.ord() < 0)
        throw BadParameter("multiplication matrix needs g in k[[t]]");
    const RingDescriptor& ring = g.ring();
    const long n = f.degree();
    const long e = ring.nilpotency_index();
    if (g.prec() < n * e)
        throw InsufficientPrecision("matrix of multiplication needs g known to degree " +
                                    std::to_string(n * e) + ", have prec " +
                                    std::to_string(g.prec()));

    // t^{n e} = 0 in k[[t]]/(f), so the truncation of g at n e is exact
    std::vector<RingElement> gc;
    gc.reserve(static_cast<std::size_t>(n * e));
    for (long d = 0; d < n * e; ++d) gc.push_back(g.coeff(d));
    Polynomial fp = f.as_poly();
    Polynomial col = Polynomial(ring, std::move(gc)).reduced_mod(fp);

    MatrixOverK m(ring, static_cast<int>(n));
    for (int j = 0; j < n; ++j) {
        for (int i = 0; i < n; ++i) m.at(i, j) = col.coeff(i);
        if (j + 1 < n)
            col = (Polynomial::monomial(RingElement::one(ring), 1) * col)
                      .reduced_mod(fp);
    }
    return m;
}

namespace {

MatrixOverK minor_matrix(const MatrixOverK& m, int drop_row) {
    int n = m.dim();
    MatrixOverK out(m.ring(), n - 1);
    for (int i = 0, oi = 0; i < n; ++i) {
        if (i == drop_row) continue;
        for (int j = 1; j < n; ++j) out.at(oi, j - 1) = m.at(i, j);
        ++oi;
    }
    return out;
}

}  // namespace

RingElement det_over_k(const MatrixOverK& m) {
    const RingDescriptor& ring = m.ring();
    int n = m.dim();
    if (n == 0) return RingElement::one(ring);
    if (n == 1) return m.at(0, 0);

    MatrixOverK a = m;
    RingElement det = RingElement::one(ring);
    for (int c = 0; c < n; ++c) {
        int pivot = -1;
        for (int r = c; r < n; ++r)
            if (a.at(r, c).is_unit()) {
                pivot = r;
                break;
            }
        if (pivot < 0) {
            // no unit pivot in this column: expand the remaining minor by
            // cofactors (its entries in column c all sit in m)
            MatrixOverK rest(ring, n - c);
            for (int i = c; i < n; ++i)
                for (int j = c; j < n; ++j) rest.at(i - c, j - c) = a.at(i, j);
            RingElement sub = RingElement::zero(ring);
            for (int r = 0; r < rest.dim(); ++r) {
                if (rest.at(r, 0).is_zero()) continue;
                RingElement term = rest.at(r, 0) * det_over_k(minor_matrix(rest, r));
                sub = (r % 2 == 0) ? sub + term : sub - term;
            }
            return det * sub;
        }
        if (pivot != c) {
            for (int j = c; j < n; ++j) std::swap(a.at(c, j), a.at(pivot, j));
            det = -det;
        }
        RingElement pv = a.at(c, c);
        det *= pv;
        RingElement pvinv = pv.inv();
        for (int r = c + 1; r < n; ++r) {
            RingElement factor = a.at(r, c) * pvinv;
            if (factor.is_zero()) continue;
            for (int j = c; j < n; ++j) a.at(r, j) -= factor * a.at(c, j);
        }
    }
    return det;
}

RingElement symbol_oracle(const LaurentSeries& f, const LaurentSeries& g) {
    if (f.ring() != g.ring()) throw RingMismatch("arguments over different rings");
    const RingDescriptor& ring = f.ring();
    TduFactorization tf = factor_tdu(f);
    TduFactorization tg = factor_tdu(g);

    long deg_f = 0, deg_g = 0;
    for (const auto& d : tf.dist) deg_f += d.degree();
    for (const auto& d : tg.dist) deg_g += d.degree();

    // every pairing against a power of t or between distinguished polynomials
    // contributes only a sign
    long sign_exp = tf.t_power * tg.t_power + tf.t_power * deg_g +
                    tg.t_power * deg_f + deg_f * deg_g;

    RingElement value = RingElement::one(ring);
    if (sign_exp % 2 != 0) value = -value;
    value *= tg.unit.coeff(0).pow(-tf.t_power);
    value *= tf.unit.coeff(0).pow(tg.t_power);
    for (const auto& d : tf.dist) value *= det_over_k(mult_matrix(tg.unit, d)).inv();
    for (const auto& d : tg.dist) value *= det_over_k(mult_matrix(tf.unit, d));
    return value;
}

}  // namespace ccsym
