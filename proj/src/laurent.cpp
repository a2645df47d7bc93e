#include "ccsym/laurent.hpp"

#include <algorithm>
#include <utility>

namespace ccsym {

namespace {

long clamp_prec(long p) { return std::min(p, kExactPrec); }

// Convolution of the stored blocks with a forced output window.  Sound
// whenever the caller has established that the product is exact below
// `out_prec` (the public operator* derives out_prec from the window
// contract; the inversion kernel derives it from the nilpotency budget).
// Accumulates raw base-field products and reduces once per coefficient.
LaurentSeries mul_to_window(const LaurentSeries& f, const LaurentSeries& g,
                            long out_prec) {
    const RingDescriptor& R = f.ring();
    if (f.is_zero() || g.is_zero())
        return LaurentSeries::zero(R, out_prec);
    long lo = f.ord() + g.ord();
    long hi = std::min(out_prec - 1, f.top_degree() + g.top_degree());
    if (hi < lo) return LaurentSeries::zero(R, out_prec);
    const int n = R.eps_order();
    std::vector<mpq_class> acc(static_cast<std::size_t>(hi - lo + 1) *
                               static_cast<std::size_t>(n));
    for (long i = f.ord(); i <= f.top_degree(); ++i) {
        const std::vector<mpq_class>& fi = f.coeff_ref(i).coeffs();
        for (int ei = 0; ei < n; ++ei) {
            if (fi[static_cast<std::size_t>(ei)] == 0) continue;
            const mpq_class& fv = fi[static_cast<std::size_t>(ei)];
            for (long j = g.ord(); j <= g.top_degree() && i + j <= hi; ++j) {
                const std::vector<mpq_class>& gj = g.coeff_ref(j).coeffs();
                std::size_t base =
                    static_cast<std::size_t>(i + j - lo) * static_cast<std::size_t>(n);
                for (int ej = 0; ei + ej < n; ++ej) {
                    if (gj[static_cast<std::size_t>(ej)] == 0) continue;
                    acc[base + static_cast<std::size_t>(ei + ej)] +=
                        fv * gj[static_cast<std::size_t>(ej)];
                }
            }
        }
    }
    std::vector<RingElement> c;
    c.reserve(static_cast<std::size_t>(hi - lo + 1));
    for (long d = lo; d <= hi; ++d) {
        std::size_t base =
            static_cast<std::size_t>(d - lo) * static_cast<std::size_t>(n);
        std::vector<mpq_class> entry(acc.begin() + static_cast<long>(base),
                                     acc.begin() + static_cast<long>(base) + n);
        c.emplace_back(R, std::move(entry));
    }
    return LaurentSeries(R, lo, std::move(c), out_prec);
}

}  // namespace

LaurentSeries::LaurentSeries(RingDescriptor ring, long ord,
                             std::vector<RingElement> coeffs, long prec)
    : ring_(ring), ord_(ord), prec_(clamp_prec(prec)), stored_(std::move(coeffs)) {
    for (const auto& c : stored_)
        if (c.ring() != ring_) throw RingMismatch("series coefficient in wrong ring");
    // drop stored coefficients at or beyond the window
    if (!stored_.empty() && ord_ + static_cast<long>(stored_.size()) > prec_) {
        if (ord_ >= prec_)
            stored_.clear();
        else
            stored_.erase(stored_.begin() + static_cast<long>(prec_ - ord_),
                          stored_.end());
    }
    normalize_();
}

void LaurentSeries::normalize_() {
    std::size_t lead = 0;
    while (lead < stored_.size() && stored_[lead].is_zero()) ++lead;
    if (lead == stored_.size()) {
        stored_.clear();
        return;
    }
    std::size_t tail = stored_.size();
    while (tail > lead && stored_[tail - 1].is_zero()) --tail;
    ord_ += static_cast<long>(lead);
    stored_ = std::vector<RingElement>(stored_.begin() + static_cast<long>(lead),
                                       stored_.begin() + static_cast<long>(tail));
}

LaurentSeries LaurentSeries::zero(const RingDescriptor& ring, long prec) {
    return LaurentSeries(ring, clamp_prec(prec) - 1, {}, prec);
}

LaurentSeries LaurentSeries::constant(const RingElement& c, long prec) {
    return LaurentSeries(c.ring(), 0, {c}, prec);
}

LaurentSeries LaurentSeries::one(const RingDescriptor& ring, long prec) {
    return constant(RingElement::one(ring), prec);
}

LaurentSeries LaurentSeries::monomial(const RingElement& c, long degree, long prec) {
    return LaurentSeries(c.ring(), degree, {c}, prec);
}

RingElement LaurentSeries::coeff(long d) const {
    if (d >= prec_)
        throw InsufficientPrecision("coefficient of t^" + std::to_string(d) +
                                    " outside the window (prec " +
                                    std::to_string(prec_) + ")");
    if (stored_.empty() || d < ord_ ||
        d >= ord_ + static_cast<long>(stored_.size()))
        return RingElement::zero(ring_);
    return stored_[static_cast<std::size_t>(d - ord_)];
}

LaurentSeries LaurentSeries::restricted(long new_prec) const {
    if (new_prec >= prec_) return *this;
    return LaurentSeries(ring_, stored_.empty() ? new_prec - 1 : ord_, stored_,
                         new_prec);
}

LaurentSeries LaurentSeries::shifted(long s) const {
    return LaurentSeries(ring_, ord() + s, stored_, clamp_prec(prec_ + s));
}

LaurentSeries LaurentSeries::scaled(const RingElement& c) const {
    if (c.ring() != ring_) throw RingMismatch("scalar from a different ring");
    std::vector<RingElement> out;
    out.reserve(stored_.size());
    for (const auto& x : stored_) out.push_back(x * c);
    return LaurentSeries(ring_, ord(), std::move(out), prec_);
}

LaurentSeries LaurentSeries::operator-() const {
    std::vector<RingElement> out;
    out.reserve(stored_.size());
    for (const auto& x : stored_) out.push_back(-x);
    return LaurentSeries(ring_, ord(), std::move(out), prec_);
}

LaurentSeries operator+(const LaurentSeries& f, const LaurentSeries& g) {
    if (f.ring() != g.ring()) throw RingMismatch("series live in different rings");
    long prec = std::min(f.prec(), g.prec());
    if (f.is_zero()) return g.restricted(prec);
    if (g.is_zero()) return f.restricted(prec);
    long lo = std::min(f.ord(), g.ord());
    long hi = std::min(prec - 1, std::max(f.top_degree(), g.top_degree()));
    if (hi < lo) return LaurentSeries::zero(f.ring(), prec);
    std::vector<RingElement> c;
    c.reserve(static_cast<std::size_t>(hi - lo + 1));
    for (long d = lo; d <= hi; ++d) c.push_back(f.coeff(d) + g.coeff(d));
    return LaurentSeries(f.ring(), lo, std::move(c), prec);
}

LaurentSeries operator-(const LaurentSeries& f, const LaurentSeries& g) {
    return f + (-g);
}

LaurentSeries operator*(const LaurentSeries& f, const LaurentSeries& g) {
    if (f.ring() != g.ring()) throw RingMismatch("series live in different rings");
    long prec = clamp_prec(std::min(f.ord() + g.prec(), g.ord() + f.prec()));
    return mul_to_window(f, g, prec);
}

long LaurentSeries::winding_number() const {
    for (std::size_t i = 0; i < stored_.size(); ++i)
        if (stored_[i].is_unit()) return ord_ + static_cast<long>(i);
    throw NotAUnit("no stored coefficient is a unit of k");
}

namespace {

// inverse of 1 - h with h supported in positive degrees, by the triangular
// recurrence b_0 = 1, b_d = sum_i h_i b_{d-i}, on the window [0, width)
LaurentSeries invert_one_minus_positive(const LaurentSeries& h, long width) {
    const RingDescriptor& R = h.ring();
    const int n = R.eps_order();
    std::vector<std::vector<mpq_class>> b(
        static_cast<std::size_t>(width),
        std::vector<mpq_class>(static_cast<std::size_t>(n)));
    b[0][0] = 1;
    for (long d = 1; d < width; ++d) {
        long itop = std::min(d, h.is_zero() ? 0 : h.top_degree());
        for (long i = 1; i <= itop; ++i) {
            if (i < h.ord()) continue;
            const std::vector<mpq_class>& hi = h.coeff_ref(i).coeffs();
            const std::vector<mpq_class>& prev = b[static_cast<std::size_t>(d - i)];
            for (int ei = 0; ei < n; ++ei) {
                if (hi[static_cast<std::size_t>(ei)] == 0) continue;
                for (int ej = 0; ei + ej < n; ++ej) {
                    if (prev[static_cast<std::size_t>(ej)] == 0) continue;
                    b[static_cast<std::size_t>(d)][static_cast<std::size_t>(ei + ej)] +=
                        hi[static_cast<std::size_t>(ei)] *
                        prev[static_cast<std::size_t>(ej)];
                }
            }
        }
        if (R.base() == BaseField::PrimeField)
            for (auto& q : b[static_cast<std::size_t>(d)])
                q = detail::base_reduce(R, q);
    }
    std::vector<RingElement> c;
    c.reserve(static_cast<std::size_t>(width));
    for (auto& row : b) c.emplace_back(R, std::move(row));
    return LaurentSeries(R, 0, std::move(c), width);
}

}  // namespace

LaurentSeries LaurentSeries::inv() const {
    long v = winding_number();
    RingElement av = coeff(v);
    RingElement avinv = av.inv();
    const long e = ring_.nilpotency_index();
    const long L = v - ord();  // depth of the nilpotent principal part of f/(a_v t^v)

    LaurentSeries u = shifted(-v).scaled(avinv);
    long uprec = u.prec();
    LaurentSeries h = LaurentSeries::one(ring_, uprec) - u;
    if (uprec >= kExactPrec / 2 && !h.is_zero()) {
        // exact non-monomial input: pick a finite working window
        uprec = (e - 1) * (L + 1) + 64;
        h = h.restricted(uprec);
    }
    long out_u_prec = uprec - (e - 1) * L;
    if (out_u_prec < 1)
        throw InsufficientPrecision("inversion needs prec > " +
                                    std::to_string(v + (e - 1) * L) + ", have " +
                                    std::to_string(prec_));

    if (L == 0)
        return invert_one_minus_positive(h, out_u_prec).shifted(-v).scaled(avinv);

    // sum of h^j; negative-degree terms die by nilpotency, positive ones
    // leave the window, so the loop is finite
    LaurentSeries acc = LaurentSeries::one(ring_, uprec);
    LaurentSeries p = h;
    long guard = uprec + (e - 1) * (L + 1) + 2;
    long steps = 0;
    while (!p.is_zero()) {
        acc = acc + p;
        p = mul_to_window(p, h, uprec);
        if (++steps > guard)
            throw InternalError("geometric inversion failed to terminate");
    }
    return acc.restricted(out_u_prec).shifted(-v).scaled(avinv);
}

LaurentSeries LaurentSeries::pow(long exponent) const {
    if (exponent < 0) return inv().pow(-exponent);
    LaurentSeries acc = LaurentSeries::one(ring_);
    LaurentSeries base = *this;
    unsigned long e = static_cast<unsigned long>(exponent);
    while (e > 0) {
        if (e & 1UL) acc = acc * base;
        if (e >>= 1UL) base = base * base;
    }
    return acc;
}

LaurentSeries LaurentSeries::derivative() const {
    std::vector<RingElement> out;
    out.reserve(stored_.size());
    for (std::size_t i = 0; i < stored_.size(); ++i) {
        long d = ord_ + static_cast<long>(i);
        out.push_back(stored_[i] * RingElement::from_integer(ring_, d));
    }
    return LaurentSeries(ring_, ord() - 1, std::move(out), clamp_prec(prec_ - 1));
}

RingElement LaurentSeries::residue() const {
    if (-1 >= prec_)
        throw InsufficientPrecision("window ends at " + std::to_string(prec_) +
                                    ", coefficient of t^-1 unknown");
    return coeff(-1);
}

LaurentSeries LaurentSeries::substitute(const LaurentSeries& tau) const {
    if (tau.ring() != ring_) throw RingMismatch("substitution in a different ring");
    if (tau.winding_number() != 1)
        throw BadParameter("substitution needs winding number 1, got " +
                           std::to_string(tau.winding_number()));
    const long e = ring_.nilpotency_index();
    const long o = tau.ord();
    // terms of f beyond its window can contribute from this degree on
    long tail_bound = clamp_prec(prec_ >= kExactPrec / 2
                                     ? kExactPrec
                                     : prec_ - (e - 1) * (1 - o));
    if (is_zero()) return LaurentSeries::zero(ring_, tail_bound);

    // Powers of tau are iterated on the budget-free window prec + (d-1) w and
    // each term is restricted by the total nilpotency budget, exactly as in
    // inversion: at most e-1 factors can sit below the winding degree.
    LaurentSeries sum = LaurentSeries::zero(ring_, kExactPrec);
    if (top_degree() >= 0) {
        const long budget = (e - 1) * (1 - o);
        LaurentSeries pw = LaurentSeries::one(ring_);
        for (long d = 0; d <= top_degree(); ++d) {
            if (d > 0) pw = mul_to_window(pw, tau, tau.prec() + (d - 1));
            RingElement c = coeff(d);
            if (c.is_zero()) continue;
            LaurentSeries term = pw.scaled(c);
            if (d > 0) term = term.restricted(tau.prec() + (d - 1) - budget);
            sum = sum + term;
        }
    }
    if (ord() < 0) {
        LaurentSeries iota = tau.inv();
        const long budget = (e - 1) * (-1 - iota.ord());
        LaurentSeries pw = LaurentSeries::one(ring_);
        for (long d = 1; d <= -ord(); ++d) {
            pw = mul_to_window(pw, iota, iota.prec() - (d - 1));
            RingElement c = coeff(-d);
            if (c.is_zero()) continue;
            sum = sum + pw.scaled(c).restricted(iota.prec() - (d - 1) - budget);
        }
    }
    long out_prec = std::min(sum.prec(), tail_bound);
    if (out_prec <= (sum.is_zero() ? 0 : sum.ord()))
        throw InsufficientPrecision("substitution result window is empty");
    return sum.restricted(out_prec);
}

LaurentSeries LaurentSeries::eps_slice(int j) const {
    RingDescriptor F = ring_.base_field();
    std::vector<RingElement> out;
    out.reserve(stored_.size());
    for (const auto& x : stored_)
        out.push_back(RingElement::from_base(F, x.coeff(j)));
    return LaurentSeries(F, ord(), std::move(out), prec_);
}

LaurentSeries LaurentSeries::from_eps_slices(const RingDescriptor& ring,
                                             const std::vector<LaurentSeries>& slices) {
    LaurentSeries acc = LaurentSeries::zero(ring, kExactPrec);
    for (std::size_t j = 0; j < slices.size(); ++j)
        acc = acc + slices[j].lifted(ring).scaled(
                        RingElement::eps(ring, static_cast<int>(j)));
    return acc;
}

LaurentSeries LaurentSeries::lifted(const RingDescriptor& target) const {
    std::vector<RingElement> out;
    out.reserve(stored_.size());
    for (const auto& x : stored_) out.push_back(x.lifted(target));
    return LaurentSeries(target, ord(), std::move(out), prec_);
}

bool LaurentSeries::agrees_with(const LaurentSeries& other) const {
    if (other.ring() != ring_) return false;
    long lo = std::min(ord(), other.ord());
    long hi = std::min(prec_, other.prec()) - 1;
    hi = std::min(hi, std::max(top_degree(), other.top_degree()));
    for (long d = lo; d <= hi; ++d)
        if (coeff(d) != other.coeff(d)) return false;
    return true;
}

bool operator==(const LaurentSeries& f, const LaurentSeries& g) {
    if (f.ring() != g.ring() || f.prec() != g.prec()) return false;
    if (f.is_zero() != g.is_zero()) return false;
    if (f.is_zero()) return true;
    if (f.ord() != g.ord() || f.top_degree() != g.top_degree()) return false;
    for (long d = f.ord(); d <= f.top_degree(); ++d)
        if (f.coeff(d) != g.coeff(d)) return false;
    return true;
}

}  // namespace ccsym
