#include "ccsym/poly.hpp"

#include <utility>

namespace ccsym {

Polynomial::Polynomial(RingDescriptor ring, std::vector<RingElement> coeffs)
    : ring_(ring), c_(std::move(coeffs)) {
    for (const auto& c : c_)
        if (c.ring() != ring_) throw RingMismatch("coefficient in wrong ring");
    trim_();
}

void Polynomial::trim_() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Polynomial Polynomial::constant(const RingElement& c) {
    return Polynomial(c.ring(), {c});
}

Polynomial Polynomial::monomial(const RingElement& c, int degree) {
    std::vector<RingElement> v(static_cast<std::size_t>(degree) + 1,
                               RingElement::zero(c.ring()));
    v.back() = c;
    return Polynomial(c.ring(), std::move(v));
}

RingElement Polynomial::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size())) return RingElement::zero(ring_);
    return c_[static_cast<std::size_t>(i)];
}

RingElement Polynomial::leading() const {
    if (c_.empty()) return RingElement::zero(ring_);
    return c_.back();
}

RingElement Polynomial::eval(const RingElement& x) const {
    RingElement acc = RingElement::zero(ring_);
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
}

Polynomial Polynomial::operator-() const {
    std::vector<RingElement> v;
    v.reserve(c_.size());
    for (const auto& c : c_) v.push_back(-c);
    return Polynomial(ring_, std::move(v));
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    if (a.ring() != b.ring()) throw RingMismatch("polynomials over different rings");
    std::size_t n = std::max(a.c_.size(), b.c_.size());
    std::vector<RingElement> v;
    v.reserve(n);
    for (std::size_t i = 0; i < n; ++i)
        v.push_back(a.coeff(static_cast<int>(i)) + b.coeff(static_cast<int>(i)));
    return Polynomial(a.ring(), std::move(v));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.ring() != b.ring()) throw RingMismatch("polynomials over different rings");
    if (a.is_zero() || b.is_zero()) return Polynomial(a.ring());
    std::vector<RingElement> v(a.c_.size() + b.c_.size() - 1,
                               RingElement::zero(a.ring()));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
    }
    return Polynomial(a.ring(), std::move(v));
}

Polynomial Polynomial::scaled(const RingElement& c) const {
    std::vector<RingElement> v;
    v.reserve(c_.size());
    for (const auto& x : c_) v.push_back(x * c);
    return Polynomial(ring_, std::move(v));
}

Polynomial Polynomial::pow(int exponent) const {
    Polynomial acc = Polynomial::constant(RingElement::one(ring_));
    for (int i = 0; i < exponent; ++i) acc = acc * *this;
    return acc;
}

Polynomial Polynomial::reduced_mod(const Polynomial& monic) const {
    if (monic.ring() != ring_) throw RingMismatch("divisor over a different ring");
    if (monic.is_zero() || !(monic.leading() == RingElement::one(ring_)))
        throw InternalError("reduction requires a monic divisor");
    int n = monic.degree();
    std::vector<RingElement> r = c_;
    for (int d = static_cast<int>(r.size()) - 1; d >= n; --d) {
        RingElement top = r[static_cast<std::size_t>(d)];
        if (top.is_zero()) continue;
        r[static_cast<std::size_t>(d)] = RingElement::zero(ring_);
        for (int i = 0; i < n; ++i)
            r[static_cast<std::size_t>(d - n + i)] -= top * monic.coeff(i);
    }
    r.resize(static_cast<std::size_t>(n), RingElement::zero(ring_));
    return Polynomial(ring_, std::move(r));
}

Polynomial Polynomial::shifted_arg(const RingElement& a) const {
    // Horner: p(t + a) accumulated from the top coefficient down
    Polynomial acc(ring_);
    Polynomial shift(ring_, {a, RingElement::one(ring_)});
    for (std::size_t i = c_.size(); i-- > 0;)
        acc = acc * shift + Polynomial::constant(c_[i]);
    return acc;
}

Polynomial Polynomial::reversed() const {
    std::vector<RingElement> v(c_.rbegin(), c_.rend());
    return Polynomial(ring_, std::move(v));
}

LaurentSeries Polynomial::as_series(long prec) const {
    std::vector<RingElement> v = c_;
    if (v.empty()) return LaurentSeries::zero(ring_, prec);
    return LaurentSeries(ring_, 0, std::move(v), prec);
}

bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.ring() == b.ring() && a.c_ == b.c_;
}

}  // namespace ccsym
