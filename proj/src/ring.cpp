#include "ccsym/ring.hpp"

#include <utility>

namespace ccsym {

namespace {

bool is_prime(long p) {
    if (p < 2) return false;
    mpz_class z(p);
    // 0 = definitely composite, 1/2 = prime up to Miller-Rabin error
    return mpz_probab_prime_p(z.get_mpz_t(), 40) != 0;
}

}  // namespace

RingDescriptor RingDescriptor::prime_field(long p, int eps_order) {
    if (!is_prime(p))
        throw NonPrimeModulus("modulus " + std::to_string(p) + " is not prime");
    if (eps_order < 1)
        throw InvalidOrder("eps order must be >= 1, got " + std::to_string(eps_order));
    return RingDescriptor(BaseField::PrimeField, p, eps_order);
}

RingDescriptor RingDescriptor::rationals(int eps_order) {
    if (eps_order < 1)
        throw InvalidOrder("eps order must be >= 1, got " + std::to_string(eps_order));
    return RingDescriptor(BaseField::Rationals, 0, eps_order);
}

RingDescriptor RingDescriptor::with_eps_order(int n) const {
    if (n < 1) throw InvalidOrder("eps order must be >= 1, got " + std::to_string(n));
    return RingDescriptor(base_, p_, n);
}

int m_nilpotency_index(const RingDescriptor& ring) { return ring.nilpotency_index(); }

namespace detail {

mpq_class base_reduce(const RingDescriptor& ring, const mpq_class& v) {
    if (ring.base() == BaseField::Rationals) {
        mpq_class r = v;
        r.canonicalize();
        return r;
    }
    // residue of num/den mod p; den must be invertible
    mpz_class p(ring.modulus());
    mpz_class num = v.get_num() % p;
    if (num < 0) num += p;
    if (v.get_den() == 1) return mpq_class(num);
    mpz_class den = v.get_den() % p;
    mpz_class deninv;
    if (mpz_invert(deninv.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t()) == 0)
        throw DomainError("denominator divisible by " + std::to_string(ring.modulus()));
    mpz_class r = (num * deninv) % p;
    return mpq_class(r);
}

mpq_class base_add(const RingDescriptor& ring, const mpq_class& a, const mpq_class& b) {
    if (ring.base() == BaseField::Rationals) return mpq_class(a + b);
    mpz_class r = (a.get_num() + b.get_num()) % ring.modulus();
    return mpq_class(r);
}

mpq_class base_sub(const RingDescriptor& ring, const mpq_class& a, const mpq_class& b) {
    if (ring.base() == BaseField::Rationals) return mpq_class(a - b);
    mpz_class r = (a.get_num() - b.get_num()) % ring.modulus();
    if (r < 0) r += ring.modulus();
    return mpq_class(r);
}

mpq_class base_mul(const RingDescriptor& ring, const mpq_class& a, const mpq_class& b) {
    if (ring.base() == BaseField::Rationals) return mpq_class(a * b);
    mpz_class r = (a.get_num() * b.get_num()) % ring.modulus();
    return mpq_class(r);
}

mpq_class base_neg(const RingDescriptor& ring, const mpq_class& a) {
    if (ring.base() == BaseField::Rationals) return mpq_class(-a);
    if (a == 0) return a;
    mpz_class r = ring.modulus() - a.get_num();
    return mpq_class(r);
}

mpq_class base_inv(const RingDescriptor& ring, const mpq_class& a) {
    if (a == 0) throw NotAUnit("zero has no inverse");
    if (ring.base() == BaseField::Rationals) return mpq_class(1 / a);
    mpz_class p(ring.modulus());
    mpz_class r;
    if (mpz_invert(r.get_mpz_t(), a.get_num().get_mpz_t(), p.get_mpz_t()) == 0)
        throw NotAUnit("residue not invertible");
    return mpq_class(r);
}

}  // namespace detail

RingElement::RingElement(RingDescriptor ring, std::vector<mpq_class> coeffs)
    : ring_(ring), c_(std::move(coeffs)) {
    c_.resize(static_cast<std::size_t>(ring_.eps_order()));
    reduce_();
}

void RingElement::reduce_() {
    // rational entries stay canonical under GMP arithmetic, so only residues
    // need renormalizing; boundary constructors canonicalize explicitly
    if (ring_.base() == BaseField::Rationals) return;
    for (auto& q : c_) {
        if (q.get_den() == 1 && q.get_num() >= 0 && q.get_num() < ring_.modulus())
            continue;
        q = detail::base_reduce(ring_, q);
    }
}

RingElement RingElement::zero(const RingDescriptor& ring) {
    return RingElement(ring, {});
}

RingElement RingElement::one(const RingDescriptor& ring) {
    return from_integer(ring, 1);
}

RingElement RingElement::from_integer(const RingDescriptor& ring, long value) {
    std::vector<mpq_class> c(1, mpq_class(value));
    return RingElement(ring, std::move(c));
}

RingElement RingElement::from_base(const RingDescriptor& ring, const mpq_class& value) {
    std::vector<mpq_class> c(1, detail::base_reduce(ring, value));
    return RingElement(ring, std::move(c));
}

RingElement RingElement::eps(const RingDescriptor& ring, int power) {
    std::vector<mpq_class> c;
    if (power >= 0 && power < ring.eps_order()) {
        c.resize(static_cast<std::size_t>(power) + 1);
        c.back() = 1;
    }
    return RingElement(ring, std::move(c));
}

const mpq_class& RingElement::coeff(int i) const {
    return c_.at(static_cast<std::size_t>(i));
}

bool RingElement::is_zero() const {
    for (const auto& q : c_)
        if (q != 0) return false;
    return true;
}

bool RingElement::is_unit() const { return c_[0] != 0; }

bool RingElement::in_maximal_ideal() const { return c_[0] == 0; }

int RingElement::m_order() const {
    for (int i = 0; i < ring_.eps_order(); ++i)
        if (c_[static_cast<std::size_t>(i)] != 0) return i;
    return ring_.eps_order();
}

namespace {

void check_same_ring(const RingDescriptor& a, const RingDescriptor& b) {
    if (a != b) throw RingMismatch("operands live in different rings");
}

}  // namespace

RingElement operator+(const RingElement& a, const RingElement& b) {
    check_same_ring(a.ring(), b.ring());
    int n = a.ring().eps_order();
    std::vector<mpq_class> c(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        c[static_cast<std::size_t>(i)] = detail::base_add(a.ring(), a.coeff(i), b.coeff(i));
    return RingElement(a.ring(), std::move(c));
}

RingElement operator-(const RingElement& a, const RingElement& b) {
    check_same_ring(a.ring(), b.ring());
    int n = a.ring().eps_order();
    std::vector<mpq_class> c(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        c[static_cast<std::size_t>(i)] = detail::base_sub(a.ring(), a.coeff(i), b.coeff(i));
    return RingElement(a.ring(), std::move(c));
}

RingElement RingElement::operator-() const {
    int n = ring_.eps_order();
    std::vector<mpq_class> c(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        c[static_cast<std::size_t>(i)] = detail::base_neg(ring_, coeff(i));
    return RingElement(ring_, std::move(c));
}

RingElement operator*(const RingElement& a, const RingElement& b) {
    check_same_ring(a.ring(), b.ring());
    int n = a.ring().eps_order();
    std::vector<mpq_class> c(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        if (a.coeff(i) == 0) continue;
        for (int j = 0; i + j < n; ++j) {
            if (b.coeff(j) == 0) continue;
            c[static_cast<std::size_t>(i + j)] += a.coeff(i) * b.coeff(j);
        }
    }
    return RingElement(a.ring(), std::move(c));
}

RingElement RingElement::inv() const {
    if (!is_unit()) throw NotAUnit("element lies in the maximal ideal");
    int n = ring_.eps_order();
    mpq_class u0inv = detail::base_inv(ring_, c_[0]);
    RingElement scale = RingElement::from_base(ring_, u0inv);
    // x = c0 (1 - h) with h nilpotent; 1/x = (1 + h + ... + h^{n-1}) / c0
    RingElement h = RingElement::one(ring_) - (*this * scale);
    RingElement acc = RingElement::one(ring_);
    RingElement p = h;
    for (int j = 1; j < n && !p.is_zero(); ++j) {
        acc += p;
        p *= h;
    }
    return acc * scale;
}

RingElement RingElement::pow(long exponent) const {
    if (exponent < 0) return inv().pow(-exponent);
    RingElement acc = RingElement::one(ring_);
    RingElement base = *this;
    unsigned long e = static_cast<unsigned long>(exponent);
    while (e > 0) {
        if (e & 1UL) acc *= base;
        base *= base;
        e >>= 1UL;
    }
    return acc;
}

RingElement RingElement::lifted(const RingDescriptor& target) const {
    if (target.base() != ring_.base() || target.modulus() != ring_.modulus())
        throw RingMismatch("lift must preserve the base field");
    std::vector<mpq_class> c(c_.begin(),
                             c_.begin() + std::min(c_.size(), static_cast<std::size_t>(
                                                                  target.eps_order())));
    return RingElement(target, std::move(c));
}

bool operator==(const RingElement& a, const RingElement& b) {
    if (a.ring() != b.ring()) return false;
    for (int i = 0; i < a.ring().eps_order(); ++i)
        if (a.coeff(i) != b.coeff(i)) return false;
    return true;
}

}  // namespace ccsym
