#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "ccsym/errors.hpp"

namespace ccsym {

enum class BaseField { PrimeField, Rationals };

// Coefficient tower k = F[e]/(e^n) with F = F_p (p prime) or F = Q.
// n == 1 collapses to the bare field; the maximal ideal m is (e), so the
// unit / nilpotent split of k is decided by the e^0 coefficient alone.
class RingDescriptor {
public:
    static RingDescriptor prime_field(long p, int eps_order = 1);
    static RingDescriptor rationals(int eps_order = 1);

    BaseField base() const noexcept { return base_; }
    long modulus() const noexcept { return p_; }  // 0 for a rational base
    int eps_order() const noexcept { return n_; }
    bool is_field() const noexcept { return n_ == 1; }
    bool rational_base() const noexcept { return base_ == BaseField::Rationals; }

    // least e >= 1 with m^e = 0; equals eps_order for F[e]/(e^n)
    int nilpotency_index() const noexcept { return n_; }

    RingDescriptor base_field() const { return RingDescriptor(base_, p_, 1); }
    RingDescriptor with_eps_order(int n) const;

    friend bool operator==(const RingDescriptor& a, const RingDescriptor& b) {
        return a.base_ == b.base_ && a.p_ == b.p_ && a.n_ == b.n_;
    }
    friend bool operator!=(const RingDescriptor& a, const RingDescriptor& b) {
        return !(a == b);
    }

private:
    RingDescriptor(BaseField base, long p, int n) : base_(base), p_(p), n_(n) {}

    BaseField base_;
    long p_;
    int n_;
};

int m_nilpotency_index(const RingDescriptor& ring);

// An element of k, stored as the exact coefficients of 1, e, ..., e^{n-1}.
// F_p residues are canonical representatives in [0, p); rational entries are
// kept in lowest terms.  Values are immutable after construction.
class RingElement {
public:
    RingElement(RingDescriptor ring, std::vector<mpq_class> coeffs);

    static RingElement zero(const RingDescriptor& ring);
    static RingElement one(const RingDescriptor& ring);
    static RingElement from_integer(const RingDescriptor& ring, long value);
    static RingElement from_base(const RingDescriptor& ring, const mpq_class& value);
    static RingElement eps(const RingDescriptor& ring, int power = 1);

    const RingDescriptor& ring() const noexcept { return ring_; }
    const mpq_class& coeff(int i) const;
    const std::vector<mpq_class>& coeffs() const noexcept { return c_; }

    bool is_zero() const;
    bool is_unit() const;
    bool in_maximal_ideal() const;
    // least i with coeff(i) != 0, or eps_order() for the zero element
    int m_order() const;

    RingElement inv() const;
    RingElement pow(long exponent) const;

    // same element over a larger (or equal) tower, or sliced back down
    RingElement lifted(const RingDescriptor& target) const;

    RingElement operator-() const;
    friend RingElement operator+(const RingElement& a, const RingElement& b);
    friend RingElement operator-(const RingElement& a, const RingElement& b);
    friend RingElement operator*(const RingElement& a, const RingElement& b);
    RingElement& operator+=(const RingElement& b) { return *this = *this + b; }
    RingElement& operator-=(const RingElement& b) { return *this = *this - b; }
    RingElement& operator*=(const RingElement& b) { return *this = *this * b; }

    friend bool operator==(const RingElement& a, const RingElement& b);
    friend bool operator!=(const RingElement& a, const RingElement& b) {
        return !(a == b);
    }

private:
    RingDescriptor ring_;
    std::vector<mpq_class> c_;

    void reduce_();
};

namespace detail {
// Arithmetic on base-field values (canonical residue mod p, or reduced
// rationals).  Shared by the parser and the element ops.
mpq_class base_reduce(const RingDescriptor& ring, const mpq_class& v);
mpq_class base_add(const RingDescriptor& ring, const mpq_class& a, const mpq_class& b);
mpq_class base_sub(const RingDescriptor& ring, const mpq_class& a, const mpq_class& b);
mpq_class base_mul(const RingDescriptor& ring, const mpq_class& a, const mpq_class& b);
mpq_class base_neg(const RingDescriptor& ring, const mpq_class& a);
mpq_class base_inv(const RingDescriptor& ring, const mpq_class& a);
}  // namespace detail

}  // namespace ccsym
