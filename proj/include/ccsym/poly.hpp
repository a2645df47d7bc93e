#pragma once

#include <vector>

#include "ccsym/laurent.hpp"
#include "ccsym/ring.hpp"

namespace ccsym {

// Dense polynomial over k in t, ascending coefficients, no trailing zeros.
class Polynomial {
public:
    explicit Polynomial(RingDescriptor ring) : ring_(ring) {}
    Polynomial(RingDescriptor ring, std::vector<RingElement> coeffs);

    static Polynomial constant(const RingElement& c);
    static Polynomial monomial(const RingElement& c, int degree);

    const RingDescriptor& ring() const noexcept { return ring_; }
    bool is_zero() const noexcept { return c_.empty(); }
    // -1 for the zero polynomial
    int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
    RingElement coeff(int i) const;
    RingElement leading() const;

    RingElement eval(const RingElement& x) const;

    Polynomial operator-() const;
    friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    Polynomial scaled(const RingElement& c) const;
    Polynomial pow(int exponent) const;

    // remainder of division by a monic divisor
    Polynomial reduced_mod(const Polynomial& monic) const;

    // p(t + a): recentering used by local expansion at a finite point
    Polynomial shifted_arg(const RingElement& a) const;
    // t^degree * p(1/t): recentering at infinity
    Polynomial reversed() const;

    LaurentSeries as_series(long prec = kExactPrec) const;

    friend bool operator==(const Polynomial& a, const Polynomial& b);
    friend bool operator!=(const Polynomial& a, const Polynomial& b) {
        return !(a == b);
    }

private:
    RingDescriptor ring_;
    std::vector<RingElement> c_;

    void trim_();
};

}  // namespace ccsym
