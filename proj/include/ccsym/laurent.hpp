#pragma once

#include <vector>

#include "ccsym/ring.hpp"

namespace ccsym {

// Windows at or beyond this bound mean "exact object" (finite Laurent
// polynomials built by constructors); ordinary results carry finite windows.
inline constexpr long kExactPrec = 1'000'000'000'000'000L;

// An element of k((t)) with exact finite principal part and positive-degree
// knowledge tracked by an exclusive window bound `prec`: coefficients are
// stored densely on [ord, ord+stored), known to be zero on [ord+stored, prec)
// and below ord, and unknown from prec on.  All operations report the honest
// window of their result.  Values are immutable after construction.
class LaurentSeries {
public:
    LaurentSeries(RingDescriptor ring, long ord, std::vector<RingElement> coeffs,
                  long prec);

    static LaurentSeries zero(const RingDescriptor& ring, long prec = kExactPrec);
    static LaurentSeries constant(const RingElement& c, long prec = kExactPrec);
    static LaurentSeries one(const RingDescriptor& ring, long prec = kExactPrec);
    static LaurentSeries monomial(const RingElement& c, long degree,
                                  long prec = kExactPrec);

    const RingDescriptor& ring() const noexcept { return ring_; }
    // lowest stored degree (prec-1 for a series that is zero on its window)
    long ord() const noexcept { return stored_.empty() ? prec_ - 1 : ord_; }
    long prec() const noexcept { return prec_; }
    bool is_zero() const noexcept { return stored_.empty(); }

    // coefficient of t^d for d < prec; throws InsufficientPrecision beyond
    RingElement coeff(long d) const;
    // stored coefficient, valid for ord() <= d <= top_degree() of a nonzero series
    const RingElement& coeff_ref(long d) const {
        return stored_[static_cast<std::size_t>(d - ord_)];
    }
    // highest degree with a nonzero stored coefficient; ord()-1 if zero
    long top_degree() const noexcept {
        return stored_.empty() ? ord() - 1 : ord_ + static_cast<long>(stored_.size()) - 1;
    }

    LaurentSeries restricted(long new_prec) const;  // shrink the window
    LaurentSeries shifted(long s) const;            // multiply by t^s
    LaurentSeries scaled(const RingElement& c) const;
    LaurentSeries operator-() const;

    friend LaurentSeries operator+(const LaurentSeries& f, const LaurentSeries& g);
    friend LaurentSeries operator-(const LaurentSeries& f, const LaurentSeries& g);
    friend LaurentSeries operator*(const LaurentSeries& f, const LaurentSeries& g);

    LaurentSeries inv() const;
    LaurentSeries pow(long exponent) const;  // negative exponents go through inv

    long winding_number() const;  // NotAUnit if no stored coefficient is a unit

    LaurentSeries derivative() const;
    RingElement residue() const;  // coefficient of t^{-1}

    // f(tau) for tau of winding number 1, to the largest provable window
    LaurentSeries substitute(const LaurentSeries& tau) const;

    // decomposition along powers of e: f = sum_j slice_j(t) e^j
    LaurentSeries eps_slice(int j) const;
    static LaurentSeries from_eps_slices(const RingDescriptor& ring,
                                         const std::vector<LaurentSeries>& slices);
    // same coefficients over a taller tower F[e]/(e^n)
    LaurentSeries lifted(const RingDescriptor& target) const;

    // coefficients equal on the window intersection
    bool agrees_with(const LaurentSeries& other) const;

    friend bool operator==(const LaurentSeries& f, const LaurentSeries& g);
    friend bool operator!=(const LaurentSeries& f, const LaurentSeries& g) {
        return !(f == g);
    }

private:
    RingDescriptor ring_;
    long ord_;
    long prec_;
    std::vector<RingElement> stored_;

    void normalize_();
};

}  // namespace ccsym
