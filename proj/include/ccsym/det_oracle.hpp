#pragma once

#include <vector>

#include "ccsym/laurent.hpp"
#include "ccsym/poly.hpp"
#include "ccsym/ring.hpp"

namespace ccsym {

// Monic f = t^n + c_{n-1} t^{n-1} + ... + c_0 with every non-leading
// coefficient in m, so f is congruent to t^n mod m and w(f) = n.
class DistinguishedPoly {
public:
    DistinguishedPoly(RingDescriptor ring, std::vector<RingElement> low);

    const RingDescriptor& ring() const noexcept { return ring_; }
    long degree() const noexcept { return static_cast<long>(low_.size()); }
    const RingElement& low_coeff(int i) const { return low_.at(static_cast<std::size_t>(i)); }
    Polynomial as_poly() const;
    LaurentSeries as_series(long prec = kExactPrec) const;

private:
    RingDescriptor ring_;
    std::vector<RingElement> low_;  // c_0 .. c_{n-1}
};

// f = t^t_power * (product of distinguished binomials) * unit of k[[t]].
struct TduFactorization {
    long t_power = 0;
    std::vector<DistinguishedPoly> dist;
    LaurentSeries unit;
};

class MatrixOverK {
public:
    MatrixOverK(RingDescriptor ring, int n)
        : ring_(ring), n_(n),
          a_(static_cast<std::size_t>(n) * static_cast<std::size_t>(n),
             RingElement::zero(ring)) {}

    const RingDescriptor& ring() const noexcept { return ring_; }
    int dim() const noexcept { return n_; }
    RingElement& at(int i, int j) {
        return a_[static_cast<std::size_t>(i) * static_cast<std::size_t>(n_) +
                  static_cast<std::size_t>(j)];
    }
    const RingElement& at(int i, int j) const {
        return a_[static_cast<std::size_t>(i) * static_cast<std::size_t>(n_) +
                  static_cast<std::size_t>(j)];
    }

private:
    RingDescriptor ring_;
    int n_;
    std::vector<RingElement> a_;
};

TduFactorization factor_tdu(const LaurentSeries& f);

// Matrix of multiplication by g on the k-basis 1, t, ..., t^{n-1} of
// k[[t]]/(f).  Needs g known to degree n*e so the truncation is exact.
MatrixOverK mult_matrix(const LaurentSeries& g, const DistinguishedPoly& f);

RingElement det_over_k(const MatrixOverK& m);

// <f, g> computed without the closed double-product formula: factor both
// sides into t-power, distinguished binomials and a power-series unit, expand
// bimultiplicatively, and evaluate the base pairings by determinants.
RingElement symbol_oracle(const LaurentSeries& f, const LaurentSeries& g);

}  // namespace ccsym
