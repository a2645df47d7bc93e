#pragma once

#include <map>
#include <vector>

#include "ccsym/laurent.hpp"
#include "ccsym/ring.hpp"

namespace ccsym {

// The canonical data of a unit of k((t)):
//   f = t^w * a0 * prod_i (1 - a_{-i} t^{-i}) * prod_i (1 - a_i t^i)
// with a0 a unit, every a_{-i} in m (finitely many), and the positive tail
// known up to index pos_prec.
struct WittParameters {
    RingDescriptor ring;
    long w = 0;
    RingElement a0;
    std::map<long, RingElement> neg;  // i >= 1 -> a_{-i}, nonzero entries only
    std::vector<RingElement> pos;     // pos[i-1] = a_i for i = 1..pos_prec

    long pos_prec() const noexcept { return static_cast<long>(pos.size()); }
    RingElement pos_at(long i) const {  // a_i, zero beyond the stored tail
        return (i >= 1 && i <= pos_prec()) ? pos[static_cast<std::size_t>(i - 1)]
                                           : RingElement::zero(ring);
    }
};

// The unique x_1..x_D with prod_d (1 - x_d u^d) = 1 + sum_d c_d u^d mod u^{D+1},
// extracted greedily from the lowest index up.  c[d-1] holds c_d.
std::vector<RingElement> unipotent_factor(const RingDescriptor& ring,
                                          std::vector<RingElement> c);

WittParameters witt_factor(const LaurentSeries& f);

// Window on which reassembling witt_factor(f) is guaranteed to reproduce f:
// tail indices above pos_prec reach down by the depth of the negative part.
long max_assemble_prec(const WittParameters& p);

// Multiplies the stored presentation back out, exactly, on the window ending
// at out_prec; indices above pos_prec must not be demanded.
LaurentSeries witt_assemble(const WittParameters& p, long out_prec);

}  // namespace ccsym
