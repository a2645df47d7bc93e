#pragma once

#include <vector>

#include "ccsym/laurent.hpp"
#include "ccsym/ring.hpp"

namespace ccsym {

// An element of W_{<=N}(A) as live coordinates x_1..x_N.  The coefficient
// ring is k for the ring laws and F((t)) on the pairing side.
template <class T>
struct WittVector {
    std::vector<T> coords;

    long N() const noexcept { return static_cast<long>(coords.size()); }
    const T& at(long i) const { return coords.at(static_cast<std::size_t>(i - 1)); }
};

template <class T>
struct GhostVector {
    std::vector<T> coords;

    long N() const noexcept { return static_cast<long>(coords.size()); }
    const T& at(long i) const { return coords.at(static_cast<std::size_t>(i - 1)); }
};

using WittVectorK = WittVector<RingElement>;
using WittVectorSeries = WittVector<LaurentSeries>;

// Ring laws via the defining identity: multiply the truncated products
// prod (1 - x_i u^i)(1 - y_i u^i) in A[u]/(u^{N+1}) and refactor.
WittVectorK witt_add(const WittVectorK& x, const WittVectorK& y);
WittVectorK witt_mul(const WittVectorK& x, const WittVectorK& y);
WittVectorK witt_zero(const RingDescriptor& ring, long N);
WittVectorK witt_one(const RingDescriptor& ring, long N);

// ghost_n = sum_{d|n} d x_d^{n/d}
GhostVector<RingElement> ghost(const WittVectorK& x);
GhostVector<LaurentSeries> ghost(const WittVectorSeries& x);

// triangular inversion x_n = (g_n - sum_{d|n, d<n} d x_d^{n/d}) / n;
// Q-algebra coefficients only
WittVectorK unghost(const RingDescriptor& ring, const GhostVector<RingElement>& g);

// The W_{<=N}(F)-valued pairing of a unit f of F((t)) with x in
// W_{<=N}(F((t))): read the Contou-Carrere symbol over k = F[e]/(e^{N+1})
// applied to (prod (1 - x_i e^i), f) back off in Witt coordinates.
WittVectorK res_w(const LaurentSeries& f, const WittVectorSeries& x);

// indices {1, p, p^2, ...} <= N, for reporting the p-typical projection
std::vector<long> p_typical_indices(long p, long N);
WittVectorK p_typical_projection(const WittVectorK& x, long p);

}  // namespace ccsym
