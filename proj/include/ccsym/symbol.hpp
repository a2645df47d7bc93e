#pragma once

#include "ccsym/laurent.hpp"
#include "ccsym/ring.hpp"

namespace ccsym {

// The Contou-Carrere symbol <f, g> by its closed double-product formula over
// the Witt parameters of f and g.  Requires both arguments to be units of
// k((t)) with positive tails known far enough to cover the finite products
// (pos_prec(f) >= e * max neg index of g, and symmetrically).
RingElement contou_carrere(const LaurentSeries& f, const LaurentSeries& g);

// Field-case specialization (-1)^{w(f)w(g)} (f^{w(g)} / g^{w(f)})(0),
// evaluated directly from the lowest coefficients.
RingElement tame_symbol(const LaurentSeries& f, const LaurentSeries& g);

// Res_{t=0}(g df) recovered as the e^2 coefficient of <1 - ef, 1 - eg> over
// F[e]/(e^3); f, g are series over the base field F.
RingElement residue_from_symbol(const LaurentSeries& f, const LaurentSeries& g);

// exp(Res(log f * dg/g)) for a Q-algebra base and f in 1 + m((t)); log and
// exp are the finite nilpotent series.
RingElement symbol_exp_log(const LaurentSeries& f, const LaurentSeries& g);

}  // namespace ccsym
