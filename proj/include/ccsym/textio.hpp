#pragma once

#include <string>
#include <vector>

#include "ccsym/laurent.hpp"
#include "ccsym/p1.hpp"
#include "ccsym/ring.hpp"
#include "ccsym/witt.hpp"

namespace ccsym {

// Ring descriptors: `Fp:<p>[,eps:<n>]` or `Q[,eps:<n>]`.
RingDescriptor parse_ring(const std::string& text);
std::string to_string(const RingDescriptor& ring);

// Elements of k: polynomials in `e` with rational or residue coefficients,
// e.g. `2+3*e+e^2`, `1/2-e`, `(1+e)*e`.
RingElement parse_element(const std::string& text, const RingDescriptor& ring);
std::string to_string(const RingElement& x);

// Series: sums of `c*t^d` terms with element coefficients and an optional
// window annotation, e.g. `(2+e)*t^-1 + 1 + 3*t^2 @prec=8`.
LaurentSeries parse_series(const std::string& text, const RingDescriptor& ring);
std::string to_string(const LaurentSeries& f);

// Rational functions on P^1: polynomial numerator over k, denominator in
// declared factored form, e.g. `t^2+e*t / (t-0)^1*(t-1)^2`.
RationalFunctionOverK parse_ratfunc(const std::string& text, const RingDescriptor& ring);
std::string to_string(const RationalFunctionOverK& h);

// Points: `inf` or a base-field value; lists are comma-separated.
PointOnP1 parse_point(const std::string& text, const RingDescriptor& ring);
std::vector<PointOnP1> parse_points(const std::string& text, const RingDescriptor& ring);
std::string to_string(const PointOnP1& s);

// Witt vectors: JSON-style arrays of element strings, e.g. `[1,2+e,0]`.
WittVectorK parse_witt_vector(const std::string& text, const RingDescriptor& ring);
std::vector<std::string> witt_vector_strings(const WittVectorK& x);

std::string to_string(const mpq_class& q);

}  // namespace ccsym
