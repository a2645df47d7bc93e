#include "ccsym/p1.hpp"

#include <algorithm>

#include "ccsym/symbol.hpp"

namespace ccsym {

bool contains(const std::vector<PointOnP1>& S, const PointOnP1& s) {
    return std::find(S.begin(), S.end(), s) != S.end();
}

RationalFunctionOverK::RationalFunctionOverK(
    Polynomial num, std::vector<std::pair<mpq_class, int>> den)
    : num_(std::move(num)), den_(std::move(den)) {
    RingDescriptor F = num_.ring().base_field();
    for (auto& [root, mult] : den_) {
        if (mult < 1) throw BadParameter("denominator multiplicity must be >= 1");
        root = detail::base_reduce(F, root);
    }
    for (std::size_t i = 0; i < den_.size(); ++i)
        for (std::size_t j = i + 1; j < den_.size(); ++j)
            if (den_[i].first == den_[j].first)
                throw BadParameter("denominator roots must be distinct");
}

long RationalFunctionOverK::den_degree() const {
    long d = 0;
    for (const auto& [root, mult] : den_) d += mult;
    return d;
}

long RationalFunctionOverK::pole_order_bound(const PointOnP1& s) const {
    if (s.is_infinity()) return std::max(0L, static_cast<long>(num_.degree()) - den_degree());
    for (const auto& [root, mult] : den_)
        if (root == s.lambda()) return mult;
    return 0;
}

namespace {

Polynomial mod_m_part(const Polynomial& p) {
    RingDescriptor F = p.ring().base_field();
    std::vector<RingElement> c;
    for (int i = 0; i <= p.degree(); ++i)
        c.push_back(RingElement::from_base(F, p.coeff(i).coeff(0)));
    return Polynomial(F, std::move(c));
}

// divide by (t - lambda) as often as the remainder vanishes
int strip_root(Polynomial& p, const RingElement& lambda) {
    int count = 0;
    while (p.degree() >= 1) {
        // synthetic division
        std::vector<RingElement> q(static_cast<std::size_t>(p.degree()),
                                   RingElement::zero(p.ring()));
        RingElement carry = RingElement::zero(p.ring());
        for (int i = p.degree(); i >= 1; --i) {
            carry = p.coeff(i) + carry * lambda;
            q[static_cast<std::size_t>(i - 1)] = carry;
        }
        RingElement rem = p.coeff(0) + carry * lambda;
        if (!rem.is_zero()) break;
        p = Polynomial(p.ring(), std::move(q));
        ++count;
    }
    return count;
}

}  // namespace

bool RationalFunctionOverK::poles_within(const std::vector<PointOnP1>& S,
                                         std::string* why) const {
    for (const auto& [root, mult] : den_)
        if (!contains(S, PointOnP1::finite(root))) {
            if (why) *why = "denominator root outside the declared point set";
            return false;
        }
    if (static_cast<long>(num_.degree()) > den_degree() &&
        !contains(S, PointOnP1::infinity())) {
        if (why) *why = "pole at infinity but inf not in the point set";
        return false;
    }
    return true;
}

bool RationalFunctionOverK::in_unit_group(const std::vector<PointOnP1>& S,
                                          std::string* why) const {
    if (!poles_within(S, why)) return false;
    Polynomial num0 = mod_m_part(num_);
    if (num0.is_zero()) {
        if (why) *why = "numerator vanishes mod m";
        return false;
    }
    long deg0 = num0.degree();
    for (const auto& s : S) {
        if (s.is_infinity()) continue;
        RingElement lambda = RingElement::from_base(num0.ring(), s.lambda());
        strip_root(num0, lambda);
    }
    if (num0.degree() != 0) {
        if (why) *why = "numerator mod m has zeros outside the declared point set";
        return false;
    }
    if (deg0 != den_degree() && !contains(S, PointOnP1::infinity())) {
        if (why) *why = "zero or pole at infinity but inf not in the point set";
        return false;
    }
    return true;
}

LaurentSeries local_expand(const RationalFunctionOverK& h, const PointOnP1& s,
                           long prec) {
    const RingDescriptor& ring = h.ring();
    long pole = h.pole_order_bound(s);
    if (prec <= -pole)
        throw InsufficientPrecision("window to " + std::to_string(prec) +
                                    " is empty with pole order " + std::to_string(pole));
    if (h.num().is_zero()) return LaurentSeries::zero(ring, prec);

    if (s.is_infinity()) {
        long dn = h.num().degree();
        long dd = h.den_degree();
        Polynomial rnum = h.num().reversed();
        Polynomial rden = Polynomial::constant(RingElement::one(ring));
        for (const auto& [root, mult] : h.den()) {
            // (t - root) = t (1 - root pi) with pi = 1/t
            Polynomial lin(ring, {RingElement::one(ring),
                                  -RingElement::from_base(ring, root)});
            rden = rden * lin.pow(mult);
        }
        long shift = dd - dn;
        LaurentSeries inv_den = rden.as_series(std::max(prec - shift + 1, 1L)).inv();
        return (rnum.as_series() * inv_den).shifted(shift).restricted(prec);
    }

    RingElement lambda = RingElement::from_base(ring, s.lambda());
    Polynomial num_loc = h.num().shifted_arg(lambda);
    long mult_at_s = 0;
    Polynomial den_loc = Polynomial::constant(RingElement::one(ring));
    for (const auto& [root, mult] : h.den()) {
        if (root == s.lambda()) {
            mult_at_s = mult;
            continue;
        }
        // (t - root) = pi + (lambda - root)
        Polynomial lin(ring, {lambda - RingElement::from_base(ring, root),
                              RingElement::one(ring)});
        den_loc = den_loc * lin.pow(mult);
    }
    LaurentSeries inv_den = den_loc.as_series(prec + mult_at_s + 1).inv();
    return (num_loc.as_series() * inv_den).shifted(-mult_at_s).restricted(prec);
}

namespace {

void check_point_set(const std::vector<PointOnP1>& S) {
    if (S.empty()) throw BadParameter("the point set must be nonempty");
    for (std::size_t i = 0; i < S.size(); ++i)
        for (std::size_t j = i + 1; j < S.size(); ++j)
            if (S[i] == S[j]) throw BadParameter("points must be distinct");
}

void check_units(const RationalFunctionOverK& f, const RationalFunctionOverK& g,
                 const std::vector<PointOnP1>& S) {
    std::string why;
    if (!f.in_unit_group(S, &why)) throw NotInUnitGroup("f: " + why);
    if (!g.in_unit_group(S, &why)) throw NotInUnitGroup("g: " + why);
}

// run with per-point precision grown from the nilpotency and pole depths,
// retrying on InsufficientPrecision since honest windows shrink along the way
template <class Fn>
auto with_precision_retry(long base, Fn fn) {
    long slack = 8;
    for (int attempt = 0; attempt < 7; ++attempt) {
        try {
            return fn(base + slack);
        } catch (const InsufficientPrecision&) {
            slack = slack * 2 + 8;
        }
    }
    return fn(base + slack);
}

long point_depth(const RationalFunctionOverK& f, const RationalFunctionOverK& g,
                 const PointOnP1& s) {
    return f.pole_order_bound(s) + g.pole_order_bound(s) + 2;
}

}  // namespace

ReciprocityReport cc_reciprocity_report(const RationalFunctionOverK& f,
                                        const RationalFunctionOverK& g,
                                        const std::vector<PointOnP1>& S) {
    if (f.ring() != g.ring()) throw RingMismatch("functions over different rings");
    check_point_set(S);
    check_units(f, g, S);
    const RingDescriptor& ring = f.ring();
    const long e = ring.nilpotency_index();

    ReciprocityReport out{{}, RingElement::one(ring)};
    for (const auto& s : S) {
        RingElement v = with_precision_retry(
            e * (point_depth(f, g, s) + 1), [&](long prec) {
                return contou_carrere(local_expand(f, s, prec),
                                      local_expand(g, s, prec));
            });
        out.local.push_back({s, v});
        out.product *= v;
    }
    return out;
}

RingElement verify_cc_reciprocity(const RationalFunctionOverK& f,
                                  const RationalFunctionOverK& g,
                                  const std::vector<PointOnP1>& S) {
    return cc_reciprocity_report(f, g, S).product;
}

ReciprocityReport weil_report(const RationalFunctionOverK& f,
                              const RationalFunctionOverK& g,
                              const std::vector<PointOnP1>& S) {
    if (f.ring() != g.ring()) throw RingMismatch("functions over different rings");
    if (!f.ring().is_field())
        throw FieldOnly("Weil reciprocity runs over a field (eps order 1)");
    check_point_set(S);
    check_units(f, g, S);

    ReciprocityReport out{{}, RingElement::one(f.ring())};
    for (const auto& s : S) {
        RingElement v = with_precision_retry(point_depth(f, g, s), [&](long prec) {
            return tame_symbol(local_expand(f, s, prec), local_expand(g, s, prec));
        });
        out.local.push_back({s, v});
        out.product *= v;
    }
    return out;
}

RingElement verify_weil(const RationalFunctionOverK& f, const RationalFunctionOverK& g,
                        const std::vector<PointOnP1>& S) {
    return weil_report(f, g, S).product;
}

ResidueReport residue_theorem_report(const RationalFunctionOverK& f,
                                     const RationalFunctionOverK& g,
                                     const std::vector<PointOnP1>& S) {
    if (f.ring() != g.ring()) throw RingMismatch("functions over different rings");
    if (!f.ring().is_field())
        throw FieldOnly("residue recovery starts from functions over a field");
    check_point_set(S);
    const RingDescriptor& F = f.ring();
    std::string why;
    if (!f.poles_within(S, &why)) throw BadParameter("f: " + why);
    if (!g.poles_within(S, &why)) throw BadParameter("g: " + why);
    if (!contains(S, PointOnP1::infinity())) {
        // dt itself has a pole at infinity; g df must stay regular there
        PointOnP1 inf = PointOnP1::infinity();
        RingElement r_inf =
            with_precision_retry(point_depth(f, g, inf) + 2, [&](long prec) {
                LaurentSeries fi = local_expand(f, inf, prec);
                LaurentSeries gi = local_expand(g, inf, prec);
                return (gi * fi.derivative()).residue();
            });
        if (!r_inf.is_zero())
            throw BadParameter("g df has residue at infinity; include inf in S");
    }

    ResidueReport out{{}, RingElement::zero(F), true};
    for (const auto& s : S) {
        long depth = point_depth(f, g, s);
        RingElement direct = with_precision_retry(depth + 2, [&](long prec) {
            LaurentSeries fs = local_expand(f, s, prec);
            LaurentSeries gs = local_expand(g, s, prec);
            return (gs * fs.derivative()).residue();
        });
        RingElement via = with_precision_retry(3 * (depth + 1), [&](long prec) {
            return residue_from_symbol(local_expand(f, s, prec),
                                       local_expand(g, s, prec));
        });
        out.local.push_back({s, direct, via});
        out.direct_sum += direct;
        if (direct != via) out.routes_agree = false;
    }
    return out;
}

RingElement verify_residue_theorem(const RationalFunctionOverK& f,
                                   const RationalFunctionOverK& g,
                                   const std::vector<PointOnP1>& S) {
    ResidueReport r = residue_theorem_report(f, g, S);
    if (!r.routes_agree)
        throw InternalError("direct residues disagree with the symbol route");
    return r.direct_sum;
}

WittReciprocityReport witt_reciprocity_report(
    const RationalFunctionOverK& f, const std::vector<RationalFunctionOverK>& x,
    const std::vector<PointOnP1>& S) {
    const RingDescriptor& F = f.ring();
    if (!F.is_field()) throw FieldOnly("the pairing takes functions over a field");
    check_point_set(S);
    std::string why;
    if (!f.in_unit_group(S, &why)) throw NotInUnitGroup("f: " + why);
    long N = static_cast<long>(x.size());
    long depth_x = 0;
    for (const auto& xi : x) {
        if (xi.ring() != F) throw RingMismatch("coordinates over a different field");
        if (!xi.poles_within(S, &why)) throw BadParameter("x: " + why);
        for (const auto& s : S) depth_x = std::max(depth_x, xi.pole_order_bound(s));
    }

    WittReciprocityReport out{{}, witt_zero(F, N)};
    for (const auto& s : S) {
        long base = (N + 1) * (f.pole_order_bound(s) + depth_x + 2);
        WittVectorK v = with_precision_retry(base, [&](long prec) {
            LaurentSeries fs = local_expand(f, s, prec);
            std::vector<LaurentSeries> xs;
            xs.reserve(x.size());
            for (const auto& xi : x) xs.push_back(local_expand(xi, s, prec));
            return res_w(fs, WittVectorSeries{std::move(xs)});
        });
        out.sum = witt_add(out.sum, v);
        out.local.push_back({s, std::move(v)});
    }
    return out;
}

WittVectorK verify_witt_reciprocity(const RationalFunctionOverK& f,
                                    const std::vector<RationalFunctionOverK>& x,
                                    const std::vector<PointOnP1>& S) {
    return witt_reciprocity_report(f, x, S).sum;
}

}  // namespace ccsym
