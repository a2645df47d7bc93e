#pragma once

#include <string>
#include <utility>
#include <vector>

#include "ccsym/laurent.hpp"
#include "ccsym/poly.hpp"
#include "ccsym/ring.hpp"
#include "ccsym/witt.hpp"

namespace ccsym {

class PointOnP1 {
public:
    static PointOnP1 infinity() { return PointOnP1(true, 0); }
    static PointOnP1 finite(const mpq_class& lambda) { return PointOnP1(false, lambda); }

    bool is_infinity() const noexcept { return inf_; }
    const mpq_class& lambda() const { return lambda_; }

    friend bool operator==(const PointOnP1& a, const PointOnP1& b) {
        return a.inf_ == b.inf_ && (a.inf_ || a.lambda_ == b.lambda_);
    }
    friend bool operator!=(const PointOnP1& a, const PointOnP1& b) { return !(a == b); }

private:
    PointOnP1(bool inf, mpq_class lambda) : inf_(inf), lambda_(std::move(lambda)) {}

    bool inf_;
    mpq_class lambda_;
};

bool contains(const std::vector<PointOnP1>& S, const PointOnP1& s);

// An element of R = R_0 (x) k on P^1: polynomial numerator over k and a
// monic denominator over the base field, kept in declared factored form
// prod (t - lambda_i)^{m_i} so pole locations are certified, not searched.
class RationalFunctionOverK {
public:
    RationalFunctionOverK(Polynomial num, std::vector<std::pair<mpq_class, int>> den);

    static RationalFunctionOverK from_poly(Polynomial num) {
        return RationalFunctionOverK(std::move(num), {});
    }

    const RingDescriptor& ring() const noexcept { return num_.ring(); }
    const Polynomial& num() const noexcept { return num_; }
    const std::vector<std::pair<mpq_class, int>>& den() const noexcept { return den_; }

    long den_degree() const;
    long pole_order_bound(const PointOnP1& s) const;

    // reduction mod m has all zeros and poles inside S (trial division by the
    // declared points; anything left over disqualifies)
    bool in_unit_group(const std::vector<PointOnP1>& S, std::string* why = nullptr) const;
    // poles confined to S (membership in R rather than R^x)
    bool poles_within(const std::vector<PointOnP1>& S, std::string* why = nullptr) const;

private:
    Polynomial num_;
    std::vector<std::pair<mpq_class, int>> den_;
};

// Laurent expansion of h in the local parameter at s (t - lambda at a finite
// point, 1/t at infinity), exact to the requested window.
LaurentSeries local_expand(const RationalFunctionOverK& h, const PointOnP1& s,
                           long prec);

struct LocalSymbol {
    PointOnP1 point;
    RingElement value;
};

struct ReciprocityReport {
    std::vector<LocalSymbol> local;
    RingElement product;
};

ReciprocityReport cc_reciprocity_report(const RationalFunctionOverK& f,
                                        const RationalFunctionOverK& g,
                                        const std::vector<PointOnP1>& S);
RingElement verify_cc_reciprocity(const RationalFunctionOverK& f,
                                  const RationalFunctionOverK& g,
                                  const std::vector<PointOnP1>& S);

ReciprocityReport weil_report(const RationalFunctionOverK& f,
                              const RationalFunctionOverK& g,
                              const std::vector<PointOnP1>& S);
RingElement verify_weil(const RationalFunctionOverK& f, const RationalFunctionOverK& g,
                        const std::vector<PointOnP1>& S);

struct ResidueReport {
    struct PerPoint {
        PointOnP1 point;
        RingElement direct;
        RingElement via_symbol;
    };
    std::vector<PerPoint> local;
    RingElement direct_sum;
    bool routes_agree;
};

ResidueReport residue_theorem_report(const RationalFunctionOverK& f,
                                     const RationalFunctionOverK& g,
                                     const std::vector<PointOnP1>& S);
// returns the direct residue sum; throws InternalError if the symbol route
// disagrees with termwise residues anywhere
RingElement verify_residue_theorem(const RationalFunctionOverK& f,
                                   const RationalFunctionOverK& g,
                                   const std::vector<PointOnP1>& S);

struct WittReciprocityReport {
    struct PerPoint {
        PointOnP1 point;
        WittVectorK value;
    };
    std::vector<PerPoint> local;
    WittVectorK sum;
};

WittReciprocityReport witt_reciprocity_report(const RationalFunctionOverK& f,
                                              const std::vector<RationalFunctionOverK>& x,
                                              const std::vector<PointOnP1>& S);
WittVectorK verify_witt_reciprocity(const RationalFunctionOverK& f,
                                    const std::vector<RationalFunctionOverK>& x,
                                    const std::vector<PointOnP1>& S);

}  // namespace ccsym
