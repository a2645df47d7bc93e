#include "ccsym/textio.hpp"

#include <cctype>
#include <map>

namespace ccsym {

namespace {

class Cursor {
public:
    explicit Cursor(const std::string& s) : s_(s) {}

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])))
            ++pos_;
    }
    std::size_t pos() {
        skip_ws();
        return pos_;
    }
    bool eof() { return pos() >= s_.size(); }
    char peek() {
        skip_ws();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }
    bool try_eat(char c) {
        if (peek() != c || c == '\0') return false;
        ++pos_;
        return true;
    }
    void expect(char c, const std::string& what) {
        if (!try_eat(c)) throw SyntaxError(pos(), what);
    }
    // matches a full identifier, not a prefix of a longer one
    bool try_eat_word(const std::string& w) {
        skip_ws();
        if (s_.compare(pos_, w.size(), w) != 0) return false;
        std::size_t end = pos_ + w.size();
        if (end < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[end])) ||
                                s_[end] == '_'))
            return false;
        pos_ = end;
        return true;
    }

    bool at_digit() { return std::isdigit(static_cast<unsigned char>(peek())) != 0; }

    mpz_class parse_uint(const std::string& what) {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
            ++pos_;
        if (pos_ == start) throw SyntaxError(start, what);
        return mpz_class(s_.substr(start, pos_ - start));
    }

    long parse_long(const std::string& what) {
        bool neg = try_eat('-');
        mpz_class v = parse_uint(what);
        if (!v.fits_slong_p()) throw SyntaxError(pos(), "a smaller integer");
        long r = v.get_si();
        return neg ? -r : r;
    }

    mpq_class parse_rational(const std::string& what) {
        mpz_class num = parse_uint(what);
        // only a digit after '/' makes a fraction; otherwise the slash
        // belongs to the enclosing grammar (rational-function denominators)
        std::size_t mark = pos_;
        if (try_eat('/')) {
            if (!at_digit()) {
                pos_ = mark;
                return mpq_class(num);
            }
            mpz_class den = parse_uint("a denominator");
            if (den == 0) throw SyntaxError(pos(), "a nonzero denominator");
            mpq_class q(num, den);
            q.canonicalize();
            return q;
        }
        return mpq_class(num);
    }

    void expect_end() {
        if (!eof()) throw SyntaxError(pos(), "end of input");
    }

private:
    const std::string& s_;
    std::size_t pos_ = 0;
};

// ---- element expressions --------------------------------------------------

RingElement parse_esum(Cursor& c, const RingDescriptor& ring);

RingElement parse_eatom(Cursor& c, const RingDescriptor& ring) {
    if (c.try_eat('(')) {
        RingElement v = parse_esum(c, ring);
        c.expect(')', "')'");
        return v;
    }
    if (c.try_eat_word("e")) return RingElement::eps(ring);
    if (c.at_digit())
        return RingElement::from_base(ring, c.parse_rational("a number"));
    throw SyntaxError(c.pos(), "a number, 'e' or '('");
}

RingElement parse_efactor(Cursor& c, const RingDescriptor& ring) {
    RingElement v = parse_eatom(c, ring);
    if (c.try_eat('^')) {
        std::size_t at = c.pos();
        long ex = c.parse_long("an exponent");
        if (ex < 0) throw SyntaxError(at, "a nonnegative exponent");
        return v.pow(ex);
    }
    return v;
}

RingElement parse_eterm(Cursor& c, const RingDescriptor& ring) {
    RingElement v = parse_efactor(c, ring);
    while (c.try_eat('*')) v *= parse_efactor(c, ring);
    return v;
}

RingElement parse_esum(Cursor& c, const RingDescriptor& ring) {
    bool neg = false;
    if (!c.try_eat('+')) neg = c.try_eat('-');
    RingElement v = parse_eterm(c, ring);
    if (neg) v = -v;
    for (;;) {
        if (c.try_eat('+'))
            v += parse_eterm(c, ring);
        else if (c.try_eat('-'))
            v -= parse_eterm(c, ring);
        else
            return v;
    }
}

// ---- series / polynomial terms ---------------------------------------------

struct Monomial {
    RingElement value;
    long tdeg;
};

Monomial parse_sterm(Cursor& c, const RingDescriptor& ring, bool allow_t) {
    RingElement value = RingElement::one(ring);
    long tdeg = 0;
    for (;;) {
        if (c.try_eat_word("t")) {
            long ex = 1;
            if (c.try_eat('^')) ex = c.parse_long("an exponent");
            if (!allow_t) throw SyntaxError(c.pos(), "no t in this context");
            tdeg += ex;
        } else if (c.try_eat('(')) {
            RingElement v = parse_esum(c, ring);
            c.expect(')', "')'");
            if (c.try_eat('^')) {
                std::size_t at = c.pos();
                long ex = c.parse_long("an exponent");
                if (ex < 0) throw SyntaxError(at, "a nonnegative exponent");
                v = v.pow(ex);
            }
            value *= v;
        } else if (c.try_eat_word("e")) {
            RingElement v = RingElement::eps(ring);
            if (c.try_eat('^')) {
                std::size_t at = c.pos();
                long ex = c.parse_long("an exponent");
                if (ex < 0) throw SyntaxError(at, "a nonnegative exponent");
                v = v.pow(ex);
            }
            value *= v;
        } else if (c.at_digit()) {
            RingElement v = RingElement::from_base(ring, c.parse_rational("a number"));
            if (c.try_eat('^')) {
                std::size_t at = c.pos();
                long ex = c.parse_long("an exponent");
                if (ex < 0) throw SyntaxError(at, "a nonnegative exponent");
                v = v.pow(ex);
            }
            value *= v;
        } else {
            throw SyntaxError(c.pos(), "a term");
        }
        if (!c.try_eat('*')) return {value, tdeg};
    }
}

std::map<long, RingElement> parse_term_sum(Cursor& c, const RingDescriptor& ring,
                                           bool allow_t) {
    std::map<long, RingElement> sums;
    bool neg = false;
    if (!c.try_eat('+')) neg = c.try_eat('-');
    for (;;) {
        Monomial m = parse_sterm(c, ring, allow_t);
        if (neg) m.value = -m.value;
        auto it = sums.find(m.tdeg);
        if (it == sums.end())
            sums.emplace(m.tdeg, m.value);
        else
            it->second += m.value;
        if (c.try_eat('+'))
            neg = false;
        else if (c.try_eat('-'))
            neg = true;
        else
            return sums;
    }
}

constexpr long kDefaultSeriesPrec = 32;

// ---- printing helpers -------------------------------------------------------

std::string term_string(const std::string& coeff, long deg, const char* var) {
    std::string ts;
    if (deg != 0) {
        ts = var;
        if (deg != 1) ts += "^" + std::to_string(deg);
    }
    bool paren = coeff.find_first_of("+-") != std::string::npos;
    if (ts.empty()) return paren ? "(" + coeff + ")" : coeff;
    if (coeff == "1") return ts;
    std::string cs = paren ? "(" + coeff + ")" : coeff;
    return cs + "*" + ts;
}

}  // namespace

std::string to_string(const mpq_class& q) {
    std::string s = q.get_num().get_str();
    if (q.get_den() != 1) s += "/" + q.get_den().get_str();
    return s;
}

RingDescriptor parse_ring(const std::string& text) {
    Cursor c(text);
    bool rational;
    long p = 0;
    if (c.try_eat_word("Fp")) {
        c.expect(':', "':'");
        mpz_class v = c.parse_uint("a prime");
        if (!v.fits_slong_p()) throw SyntaxError(c.pos(), "a smaller prime");
        p = v.get_si();
        rational = false;
    } else if (c.try_eat_word("Q")) {
        rational = true;
    } else {
        throw SyntaxError(c.pos(), "'Fp:<p>' or 'Q'");
    }
    int n = 1;
    if (c.try_eat(',')) {
        if (!c.try_eat_word("eps")) throw SyntaxError(c.pos(), "'eps'");
        c.expect(':', "':'");
        mpz_class v = c.parse_uint("an eps order");
        if (!v.fits_sint_p()) throw SyntaxError(c.pos(), "a smaller eps order");
        n = static_cast<int>(v.get_si());
    }
    c.expect_end();
    return rational ? RingDescriptor::rationals(n) : RingDescriptor::prime_field(p, n);
}

std::string to_string(const RingDescriptor& ring) {
    std::string s = ring.rational_base() ? "Q" : "Fp:" + std::to_string(ring.modulus());
    if (ring.eps_order() > 1) s += ",eps:" + std::to_string(ring.eps_order());
    return s;
}

RingElement parse_element(const std::string& text, const RingDescriptor& ring) {
    Cursor c(text);
    RingElement v = parse_esum(c, ring);
    c.expect_end();
    return v;
}

std::string to_string(const RingElement& x) {
    std::string out;
    for (int i = 0; i < x.ring().eps_order(); ++i) {
        const mpq_class& q = x.coeff(i);
        if (q == 0) continue;
        bool neg = q < 0;
        mpq_class a = neg ? mpq_class(-q) : q;
        std::string body;
        if (i == 0)
            body = to_string(a);
        else {
            std::string ep = (i == 1) ? "e" : "e^" + std::to_string(i);
            body = (a == 1) ? ep : to_string(a) + "*" + ep;
        }
        if (out.empty())
            out = (neg ? "-" : "") + body;
        else
            out += (neg ? "-" : "+") + body;
    }
    return out.empty() ? "0" : out;
}

LaurentSeries parse_series(const std::string& text, const RingDescriptor& ring) {
    Cursor c(text);
    std::map<long, RingElement> sums = parse_term_sum(c, ring, true);
    long prec = 0;
    bool have_prec = false;
    if (c.try_eat('@')) {
        if (!c.try_eat_word("prec")) throw SyntaxError(c.pos(), "'prec'");
        c.expect('=', "'='");
        prec = c.parse_long("a window bound");
        have_prec = true;
    }
    c.expect_end();

    long top = 0;
    bool any = false;
    for (const auto& [d, v] : sums)
        if (!v.is_zero()) {
            top = d;
            any = true;
        }
    if (!have_prec) prec = std::max(kDefaultSeriesPrec, any ? top + 1 : 1L);

    LaurentSeries out = LaurentSeries::zero(ring, prec);
    for (const auto& [d, v] : sums) {
        if (v.is_zero() || d >= prec) continue;
        out = out + LaurentSeries::monomial(v, d, prec);
    }
    return out;
}

std::string to_string(const LaurentSeries& f) {
    std::string out;
    for (long d = f.ord(); d <= f.top_degree(); ++d) {
        RingElement c = f.coeff(d);
        if (c.is_zero()) continue;
        if (!out.empty()) out += " + ";
        out += term_string(to_string(c), d, "t");
    }
    if (out.empty()) out = "0";
    return out + " @prec=" + std::to_string(f.prec());
}

RationalFunctionOverK parse_ratfunc(const std::string& text,
                                    const RingDescriptor& ring) {
    Cursor c(text);
    std::size_t at = c.pos();
    std::map<long, RingElement> sums = parse_term_sum(c, ring, true);
    for (const auto& [d, v] : sums)
        if (d < 0 && !v.is_zero())
            throw SyntaxError(at, "a polynomial numerator (no negative powers)");
    long top = -1;
    for (const auto& [d, v] : sums)
        if (d >= 0 && !v.is_zero()) top = std::max(top, d);
    std::vector<RingElement> num(static_cast<std::size_t>(top + 1),
                                 RingElement::zero(ring));
    for (const auto& [d, v] : sums)
        if (d >= 0 && !v.is_zero()) num[static_cast<std::size_t>(d)] = v;

    std::vector<std::pair<mpq_class, int>> den;
    if (c.try_eat('/')) {
        do {
            c.expect('(', "'('");
            if (!c.try_eat_word("t")) throw SyntaxError(c.pos(), "'t'");
            bool plus = c.try_eat('+');
            if (!plus) c.expect('-', "'-' or '+'");
            bool vneg = c.try_eat('-');
            mpq_class v = c.parse_rational("a root");
            if (plus != vneg) v = -v;
            c.expect(')', "')'");
            long m = 1;
            if (c.try_eat('^')) {
                std::size_t mat = c.pos();
                m = c.parse_long("a multiplicity");
                if (m < 1) throw SyntaxError(mat, "a positive multiplicity");
            }
            den.emplace_back(v, static_cast<int>(m));
        } while (c.try_eat('*'));
    }
    c.expect_end();
    return RationalFunctionOverK(Polynomial(ring, std::move(num)), std::move(den));
}

std::string to_string(const RationalFunctionOverK& h) {
    std::string out;
    const Polynomial& num = h.num();
    for (int d = 0; d <= num.degree(); ++d) {
        RingElement c = num.coeff(d);
        if (c.is_zero()) continue;
        if (!out.empty()) out += " + ";
        out += term_string(to_string(c), d, "t");
    }
    if (out.empty()) out = "0";
    if (!h.den().empty()) {
        out += " / ";
        bool first = true;
        for (const auto& [root, mult] : h.den()) {
            if (!first) out += "*";
            first = false;
            if (root < 0)
                out += "(t+" + to_string(mpq_class(-root)) + ")";
            else
                out += "(t-" + to_string(root) + ")";
            if (mult != 1) out += "^" + std::to_string(mult);
        }
    }
    return out;
}

PointOnP1 parse_point(const std::string& text, const RingDescriptor& ring) {
    Cursor c(text);
    PointOnP1 s = [&] {
        if (c.try_eat_word("inf")) return PointOnP1::infinity();
        bool neg = c.try_eat('-');
        mpq_class v = c.parse_rational("a point value or 'inf'");
        if (neg) v = -v;
        return PointOnP1::finite(detail::base_reduce(ring.base_field(), v));
    }();
    c.expect_end();
    return s;
}

std::vector<PointOnP1> parse_points(const std::string& text,
                                    const RingDescriptor& ring) {
    std::vector<PointOnP1> out;
    std::size_t start = 0;
    for (;;) {
        std::size_t comma = text.find(',', start);
        std::string piece = text.substr(
            start, comma == std::string::npos ? std::string::npos : comma - start);
        out.push_back(parse_point(piece, ring));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return out;
}

std::string to_string(const PointOnP1& s) {
    return s.is_infinity() ? "inf" : to_string(s.lambda());
}

WittVectorK parse_witt_vector(const std::string& text, const RingDescriptor& ring) {
    Cursor c(text);
    c.expect('[', "'['");
    std::vector<RingElement> coords;
    if (!c.try_eat(']')) {
        do coords.push_back(parse_esum(c, ring));
        while (c.try_eat(','));
        c.expect(']', "']'");
    }
    c.expect_end();
    return WittVectorK{std::move(coords)};
}

std::vector<std::string> witt_vector_strings(const WittVectorK& x) {
    std::vector<std::string> out;
    out.reserve(x.coords.size());
    for (const auto& v : x.coords) out.push_back(to_string(v));
    return out;
}

}  // namespace ccsym
