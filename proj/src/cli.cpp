#include "ccsym/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include "ccsym/det_oracle.hpp"
#include "ccsym/p1.hpp"
#include "ccsym/suites.hpp"
#include "ccsym/symbol.hpp"
#include "ccsym/textio.hpp"
#include "ccsym/witt.hpp"
#include "ccsym/witt_params.hpp"

namespace ccsym {

namespace {

using json = nlohmann::ordered_json;

json json_of(const WittVectorK& x) {
    json a = json::array();
    for (const auto& s : witt_vector_strings(x)) a.push_back(s);
    return a;
}

// lists of rational functions: `[h1,h2,...]` (the grammar has no commas)
std::vector<std::string> split_list(const std::string& text) {
    std::size_t lo = text.find_first_not_of(" \t");
    std::size_t hi = text.find_last_not_of(" \t");
    if (lo == std::string::npos || text[lo] != '[' || text[hi] != ']')
        throw SyntaxError(0, "'[' ... ']'");
    std::string inner = text.substr(lo + 1, hi - lo - 1);
    std::vector<std::string> out;
    if (inner.find_first_not_of(" \t") == std::string::npos) return out;
    std::size_t start = 0;
    for (;;) {
        std::size_t comma = inner.find(',', start);
        out.push_back(inner.substr(
            start, comma == std::string::npos ? std::string::npos : comma - start));
        if (comma == std::string::npos) return out;
        start = comma + 1;
    }
}

struct SymbolCmd {
    std::string ring, f, g;
    bool oracle = false;
};

struct FactorCmd {
    std::string ring, f;
};

struct ResidueCmd {
    std::string ring, f, g;
};

struct WittCmd {
    std::string ring = "Q";
    long N = 0;
    std::string x, y;
    std::string op;
};

struct P1Cmd {
    std::string ring, S, f, g, x;
    long N = 0;
    std::string law;
};

struct CrosscheckCmd {
    long trials = 200;
    std::uint64_t seed = kDefaultSeed;
};

struct SuiteCmd {
    std::uint64_t seed = kDefaultSeed;
    bool acceptance_only = false;
};

int do_symbol(const SymbolCmd& cmd, json& out) {
    RingDescriptor ring = parse_ring(cmd.ring);
    LaurentSeries f = parse_series(cmd.f, ring);
    LaurentSeries g = parse_series(cmd.g, ring);
    RingElement v = cmd.oracle ? symbol_oracle(f, g) : contou_carrere(f, g);
    out["value"] = to_string(v);
    out["wf"] = f.winding_number();
    out["wg"] = g.winding_number();
    out["path"] = cmd.oracle ? "oracle" : "formula";
    return 0;
}

int do_factor(const FactorCmd& cmd, json& out) {
    RingDescriptor ring = parse_ring(cmd.ring);
    LaurentSeries f = parse_series(cmd.f, ring);
    WittParameters p = witt_factor(f);
    out["w"] = p.w;
    out["a0"] = to_string(p.a0);
    json neg = json::object();
    for (const auto& [i, a] : p.neg) neg[std::to_string(i)] = to_string(a);
    out["neg"] = neg;
    json pos = json::array();
    for (const auto& a : p.pos) pos.push_back(to_string(a));
    out["pos"] = pos;
    out["pos_prec"] = p.pos_prec();
    return 0;
}

int do_residue(const ResidueCmd& cmd, json& out) {
    RingDescriptor ring = parse_ring(cmd.ring);
    LaurentSeries f = parse_series(cmd.f, ring);
    LaurentSeries g = parse_series(cmd.g, ring);
    RingElement via = residue_from_symbol(f, g);
    RingElement direct = (g * f.derivative()).residue();
    out["value"] = to_string(via);
    out["direct"] = to_string(direct);
    bool agree = via == direct;
    out["agrees"] = agree;
    return agree ? 0 : 1;
}

int do_witt(const WittCmd& cmd, json& out) {
    RingDescriptor ring = parse_ring(cmd.ring);
    WittVectorK x = parse_witt_vector(cmd.x, ring);
    if (cmd.N != 0 && cmd.N != x.N())
        throw BadParameter("--N is " + std::to_string(cmd.N) + " but x has " +
                           std::to_string(x.N()) + " coordinates");
    out["N"] = x.N();
    if (cmd.op == "add" || cmd.op == "mul") {
        if (cmd.y.empty()) throw BadParameter("--y is required for " + cmd.op);
        WittVectorK y = parse_witt_vector(cmd.y, ring);
        WittVectorK r = cmd.op == "add" ? witt_add(x, y) : witt_mul(x, y);
        out["result"] = json_of(r);
    } else if (cmd.op == "ghost") {
        GhostVector<RingElement> g = ghost(x);
        json a = json::array();
        for (const auto& v : g.coords) a.push_back(to_string(v));
        out["result"] = a;
    } else {
        out["result"] = json_of(unghost(ring, GhostVector<RingElement>{x.coords}));
    }
    return 0;
}

int do_p1(const P1Cmd& cmd, json& out) {
    RingDescriptor ring = parse_ring(cmd.ring);
    std::vector<PointOnP1> S = parse_points(cmd.S, ring);
    json spts = json::array();
    for (const auto& s : S) spts.push_back(to_string(s));
    out["S"] = spts;

    if (cmd.law == "cc" || cmd.law == "weil") {
        RationalFunctionOverK f = parse_ratfunc(cmd.f, ring);
        RationalFunctionOverK g = parse_ratfunc(cmd.g, ring);
        ReciprocityReport r = cmd.law == "cc" ? cc_reciprocity_report(f, g, S)
                                              : weil_report(f, g, S);
        json local = json::array();
        for (const auto& l : r.local)
            local.push_back({{"point", to_string(l.point)},
                             {"symbol", to_string(l.value)}});
        out["local"] = local;
        out["product"] = to_string(r.product);
        bool holds = r.product == RingElement::one(ring);
        out["law_holds"] = holds;
        return holds ? 0 : 1;
    }
    if (cmd.law == "residue") {
        RationalFunctionOverK f = parse_ratfunc(cmd.f, ring);
        RationalFunctionOverK g = parse_ratfunc(cmd.g, ring);
        ResidueReport r = residue_theorem_report(f, g, S);
        json local = json::array();
        for (const auto& l : r.local)
            local.push_back({{"point", to_string(l.point)},
                             {"direct", to_string(l.direct)},
                             {"via_symbol", to_string(l.via_symbol)}});
        out["local"] = local;
        out["sum"] = to_string(r.direct_sum);
        bool holds = r.routes_agree && r.direct_sum.is_zero();
        out["routes_agree"] = r.routes_agree;
        out["law_holds"] = holds;
        return holds ? 0 : 1;
    }
    // witt
    RationalFunctionOverK f = parse_ratfunc(cmd.f, ring);
    std::vector<RationalFunctionOverK> x;
    for (const auto& piece : split_list(cmd.x)) x.push_back(parse_ratfunc(piece, ring));
    if (cmd.N != 0) {
        while (static_cast<long>(x.size()) < cmd.N)
            x.push_back(RationalFunctionOverK::from_poly(Polynomial(ring)));
        if (static_cast<long>(x.size()) != cmd.N)
            throw BadParameter("more coordinates than --N");
    }
    WittReciprocityReport r = witt_reciprocity_report(f, x, S);
    json local = json::array();
    for (const auto& l : r.local)
        local.push_back({{"point", to_string(l.point)}, {"value", json_of(l.value)}});
    out["local"] = local;
    out["sum"] = json_of(r.sum);
    bool holds = true;
    for (const auto& v : r.sum.coords) holds = holds && v.is_zero();
    out["law_holds"] = holds;
    if (ring.base() == BaseField::PrimeField) {
        json idx = json::array();
        for (long i : p_typical_indices(ring.modulus(), r.sum.N())) idx.push_back(i);
        out["p_typical_indices"] = idx;
        out["p_typical_sum"] = json_of(p_typical_projection(r.sum, ring.modulus()));
    }
    return holds ? 0 : 1;
}

int do_crosscheck(const CrosscheckCmd& cmd, json& out) {
    CrosscheckResult r = run_crosscheck(cmd.trials, cmd.seed);
    out["trials"] = r.trials_run;
    out["ok"] = r.ok;
    if (!r.ok) {
        out["counterexample"] = {{"ring", r.ring},
                                 {"f", r.f},
                                 {"g", r.g},
                                 {"formula", r.formula_value},
                                 {"oracle", r.oracle_value}};
    }
    return r.ok ? 0 : 1;
}

int do_suite(const SuiteCmd& cmd, json& out) {
    std::vector<SuiteResult> results = run_suites(cmd.acceptance_only, cmd.seed);
    out["seed"] = cmd.seed;
    json table = json::array();
    bool all = true;
    for (const auto& r : results) {
        table.push_back({{"name", r.name},
                         {"pass", r.pass},
                         {"trials", r.trials},
                         {"detail", r.detail}});
        all = all && r.pass;
    }
    out["suites"] = table;
    out["all_pass"] = all;
    return all ? 0 : 1;
}

}  // namespace

CliResult run_cli(std::vector<std::string> args) {
    CLI::App app{"exact Contou-Carrere symbols, Witt vectors and reciprocity laws "
                 "over F_p[e]/(e^n) and Q[e]/(e^n)"};
    app.require_subcommand(1);

    SymbolCmd sym;
    auto* c_sym = app.add_subcommand("symbol", "evaluate <f, g> for units of k((t))");
    c_sym->add_option("--ring", sym.ring, "ring descriptor, e.g. Fp:5,eps:3")
        ->required();
    c_sym->add_option("--f", sym.f, "first series")->required();
    c_sym->add_option("--g", sym.g, "second series")->required();
    c_sym->add_flag("--oracle", sym.oracle, "use the determinant route");

    FactorCmd fac;
    auto* c_fac = app.add_subcommand("factor", "unique presentation of a unit");
    c_fac->add_option("--ring", fac.ring)->required();
    c_fac->add_option("--f", fac.f)->required();

    ResidueCmd res;
    auto* c_res = app.add_subcommand(
        "residue", "Res(g df) over a field, via the symbol and directly");
    c_res->add_option("--ring", res.ring, "base field descriptor (eps order 1)")
        ->required();
    c_res->add_option("--f", res.f)->required();
    c_res->add_option("--g", res.g)->required();

    WittCmd witt;
    auto* c_witt = app.add_subcommand("witt", "big Witt vector arithmetic");
    c_witt->require_subcommand(1);
    for (const char* op : {"add", "mul", "ghost", "unghost"}) {
        auto* sub = c_witt->add_subcommand(op);
        sub->add_option("--ring", witt.ring, "coefficient ring (default Q)");
        sub->add_option("--N", witt.N, "vector length");
        sub->add_option("--x", witt.x, "vector, e.g. [1,2+e,0]")->required();
        sub->add_option("--y", witt.y, "second vector (add/mul)");
    }

    P1Cmd p1;
    auto* c_p1 = app.add_subcommand("p1", "reciprocity laws on the projective line");
    c_p1->require_subcommand(1);
    for (const char* law : {"cc", "weil", "residue", "witt"}) {
        auto* sub = c_p1->add_subcommand(law);
        sub->add_option("--ring", p1.ring)->required();
        sub->add_option("--S", p1.S, "points, e.g. 0,1,inf")->required();
        sub->add_option("--f", p1.f, "rational function")->required();
        sub->add_option("--g", p1.g, "rational function");
        sub->add_option("--x", p1.x, "list of rational functions (witt)");
        sub->add_option("--N", p1.N, "Witt length (witt)");
    }

    CrosscheckCmd cross;
    auto* c_cross = app.add_subcommand(
        "crosscheck", "formula vs determinant oracle on random units");
    c_cross->add_option("--trials", cross.trials, "trials per ring");
    c_cross->add_option("--seed", cross.seed, "random seed");

    SuiteCmd suite;
    auto* c_suite = app.add_subcommand("suite", "run the randomized property suites");
    c_suite->add_option("--seed", suite.seed, "random seed");
    c_suite->add_flag("--acceptance-only", suite.acceptance_only,
                      "only the acceptance criteria");

    std::vector<const char*> argv;
    argv.push_back("ccsym");
    for (const auto& a : args) argv.push_back(a.c_str());

    json out;
    try {
        try {
            app.parse(static_cast<int>(argv.size()), argv.data());
        } catch (const CLI::CallForHelp& e) {
            return {0, app.help()};
        } catch (const CLI::ParseError& e) {
            out["error"] = {{"kind", "Usage"}, {"detail", e.what()}};
            return {2, out.dump(2) + "\n"};
        }

        int code = 0;
        if (c_sym->parsed()) code = do_symbol(sym, out);
        else if (c_fac->parsed()) code = do_factor(fac, out);
        else if (c_res->parsed()) code = do_residue(res, out);
        else if (c_witt->parsed()) {
            witt.op = c_witt->get_subcommands().front()->get_name();
            code = do_witt(witt, out);
        } else if (c_p1->parsed()) {
            p1.law = c_p1->get_subcommands().front()->get_name();
            if (p1.law != "witt" && p1.g.empty())
                throw BadParameter("--g is required for p1 " + p1.law);
            if (p1.law == "witt" && p1.x.empty())
                throw BadParameter("--x is required for p1 witt");
            code = do_p1(p1, out);
        } else if (c_cross->parsed()) {
            code = do_crosscheck(cross, out);
        } else if (c_suite->parsed()) {
            code = do_suite(suite, out);
        }
        return {code, out.dump(2) + "\n"};
    } catch (const Error& e) {
        json err;
        err["error"] = {{"kind", e.kind()}, {"detail", e.what()}};
        return {2, err.dump(2) + "\n"};
    }
}

}  // namespace ccsym
