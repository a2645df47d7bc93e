#include <doctest.h>

#include <json.hpp>

#include "ccsym/cli.hpp"

using namespace ccsym;
using json = nlohmann::json;

namespace {

json run_json(std::vector<std::string> args, int expected_code) {
    CliResult r = run_cli(std::move(args));
    REQUIRE(r.exit_code == expected_code);
    return json::parse(r.output);
}

}  // namespace

TEST_CASE("symbol subcommand") {
    json out = run_json({"symbol", "--ring", "Fp:5", "--f", "t", "--g", "t"}, 0);
    CHECK(out["value"] == "4");
    CHECK(out["wf"] == 1);
    CHECK(out["wg"] == 1);

    json oracle = run_json(
        {"symbol", "--ring", "Fp:5", "--f", "t", "--g", "t", "--oracle"}, 0);
    CHECK(oracle["value"] == "4");
    CHECK(oracle["path"] == "oracle");

    json eps = run_json({"symbol", "--ring", "Fp:5,eps:3", "--f",
                         "1-e*t^-1 @prec=12", "--g", "1-e*t @prec=12"},
                        0);
    CHECK(eps["value"] == "1+e^2");
}

TEST_CASE("factor subcommand") {
    json out = run_json(
        {"factor", "--ring", "Fp:3,eps:2", "--f", "t-e @prec=6"}, 0);
    CHECK(out["w"] == 1);
    CHECK(out["a0"] == "1");
    CHECK(out["neg"]["1"] == "e");
}

TEST_CASE("residue subcommand") {
    json out = run_json({"residue", "--ring", "Fp:7", "--f", "t^-1 @prec=10",
                         "--g", "t @prec=10"},
                        0);
    CHECK(out["value"] == "6");
    CHECK(out["direct"] == "6");
    CHECK(out["agrees"] == true);
}

TEST_CASE("witt subcommands") {
    json g = run_json({"witt", "ghost", "--N", "2", "--x", "[3,1]"}, 0);
    CHECK(g["result"] == json::array({"3", "11"}));

    json a = run_json({"witt", "add", "--x", "[1,0]", "--y", "[1,0]"}, 0);
    CHECK(a["result"] == json::array({"2", "-1"}));

    json u = run_json({"witt", "unghost", "--x", "[1,1]"}, 0);
    CHECK(u["result"] == json::array({"1", "0"}));

    json err = run_json({"witt", "add", "--x", "[1,0]"}, 2);
    CHECK(err["error"]["kind"] == "BadParameter");
}

TEST_CASE("p1 subcommands") {
    json w = run_json({"p1", "weil", "--ring", "Fp:7", "--S", "0,1,inf", "--f", "t",
                       "--g", "1-t"},
                      0);
    CHECK(w["law_holds"] == true);
    CHECK(w["product"] == "1");
    CHECK(w["local"].size() == 3);

    json r = run_json({"p1", "residue", "--ring", "Fp:7", "--S", "0,1,inf", "--f",
                       "t", "--g", "1 / (t-0)*(t-1)"},
                      0);
    CHECK(r["law_holds"] == true);
    CHECK(r["sum"] == "0");

    json witt = run_json({"p1", "witt", "--ring", "Fp:2", "--S", "0,1,inf", "--f",
                          "t / (t-1)", "--x", "[1 / (t-0)*(t-1)]", "--N", "4"},
                         0);
    CHECK(witt["law_holds"] == true);
    CHECK(witt["p_typical_indices"] == json::array({1, 2, 4}));
}

TEST_CASE("crosscheck subcommand") {
    json out = run_json({"crosscheck", "--trials", "3"}, 0);
    CHECK(out["ok"] == true);
    CHECK(out["trials"] == 9);
}

TEST_CASE("errors map to structured json and exit code 2") {
    json bad = run_json({"symbol", "--ring", "Fp:5", "--f", "t^", "--g", "t"}, 2);
    CHECK(bad["error"]["kind"] == "SyntaxError");

    json nonunit =
        run_json({"symbol", "--ring", "Fp:5", "--f", "0", "--g", "t"}, 2);
    CHECK(nonunit["error"]["kind"] == "NotAUnit");

    json usage = run_json({"symbol", "--f", "t"}, 2);
    CHECK(usage["error"]["kind"] == "Usage");

    CliResult unknown = run_cli({"frobnicate"});
    CHECK(unknown.exit_code == 2);
}

TEST_CASE("fixed seed output is byte-identical") {
    CliResult a = run_cli({"crosscheck", "--trials", "2", "--seed", "99"});
    CliResult b = run_cli({"crosscheck", "--trials", "2", "--seed", "99"});
    CHECK(a.output == b.output);
}
