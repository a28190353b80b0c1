/*
   Copyright 2026 The lefschetz authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "lefschetz/cli.hpp"

using namespace lefschetz;

namespace {

struct CliRun {
    int exit_code;
    std::string out;
    std::string err;
};

CliRun cli(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code = run_command(args, out, err);
    return {code, out.str(), err.str()};
}

bool contains(const std::string& hay, const std::string& needle) {
    return hay.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("locus subcommand reproduces the monomial golden example") {
    auto r = cli({"locus", "--monomial-ci", "2", "2", "2"});
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "total ideal (a5, a3, a2)"));
    CHECK(contains(r.out, "codim 3"));
    CHECK(contains(r.out, "expected codim 3"));
}

TEST_CASE("expected-codim prints the classifier value") {
    auto r = cli({"expected-codim", "--ci", "2", "3", "3"});
    CHECK(r.exit_code == 0);
    CHECK(r.out == "3\n");
    CHECK(cli({"expected-codim", "--ci", "2", "2", "6"}).out == "1\n");
    CHECK(cli({"expected-codim", "--ci", "2", "2", "4"}).out == "2\n");
}

TEST_CASE("conic-test reports the verdict and first failing degree") {
    auto bad = cli({"conic-test", "--ideal", "x1^2,x2^2,x3^4", "--conic", "x1*x2"});
    CHECK(bad.exit_code == 0);
    CHECK(contains(bad.out, "non-Lefschetz, failing at i = 1"));
    auto good = cli({"conic-test", "--ideal", "x1^2,x2^2,x3^4", "--conic", "x1*x2 + x3^2"});
    CHECK(good.exit_code == 0);
    CHECK(contains(good.out, "Lefschetz"));
}

TEST_CASE("hilbert subcommand handles both input forms") {
    auto ci = cli({"hilbert", "--ci", "2", "2", "4"});
    CHECK(ci.exit_code == 0);
    CHECK(contains(ci.out, "h = (1, 3, 4, 4, 3, 1)"));
    CHECK(contains(ci.out, "socle degree 5"));
    CHECK(contains(ci.out, "gorenstein: yes"));
    auto ideal = cli({"hilbert", "--ideal", "x1^2, x2^2, x3^4"});
    CHECK(ideal.out == ci.out);
    auto not_gor = cli({"hilbert", "--ideal", "x1^2, x2^2, x3^2, x1*x2"});
    CHECK(contains(not_gor.out, "h = (1, 3, 2)"));
    CHECK(contains(not_gor.out, "gorenstein: no"));
}

TEST_CASE("json report carries the schema and is byte deterministic") {
    std::vector<std::string> args{"locus", "--monomial-ci", "2", "2", "4", "--json"};
    auto r1 = cli(args);
    auto r2 = cli(args);
    REQUIRE(r1.exit_code == 0);
    CHECK(r1.out == r2.out);
    auto j = Json::parse(r1.out);
    CHECK(j["version"] == kVersion);
    CHECK(j["field"] == "F_32003");
    CHECK(j["type"] == Json::array({2, 2, 4}));
    CHECK(j["hf"] == Json::array({1, 3, 4, 4, 3, 1}));
    CHECK(j["e"] == 5);
    CHECK(j["mode"] == "full");
    CHECK(j["codim"] == 1);
    CHECK(j["degree"] == 1);
    CHECK(j["expected_codim"] == 2);
    CHECK(j["seeds"] == Json::array());
    CHECK(j["total_ideal"].size() == 4);
    CHECK(j["ideals"].size() == 4);
    CHECK(j["ideals"]["1"].size() == 4);
}

TEST_CASE("json over the rationals labels the field") {
    auto r = cli({"locus", "--monomial-ci", "2", "2", "2", "--json", "--field", "q"});
    REQUIRE(r.exit_code == 0);
    auto j = Json::parse(r.out);
    CHECK(j["field"] == "Q");
    CHECK(j["codim"] == 3);
}

TEST_CASE("middle mode requires and reports a WLP certificate") {
    auto r = cli({"locus", "--monomial-ci", "2", "2", "4", "--mode", "middle"});
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "mode middle (WLP certified)"));
    CHECK((contains(r.out, "2*a3*a5*a6-a2*a6^2") || contains(r.out, "a3*a5*a6")));
    // Not Gorenstein: the middle-degree reduction must refuse.
    auto refused =
        cli({"locus", "--ideal", "x1^2, x2^2, x3^2, x1*x2", "--mode", "middle"});
    CHECK(refused.exit_code == 1);
    CHECK(contains(refused.err, "error"));
}

TEST_CASE("slicing flag adds the probabilistic codimension") {
    auto r = cli({"locus", "--monomial-ci", "2", "2", "4", "--slicing"});
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "slicing codim 1"));
}

TEST_CASE("random-ci runs are deterministic per seed") {
    std::vector<std::string> args{"locus", "--random-ci", "2", "2", "3", "--seed", "7", "--json"};
    auto r1 = cli(args);
    auto r2 = cli(args);
    REQUIRE(r1.exit_code == 0);
    CHECK(r1.out == r2.out);
    auto j = Json::parse(r1.out);
    CHECK(j["seeds"] == Json::array({7}));
    CHECK(j["codim"] == 1);
    auto other = cli({"locus", "--random-ci", "2", "2", "3", "--seed", "8", "--json"});
    CHECK(other.out != r1.out);
}

TEST_CASE("module presentation file input") {
    std::string path = "cli_module_input.txt";
    {
        std::ofstream f(path);
        f << "# complete intersection (2,2,2) as a cyclic module\n";
        f << "1\n0\n2 2 2\nx1^2\nx2^2\nx3^2\n";
    }
    auto r = cli({"locus", "--module", path});
    std::remove(path.c_str());
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "total ideal (a5, a3, a2)"));
    CHECK(contains(r.out, "codim 3"));
}

TEST_CASE("wlp and slp2 certificates through the CLI") {
    auto w = cli({"wlp", "--monomial-ci", "3", "3", "4", "--trials", "3", "--seed", "5"});
    CHECK(w.exit_code == 0);
    CHECK(contains(w.out, "certified with ell = "));
    auto s = cli({"slp2", "--monomial-ci", "2", "3", "3"});
    CHECK(s.exit_code == 0);
    // Characteristic 2 kills x^2 multiplication certificates; inconclusive.
    auto stuck = cli({"wlp", "--monomial-ci", "2", "2", "2", "--field", "2"});
    CHECK(stuck.exit_code == 1);
    CHECK(contains(stuck.out, "inconclusive"));
}

TEST_CASE("gorenstein subcommand builds the apolar algebra") {
    auto r = cli({"gorenstein", "--socle-degree", "4", "--seed", "1"});
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "h = (1, 3, 6, 3, 1)"));
    auto with_locus =
        cli({"gorenstein", "--socle-degree", "4", "--seed", "1", "--locus", "--json"});
    REQUIRE(with_locus.exit_code == 0);
    auto j = Json::parse(with_locus.out);
    CHECK(j["codim"] == 1);
    CHECK(j["degree"] == 3);
    CHECK(j["seeds"] == Json::array({1}));
    CHECK(j["field"] == "F_32003");
}

TEST_CASE("verify subcommand prints a pass table") {
    auto r = cli({"verify", "--suite", "module"});
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "PASS"));
    CHECK(contains(r.out, "1/1 checks passed"));
}

TEST_CASE("usage errors exit with code 2") {
    CHECK(cli({}).exit_code == 2);
    CHECK(cli({"bogus"}).exit_code == 2);
    CHECK(cli({"locus"}).exit_code == 2);
    CHECK(cli({"locus", "--monomial-ci", "2", "2", "2", "--ideal", "x1^2"}).exit_code == 2);
    CHECK(cli({"locus", "--monomial-ci", "2", "2", "2", "--field", "15"}).exit_code == 2);
    CHECK(cli({"locus", "--monomial-ci", "2", "2", "2", "--mode", "sideways"}).exit_code == 2);
    CHECK(cli({"verify", "--suite", "nope"}).exit_code == 2);
    CHECK(cli({"expected-codim"}).exit_code == 2);
    auto parse = cli({"hilbert", "--ideal", "x1^2, x2^2 + , x3"});
    CHECK(parse.exit_code == 2);
    CHECK(contains(parse.err, "line 1"));
}

TEST_CASE("computational failures exit with code 1") {
    auto r = cli({"locus", "--ideal", "x1^2, x2^2"});
    CHECK(r.exit_code == 1);
    CHECK(contains(r.err, "error"));
}

TEST_CASE("help is available at both levels") {
    auto top = cli({"--help"});
    CHECK(top.exit_code == 0);
    CHECK(contains(top.out, "Subcommands"));
    auto sub = cli({"locus", "--help"});
    CHECK(sub.exit_code == 0);
    CHECK(contains(sub.out, "--monomial-ci"));
}
