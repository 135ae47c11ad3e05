/*
   Copyright 2026 The Spectral Authors

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

#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cli/command.hpp"
#include "cli/ring_text.hpp"

using namespace spectral;

namespace {

struct Out {
    int code;
    std::string out;
    std::string err;
};

Out run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

} // namespace

TEST(RingText, Grammar) {
    EXPECT_EQ(to_string(cli::parse_ring("Z/12")), "Z/12");
    EXPECT_EQ(to_string(cli::parse_ring("GF(2)[x]/(x^2+x+1)")), "GF(2)[x]/(x^2+x+1)");
    EXPECT_EQ(to_string(cli::parse_ring("GF(3)[x]/(x^2 + 2x + 2)")), "GF(3)[x]/(x^2+2x+2)");
    EXPECT_EQ(to_string(cli::parse_ring("Z/2 x GF(2)[x]/(x^2) x Z/3")), "Z/2 x GF(2)[x]/(x^2) x Z/3");
    for (const char* bad : {"Z/0", "Z/", "Q", "GF(2)[x]/(x^2", "Z/2 x", "Z/2 y Z/3"}) EXPECT_THROW(cli::parse_ring(bad), cli::SyntaxError) << bad;
    EXPECT_EQ(cli::split_list("(0,1),2"), (std::vector<std::string>{"(0,1)", "2"}));
}

TEST(Cli, ClassifyJson) {
    const Out r = run({"classify", "--ring", "Z/12", "--y", "spec", "--ideal", "4", "--json"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["ideal"], "<4>");
    EXPECT_EQ(j["members"], nlohmann::json::array({"0", "4", "8"}));
    for (const char* k : {"semiprime", "hy", "strong_hy", "y_hilbert"}) EXPECT_EQ(j[k], false) << k;
    EXPECT_EQ(j["variants_agree"], true);
}

TEST(Cli, ClosuresGolden) {
    const Out r = run({"closures", "--ring", "Z/12", "--y", "spec", "--ideal", "0"});
    ASSERT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "I    = <0> = {0}\nI_H  = <6> = {0,6}\nI_SH = <6> = {0,6}\nkh_Y = <6> = {0,6}\n");
    const Out j = run({"closures", "--ring", "Z/12", "--ideal", "0", "--json"});
    EXPECT_EQ(j.out, "{\n  \"ring\": \"Z/12\",\n  \"selector\": \"spec\",\n  \"ideal\": \"<0>\",\n  \"I_H\": \"<6>\",\n"
                     "  \"I_SH\": \"<6>\",\n  \"kh_Y\": \"<6>\"\n}\n");
}

TEST(Cli, SpecGolden) {
    const Out r = run({"spec", "--ring", "Z/12"});
    EXPECT_EQ(r.out, "Spec(Z/12) = [<2>, <3>]\nRad = <6> = {0,6}\nJac = <6> = {0,6}\n6 ideals:\n  <0> = {0}\n  <6> = {0,6}\n"
                     "  <4> = {0,4,8}\n  <3> = {0,3,6,9}\n  <2> = {0,2,4,6,8,10}\n  <1> = {0,1,2,3,4,5,6,7,8,9,10,11}\n");
}

TEST(Cli, LatticeAndFiltersGolden) {
    EXPECT_EQ(run({"lattice", "--ring", "Z/6"}).out,
              "H_Y lattice over Y = {<2>,<3>}, 4 elements\n  0: {} = h(<1>)\n  1: {<2>} = h(<2>)\n  2: {<3>} = h(<3>)\n"
              "  3: {<2>,<3>} = h(<0>)\n");
    EXPECT_EQ(run({"filters", "--ring", "Z/6", "--kind", "proper"}).out,
              "3 proper filters\n  [{<2>,<3>}] -> <0>\n  [{<2>}, {<2>,<3>}] [prime] [ultra] -> <2>\n"
              "  [{<3>}, {<2>,<3>}] [prime] [ultra] -> <3>\n");
    EXPECT_EQ(run({"filters", "--ring", "Z/6", "--kind", "odd"}).code, 2);
}

TEST(Cli, HuntGolden) {
    const Out r = run({"hunt", "--theorem", "T5", "--drop", "kY=0", "--ring", "Z/4"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "witness for T5 in Z/4 spec\n    S = {2}\n    interior(h(S)) = {<2>}\n    complement(h(Ann(S))) = {}\n");
    const Out none = run({"hunt", "--theorem", "T5", "--ring", "Z/4", "--json"});
    EXPECT_EQ(none.code, 0);
    EXPECT_EQ(nlohmann::json::parse(none.out)["found"], false);
    EXPECT_EQ(run({"hunt", "--theorem", "T5", "--drop", "nope"}).code, 2);
}

TEST(Cli, DefineRoundTripsThroughTables) {
    const Out d = run({"define", "--ring", "GF(2)[x]/(x^2+x+1)", "--json"});
    ASSERT_EQ(d.code, 0);
    const std::string path = testing::TempDir() + "gf4.json";
    std::ofstream(path) << d.out;
    const Out a = run({"spec", "--ring", "table:" + path, "--json"});
    const Out b = run({"spec", "--ring", "GF(2)[x]/(x^2+x+1)", "--json"});
    ASSERT_EQ(a.code, 0) << a.err;
    auto ja = nlohmann::json::parse(a.out), jb = nlohmann::json::parse(b.out);
    ja.erase("ring");
    jb.erase("ring");
    EXPECT_EQ(ja, jb);
    std::remove(path.c_str());
    EXPECT_EQ(run({"spec", "--ring", "table:/nonexistent.json"}).code, 1);
}

TEST(Cli, Verify) {
    const Out r = run({"verify", "--ring", "Z/6", "--theorem", "T1", "--theorem", "T26"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("0 failures"), std::string::npos);
    const Out f = run({"verify", "--ring", "Z/12", "--theorem", "T29"});
    EXPECT_EQ(f.code, 1);
    const Out j = run({"verify", "--ring", "Z/6", "--theorem", "T1", "--json"});
    EXPECT_EQ(j.code, 0);
    EXPECT_EQ(std::count(j.out.begin(), j.out.end(), '\n'), 2);
}

TEST(Cli, UsageErrors) {
    EXPECT_EQ(run({"classify", "--ring", "Z/0"}).code, 2);
    EXPECT_EQ(run({}).code, 2);
    EXPECT_EQ(run({"frobnicate"}).code, 2);
    EXPECT_EQ(run({"classify", "--ring", "Z/6", "--bogus"}).code, 2);
    EXPECT_EQ(run({"verify", "--corpus", "default", "--ring", "Z/6"}).code, 2);
    EXPECT_EQ(run({"verify", "--corpus", "other"}).code, 2);
    EXPECT_EQ(run({"classify", "--ring", "Z/6", "--ideal", "zz"}).code, 2);
    EXPECT_EQ(run({"classify", "--ring", "Z/6", "--y", "idx:9"}).code, 2);
    EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(Cli, ParseArgs) {
    const auto p = cli::parse_args({"verify", "--corpus", "default", "--json", "out.jsonl"});
    ASSERT_TRUE(p.command.has_value());
    EXPECT_EQ(p.command->name, "verify");
    EXPECT_EQ(p.command->json_path, std::optional<std::string>("out.jsonl"));
    const auto c = cli::parse_args({"classify", "--ring", "Z/12", "--y", "spec", "--ideal", "4"});
    ASSERT_TRUE(c.command.has_value());
    EXPECT_EQ(c.command->ring, "Z/12");
    EXPECT_EQ(c.command->selector, "spec");
    EXPECT_EQ(c.command->ideal, "4");
}

TEST(Cli, CapsFromEnvironment) {
    ::setenv("SPECTRAL_CAPS", "garbage", 1);
    const Out bad = run({"spec", "--ring", "Z/12"});
    ::unsetenv("SPECTRAL_CAPS");
    EXPECT_EQ(bad.code, 2);
    EXPECT_EQ(run({"classify", "--ring", "Z/12", "--ideal", "4"}).code, 0);
    ::setenv("SPECTRAL_CAPS", "elements=8", 1);
    const Out capped = run({"classify", "--ring", "Z/12", "--ideal", "4", "--json"});
    ::unsetenv("SPECTRAL_CAPS");
    EXPECT_EQ(capped.code, 3);
    EXPECT_EQ(nlohmann::json::parse(capped.out)["error"]["kind"], "cap-exceeded");
}
