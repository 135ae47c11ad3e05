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

#include <json.hpp>

#include "spectral/ideal_classes.hpp"
#include "spectral/theorems.hpp"

using namespace spectral;

namespace {

Case make(RingSpec r, const std::string& sel = "spec") { return Case{std::move(r), parse_selector(sel)}; }

std::string value(const Witness& w, const std::string& name) {
    for (const auto& [k, v] : w)
        if (k == name) return v;
    return "<missing " + name + ">";
}

} // namespace

TEST(Registry, HasAllIdsInOrder) {
    const auto& reg = registry();
    ASSERT_EQ(reg.size(), 35U);
    for (std::size_t i = 0; i < reg.size(); ++i) {
        EXPECT_EQ(reg[i].id, "T" + std::to_string(i + 1));
        EXPECT_FALSE(reg[i].title.empty());
        EXPECT_FALSE(reg[i].shape.empty());
    }
    EXPECT_EQ(claim_info("T5").hypotheses, std::vector<std::string>{"kY=0"});
    EXPECT_THROW(claim_info("T36"), Error);
}

TEST(RunCheck, Examples) {
    EXPECT_EQ(run_check(make(RingSpec::modular(12)), "T11").status, Status::Pass);
    const auto t5 = run_check(make(RingSpec::modular(4)), "T5");
    EXPECT_EQ(t5.status, Status::Vacuous);
    EXPECT_EQ(t5.unmet, std::vector<std::string>{"kY=0"});
    const auto t26 = run_check(make(RingSpec::modular(6)), "T26");
    EXPECT_EQ(t26.status, Status::Pass);
    EXPECT_GT(t26.stats.conclusions, 0U);
    EXPECT_THROW(run_check(make(RingSpec::modular(6)), "T99"), Error);
}

TEST(RunCheck, FailureCarriesWitness) {
    const auto r = run_check(make(RingSpec::modular(12)), "T29");
    ASSERT_EQ(r.status, Status::Fail);
    ASSERT_TRUE(r.witness.has_value());
    EXPECT_FALSE(r.witness->empty());
}

// The direct-sum clause for homomorphic images: R = <2> + <3> in Z/6 is a
// direct sum, R is a strong class member for Y = {<2>}, but <3> is not.
TEST(RunCheck, DirectSumCounterexampleIsFrozen) {
    const YSpace s = build_space(build_ring(RingSpec::modular(6)), parse_selector("idx:0"));
    const auto& ideals = s.spectrum().ideals;
    const Ideal& two = ideals[2];
    const Ideal& three = ideals[1];
    ASSERT_EQ(format_gens(two), "<2>");
    ASSERT_EQ(format_gens(three), "<3>");
    EXPECT_TRUE(combine(IdealOp::Intersect, two, three).is_zero());
    const Ideal sum = combine(IdealOp::Sum, two, three);
    EXPECT_TRUE(sum.is_whole());
    EXPECT_TRUE(is_strong_hy(s, sum));
    EXPECT_TRUE(is_strong_hy(s, two));
    EXPECT_FALSE(is_strong_hy(s, three));
    EXPECT_TRUE(closure_hy(s, three).is_whole());

    const auto r = run_check(make(RingSpec::modular(6), "idx:0"), "T29");
    EXPECT_EQ(r.status, Status::Fail);
}

TEST(RunSuite, EmptyAndBroken) {
    const Report empty = run_suite({});
    EXPECT_TRUE(empty.results.empty());
    EXPECT_TRUE(empty.ok());

    TableSpec bad;
    bad.size = 2;
    bad.add = {{0, 1}, {1, 0}};
    bad.mul = {{0, 0}, {0, 0}};
    bad.one = 1;
    const Report r = run_suite({Case{RingSpec{bad}, YSelector::spec()}, make(RingSpec::modular(2))}, RunConfig{{}, {"T1"}, {}});
    ASSERT_EQ(r.results.size(), 2U);
    EXPECT_EQ(r.results[0].theorem, "build");
    EXPECT_EQ(r.results[0].status, Status::Error);
    EXPECT_EQ(r.results[1].status, Status::Pass);
    EXPECT_FALSE(r.ok());
}

TEST(RunSuite, CapsAreReported) {
    RunConfig cfg;
    cfg.caps.elements = 8;
    cfg.theorems = {"T3"};
    const Report r = run_suite({make(RingSpec::modular(12))}, cfg);
    ASSERT_EQ(r.results.size(), 1U);
    EXPECT_EQ(r.results[0].status, Status::CapExceeded);
    EXPECT_EQ(r.summary.cap_exceeded, 1U);
}

TEST(RunSuite, JsonLinesAreDeterministic) {
    const std::vector<Case> corpus = {make(RingSpec::modular(12)), make(RingSpec::modular(6), "idx:1")};
    const std::string a = to_json_lines(run_suite(corpus));
    const std::string b = to_json_lines(run_suite(corpus));
    EXPECT_EQ(a, b);
    std::istringstream in(a);
    std::string line, last;
    std::size_t rows = 0;
    while (std::getline(in, line)) {
        const auto j = nlohmann::json::parse(line);
        if (j.contains("summary")) last = line;
        else {
            ++rows;
            EXPECT_TRUE(j.contains("theorem") && j.contains("status") && j.contains("witness"));
        }
    }
    EXPECT_EQ(rows, 70U);
    EXPECT_FALSE(last.empty());
}

TEST(Hunt, InteriorFormulaNeedsZeroKernel) {
    const HuntResult h = hunt({make(RingSpec::modular(4))}, "T5", "kY=0");
    ASSERT_TRUE(h.witness.has_value());
    EXPECT_EQ(h.witness->ring, "Z/4");
    EXPECT_EQ(value(*h.witness->witness, "S"), "{2}");
    EXPECT_EQ(value(*h.witness->witness, "interior(h(S))"), "{<2>}");
    EXPECT_EQ(value(*h.witness->witness, "complement(h(Ann(S)))"), "{}");
}

TEST(Hunt, RegularCharacterizationNeedsZeroKernel) {
    const HuntResult h = hunt({make(RingSpec::modular(4))}, "T26", "kY=0");
    EXPECT_TRUE(h.witness.has_value());
}

TEST(Hunt, SaturationDisjointness) {
    const HuntResult h = hunt({make(RingSpec::modular(12))}, "T24", "A∩I=∅");
    EXPECT_TRUE(h.witness.has_value());
}

TEST(Hunt, NothingDroppedFindsNothingOnPassingClaims) {
    const HuntResult h = hunt(default_corpus(), "T5", std::nullopt);
    EXPECT_FALSE(h.witness.has_value());
    EXPECT_GT(h.cases_visited, 100U);
}

TEST(Hunt, Errors) {
    EXPECT_THROW(hunt({}, "T5", "nope"), Error);
    EXPECT_THROW(hunt({}, "T0", std::nullopt), Error);
}

TEST(Corpus, DefaultShape) {
    const auto corpus = default_corpus();
    EXPECT_EQ(corpus.size(), 130U);
    EXPECT_EQ(parse_caps("elements=64,filters=9").elements, 64U);
    EXPECT_EQ(parse_caps("elements=64,filters=9").filters, 9U);
    EXPECT_THROW(parse_caps("elements"), Error);
    EXPECT_THROW(parse_caps("bogus=1"), Error);
}
