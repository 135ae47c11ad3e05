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

#include "oracles.hpp"
#include "spectral/zariski.hpp"

using namespace spectral;

namespace {

Elem E(std::uint32_t i) { return Elem{i}; }

YSpace space(const RingSpec& r, const std::string& sel = "spec") { return build_space(build_ring(r), parse_selector(sel)); }

YSet yset(std::size_t n, std::vector<int> xs) { return BitSet::of(n, xs); }

} // namespace

TEST(Zariski, SelectorText) {
    for (const char* text : {"spec", "max", "min", "idx:0", "idx:0,2", "minover:<4>"}) EXPECT_EQ(to_string(parse_selector(text)), text);
    EXPECT_EQ(parse_selector("idx:2,0"), YSelector::of_indices({0, 2}));
    EXPECT_EQ(parse_selector("idx:1,1,0"), YSelector::of_indices({0, 1}));
    for (const char* bad : {"", "idx:a", "idx:1,", "nope", "minover"}) EXPECT_THROW(parse_selector(bad), Error) << bad;
    const YSpace none = build_space(build_ring(RingSpec::modular(6)), parse_selector("idx:"));
    EXPECT_EQ(none.size(), 0U);
    EXPECT_TRUE(none.kY().is_whole());
}

TEST(Zariski, BuildSpaceExamples) {
    const YSpace z12 = space(RingSpec::modular(12));
    EXPECT_EQ(z12.size(), 2U);
    EXPECT_EQ(format_gens(z12.kY()), "<6>");
    const YSpace z6 = space(RingSpec::modular(6), "idx:0");
    ASSERT_EQ(z6.size(), 1U);
    EXPECT_EQ(format_gens(z6.kY()), "<2>");
    const YSpace g = space(RingSpec::poly(2, {1, 1, 1}));
    EXPECT_EQ(g.size(), 1U);
    EXPECT_TRUE(g.kY().is_zero());
    EXPECT_THROW(space(RingSpec::modular(6), "idx:2"), Error);
    EXPECT_EQ(format_gens(space(RingSpec::modular(12), "minover:<4>").kY()), "<2>");
}

TEST(Zariski, HullAndKernelExamples) {
    const YSpace s = space(RingSpec::modular(12));
    EXPECT_EQ(hull(s, std::vector<Elem>{E(4)}), yset(2, {0}));
    EXPECT_EQ(hull(s, std::vector<Elem>{E(1)}), s.none());
    EXPECT_EQ(hull(s, std::vector<Elem>{E(0)}), s.all());
    EXPECT_EQ(hull(s, std::vector<Elem>{}), s.all());
    EXPECT_EQ(format_gens(kernel(s, s.all())), "<6>");
    EXPECT_EQ(format_gens(kernel(s, yset(2, {0}))), "<2>");
    EXPECT_TRUE(kernel(s, s.none()).is_whole());
    EXPECT_EQ(format_yset(s, s.all()), "{<2>,<3>}");
}

TEST(Zariski, TopologyExamples) {
    const YSpace s = space(RingSpec::modular(12));
    EXPECT_EQ(topo(s, yset(2, {0}), TopoOp::Closure), yset(2, {0}));
    EXPECT_EQ(topo(s, yset(2, {0}), TopoOp::Interior), yset(2, {0}));
    EXPECT_EQ(topo(s, s.all(), TopoOp::Closure), s.all());
    EXPECT_EQ(topo(s, yset(2, {0}), TopoOp::Complement), yset(2, {1}));
}

TEST(Zariski, HyPropertyExamples) {
    EXPECT_TRUE(hy_property(space(RingSpec::modular(6))).holds);
    EXPECT_TRUE(hy_property(space(RingSpec::modular(12))).holds);
    EXPECT_TRUE(hy_property(space(RingSpec::poly(2, {1, 1, 1}))).holds);
}

TEST(Zariski, TabulatedHullsMatchOracle) {
    for (const auto& r : {RingSpec::modular(30), RingSpec::modular(36), RingSpec::product({RingSpec::modular(6), RingSpec::modular(2)})}) {
        const YSpace s = space(r);
        const std::size_t n = s.ring().size();
        std::vector<oracle::Set> Y;
        for (const auto& P : s.primes()) Y.push_back(oracle::to_set(P.members, n));
        for (Elem a : s.ring().elements()) {
            const auto want = oracle::hull(Y, oracle::single(n, a.index));
            for (std::size_t p = 0; p < s.size(); ++p) EXPECT_EQ(s.hull_of(a).test(p), want[p]);
            EXPECT_EQ(oracle::to_set(s.spectrum().ideals[s.kernel_hull_index(a)].members, n),
                      oracle::kernel_hull(n, Y, oracle::single(n, a.index)));
        }
    }
}
