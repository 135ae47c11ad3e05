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
#include "spectral/ideal.hpp"
#include "spectral/spectrum.hpp"

using namespace spectral;

namespace {

Elem E(std::uint32_t i) { return Elem{i}; }

Ring Z(std::uint32_t n) { return build_ring(RingSpec::modular(n)); }

Ideal gen(const Ring& R, std::vector<std::uint32_t> gs) {
    std::vector<Elem> v;
    for (auto g : gs) v.push_back(E(g));
    return span(R, v);
}

BitSet members(std::size_t n, std::vector<int> xs) { return BitSet::of(n, xs); }

std::size_t divisors(std::uint32_t n) {
    std::size_t c = 0;
    for (std::uint32_t d = 1; d <= n; ++d) c += n % d == 0;
    return c;
}

} // namespace

TEST(IdealAlgebra, SpanExamples) {
    EXPECT_EQ(gen(Z(6), {4}).members, members(6, {0, 2, 4}));
    EXPECT_EQ(gen(Z(12), {}).members, members(12, {0}));
    EXPECT_EQ(gen(Z(12), {4, 6}).members, members(12, {0, 2, 4, 6, 8, 10}));
    EXPECT_EQ(format_gens(gen(Z(12), {4, 6})), "<2>");
    EXPECT_EQ(format_gens(zero_ideal(Z(5))), "<0>");
}

TEST(IdealAlgebra, IdealCountsOfZnAreDivisorCounts) {
    for (std::uint32_t n = 1; n <= 60; ++n) EXPECT_EQ(all_ideals(Z(n)).size(), divisors(n)) << n;
}

TEST(IdealAlgebra, IdealsMatchBruteForce) {
    const std::vector<RingSpec> rings = {
        RingSpec::modular(12), RingSpec::poly(2, {0, 0, 1}), RingSpec::poly(2, {0, 0, 0, 1}), RingSpec::poly(2, {1, 1, 1}),
        RingSpec::poly(3, {0, 0, 1}), RingSpec::product({RingSpec::modular(2), RingSpec::modular(4)}),
        RingSpec::product({RingSpec::modular(2), RingSpec::modular(2), RingSpec::modular(2)}),
        RingSpec::product({RingSpec::modular(4), RingSpec::modular(4)}),
        RingSpec::product({RingSpec::poly(2, {0, 0, 1}), RingSpec::modular(3)})};
    for (const auto& spec : rings) {
        const Ring R = build_ring(spec);
        std::vector<oracle::Set> got;
        for (const auto& I : all_ideals(R)) got.push_back(oracle::to_set(I.members, R.size()));
        std::sort(got.begin(), got.end());
        EXPECT_EQ(got, oracle::ideals(R)) << R.name();
    }
}

TEST(IdealAlgebra, IdealOrderAndGenerators) {
    const auto list = all_ideals(Z(12));
    std::vector<std::string> g;
    for (const auto& I : list) g.push_back(format_gens(I));
    EXPECT_EQ(g, (std::vector<std::string>{"<0>", "<6>", "<4>", "<3>", "<2>", "<1>"}));
    for (const auto& I : all_ideals(build_ring(RingSpec::product({RingSpec::modular(4), RingSpec::modular(6)}))))
        EXPECT_EQ(span(I.ring, I.gens), I);
    EXPECT_THROW(all_ideals(build_ring(RingSpec::product({RingSpec::modular(2), RingSpec::modular(2), RingSpec::modular(2)})), 4), Error);
}

TEST(IdealAlgebra, CombineExamples) {
    const Ring z6 = Z(6), z12 = Z(12);
    EXPECT_TRUE(combine(IdealOp::Sum, gen(z6, {2}), gen(z6, {3})).is_whole());
    EXPECT_TRUE(combine(IdealOp::Product, gen(z6, {2}), gen(z6, {3})).is_zero());
    EXPECT_EQ(combine(IdealOp::Intersect, gen(z12, {2}), gen(z12, {3})), gen(z12, {6}));
    EXPECT_EQ(combine(IdealOp::Product, gen(z12, {2}), gen(z12, {2})), gen(z12, {4}));
    EXPECT_THROW(combine(IdealOp::Sum, gen(z6, {2}), gen(z12, {2})), Error);
}

TEST(IdealAlgebra, ColonRadicalAnnihilator) {
    const Ring z12 = Z(12);
    EXPECT_EQ(colon(gen(z12, {4}), std::vector<Elem>{E(2)}), gen(z12, {2}));
    EXPECT_EQ(annihilator(z12, members(12, {4})), gen(z12, {3}));
    EXPECT_EQ(colon(gen(z12, {4}), std::vector<Elem>{E(1)}), gen(z12, {4}));
    EXPECT_THROW(colon(gen(z12, {4}), std::vector<Elem>{}), Error);
    EXPECT_EQ(radical(gen(z12, {4})), gen(z12, {2}));
    EXPECT_EQ(radical(zero_ideal(z12)), gen(z12, {6}));
    EXPECT_TRUE(radical(zero_ideal(build_ring(RingSpec::poly(2, {1, 1, 1})))).is_zero());
}

TEST(IdealAlgebra, ColonAndRadicalMatchOracles) {
    for (std::uint32_t n : {8U, 12U, 18U, 24U, 30U, 36U}) {
        const Ring R = Z(n);
        for (const auto& I : all_ideals(R)) {
            EXPECT_EQ(oracle::to_set(radical(I).members, n), oracle::radical(R, oracle::to_set(I.members, n)));
            for (const auto& J : all_ideals(R))
                EXPECT_EQ(oracle::to_set(colon(I, J.members).members, n),
                          oracle::colon(R, oracle::to_set(I.members, n), oracle::to_set(J.members, n)));
        }
    }
}

TEST(IdealAlgebra, PrimesMatchDefinition) {
    for (std::uint32_t n = 2; n <= 40; ++n) {
        const Ring R = Z(n);
        for (const auto& I : all_ideals(R)) EXPECT_EQ(is_prime_ideal(I), oracle::is_prime(R, oracle::to_set(I.members, n)));
    }
}

TEST(IdealAlgebra, SaturationExamples) {
    const Ring z12 = Z(12);
    const MultSet twos = MultSet::closure_of(z12, members(12, {2}));
    EXPECT_EQ(twos.members(), members(12, {1, 2, 4, 8}));
    EXPECT_EQ(saturate(zero_ideal(z12), twos), gen(z12, {3}));
    EXPECT_TRUE(quasi_regular(gen(Z(4), {2})).is_zero());
    EXPECT_EQ(zero_component(gen(z12, {2})), gen(z12, {4}));
    EXPECT_THROW(zero_component(gen(z12, {4})), Error);
    EXPECT_THROW(MultSet::exact(z12, members(12, {1, 2})), Error);
    EXPECT_THROW(MultSet::exact(z12, members(12, {2, 4, 8})), Error);
}

TEST(IdealAlgebra, SaturationMatchesDefinition) {
    const Ring R = Z(36);
    for (std::uint32_t seed = 0; seed < 36; ++seed) {
        const MultSet A = MultSet::closure_of(R, members(36, {static_cast<int>(seed)}));
        for (const auto& I : all_ideals(R)) {
            BitSet want(36);
            for (Elem r : R.elements())
                for (auto a : A.members())
                    if (I.contains(R.mul(r, E(static_cast<std::uint32_t>(a))))) want.set(r.index);
            EXPECT_EQ(saturate(I, A).members, want);
        }
    }
}

TEST(IdealAlgebra, SocleAndFlags) {
    EXPECT_EQ(socle(Z(12)), gen(Z(12), {2}));
    EXPECT_TRUE(socle(Z(6)).is_whole());
    EXPECT_TRUE(socle(build_ring(RingSpec::poly(2, {1, 1, 1}))).is_whole());

    const auto f6 = ideal_flags(gen(Z(6), {2}));
    EXPECT_TRUE(f6.pure);
    EXPECT_TRUE(f6.regular_ideal);
    EXPECT_FALSE(f6.essential);
    EXPECT_TRUE(f6.singular);
    const auto f4 = ideal_flags(gen(Z(4), {2}));
    EXPECT_FALSE(f4.pure);
    EXPECT_TRUE(f4.singular);
    EXPECT_TRUE(f4.essential);
    EXPECT_TRUE(f4.minimal_nonzero);
    EXPECT_TRUE(ideal_flags(unit_ideal(Z(9))).pure);
}

TEST(IdealAlgebra, QuotientsAndContraction) {
    const Ring z12 = Z(12);
    const Quotient q = quotient_ring(gen(z12, {4}));
    EXPECT_EQ(q.ring.size(), 4U);
    EXPECT_EQ(q.ring.label(q.projection(E(5))), "[1]");
    const auto qi = all_ideals(q.ring);
    EXPECT_EQ(qi.size(), 3U);
    for (const auto& J : qi) {
        const Ideal back = contract(q.projection, J);
        EXPECT_TRUE(gen(z12, {4}).is_subset_of(back));
        EXPECT_EQ(extend(q.projection, back), J);
    }
    for (const auto& I : all_ideals(z12)) EXPECT_EQ(I.size() * quotient_ring(I).ring.size(), 12U);
}
