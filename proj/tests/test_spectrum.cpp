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
#include "spectral/spectrum.hpp"

using namespace spectral;

namespace {

Ring Z(std::uint32_t n) { return build_ring(RingSpec::modular(n)); }

std::vector<std::string> names(const std::vector<Ideal>& v) {
    std::vector<std::string> out;
    for (const auto& I : v) out.push_back(format_gens(I));
    return out;
}

bool squarefree(std::uint32_t n) {
    for (std::uint32_t p = 2; p * p <= n; ++p)
        if (n % (p * p) == 0) return false;
    return true;
}

} // namespace

TEST(Spectrum, Examples) {
    const Spectrum s12 = spectrum(Z(12));
    EXPECT_EQ(names(s12.primes), (std::vector<std::string>{"<2>", "<3>"}));
    EXPECT_EQ(s12.min_mask.count(), 2U);
    EXPECT_EQ(s12.max_mask.count(), 2U);
    EXPECT_EQ(format_gens(s12.rad), "<6>");
    EXPECT_EQ(format_gens(s12.jac), "<6>");
    EXPECT_EQ(format_spectrum(s12), "Spec(Z/12) = [<2>, <3>]");

    const Spectrum g = spectrum(build_ring(RingSpec::poly(2, {1, 1, 1})));
    ASSERT_EQ(g.primes.size(), 1U);
    EXPECT_TRUE(g.primes[0].is_zero());
    EXPECT_TRUE(g.rad.is_zero());

    const Spectrum d = spectrum(build_ring(RingSpec::poly(2, {0, 0, 1})));
    ASSERT_EQ(d.primes.size(), 1U);
    EXPECT_EQ(d.primes[0].size(), 2U);
    EXPECT_EQ(d.rad, d.primes[0]);
}

TEST(Spectrum, PrimesAreThePrimeDivisors) {
    for (std::uint32_t n = 2; n <= 60; ++n) {
        std::vector<std::string> want;
        for (std::uint32_t p = 2; p <= n; ++p) {
            bool prime = true;
            for (std::uint32_t q = 2; q * q <= p; ++q) prime &= p % q != 0;
            if (prime && n % p == 0) want.push_back("<" + std::to_string(p == n ? 0 : p) + ">");
        }
        std::sort(want.begin(), want.end());
        auto got = names(spectrum(Z(n)).primes);
        std::sort(got.begin(), got.end());
        EXPECT_EQ(got, want) << n;
    }
}

TEST(Spectrum, MinimalPrimesOver) {
    const Spectrum s = spectrum(Z(12));
    const Ideal four = s.ideals[2], two = s.ideals[4], zero = s.ideals[0];
    EXPECT_EQ(names(min_primes_over(s, four)), (std::vector<std::string>{"<2>"}));
    EXPECT_EQ(names(min_primes_over(s, zero)), (std::vector<std::string>{"<2>", "<3>"}));
    EXPECT_EQ(names(min_primes_over(s, two)), (std::vector<std::string>{"<2>"}));
    EXPECT_THROW(min_primes_over(s, s.ideals.back()), Error);
}

TEST(Spectrum, BourbakiPrimes) {
    const Spectrum s12 = spectrum(Z(12));
    const auto b12 = bourbaki(s12, s12.ideals[0]);
    ASSERT_EQ(b12.primes.size(), 2U);
    EXPECT_EQ(format_gens(b12.primes[0].prime), "<2>");
    EXPECT_EQ(b12.primes[0].witness.index, 6U);
    EXPECT_EQ(b12.primes[1].witness.index, 4U);
    EXPECT_FALSE(b12.fixed_place);

    const Spectrum s6 = spectrum(Z(6));
    const auto b6 = bourbaki(s6, s6.ideals[0]);
    ASSERT_EQ(b6.primes.size(), 2U);
    EXPECT_EQ(b6.primes[0].witness.index, 3U);
    EXPECT_EQ(b6.primes[1].witness.index, 2U);
    EXPECT_TRUE(b6.fixed_place);

    const Spectrum f = spectrum(Z(7));
    const auto bf = bourbaki(f, f.ideals[0]);
    ASSERT_EQ(bf.primes.size(), 1U);
    EXPECT_EQ(bf.primes[0].witness.index, 1U);
    EXPECT_TRUE(bf.fixed_place);
}

TEST(Spectrum, RingFlags) {
    EXPECT_EQ(ring_flags(spectrum(Z(6))), (RingClassFlags{true, true, true, true, true, true, true}));
    const auto f4 = ring_flags(spectrum(Z(4)));
    EXPECT_FALSE(f4.reduced);
    EXPECT_FALSE(f4.regular_ring);
    EXPECT_TRUE(f4.gelfand);
    EXPECT_TRUE(f4.property_A);
    EXPECT_EQ(ring_flags(spectrum(build_ring(RingSpec::poly(2, {1, 1, 1})))),
              (RingClassFlags{true, true, true, true, true, true, true}));
}

TEST(Spectrum, RegularExactlyWhenSquarefree) {
    for (std::uint32_t n = 2; n <= 60; ++n) {
        const auto f = ring_flags(spectrum(Z(n)));
        EXPECT_EQ(f.regular_ring, squarefree(n)) << n;
        EXPECT_EQ(f.reduced, squarefree(n)) << n;
        EXPECT_TRUE(f.gelfand) << n;
    }
}

TEST(Spectrum, RadicalIsIntersectionOfPrimes) {
    for (const auto& spec : {RingSpec::modular(72), RingSpec::poly(3, {0, 0, 1}),
                             RingSpec::product({RingSpec::modular(4), RingSpec::modular(9)})}) {
        const Spectrum s = spectrum(build_ring(spec));
        BitSet k = BitSet::full(s.ring.size());
        for (const auto& P : s.primes) k &= P.members;
        EXPECT_EQ(k, s.rad.members);
        EXPECT_EQ(s.rad, s.jac);
        for (std::size_t i = 0; i < s.primes.size(); ++i) EXPECT_EQ(s.ideals[s.prime_ideal_index[i]], s.primes[i]);
    }
}
