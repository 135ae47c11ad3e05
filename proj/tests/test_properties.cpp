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
#include "spectral/hy_lattice.hpp"
#include "spectral/ideal_classes.hpp"

using namespace spectral;

namespace {

constexpr int kTrials = 60;

struct Sample {
    YSpace space;
    const std::vector<Ideal>& ideals() const { return space.spectrum().ideals; }
    const Ideal& pick(oracle::Gen& g) const { return ideals()[g.below(ideals().size())]; }
};

Sample sample(oracle::Gen& g) {
    const Ring R = build_ring(g.ring_spec());
    auto spec = std::make_shared<const Spectrum>(spectrum(R));
    auto idx = g.indices(spec->primes.size());
    const YSelector sel = idx.empty() || g.coin() ? YSelector::spec() : YSelector::of_indices(idx);
    return {build_space(spec, sel)};
}

std::string where(const Sample& s) { return s.space.ring().name() + " " + to_string(s.space.selector()); }

} // namespace

TEST(Properties, IdealOperationLaws) {
    oracle::Gen g(11);
    for (int t = 0; t < kTrials; ++t) {
        const Sample s = sample(g);
        for (int k = 0; k < 10; ++k) {
            const Ideal& I = s.pick(g);
            const Ideal& J = s.pick(g);
            const Ideal& K = s.pick(g);
            const Ideal sum = combine(IdealOp::Sum, I, J), meet = combine(IdealOp::Intersect, I, J),
                        prod = combine(IdealOp::Product, I, J);
            EXPECT_EQ(sum, combine(IdealOp::Sum, J, I));
            EXPECT_EQ(prod, combine(IdealOp::Product, J, I));
            EXPECT_TRUE(prod.is_subset_of(meet));
            EXPECT_TRUE(I.is_subset_of(sum) && meet.is_subset_of(I));
            EXPECT_EQ(combine(IdealOp::Intersect, I, combine(IdealOp::Sum, I, J)), I);
            EXPECT_EQ(combine(IdealOp::Product, combine(IdealOp::Product, I, J), K),
                      combine(IdealOp::Product, I, combine(IdealOp::Product, J, K)));
            // K J inside I iff K inside (I : J)
            EXPECT_EQ(combine(IdealOp::Product, K, J).is_subset_of(I), K.is_subset_of(colon(I, J.members))) << where(s);
            EXPECT_EQ(radical(radical(I)), radical(I));
            EXPECT_EQ(radical(meet), combine(IdealOp::Intersect, radical(I), radical(J)));
        }
    }
}

TEST(Properties, RadicalIsIntersectionOfPrimesAbove) {
    oracle::Gen g(12);
    for (int t = 0; t < kTrials; ++t) {
        const Sample s = sample(g);
        for (const auto& I : s.ideals()) {
            if (I.is_whole()) continue;
            BitSet k = BitSet::full(I.ring.size());
            for (const auto& P : min_primes_over(s.space.spectrum(), I)) k &= P.members;
            EXPECT_EQ(k, radical(I).members) << where(s);
        }
    }
}

TEST(Properties, HullKernelGaloisConnection) {
    oracle::Gen g(13);
    for (int t = 0; t < kTrials; ++t) {
        const Sample s = sample(g);
        const YSpace& Y = s.space;
        for (int k = 0; k < 20; ++k) {
            const Ideal& I = s.pick(g);
            YSet T = Y.none();
            for (auto i : g.indices(Y.size())) T.set(i);
            EXPECT_EQ(I.is_subset_of(kernel(Y, T)), T.is_subset_of(hull(Y, I))) << where(s);
            const YSet c = topo(Y, T, TopoOp::Closure);
            EXPECT_TRUE(T.is_subset_of(c));
            EXPECT_EQ(topo(Y, c, TopoOp::Closure), c);
            EXPECT_TRUE(topo(Y, T, TopoOp::Interior).is_subset_of(T));
            YSet U = Y.none();
            for (auto i : g.indices(Y.size())) U.set(i);
            EXPECT_EQ(topo(Y, T | U, TopoOp::Closure), c | topo(Y, U, TopoOp::Closure)) << where(s);
        }
    }
}

TEST(Properties, ClassesCoincideAndClosuresAreClosureOperators) {
    oracle::Gen g(14);
    for (int t = 0; t < kTrials; ++t) {
        const Sample s = sample(g);
        const HYLattice L = build_lattice(s.space);
        for (int k = 0; k < 8; ++k) {
            const Ideal& I = s.pick(g);
            const Ideal& J = s.pick(g);
            const auto r = classify_ideal(s.space, I);
            EXPECT_EQ(r.hy, r.strong_hy) << where(s);
            EXPECT_EQ(r.hy, r.y_hilbert) << where(s);
            const Ideal c = closure_hy(s.space, I);
            EXPECT_TRUE(I.is_subset_of(c));
            EXPECT_EQ(closure_hy(s.space, c), c);
            EXPECT_TRUE(is_hy(s.space, c));
            EXPECT_EQ(r.hy, c == I);
            if (I.is_subset_of(J)) {
                EXPECT_TRUE(c.is_subset_of(closure_hy(s.space, J)));
            }
            const auto sc = closure_strong(s.space, L, I);
            EXPECT_EQ(sc.strong, c) << where(s);
            EXPECT_EQ(to_ideal(to_filter(L, I)), c);
        }
    }
}

TEST(Properties, FilterMapsFormAGaloisPair) {
    oracle::Gen g(15);
    for (int t = 0; t < kTrials; ++t) {
        const Sample s = sample(g);
        const HYLattice L = build_lattice(s.space);
        if (L.size() > 16) continue;
        const auto fs = filters(L, FilterKind::All);
        for (int k = 0; k < 8; ++k) {
            const Ideal& I = s.pick(g);
            const HYFilter& F = fs[g.below(fs.size())];
            const HYFilter HI = to_filter(L, I);
            // H(I) inside F iff I inside H^{-1}(F)
            EXPECT_EQ(HI.members.is_subset_of(F.members), I.is_subset_of(to_ideal(F))) << where(s);
            EXPECT_EQ(to_filter(L, to_ideal(F)), F) << where(s);
            EXPECT_EQ(F.is_proper(), to_ideal(F).is_proper());
        }
    }
}

TEST(Properties, PrimeFiltersCorrespondToPrimeClassMembers) {
    oracle::Gen g(16);
    for (int t = 0; t < kTrials; ++t) {
        const Sample s = sample(g);
        const HYLattice L = build_lattice(s.space);
        std::size_t prime_members = 0, maximal = extremal_search(s.space, MaximalProper{}, IdealClass::Strong).size();
        for (const auto& I : s.ideals()) prime_members += is_prime_ideal(I) && is_strong_hy(s.space, I);
        EXPECT_EQ(filters(L, FilterKind::Prime).size(), prime_members) << where(s);
        EXPECT_EQ(filters(L, FilterKind::Ultra).size(), maximal) << where(s);
        for (const auto& f : filters(L, FilterKind::Prime)) EXPECT_TRUE(is_prime_ideal(to_ideal(f)));
    }
}

TEST(Properties, TableRingsRebuildIdentically) {
    oracle::Gen g(17);
    for (int t = 0; t < 30; ++t) {
        const Ring R = build_ring(g.ring_spec());
        TableSpec tab;
        tab.size = R.size();
        tab.zero = R.zero().index;
        tab.one = R.one().index;
        for (Elem a : R.elements()) {
            tab.add.emplace_back();
            tab.mul.emplace_back();
            for (Elem b : R.elements()) {
                tab.add.back().push_back(R.add(a, b).index);
                tab.mul.back().push_back(R.mul(a, b).index);
            }
        }
        const Ring T = build_ring(RingSpec{tab});
        EXPECT_EQ(all_ideals(T).size(), all_ideals(R).size()) << R.name();
        EXPECT_EQ(spectrum(T).primes.size(), spectrum(R).primes.size()) << R.name();
    }
}

TEST(Properties, QuotientIdealsAreIdealsAbove) {
    oracle::Gen g(18);
    for (int t = 0; t < kTrials; ++t) {
        const Sample s = sample(g);
        const Ideal& I = s.pick(g);
        const Quotient q = quotient_ring(I);
        std::size_t above = 0;
        for (const auto& J : s.ideals()) above += I.is_subset_of(J);
        EXPECT_EQ(all_ideals(q.ring).size(), above) << where(s) << ' ' << format_gens(I);
        for (Elem a : s.space.ring().elements())
            for (Elem b : s.space.ring().elements())
                ASSERT_EQ(q.projection(s.space.ring().mul(a, b)), q.ring.mul(q.projection(a), q.projection(b)));
    }
}
