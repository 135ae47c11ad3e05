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

#include <set>

#include "theorems/context.hpp"

namespace spectral::suite {

namespace {

constexpr IdealClass kPair[] = {IdealClass::Hy, IdealClass::Strong};

void variant_bundle(Checker& ck, IdealClass cls) {
    auto& ctx = ck.ctx;
    for (std::size_t i = 0; i < ctx.ideals().size(); ++i) {
        const bool expected = ctx.in(i, cls);
        for (Variant v : all_variants()) {
            if (class_of(v) != cls) continue;
            ck.visit();
            const bool got = evaluate_variant(ctx.space(), ctx.ideals()[i], v);
            ck.expect(got == expected, [&] {
                return Witness{{"I", show(ctx.ideals()[i])}, {"variant", std::string(to_string(v))}, {"variant value", show(got)},
                               {"class value", show(expected)}};
            });
        }
    }
}

void hy_conditions(Checker& ck) { variant_bundle(ck, IdealClass::Hy); }

void strong_conditions(Checker& ck) {
    variant_bundle(ck, IdealClass::Strong);
    auto& ctx = ck.ctx;
    const YSpace& Y = ctx.space();
    const auto& ideals = ctx.ideals();
    const std::size_t ky = ctx.index(Y.kY());
    for (std::size_t i = 0; i < ideals.size(); ++i) {
        ck.visit();
        BitSet joined(ctx.ring().size());
        for (auto j : ctx.subideals(i)) joined |= ideals[Y.ideal_kernel_hull(j)].members;
        ck.expect(ctx.bits(i).strong == (joined == ideals[i].members), [&] {
            return Witness{{"I", show(ideals[i])}, {"union of kh(F)", show(ctx.ring(), joined)}};
        });
        ck.expect(ctx.bits(Y.ideal_kernel_hull(i)).strong,
                  [&] { return Witness{{"F", show(ideals[i])}, {"kh(F)", show(ideals[Y.ideal_kernel_hull(i)])}}; });
        for (IdealClass c : {IdealClass::Hy, IdealClass::Strong, IdealClass::Hilbert}) {
            ck.expect(ctx.in(ky, c) && (!ctx.in(i, c) || Y.kY().is_subset_of(ideals[i])), [&] {
                return Witness{{"class", std::string(to_string(c))}, {"k(Y)", show(Y.kY())}, {"I", show(ideals[i])}};
            });
        }
    }
}

void semiprime(Checker& ck) {
    auto& ctx = ck.ctx;
    for (std::size_t i = 0; i < ctx.ideals().size(); ++i) {
        if (!ck.given("I-hy", ctx.bits(i).hy)) continue;
        ck.visit();
        ck.expect(ctx.bits(i).semiprime, [&] {
            return Witness{{"I", show(ctx.ideals()[i])}, {"radical", show(radical(ctx.ideals()[i]))}};
        });
    }
}

void minimal_prime_inheritance(Checker& ck) {
    auto& ctx = ck.ctx;
    for (IdealClass c : kPair)
        for (std::size_t i = 0; i < ctx.ideals().size(); ++i) {
            const Ideal& I = ctx.ideals()[i];
            if (!I.is_proper() || !ck.given("I-in-class", ctx.in(i, c))) continue;
            for (const auto& P : min_primes_over(ctx.spec(), I)) {
                ck.visit();
                ck.expect(ctx.in(ctx.index(P), c), [&] {
                    return Witness{{"class", std::string(to_string(c))}, {"I", show(I)}, {"P", show(P)}};
                });
            }
        }
}

void minimal_prime_intersection(Checker& ck) {
    auto& ctx = ck.ctx;
    for (IdealClass c : kPair) {
        for (std::size_t i = 0; i < ctx.ideals().size(); ++i) {
            ck.visit();
            const Ideal& I = ctx.ideals()[i];
            BitSet meet = ctx.whole().members;
            if (I.is_proper())
                for (const auto& P : min_primes_over(ctx.spec(), I))
                    if (ctx.in(ctx.index(P), c)) meet &= P.members;
            ck.expect(ctx.in(i, c) == (meet == I.members), [&] {
                return Witness{{"class", std::string(to_string(c))}, {"I", show(I)}, {"in class", show(ctx.in(i, c))},
                               {"meet of minimal primes in class", show(ctx.ring(), meet)}};
            });
        }
        for (const auto& M : extremal_search(ctx.space(), MaximalProper{}, c)) {
            ck.visit();
            ck.expect(is_prime_ideal(M),
                      [&] { return Witness{{"class", std::string(to_string(c))}, {"maximal member", show(M)}}; });
        }
    }
}

void hy_property_equivalences(Checker& ck) {
    auto& ctx = ck.ctx;
    const YSpace& Y = ctx.space();
    const Ring& R = ctx.ring();
    const bool prop = hy_property(Y).holds;

    if (prop) {
        for (std::size_t i = 0; i < ctx.ideals().size(); ++i) {
            ck.visit();
            ck.expect(ctx.bits(i).hy == ctx.bits(i).strong, [&] { return Witness{{"I", show(ctx.ideals()[i])}}; });
        }
        if (ctx.ky_zero())
            ck.expect(ctx.flags().ac_ring, [&] { return Witness{{"h_Y-property", "true"}, {"a.c. ring", "false"}}; });
    }

    const Ideal& I = Y.kY();
    bool y_minimal = true;
    if (I.is_proper()) {
        const auto over = min_primes_over(ctx.spec(), I);
        for (const auto& P : Y.primes())
            if (std::find(over.begin(), over.end(), P) == over.end()) y_minimal = false;
    }
    if (!ck.given("Y-in-Min(kY)", y_minimal)) return;

    std::vector<BitSet> by_element;
    std::set<BitSet> singles;
    for (Elem c : R.elements()) {
        by_element.push_back(colon(I, std::vector<Elem>{c}).members);
        singles.insert(by_element.back());
    }
    bool b = true;
    for (const auto& F : ctx.subsets()) {
        ck.visit();
        if (!singles.count(colon(I, F).members)) b = false;
    }
    bool c = true;
    for (Elem x : R.elements())
        for (Elem y : R.elements()) {
            ck.visit();
            BitSet meet = by_element[x.index];
            meet &= by_element[y.index];
            if (!singles.count(meet)) c = false;
        }
    const Quotient q = quotient_ring(I);
    const bool d = ring_flags(spectrum(q.ring)).ac_ring;
    ck.expect(prop == b && b == c && c == d, [&] {
        return Witness{{"h_Y-property", show(prop)},
                       {"(I:F) principal", show(b)},
                       {"(I:a) n (I:b) principal", show(c)},
                       {"R/k(Y) a.c.", show(d)}};
    });
}

void finitely_generated(Checker& ck) {
    auto& ctx = ck.ctx;
    for (std::size_t i = 0; i < ctx.ideals().size(); ++i) {
        ck.visit();
        ck.expect(!ctx.bits(i).strong || ctx.bits(i).hilbert, [&] { return Witness{{"I", show(ctx.ideals()[i])}}; });
    }
    std::set<std::size_t> principal;
    for (Elem a : ctx.ring().elements()) principal.insert(ctx.index(span(ctx.ring(), std::vector<Elem>{a})));
    for (auto i : principal) {
        ck.visit();
        const auto& b = ctx.bits(i);
        ck.expect(b.hy == b.strong && b.strong == b.hilbert, [&] {
            return Witness{{"<a>", show(ctx.ideals()[i])}, {"hy", show(b.hy)}, {"strong", show(b.strong)}, {"hilbert", show(b.hilbert)}};
        });
    }
}

void finite_coincidence(Checker& ck) {
    auto& ctx = ck.ctx;
    const YSpace& Y = ctx.space();
    for (std::size_t i = 0; i < ctx.ideals().size(); ++i) {
        ck.visit();
        const Ideal& I = ctx.ideals()[i];
        const auto& b = ctx.bits(i);
        ck.expect(b.hy == b.strong && b.strong == b.hilbert, [&] {
            return Witness{{"I", show(I)}, {"hy", show(b.hy)}, {"strong", show(b.strong)}, {"hilbert", show(b.hilbert)}};
        });
        const Ideal ih = closure_hy(Y, I);
        Ideal ish;
        try {
            ish = closure_strong(Y, ctx.lattice(), I).strong;
        } catch (const Error& e) {
            if (e.kind() != ErrorKind::InternalDisagreement) throw;
            ck.fail({{"I", show(I)}, {"closure routes", e.what()}});
        }
        const Ideal& kh = ctx.ideals()[Y.ideal_kernel_hull(i)];
        ck.expect(ih == ish && ish == kh, [&] {
            return Witness{{"I", show(I)}, {"I_H", show(ih)}, {"I_SH", show(ish)}, {"kh(I)", show(kh)}};
        });
    }
}

} // namespace

std::vector<Claim> class_claims() {
    return {
        {{"T3", "the nine single-element conditions for H_Y-ideals agree", {}, "ideals x variants"}, hy_conditions},
        {{"T4", "the finite-subset conditions for strong H_Y-ideals agree", {}, "ideals x variants"}, strong_conditions},
        {{"T10", "H_Y-ideals are semiprime", {"I-hy"}, "ideals"}, semiprime},
        {{"T11", "minimal primes over a class member stay in the class", {"I-in-class"}, "ideals x minimal primes"},
         minimal_prime_inheritance},
        {{"T12", "class members are meets of their minimal primes in the class; maximal members are prime", {}, "ideals"},
         minimal_prime_intersection},
        {{"T13", "h_Y-property versus principal colons and the a.c. quotient", {"Y-in-Min(kY)"}, "subsets, elements^2"},
         hy_property_equivalences},
        {{"T25", "finitely generated strong ideals are Y-Hilbert; principal ideals have one class", {}, "ideals, elements"},
         finitely_generated},
        {{"T27", "for finite Y the three classes and their closures coincide", {}, "ideals"}, finite_coincidence},
    };
}

} // namespace spectral::suite
