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

#include <algorithm>

#include "theorems/context.hpp"

namespace spectral::suite {

namespace {

constexpr IdealClass kClasses[] = {IdealClass::Hy, IdealClass::Strong, IdealClass::Hilbert};

std::string class_name(IdealClass c) { return std::string(to_string(c)); }

Elem elem(std::size_t i) { return Elem{static_cast<std::uint32_t>(i)}; }

/// {a : a = a i for some i in I}.
BitSet quasi_regular_by_scan(const Ideal& I) {
    const Ring& R = I.ring;
    BitSet out(R.size());
    for (Elem a : R.elements())
        for (auto i : I.members)
            if (R.mul(a, elem(i)) == a) {
                out.set(a.index);
                break;
            }
    return out;
}

/// {a : a b = 0 for some b outside P}.
BitSet zero_component_by_scan(const Ideal& P) {
    const Ring& R = P.ring;
    BitSet out(R.size());
    for (Elem a : R.elements())
        for (Elem b : R.elements())
            if (!P.contains(b) && R.mul(a, b) == R.zero()) {
                out.set(a.index);
                break;
            }
    return out;
}

void colon_stays_in_class(Checker& ck) {
    auto& ctx = ck.ctx;
    const auto& ideals = ctx.ideals();
    for (IdealClass c : kClasses)
        for (std::size_t j = 0; j < ideals.size(); ++j) {
            if (!ck.given("J-strong", ctx.in(j, c))) continue;
            for (const auto& I : ideals) {
                ck.visit();
                const std::size_t q = ctx.index(colon(ideals[j], I.members));
                ck.expect(ctx.in(q, c), [&] {
                    return Witness{{"class", class_name(c)}, {"J", show(ideals[j])}, {"I", show(I)}, {"(J:I)", show(ideals[q])}};
                });
            }
        }
}

void minimal_members_agree(Checker& ck) {
    auto& ctx = ck.ctx;
    const bool zero = ck.given("kY=0", ctx.ky_zero());
    const auto& f = ctx.flags();
    const bool ring_ok = ck.given("gelfand-or-weakly-regular", (f.semiprimitive && f.gelfand) || f.weakly_regular);
    if (!zero || !ring_ok) return;
    const auto& ideals = ctx.ideals();
    auto minimal = [&](IdealClass c) {
        std::vector<std::size_t> out;
        for (std::size_t i = 0; i < ideals.size(); ++i) {
            if (ideals[i].is_zero() || !ctx.in(i, c)) continue;
            bool below = false;
            for (std::size_t j = 0; j < ideals.size() && !below; ++j)
                below = j != i && !ideals[j].is_zero() && ctx.in(j, c) && ideals[j].is_subset_of(ideals[i]);
            if (!below) out.push_back(i);
        }
        return out;
    };
    const auto hy = minimal(IdealClass::Hy);
    for (IdealClass c : kClasses) {
        ck.visit();
        const auto mine = minimal(c);
        ck.expect(mine == hy, [&] {
            return Witness{{"class", class_name(c)}, {"minimal members", std::to_string(mine.size())},
                           {"minimal H_Y members", std::to_string(hy.size())}};
        });
        if (ctx.ky_zero()) {
            std::vector<std::size_t> listed;
            for (const auto& I : extremal_search(ctx.space(), MinimalNonzero{}, c)) listed.push_back(ctx.index(I));
            ck.expect(listed == mine, [&] {
                return Witness{{"class", class_name(c)}, {"extremal search", std::to_string(listed.size())},
                               {"scan", std::to_string(mine.size())}};
            });
        }
    }
}

void saturations(Checker& ck) {
    auto& ctx = ck.ctx;
    const Ring& R = ctx.ring();
    const auto& ideals = ctx.ideals();
    const auto& sets = ctx.mult_sets();

    for (const auto& A : sets)
        for (std::size_t i = 0; i < ideals.size(); ++i) {
            const Ideal& I = ideals[i];
            const bool disjoint = !A.members().intersects(I.members);
            const Ideal sat = saturate(I, A);
            BitSet scan(R.size());
            for (Elem r : R.elements())
                for (auto a : A.members())
                    if (I.contains(R.mul(r, elem(a)))) scan.set(r.index);
            ck.expect(sat.members == scan, [&] {
                return Witness{{"A", show(R, A.members())}, {"I", show(I)}, {"I_A", show(sat)}, {"I_A by scan", show(R, scan)}};
            });
            for (IdealClass c : {IdealClass::Hy, IdealClass::Strong}) {
                if (!ctx.in(i, c) || !ck.given("A-disjoint-I", disjoint)) continue;
                ck.visit();
                ck.expect(sat.is_proper() && ctx.in(ctx.index(sat), c), [&] {
                    return Witness{{"class", class_name(c)}, {"A", show(R, A.members())}, {"I", show(I)}, {"I_A", show(sat)}};
                });
            }
        }

    if (!ck.given("kY=0", ctx.ky_zero())) return;
    auto in_both = [&](const Ideal& I) { return ctx.bits(ctx.index(I)).strong && ctx.bits(ctx.index(I)).hy; };

    for (const auto& A : sets) {
        ck.visit();
        const Ideal zA = saturate(ctx.zero(), A);
        ck.expect(in_both(zA), [&] { return Witness{{"A", show(R, A.members())}, {"0_A", show(zA)}}; });
    }
    for (std::size_t p : ctx.spec().prime_ideal_index) {
        ck.visit();
        const Ideal& P = ideals[p];
        const Ideal O = zero_component(P);
        const Ideal via = saturate(ctx.zero(), MultSet::exact(R, P.members.complement()));
        ck.expect(O.members == zero_component_by_scan(P) && O == via && in_both(O),
                  [&] { return Witness{{"P", show(P)}, {"O_P", show(O)}, {"0_(R-P)", show(via)}}; });
    }
    for (const auto& I : ideals) {
        ck.visit();
        BitSet shifted(R.size());
        for (auto i : I.members) shifted.set(R.add(R.one(), elem(i)).index);
        const Ideal m = quasi_regular(I);
        const Ideal via = saturate(ctx.zero(), MultSet::exact(R, shifted));
        ck.expect(m.members == quasi_regular_by_scan(I) && m == via && in_both(m),
                  [&] { return Witness{{"I", show(I)}, {"m(I)", show(m)}, {"0_(1+I)", show(via)}}; });

        const IdealFlags fl = ideal_flags(I, ideals);
        if (fl.regular_ideal) ck.expect(fl.pure, [&] { return Witness{{"regular but not pure", show(I)}}; });
        if (fl.minimal_nonzero && ctx.flags().reduced)
            ck.expect(fl.pure, [&] { return Witness{{"minimal but not pure", show(I)}}; });
        const bool summand = std::any_of(ideals.begin(), ideals.end(), [&](const Ideal& J) {
            return combine(IdealOp::Intersect, I, J).is_zero() && combine(IdealOp::Sum, I, J).is_whole();
        });
        if (summand) ck.expect(fl.pure, [&] { return Witness{{"summand but not pure", show(I)}}; });
        if (fl.pure) ck.expect(in_both(I), [&] { return Witness{{"pure but not strong", show(I)}}; });
    }
    if (ctx.flags().reduced) {
        ck.visit();
        const Ideal soc = socle(R, ideals);
        ck.expect(ideal_flags(soc, ideals).pure && in_both(soc), [&] { return Witness{{"socle", show(soc)}}; });
    }
}

void regular_ring_characterization(Checker& ck) {
    auto& ctx = ck.ctx;
    const Ring& R = ctx.ring();
    const auto& ideals = ctx.ideals();
    ck.visit(ideals.size());

    auto every = [&](auto&& pred, auto&& in) {
        for (std::size_t i = 0; i < ideals.size(); ++i)
            if (pred(i) && !in(i)) return false;
        return true;
    };
    std::vector<bool> principal(ideals.size(), false);
    for (Elem a : R.elements()) principal[ctx.index(span(R, std::vector<Elem>{a}))] = true;
    std::vector<bool> essential(ideals.size(), false);
    for (std::size_t i = 0; i < ideals.size(); ++i) essential[i] = ideal_flags(ideals[i], ideals).essential;

    auto any = [](std::size_t) { return true; };
    auto is_principal = [&](std::size_t i) { return principal[i]; };
    auto is_essential = [&](std::size_t i) { return essential[i]; };
    auto hy = [&](std::size_t i) { return ctx.bits(i).hy; };
    auto strong = [&](std::size_t i) { return ctx.bits(i).strong; };
    auto hilbert = [&](std::size_t i) { return ctx.bits(i).hilbert; };

    const bool zero = ctx.ky_zero();
    const std::vector<std::pair<std::string, bool>> items = {
        {"a: every ideal strong", every(any, strong)},
        {"b: every finitely generated ideal strong", every(any, strong)},
        {"c: every finitely generated ideal Y-Hilbert", every(any, hilbert)},
        {"d: every ideal H_Y", every(any, hy)},
        {"e: every principal ideal H_Y", every(is_principal, hy)},
        {"f: every principal ideal strong", every(is_principal, strong)},
        {"g: every principal ideal Y-Hilbert", every(is_principal, hilbert)},
        {"h: k(Y)=0 and R regular", ck.given("kY=0", zero) && ctx.flags().regular_ring},
        {"k: k(Y)=0 and every essential ideal strong", ck.given("kY=0", zero) && every(is_essential, strong)},
        {"l: k(Y)=0 and every essential ideal H_Y", ck.given("kY=0", zero) && every(is_essential, hy)},
    };
    auto mismatch = [&](const auto& list) {
        Witness w;
        for (const auto& [name, value] : list) w.emplace_back(name, show(value));
        return w;
    };
    const bool first = items.front().second;
    ck.expect(std::all_of(items.begin(), items.end(), [&](const auto& it) { return it.second == first; }),
              [&] { return mismatch(items); });

    if (!ck.given("max-in-Y", ctx.max_in_y())) return;
    const std::vector<std::pair<std::string, bool>> extra = {
        {"a: every ideal strong", first},
        {"every ideal Y-Hilbert", every(any, hilbert)},
        {"k(Y)=0 and every essential ideal Y-Hilbert", ck.given("kY=0", zero) && every(is_essential, hilbert)},
    };
    ck.expect(extra[1].second == first && extra[2].second == first, [&] { return mismatch(extra); });
}

} // namespace

std::vector<Claim> generated_claims() {
    return {
        {{"T22", "colon ideals (J:I) inherit the class of J", {"J-strong"}, "classes x members x ideals"}, colon_stays_in_class},
        {{"T23", "minimal nonzero members of the three classes agree on Gelfand or weakly regular rings",
          {"kY=0", "gelfand-or-weakly-regular"}, "classes"},
         minimal_members_agree},
        {{"T24", "saturations by disjoint multiplicative sets stay in the class; zero components and pure ideals are strong",
          {"A-disjoint-I", "kY=0"}, "multiplicative sets x ideals"},
         saturations},
        {{"T26", "every ideal is strong exactly when k(Y)=0 and R is von Neumann regular", {"kY=0", "max-in-Y"}, "one per case"},
         regular_ring_characterization},
    };
}

} // namespace spectral::suite
