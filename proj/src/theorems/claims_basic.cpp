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

YSet interior(const YSpace& space, const YSet& T) { return topo(space, T, TopoOp::Interior); }
YSet outside(const YSpace& space, const YSet& T) { return topo(space, T, TopoOp::Complement); }

void colon_of_kernel(Checker& ck) {
    auto& ctx = ck.ctx;
    const YSpace& Y = ctx.space();
    for (const auto& S : ctx.subsets()) {
        ck.visit();
        const Ideal lhs = colon(Y.kY(), S);
        const Ideal rhs = kernel(Y, outside(Y, hull(Y, S)));
        ck.expect(lhs == rhs, [&] {
            return Witness{{"S", show(ctx.ring(), S)}, {"(kY:S)", show(lhs)}, {"k(Y \\ h(S))", show(rhs)}};
        });
    }
}

void ring_of_sets(Checker& ck) {
    auto& ctx = ck.ctx;
    const YSpace& Y = ctx.space();
    const HYLattice& L = ctx.lattice();
    const auto& ideals = ctx.ideals();

    ck.expect(hull(Y, ctx.zero()) == Y.all() && hull(Y, ctx.whole()).empty(),
              [&] { return Witness{{"h(0)", show(Y, hull(Y, ctx.zero()))}, {"h(R)", show(Y, hull(Y, ctx.whole()))}}; });

    for (std::size_t i = 0; i < ideals.size(); ++i)
        for (std::size_t j = 0; j < ideals.size(); ++j) {
            ck.visit();
            const auto& I = ideals[i];
            const auto& J = ideals[j];
            YSet meet = Y.ideal_hull(i);
            meet &= Y.ideal_hull(j);
            YSet join = Y.ideal_hull(i);
            join |= Y.ideal_hull(j);
            ck.expect(meet == hull(Y, combine(IdealOp::Sum, I, J)), [&] {
                return Witness{{"I", show(I)}, {"J", show(J)}, {"h(I) n h(J)", show(Y, meet)}};
            });
            ck.expect(join == hull(Y, combine(IdealOp::Product, I, J)), [&] {
                return Witness{{"I", show(I)}, {"J", show(J)}, {"h(I) u h(J)", show(Y, join)}};
            });
        }

    std::set<YSet> from_gens;
    for (const auto& I : ideals) from_gens.insert(hull(Y, I.gens));
    std::set<YSet> listed(L.elements().begin(), L.elements().end());
    ck.expect(from_gens == listed, [&] {
        return Witness{{"lattice size", std::to_string(L.size())}, {"finite hulls", std::to_string(from_gens.size())}};
    });

    for (std::size_t a = 0; a < L.size(); ++a)
        for (std::size_t b = 0; b < L.size(); ++b)
            for (std::size_t c = 0; c < L.size(); ++c) {
                ck.visit();
                ck.expect(L.meet(a, L.join(b, c)) == L.join(L.meet(a, b), L.meet(a, c)), [&] {
                    return Witness{{"A", show(Y, L.element(a))}, {"B", show(Y, L.element(b))}, {"C", show(Y, L.element(c))}};
                });
            }

    for (const auto& f : ctx.all_filters()) {
        const Ideal pre = to_ideal(f);
        ck.expect(span(ctx.ring(), pre.members).members == pre.members,
                  [&] { return Witness{{"filter", show(f)}, {"H^-1(F)", show(ctx.ring(), pre.members)}}; });
        for (const auto& S : ctx.subsets()) {
            ck.visit();
            const bool in_filter = f.contains(L.index(hull(Y, S)));
            ck.expect(in_filter == all_in(S, pre), [&] {
                return Witness{{"filter", show(f)}, {"F", show(ctx.ring(), S)}, {"h(F) in filter", show(in_filter)}};
            });
        }
    }
    for (const auto& I : ideals) {
        bool is_filter = true;
        try {
            make_filter(L, to_filter(L, I).members);
        } catch (const Error&) {
            is_filter = false;
        }
        ck.expect(is_filter, [&] { return Witness{{"I", show(I)}}; });
    }
}

void interior_by_annihilator(Checker& ck) {
    auto& ctx = ck.ctx;
    const YSpace& Y = ctx.space();
    if (!ck.given("kY=0", ctx.ky_zero())) return;
    for (const auto& S : ctx.subsets()) {
        ck.visit();
        const YSet lhs = interior(Y, hull(Y, S));
        const YSet rhs = outside(Y, hull(Y, annihilator(ctx.ring(), S)));
        ck.expect(lhs == rhs, [&] {
            return Witness{{"S", show(ctx.ring(), S)},
                           {"interior(h(S))", show(Y, lhs)},
                           {"complement(h(Ann(S)))", show(Y, rhs)}};
        });
    }
}

void dense_subspace(Checker& ck) {
    auto& ctx = ck.ctx;
    const YSpace& Y = ctx.space();
    const YSpace& X = ctx.space_over(BitSet::full(ctx.spec().primes.size()));
    const auto& subsets = ctx.subsets();

    const bool a = Y.kY() == ctx.spec().rad;
    bool b = true;
    bool c = true;
    Witness where;
    for (const auto& S : subsets) {
        const YSet iy = interior(Y, hull(Y, S));
        const YSet ix = interior(X, hull(X, S));
        for (const auto& T : subsets) {
            ck.visit();
            const bool by = iy.is_subset_of(hull(Y, T));
            const bool bx = ix.is_subset_of(hull(X, T));
            const bool cy = iy == interior(Y, hull(Y, T));
            const bool cx = ix == interior(X, hull(X, T));
            if ((by != bx || cy != cx) && where.empty())
                where = {{"S", show(ctx.ring(), S)}, {"T", show(ctx.ring(), T)}};
            b = b && by == bx;
            c = c && cy == cx;
        }
    }
    auto report = [&](std::string_view lhs, bool l, std::string_view rhs, bool r) {
        Witness w{{std::string(lhs), show(l)}, {std::string(rhs), show(r)}};
        w.insert(w.end(), where.begin(), where.end());
        return w;
    };
    ck.expect(a == b, [&] { return report("k(Y)=Rad", a, "interior inclusions agree", b); });
    ck.expect(b == c, [&] { return report("interior inclusions agree", b, "interior equalities agree", c); });

    if (!ck.given("kY=0", ctx.ky_zero())) return;
    bool d = true;
    for (const auto& S : subsets) {
        ck.visit();
        const Ideal ann2 = annihilator(ctx.ring(), annihilator(ctx.ring(), S).members);
        if (!kernel(Y, hull(Y, S)).is_subset_of(ann2)) {
            d = false;
            if (where.empty()) where = {{"S", show(ctx.ring(), S)}};
            break;
        }
    }
    ck.expect(a == d, [&] { return report("k(Y)=Rad", a, "kh(S) in Ann^2(S)", d); });
}

void minimal_hulls_open(Checker& ck) {
    auto& ctx = ck.ctx;
    const YSpace& M = ctx.space_over(BitSet::full(ctx.spec().primes.size()));
    for (const auto& F : ctx.subsets()) {
        ck.visit();
        const YSet h = hull(M, F);
        ck.expect(h == interior(M, h), [&] { return Witness{{"F", show(ctx.ring(), F)}, {"h_m(F)", show(M, h)}}; });
        const YSet via_colon = outside(M, hull(M, colon(ctx.spec().rad, F)));
        ck.expect(h == via_colon, [&] {
            return Witness{{"F", show(ctx.ring(), F)}, {"h_m(F)", show(M, h)}, {"complement h_m(Rad:F)", show(M, via_colon)}};
        });
    }
}

void interior_characterizations(Checker& ck) {
    auto& ctx = ck.ctx;
    const YSpace& Y = ctx.space();
    const YSpace& M = ctx.space_over(BitSet::full(ctx.spec().primes.size()));
    if (!ck.given("kY=Rad", Y.kY() == ctx.spec().rad)) return;
    const auto& ideals = ctx.ideals();
    const auto& subsets = ctx.subsets();

    for (std::size_t i = 0; i < ideals.size(); ++i) {
        ck.visit();
        const Ideal& I = ideals[i];
        std::set<YSet> single;
        for (auto b : I.members) single.insert(interior(Y, Y.hull_of(Elem{static_cast<std::uint32_t>(b)})));
        std::set<YSet> finite;
        for (auto j : ctx.subideals(i)) finite.insert(interior(Y, Y.ideal_hull(j)));

        auto by_element = [&](const std::set<YSet>& opens) {
            for (const auto& o : opens)
                for (Elem a : ctx.ring().elements())
                    if (o.is_subset_of(Y.hull_of(a)) && !I.contains(a)) return false;
            return true;
        };
        auto by_subset = [&](const std::set<YSet>& opens) {
            for (const auto& o : opens)
                for (const auto& S : subsets)
                    if (o.is_subset_of(hull(Y, S)) && !all_in(S, I)) return false;
            return true;
        };
        const bool z = is_hy(M, I);
        const bool sz = is_strong_hy(M, I);
        const bool a1 = by_element(single);
        const bool a2 = by_subset(single);
        const bool b1 = by_element(finite);
        const bool b2 = by_subset(finite);
        ck.expect(z == a1 && a1 == a2, [&] {
            return Witness{{"I", show(I)}, {"z-zero ideal", show(z)}, {"element form", show(a1)}, {"subset form", show(a2)}};
        });
        ck.expect(sz == b1 && b1 == b2, [&] {
            return Witness{{"I", show(I)}, {"sz-zero ideal", show(sz)}, {"element form", show(b1)}, {"subset form", show(b2)}};
        });
    }
}

void minimal_comparison(Checker& ck) {
    auto& ctx = ck.ctx;
    const YSpace& Y = ctx.space();
    const YSpace& M = ctx.space_over(BitSet::full(ctx.spec().primes.size()));
    const auto& ideals = ctx.ideals();

    const bool a = Y.kY() == ctx.spec().rad;
    bool b = true;
    bool c = true;
    bool d = true;
    bool e = true;
    for (std::size_t i = 0; i < ideals.size(); ++i) {
        ck.visit();
        const Ideal& I = ideals[i];
        if (is_hy(M, I) && !ctx.bits(i).hy) b = false;
        if (is_strong_hy(M, I) && !ctx.bits(i).strong) c = false;
        if (!ideals[Y.ideal_kernel_hull(i)].is_subset_of(ideals[M.ideal_kernel_hull(i)])) d = false;
    }
    for (Elem x : ctx.ring().elements()) {
        ck.visit();
        if (!ideals[Y.kernel_hull_index(x)].is_subset_of(ideals[M.kernel_hull_index(x)])) e = false;
    }
    ck.expect(a == b && b == c && c == d && d == e, [&] {
        return Witness{{"k(Y)=Rad", show(a)},
                       {"z-zero implies H_Y", show(b)},
                       {"sz-zero implies strong", show(c)},
                       {"kh_Y(F) in kh_m(F)", show(d)},
                       {"kh_Y(a) in kh_m(a)", show(e)}};
    });
}

} // namespace

std::vector<Claim> basic_claims() {
    return {
        {{"T1", "colon of k(Y) by a set equals the kernel of the hull complement", {}, "subsets"}, colon_of_kernel},
        {{"T2", "hulls of finite sets form a distributive ring of sets, with matching filter maps", {}, "ideals^2, lattice^3, filters x subsets"},
         ring_of_sets},
        {{"T5", "interior of a hull is the complement of the annihilator's hull", {"kY=0"}, "subsets"},
         interior_by_annihilator},
        {{"T6", "interior comparisons agree with Spec exactly when k(Y) is the nilradical", {"kY=0"}, "subsets^2"},
         dense_subspace},
        {{"T7", "hulls of finite sets in the minimal spectrum are open", {}, "subsets"}, minimal_hulls_open},
        {{"T8", "interior forms of the z-zero and sz-zero conditions", {"kY=Rad"}, "ideals x elements, ideals x subsets"},
         interior_characterizations},
        {{"T9", "five equivalent ways for z-zero ideals to be H_Y-ideals", {}, "ideals, elements"}, minimal_comparison},
    };
}

} // namespace spectral::suite
