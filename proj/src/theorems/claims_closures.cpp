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

constexpr IdealClass kPair[] = {IdealClass::Hy, IdealClass::Strong};

std::string class_name(IdealClass c) { return std::string(to_string(c)); }

Elem elem(std::size_t i) { return Elem{static_cast<std::uint32_t>(i)}; }

/// Maximal class members of [lower, upper], proper ones only, by scan.
std::vector<std::size_t> maximal_between(const CaseContext& ctx, const Ideal& lower, const Ideal& upper, IdealClass c) {
    const auto& ideals = ctx.ideals();
    std::vector<std::size_t> pool;
    for (std::size_t k = 0; k < ideals.size(); ++k)
        if (ideals[k].is_proper() && ctx.in(k, c) && lower.is_subset_of(ideals[k]) && ideals[k].is_subset_of(upper))
            pool.push_back(k);
    std::vector<std::size_t> out;
    for (auto k : pool)
        if (std::none_of(pool.begin(), pool.end(), [&](std::size_t m) { return m != k && ideals[k].is_subset_of(ideals[m]); }))
            out.push_back(k);
    return out;
}

std::vector<std::size_t> positions(const CaseContext& ctx, const std::vector<Ideal>& list) {
    std::vector<std::size_t> out;
    for (const auto& I : list) out.push_back(ctx.index(I));
    std::sort(out.begin(), out.end());
    return out;
}

void maximal_members(Checker& ck) {
    auto& ctx = ck.ctx;
    const auto& ideals = ctx.ideals();
    const Ideal& ky = ctx.space().kY();
    const bool zero = ck.given("kY=0", ctx.ky_zero());
    for (IdealClass c : kPair) {
        for (std::size_t i = 0; i < ideals.size(); ++i) {
            if (!ideals[i].is_proper() || !ctx.in(i, c)) continue;
            for (const auto& J : ideals) {
                if (!ideals[i].is_subset_of(J)) continue;
                ck.visit();
                const auto found = positions(ctx, extremal_search(ctx.space(), MaxlInInterval{ideals[i], J}, c));
                const auto scan = maximal_between(ctx, ideals[i], J, c);
                ck.expect(!found.empty() && found == scan, [&] {
                    return Witness{{"class", class_name(c)}, {"I", show(ideals[i])}, {"J", show(J)},
                                   {"maximal members found", std::to_string(found.size())}, {"by scan", std::to_string(scan.size())}};
                });
            }
        }
        for (const auto& J : ideals) {
            if (ky.is_whole() || !ky.is_subset_of(J)) continue;
            ck.visit();
            const auto below = extremal_search(ctx.space(), MaxlBelow{J}, c);
            ck.expect(!below.empty(), [&] {
                return Witness{{"class", class_name(c)}, {"J", show(J)}, {"maximal members below", "none"}};
            });
            if (!is_prime_ideal(J)) continue;
            for (const auto& Q : below)
                ck.expect(is_prime_ideal(Q), [&] {
                    return Witness{{"class", class_name(c)}, {"prime P", show(J)}, {"maximal member below P", show(Q)}};
                });
        }
        if (!zero) continue;
        for (std::size_t p : ctx.spec().prime_ideal_index) {
            ck.visit();
            const Ideal& P = ideals[p];
            if (ctx.in(p, c)) continue;
            const auto below = extremal_search(ctx.space(), MaxlBelow{P}, c);
            ck.expect(std::any_of(below.begin(), below.end(), [](const Ideal& Q) { return is_prime_ideal(Q); }), [&] {
                return Witness{{"class", class_name(c)}, {"prime P", show(P)}, {"prime maximal member below", "none"}};
            });
        }
    }
}

/// I_0 = I, I_(k+1) = sum of kh_Y(a) over a in I_k, until it stops moving.
Ideal iterate_kernel_hulls(const CaseContext& ctx, const Ideal& I) {
    const auto& ideals = ctx.ideals();
    Ideal cur = I;
    for (;;) {
        Ideal next = ctx.zero();
        for (auto a : cur.members) next = combine(IdealOp::Sum, next, ideals[ctx.space().kernel_hull_index(elem(a))]);
        if (next == cur) return cur;
        cur = next;
    }
}

Ideal power(const Ideal& I, int n) {
    Ideal out = I;
    for (int k = 1; k < n; ++k) out = combine(IdealOp::Product, out, I);
    return out;
}

Ideal quasi(const Ideal& I) { return quasi_regular(I); }

void closures(Checker& ck) {
    auto& ctx = ck.ctx;
    const Ring& R = ctx.ring();
    const YSpace& Y = ctx.space();
    const auto& ideals = ctx.ideals();
    const std::size_t n = ideals.size();

    std::vector<std::size_t> H(n), SH(n), KH(n);
    for (std::size_t i = 0; i < n; ++i) {
        H[i] = ctx.index(closure_hy(Y, ideals[i]));
        SH[i] = ctx.index(closure_strong(Y, ctx.lattice(), ideals[i]).strong);
        KH[i] = Y.ideal_kernel_hull(i);
    }
    const bool hy_prop = ck.given("hY-property", hy_property(Y).holds);

    for (std::size_t i = 0; i < n; ++i) {
        ck.visit();
        const Ideal& I = ideals[i];
        auto w = [&](std::string what, const Ideal& got, const Ideal& want) {
            return Witness{{"I", show(I)}, {what, show(got)}, {"expected", show(want)}};
        };
        ck.expect(H[i] == smallest_over(Y, i, IdealClass::Hy), [&] { return w("I_H", ideals[H[i]], ideals[smallest_over(Y, i, IdealClass::Hy)]); });
        ck.expect(SH[i] == smallest_over(Y, i, IdealClass::Strong), [&] { return w("I_SH", ideals[SH[i]], ideals[smallest_over(Y, i, IdealClass::Strong)]); });
        ck.expect(KH[i] == smallest_over(Y, i, IdealClass::Hilbert), [&] { return w("kh(I)", ideals[KH[i]], ideals[smallest_over(Y, i, IdealClass::Hilbert)]); });
        const Ideal iterated = iterate_kernel_hulls(ctx, I);
        ck.expect(ctx.index(iterated) == H[i], [&] { return w("iterated kernel hulls", iterated, ideals[H[i]]); });

        BitSet by_hull(R.size()), by_kernel(R.size()), union_kh(R.size()), any_subset(R.size()), by_element(R.size());
        Ideal sum_kh = ctx.zero();
        for (auto j : ctx.subideals(i)) {
            const YSet& hJ = Y.ideal_hull(j);
            const Ideal& khJ = ideals[Y.ideal_kernel_hull(j)];
            union_kh |= khJ.members;
            sum_kh = combine(IdealOp::Sum, sum_kh, khJ);
            for (Elem a : R.elements()) {
                if (hJ.is_subset_of(Y.hull_of(a))) by_hull.set(a.index);
                if (ideals[Y.kernel_hull_index(a)].is_subset_of(khJ)) by_kernel.set(a.index);
            }
        }
        for (Elem a : R.elements()) {
            if (Y.ideal_hull(i).is_subset_of(Y.hull_of(a))) any_subset.set(a.index);
            for (auto b : I.members)
                if (Y.hull_of(elem(b)).is_subset_of(Y.hull_of(a))) by_element.set(a.index);
        }
        const Ideal& sh = ideals[SH[i]];
        ck.expect(sh.members == by_hull && sh.members == by_kernel, [&] {
            return Witness{{"I", show(I)}, {"I_SH", show(sh)}, {"finite hull form", show(R, by_hull)}, {"kernel hull form", show(R, by_kernel)}};
        });
        ck.expect(sh.members == union_kh && sh == sum_kh, [&] {
            return Witness{{"I", show(I)}, {"I_SH", show(sh)}, {"union of kh(F)", show(R, union_kh)}, {"sum of kh(F)", show(sum_kh)}};
        });
        ck.expect(ideals[KH[i]].members == any_subset, [&] { return Witness{{"I", show(I)}, {"kh(I)", show(ideals[KH[i]])}, {"subset form", show(R, any_subset)}}; });
        if (hy_prop)
            ck.expect(H[i] == SH[i] && sh.members == by_element, [&] {
                return Witness{{"I", show(I)}, {"I_H", show(ideals[H[i]])}, {"I_SH", show(sh)}, {"single element form", show(R, by_element)}};
            });

        // Chain and invariance under powers and radical.
        const Ideal rad = radical(I);
        ck.expect(rad.is_subset_of(ideals[H[i]]) && ideals[H[i]].is_subset_of(sh) && sh.is_subset_of(ideals[KH[i]]),
                  [&] { return Witness{{"I", show(I)}, {"sqrt(I)", show(rad)}, {"I_H", show(ideals[H[i]])}, {"I_SH", show(sh)}, {"kh(I)", show(ideals[KH[i]])}}; });
        for (int e = 1; e <= 3; ++e) {
            const std::size_t p = ctx.index(power(I, e));
            ck.expect(ideals[p].is_subset_of(I), [&] { return w("I^n", ideals[p], I); });
            ck.expect(H[p] == H[i] && SH[p] == SH[i] && KH[p] == KH[i], [&] { return w("closure of I^n", ideals[SH[p]], sh); });
        }
        const std::size_t r = ctx.index(rad);
        ck.expect(H[r] == H[i] && SH[r] == SH[i] && KH[r] == KH[i], [&] { return w("closure of sqrt(I)", ideals[SH[r]], sh); });

        // Closure operator laws.
        for (const auto* cl : {&H, &SH, &KH}) {
            const std::size_t c = (*cl)[i];
            ck.expect(I.is_subset_of(ideals[c]) && (*cl)[c] == c, [&] { return w("closure", ideals[c], ideals[(*cl)[c]]); });
            for (std::size_t j = 0; j < n; ++j)
                if (I.is_subset_of(ideals[j]))
                    ck.expect(ideals[c].is_subset_of(ideals[(*cl)[j]]), [&] { return w("closure of a larger ideal", ideals[(*cl)[j]], ideals[c]); });
        }

        // Products and intersections.
        for (std::size_t j = 0; j < n; ++j) {
            const std::size_t prod = ctx.index(combine(IdealOp::Product, I, ideals[j]));
            const std::size_t meet = ctx.index(combine(IdealOp::Intersect, I, ideals[j]));
            for (const auto* cl : {&H, &SH, &KH}) {
                const Ideal both = combine(IdealOp::Intersect, ideals[(*cl)[i]], ideals[(*cl)[j]]);
                ck.expect((*cl)[prod] == (*cl)[meet] && ideals[(*cl)[prod]] == both, [&] {
                    return Witness{{"I", show(I)}, {"J", show(ideals[j])}, {"closure of IJ", show(ideals[(*cl)[prod]])},
                                   {"closure of I n J", show(ideals[(*cl)[meet]])}, {"meet of closures", show(both)}};
                });
            }
        }
    }

    // Comparison with another subset X of the spectrum.
    for (const auto& mask : ctx.prime_subsets()) {
        const YSpace& X = ctx.space_over(mask);
        for (IdealClass c : {IdealClass::Hy, IdealClass::Strong, IdealClass::Hilbert}) {
            const bool y_in_x = std::all_of(Y.primes().begin(), Y.primes().end(), [&](const Ideal& P) { return in_class(X, P, c); });
            if (!y_in_x) continue;
            for (std::size_t i = 0; i < n; ++i) {
                ck.visit();
                const std::size_t cx = smallest_over(X, i, c);
                const std::size_t cy = c == IdealClass::Hy ? H[i] : c == IdealClass::Strong ? SH[i] : KH[i];
                ck.expect(ideals[cx].is_subset_of(ideals[cy]), [&] {
                    return Witness{{"class", class_name(c)}, {"X", show_mask(ctx.spec(), mask)}, {"I", show(ideals[i])},
                                   {"closure over X", show(ideals[cx])}, {"closure over Y", show(ideals[cy])}};
                });
            }
        }
    }

    // Quasi-regular parts.
    const bool zero = ck.given("kY=0", ctx.ky_zero());
    const bool max_in_y = ck.given("max-in-Y", ctx.max_in_y());
    for (std::size_t i = 0; i < n; ++i) {
        ck.visit();
        const Ideal m = quasi(ideals[i]);
        const std::size_t mi = ctx.index(m);
        if (zero)
            ck.expect(H[mi] == mi && SH[mi] == mi, [&] {
                return Witness{{"I", show(ideals[i])}, {"m(I)", show(m)}, {"m(I)_H", show(ideals[H[mi]])}, {"m(I)_SH", show(ideals[SH[mi]])}};
            });
        if (max_in_y)
            ck.expect(quasi(ideals[H[i]]) == m && quasi(ideals[SH[i]]) == m && quasi(ideals[KH[i]]) == m, [&] {
                return Witness{{"I", show(ideals[i])}, {"m(I)", show(m)}, {"m(kh(I))", show(quasi(ideals[KH[i]]))}};
            });
    }
}

void singular_ideals(Checker& ck) {
    auto& ctx = ck.ctx;
    const YSpace& Y = ctx.space();
    const auto& ideals = ctx.ideals();
    const bool zero = ck.given("kY=0", ctx.ky_zero());
    const bool prop_a = ck.given("property-A", ctx.flags().property_A);
    const bool reduced = ck.given("reduced", ctx.flags().reduced);
    if (!zero || !prop_a) return;

    std::vector<std::vector<std::size_t>> maximal;
    for (IdealClass c : kPair) maximal.push_back(positions(ctx, extremal_search(Y, MaximalProper{}, c)));

    for (std::size_t i = 0; i < ideals.size(); ++i) {
        const Ideal& I = ideals[i];
        if (!ideal_flags(I, ideals).singular) continue;
        ck.visit();
        if (reduced) {
            const Ideal sh = closure_strong(Y, ctx.lattice(), I).strong;
            const Ideal h = closure_hy(Y, I);
            ck.expect(sh.is_proper() && h.is_proper(), [&] { return Witness{{"singular I", show(I)}, {"I_SH", show(sh)}, {"I_H", show(h)}}; });
        }
        const bool maximal_ideal = I.is_proper() && std::none_of(ideals.begin(), ideals.end(), [&](const Ideal& J) {
                                       return J.is_proper() && J != I && I.is_subset_of(J);
                                   });
        for (std::size_t k = 0; k < 2; ++k) {
            const IdealClass c = kPair[k];
            if (maximal_ideal)
                ck.expect(ctx.in(i, c), [&] { return Witness{{"class", class_name(c)}, {"maximal ideal of zero-divisors", show(I)}}; });
            const bool covered = std::any_of(maximal[k].begin(), maximal[k].end(), [&](std::size_t m) {
                return I.is_subset_of(ideals[m]) && is_prime_ideal(ideals[m]);
            });
            ck.expect(covered, [&] { return Witness{{"class", class_name(c)}, {"singular I", show(I)}, {"prime maximal member above", "none"}}; });
        }
    }
}

void sums(Checker& ck) {
    auto& ctx = ck.ctx;
    const YSpace& Y = ctx.space();
    const auto& ideals = ctx.ideals();
    const std::size_t n = ideals.size();
    const bool max_in_y = ck.given("max-in-Y", ctx.max_in_y());
    for (IdealClass c : kPair) {
        std::vector<std::size_t> cl(n);
        for (std::size_t i = 0; i < n; ++i)
            cl[i] = ctx.index(c == IdealClass::Hy ? closure_hy(Y, ideals[i]) : closure_strong(Y, ctx.lattice(), ideals[i]).strong);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i; j < n; ++j) {
                ck.visit();
                const std::size_t s = ctx.index(combine(IdealOp::Sum, ideals[i], ideals[j]));
                const std::size_t t = ctx.index(combine(IdealOp::Sum, ideals[cl[i]], ideals[cl[j]]));
                auto w = [&] {
                    return Witness{{"class", class_name(c)}, {"I", show(ideals[i])}, {"J", show(ideals[j])},
                                   {"closure of I+J", show(ideals[cl[s]])}, {"sum of closures", show(ideals[t])}};
                };
                if (ctx.in(i, c) && ctx.in(j, c)) ck.expect(ctx.in(s, c) == (cl[s] == t), w);
                ck.expect(cl[s] == cl[t], w);
                if (max_in_y) ck.expect(ideals[s].is_whole() == ideals[t].is_whole(), w);
            }
    }
}

void interior_closure(Checker& ck) {
    auto& ctx = ck.ctx;
    if (!ck.given("kY=0", ctx.ky_zero())) return;
    const Ring& R = ctx.ring();
    const YSpace& Y = ctx.space();
    const auto& ideals = ctx.ideals();
    const YSpace& min_space = ctx.space_over(ctx.spec().min_mask);
    for (std::size_t i = 0; i < ideals.size(); ++i) {
        ck.visit();
        const Ideal& closure = ideals[smallest_over(min_space, i, IdealClass::Strong)];
        BitSet scan(R.size());
        for (auto j : ctx.subideals(i)) {
            const YSet inner = topo(Y, Y.ideal_hull(j), TopoOp::Interior);
            for (Elem a : R.elements())
                if (inner.is_subset_of(Y.hull_of(a))) scan.set(a.index);
        }
        ck.expect(closure.members == scan, [&] {
            return Witness{{"I", show(ideals[i])}, {"strong closure over Min", show(closure)}, {"interior form", show(R, scan)}};
        });
    }
}

} // namespace

std::vector<Claim> closure_claims() {
    return {
        {{"T31", "maximal proper members exist in every interval and lie in Spec below a prime", {"kY=0"},
          "classes x members x ideals"},
         maximal_members},
        {{"T32", "closure operators I_H, I_SH and kh_Y: formulas, chain, powers, products and quasi-regular parts",
          {"hY-property", "kY=0", "max-in-Y"}, "ideals, ideals^2, subsets of Spec x ideals"},
         closures},
        {{"T33", "ideals of zero-divisors sit inside proper and prime class members", {"kY=0", "property-A", "reduced"},
          "singular ideals"},
         singular_ideals},
        {{"T34", "closures of sums agree with sums of closures", {"max-in-Y"}, "classes x ideal pairs"}, sums},
        {{"T35", "strong closure over Min(R) through interiors of hulls", {"kY=0"}, "ideals"}, interior_closure},
    };
}

} // namespace spectral::suite
