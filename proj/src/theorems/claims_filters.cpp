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
#include <set>

#include "theorems/context.hpp"

namespace spectral::suite {

namespace {

/// H_Y and H_Y^{-1} tabulated for the case.
struct Maps {
    std::vector<BitSet> image;       // H_Y(I) per ideal
    std::vector<std::size_t> preimage; // H_Y^{-1}(F) per filter, as an ideal position
};

Maps tabulate(CaseContext& ctx) {
    Maps m;
    for (const auto& I : ctx.ideals()) m.image.push_back(to_filter(ctx.lattice(), I).members);
    for (const auto& f : ctx.all_filters()) m.preimage.push_back(ctx.index(to_ideal(f)));
    return m;
}

bool is_maximal_ideal(const CaseContext& ctx, const Ideal& I) {
    return I.is_proper() && std::none_of(ctx.ideals().begin(), ctx.ideals().end(), [&](const Ideal& J) {
               return J.is_proper() && J != I && I.is_subset_of(J);
           });
}

std::vector<BitSet> masks(const std::vector<HYFilter>& fs) {
    std::vector<BitSet> out;
    for (const auto& f : fs) out.push_back(f.members);
    std::sort(out.begin(), out.end());
    return out;
}

/// Ultrafilters found by scanning every proper filter.
std::vector<BitSet> ultra_by_scan(const std::vector<HYFilter>& all) {
    std::vector<BitSet> out;
    for (const auto& f : all) {
        if (!f.is_proper()) continue;
        const bool maximal = std::none_of(all.begin(), all.end(), [&](const HYFilter& g) {
            return g.is_proper() && g.members != f.members && f.members.is_subset_of(g.members);
        });
        if (maximal) out.push_back(f.members);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<BitSet> min_primes_by_scan(const std::vector<HYFilter>& primes, const HYFilter& f) {
    std::vector<BitSet> over;
    for (const auto& p : primes)
        if (f.members.is_subset_of(p.members)) over.push_back(p.members);
    std::vector<BitSet> out;
    for (const auto& p : over)
        if (std::none_of(over.begin(), over.end(), [&](const BitSet& q) { return q != p && q.is_subset_of(p); }))
            out.push_back(p);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<BitSet> min_primes_listed(const HYFilter& f) {
    if (!f.is_proper()) return {};
    return masks(min_prime_filters_over(f));
}

void primary_properties(Checker& ck) {
    auto& ctx = ck.ctx;
    const auto& fs = ctx.all_filters();
    const auto& ideals = ctx.ideals();
    const Maps m = tabulate(ctx);
    const std::size_t L = ctx.lattice().size();

    for (std::size_t f = 0; f < fs.size(); ++f) {
        ck.visit();
        const Ideal& pre = ideals[m.preimage[f]];
        ck.expect(pre.is_whole() == (fs[f].members.count() == L),
                  [&] { return Witness{{"filter", show(fs[f])}, {"H^-1(F)", show(pre)}}; });
        ck.expect(m.image[m.preimage[f]] == fs[f].members,
                  [&] { return Witness{{"filter", show(fs[f])}, {"H(H^-1(F))", show(ctx.ring(), m.image[m.preimage[f]])}}; });
        ck.expect(ctx.bits(m.preimage[f]).strong, [&] { return Witness{{"filter", show(fs[f])}, {"H^-1(F)", show(pre)}}; });
        for (std::size_t g = 0; g < fs.size(); ++g)
            if (fs[f].members.is_subset_of(fs[g].members))
                ck.expect(pre.is_subset_of(ideals[m.preimage[g]]),
                          [&] { return Witness{{"F", show(fs[f])}, {"G", show(fs[g])}}; });
    }

    const bool max_in_y = ck.given("max-in-Y", ctx.max_in_y());
    for (std::size_t i = 0; i < ideals.size(); ++i) {
        ck.visit();
        const Ideal& I = ideals[i];
        const Ideal back = to_ideal(make_filter(ctx.lattice(), m.image[i]));
        ck.expect(I.is_subset_of(back), [&] { return Witness{{"I", show(I)}, {"H^-1(H(I))", show(back)}}; });
        ck.expect(ctx.bits(i).strong == (back == I), [&] { return Witness{{"I", show(I)}, {"H^-1(H(I))", show(back)}}; });
        ck.expect(m.image[ctx.index(back)] == m.image[i], [&] { return Witness{{"I", show(I)}, {"H^-1(H(I))", show(back)}}; });
        for (std::size_t j = 0; j < ideals.size(); ++j)
            if (I.is_subset_of(ideals[j]))
                ck.expect(m.image[i].is_subset_of(m.image[j]),
                          [&] { return Witness{{"I", show(I)}, {"J", show(ideals[j])}}; });
        const bool proper_image = !m.image[i].test(ctx.lattice().bottom());
        if (I.is_proper() && ctx.bits(i).strong)
            ck.expect(proper_image, [&] { return Witness{{"proper strong I", show(I)}}; });
        if (I.is_proper() && max_in_y) ck.expect(proper_image, [&] { return Witness{{"proper I", show(I)}}; });
    }
}

void filter_isomorphism(Checker& ck) {
    auto& ctx = ck.ctx;
    const auto& fs = ctx.all_filters();
    const auto& ideals = ctx.ideals();
    const Maps m = tabulate(ctx);

    for (std::size_t f = 0; f < fs.size(); ++f)
        for (std::size_t g = 0; g < fs.size(); ++g) {
            ck.visit();
            ck.expect((f == g) == (m.preimage[f] == m.preimage[g]),
                      [&] { return Witness{{"F", show(fs[f])}, {"G", show(fs[g])}}; });
        }
    std::set<BitSet> covered;
    for (std::size_t i = 0; i < ideals.size(); ++i) {
        if (!ctx.bits(i).strong) continue;
        covered.insert(m.image[i]);
        for (std::size_t j = 0; j < ideals.size(); ++j) {
            if (!ctx.bits(j).strong) continue;
            ck.visit();
            ck.expect((m.image[i] == m.image[j]) == (i == j),
                      [&] { return Witness{{"I", show(ideals[i])}, {"J", show(ideals[j])}}; });
            ck.expect(ideals[i].is_subset_of(ideals[j]) == m.image[i].is_subset_of(m.image[j]),
                      [&] { return Witness{{"I", show(ideals[i])}, {"J", show(ideals[j])}}; });
        }
    }
    for (const auto& f : fs) {
        ck.visit();
        ck.expect(covered.count(f.members) == 1, [&] { return Witness{{"filter not hit by a strong ideal", show(f)}}; });
    }
}

void prime_and_ultra(Checker& ck) {
    auto& ctx = ck.ctx;
    const auto& fs = ctx.all_filters();
    const auto& ideals = ctx.ideals();
    const Maps m = tabulate(ctx);

    std::vector<BitSet> primes_by_scan;
    for (const auto& f : fs)
        if (f.is_prime()) primes_by_scan.push_back(f.members);
    std::sort(primes_by_scan.begin(), primes_by_scan.end());
    const auto primes = masks(ctx.prime_filters());
    ck.expect(primes == primes_by_scan, [&] {
        return Witness{{"prime filters listed", std::to_string(primes.size())}, {"prime filters by scan", std::to_string(primes_by_scan.size())}};
    });
    const auto ultras = masks(ctx.ultra_filters());
    ck.expect(ultras == ultra_by_scan(fs), [&] {
        return Witness{{"ultrafilters listed", std::to_string(ultras.size())}, {"ultrafilters by scan", std::to_string(ultra_by_scan(fs).size())}};
    });

    for (std::size_t f = 0; f < fs.size(); ++f) {
        ck.visit();
        const std::size_t p = m.preimage[f];
        const bool prime_strong = is_prime_ideal(ideals[p]) && ctx.bits(p).strong;
        ck.expect(prime_strong == fs[f].is_prime(),
                  [&] { return Witness{{"filter", show(fs[f])}, {"H^-1(F)", show(ideals[p])}}; });
    }

    std::vector<BitSet> prime_images;
    std::vector<BitSet> maximal_images;
    const auto maximal = extremal_search(ctx.space(), MaximalProper{}, IdealClass::Strong);
    for (std::size_t i = 0; i < ideals.size(); ++i) {
        if (!ctx.bits(i).strong) continue;
        ck.visit();
        const bool prime = is_prime_ideal(ideals[i]);
        const bool prime_image = make_filter(ctx.lattice(), m.image[i]).is_prime();
        ck.expect(prime == prime_image, [&] { return Witness{{"strong I", show(ideals[i])}, {"H(I) prime", show(prime_image)}}; });
        if (prime) prime_images.push_back(m.image[i]);
        const bool is_max = std::find(maximal.begin(), maximal.end(), ideals[i]) != maximal.end();
        const bool from_ultra = std::any_of(fs.begin(), fs.end(), [&](const HYFilter& f) {
            return f.is_ultra() && ctx.index(to_ideal(f)) == i;
        });
        ck.expect(is_max == from_ultra, [&] {
            return Witness{{"strong I", show(ideals[i])}, {"maximal proper strong", show(is_max)}, {"preimage of an ultrafilter", show(from_ultra)}};
        });
        if (is_max) maximal_images.push_back(m.image[i]);
    }
    std::sort(prime_images.begin(), prime_images.end());
    std::sort(maximal_images.begin(), maximal_images.end());
    ck.expect(prime_images == primes, [&] {
        return Witness{{"prime strong ideals", std::to_string(prime_images.size())}, {"prime filters", std::to_string(primes.size())}};
    });
    ck.expect(maximal_images == ultras, [&] {
        return Witness{{"maximal proper strong ideals", std::to_string(maximal_images.size())}, {"ultrafilters", std::to_string(ultras.size())}};
    });

    if (!ck.given("max-in-Y", ctx.max_in_y())) return;
    for (std::size_t i = 0; i < ideals.size(); ++i) {
        ck.visit();
        const bool ultra_image = make_filter(ctx.lattice(), m.image[i]).is_ultra();
        const bool maximal_ideal = is_maximal_ideal(ctx, ideals[i]);
        if (maximal_ideal) ck.expect(ultra_image, [&] { return Witness{{"maximal ideal", show(ideals[i])}}; });
        if (ctx.bits(i).strong && ultra_image)
            ck.expect(maximal_ideal, [&] { return Witness{{"strong I with ultra image", show(ideals[i])}}; });
    }
    for (std::size_t f = 0; f < fs.size(); ++f) {
        ck.visit();
        const bool maximal_pre = is_maximal_ideal(ctx, ideals[m.preimage[f]]);
        ck.expect(fs[f].is_ultra() == maximal_pre,
                  [&] { return Witness{{"filter", show(fs[f])}, {"H^-1(F) maximal", show(maximal_pre)}}; });
    }
}

void prime_separation(Checker& ck) {
    auto& ctx = ck.ctx;
    const HYLattice& L = ctx.lattice();
    if (L.size() > 12) throw Error(ErrorKind::CapExceeded, "lattice too large to enumerate union-closed families");
    std::vector<BitSet> families;
    for (std::uint32_t mask = 0; mask < (1U << L.size()); ++mask) {
        BitSet s(L.size());
        for (std::size_t k = 0; k < L.size(); ++k)
            if (mask >> k & 1U) s.set(k);
        bool closed = true;
        for (auto a : s)
            for (auto b : s)
                if (!s.test(L.join(a, b))) closed = false;
        if (closed) families.push_back(std::move(s));
    }
    const auto& primes = ctx.prime_filters();
    for (const auto& f : ctx.all_filters()) {
        if (!ck.given("F-proper", f.is_proper())) continue;
        for (const auto& S : families) {
            if (f.members.intersects(S)) continue;
            ck.visit();
            const bool found = std::any_of(primes.begin(), primes.end(), [&](const HYFilter& p) {
                return f.members.is_subset_of(p.members) && !p.members.intersects(S);
            });
            ck.expect(found, [&] {
                Witness w{{"filter", show(f)}};
                std::string fam = "{";
                for (auto k : S) fam += (fam.size() > 1 ? ", " : "") + show(ctx.space(), L.element(k));
                w.emplace_back("union-closed family", fam + "}");
                return w;
            });
        }
    }
}

void minimal_prime_filters(Checker& ck) {
    auto& ctx = ck.ctx;
    const HYLattice& L = ctx.lattice();
    const auto& primes = ctx.prime_filters();
    const std::size_t top = L.top();
    const HYFilter unit_filter = principal_filter(L, top);

    for (const auto& f : ctx.all_filters()) {
        ck.visit();
        const auto scanned = min_primes_by_scan(primes, f);
        const auto listed = min_primes_listed(f);
        ck.expect(scanned == listed, [&] {
            return Witness{{"filter", show(f)}, {"minimal primes by scan", std::to_string(scanned.size())},
                           {"minimal primes listed", std::to_string(listed.size())}};
        });
        const bool is_unit = f == unit_filter;
        for (const auto& p : primes) {
            if (!f.members.is_subset_of(p.members)) continue;
            ck.visit();
            const bool minimal = std::binary_search(listed.begin(), listed.end(), p.members);
            bool condition = true;
            bool covers_y = true;
            for (auto a : p.members) {
                bool some = false;
                bool some_top = false;
                for (std::size_t b = 0; b < L.size(); ++b) {
                    if (p.members.test(b)) continue;
                    some = some || f.members.test(L.join(a, b));
                    some_top = some_top || L.join(a, b) == top;
                }
                condition = condition && some;
                covers_y = covers_y && some_top;
            }
            ck.expect(minimal == condition, [&] {
                return Witness{{"filter", show(f)}, {"prime filter", show(p)}, {"minimal over", show(minimal)}, {"union condition", show(condition)}};
            });
            if (is_unit)
                ck.expect(minimal == covers_y, [&] {
                    return Witness{{"prime filter", show(p)}, {"minimal over {Y}", show(minimal)}, {"A u B = Y condition", show(covers_y)}};
                });
        }
    }
}

void minimal_filter_and_ideal(Checker& ck) {
    auto& ctx = ck.ctx;
    const auto& fs = ctx.all_filters();
    const auto& ideals = ctx.ideals();
    const Maps m = tabulate(ctx);
    const std::size_t L = ctx.lattice().size();

    auto min_primes_of = [&](std::size_t i) {
        std::vector<std::size_t> out;
        if (ideals[i].is_proper())
            for (const auto& P : min_primes_over(ctx.spec(), ideals[i])) out.push_back(ctx.index(P));
        std::sort(out.begin(), out.end());
        return out;
    };

    for (std::size_t f = 0; f < fs.size(); ++f) {
        const auto listed = min_primes_listed(fs[f]);
        const auto over_ideal = min_primes_of(m.preimage[f]);

        BitSet meet = BitSet::full(L);
        for (const auto& p : listed) meet &= p;
        ck.expect(meet == fs[f].members, [&] { return Witness{{"filter", show(fs[f])}, {"meet of minimal primes", show(ctx.ring(), meet)}}; });

        std::vector<std::size_t> mapped;
        for (const auto& p : listed) mapped.push_back(ctx.index(to_ideal(make_filter(ctx.lattice(), p))));
        std::sort(mapped.begin(), mapped.end());
        ck.expect(mapped == over_ideal, [&] {
            return Witness{{"filter", show(fs[f])}, {"H^-1 of minimal prime filters", std::to_string(mapped.size())},
                           {"minimal primes of H^-1(F)", std::to_string(over_ideal.size())}};
        });

        for (std::size_t p = 0; p < fs.size(); ++p) {
            ck.visit();
            const bool lhs = std::binary_search(listed.begin(), listed.end(), fs[p].members);
            const bool rhs = std::binary_search(over_ideal.begin(), over_ideal.end(), m.preimage[p]);
            ck.expect(lhs == rhs, [&] {
                return Witness{{"F", show(fs[f])}, {"P", show(fs[p])}, {"P in Min(F)", show(lhs)}, {"H^-1(P) in Min(H^-1(F))", show(rhs)}};
            });
        }
    }

    for (std::size_t i = 0; i < ideals.size(); ++i) {
        if (!ctx.bits(i).strong) continue;
        const auto over = min_primes_of(i);
        const auto image_min = min_primes_listed(make_filter(ctx.lattice(), m.image[i]));
        for (std::size_t p : ctx.spec().prime_ideal_index) {
            ck.visit();
            const bool lhs = std::binary_search(over.begin(), over.end(), p);
            const bool rhs = std::binary_search(image_min.begin(), image_min.end(), m.image[p]);
            ck.expect(lhs == rhs, [&] {
                return Witness{{"strong I", show(ideals[i])}, {"P", show(ideals[p])}, {"P in Min(I)", show(lhs)}, {"H(P) in Min(H(I))", show(rhs)}};
            });
        }
    }
}

void quotient_transport(Checker& ck) {
    auto& ctx = ck.ctx;
    const Ideal& ky = ctx.space().kY();
    for (const auto& I : ctx.ideals()) {
        if (!I.is_subset_of(ky) || !ck.given("I=kY", I == ky)) continue;
        for (const auto& f : ctx.all_filters()) {
            ck.visit();
            Transport t;
            try {
                t = transport_quotient(f, I);
            } catch (const Error& e) {
                if (e.kind() != ErrorKind::Precondition) throw;
                ck.fail({{"I", show(I)}, {"filter", show(f)}, {"transported filter", e.what()}});
            }
            ck.expect(f.is_prime() == t.filter.is_prime() && f.is_ultra() == t.filter.is_ultra(), [&] {
                return Witness{{"I", show(I)}, {"filter", show(f)}, {"transported", show(t.filter)}};
            });
            BitSet image(t.hom.target.size());
            for (auto a : to_ideal(f).members) image.set(t.hom(Elem{static_cast<std::uint32_t>(a)}).index);
            ck.expect(t.correspondence_holds && image == to_ideal(t.filter).members, [&] {
                return Witness{{"I", show(I)}, {"filter", show(f)}, {"H^-1(F)/I", show(t.hom.target, image)},
                               {"H_T^-1(F')", show(to_ideal(t.filter))}};
            });
        }
    }
}

void subring_transport(Checker& ck) {
    auto& ctx = ck.ctx;
    const YSpace& Y = ctx.space();
    for (const auto& sub : ctx.subrings()) {
        std::set<BitSet> reached;
        std::optional<Transport> first;
        for (const auto& f : ctx.all_filters()) {
            ck.visit();
            Transport t;
            try {
                t = transport_subring(f, sub);
            } catch (const Error& e) {
                if (e.kind() != ErrorKind::Precondition) throw;
                ck.fail({{"subring", sub.ring.name()}, {"filter", show(f)}, {"transported filter", e.what()}});
            }
            reached.insert(t.filter.members);
            const Ideal lhs = contract(sub.embedding, to_ideal(f));
            ck.expect(t.correspondence_holds && lhs == to_ideal(t.filter), [&] {
                return Witness{{"subring", sub.ring.name()}, {"filter", show(f)}, {"H^-1(F) n R'", show(lhs)},
                               {"H_Y'^-1(F')", show(to_ideal(t.filter))}};
            });
            if (!first) first = t;
        }
        const YSpace& Yp = first->space;
        const HYLattice& Lp = first->lattice;
        const auto own = masks(filters(Lp, FilterKind::All, ctx.caps().lattice));
        ck.expect(reached == std::set<BitSet>(own.begin(), own.end()),
                  [&] { return Witness{{"subring", sub.ring.name()}, {"filters reached", std::to_string(reached.size())}}; });

        std::vector<std::size_t> slot;
        for (const auto& P : Y.primes()) {
            const Ideal c = contract(sub.embedding, P);
            auto it = std::find(Yp.primes().begin(), Yp.primes().end(), c);
            slot.push_back(static_cast<std::size_t>(it - Yp.primes().begin()));
        }
        for (Elem s : sub.ring.elements()) {
            ck.visit();
            YSet pushed = Yp.none();
            for (auto p : Y.hull_of(sub.embedding(s))) pushed.set(slot[p]);
            ck.expect(pushed == Yp.hull_of(s), [&] {
                return Witness{{"subring", sub.ring.name()}, {"s", sub.ring.label(s)}, {"h_Y'(s)", show(Yp, Yp.hull_of(s))},
                               {"contracted h_Y(s)", show(Yp, pushed)}};
            });
        }

        for (IdealClass c : {IdealClass::Hy, IdealClass::Strong}) {
            for (std::size_t i = 0; i < ctx.ideals().size(); ++i) {
                if (!ctx.in(i, c)) continue;
                ck.visit();
                const Ideal down = contract(sub.embedding, ctx.ideals()[i]);
                ck.expect(in_class(Yp, down, c), [&] {
                    return Witness{{"subring", sub.ring.name()}, {"class", std::string(to_string(c))}, {"I", show(ctx.ideals()[i])},
                                   {"I n R'", show(down)}};
                });
            }
            std::set<BitSet> contracted;
            for (const auto& M : extremal_search(Y, MaximalProper{}, c)) contracted.insert(contract(sub.embedding, M).members);
            std::set<BitSet> own;
            for (const auto& M : extremal_search(Yp, MaximalProper{}, c)) own.insert(M.members);
            ck.expect(contracted == own, [&] {
                return Witness{{"subring", sub.ring.name()}, {"class", std::string(to_string(c))},
                               {"contracted maximal members", std::to_string(contracted.size())}, {"maximal members in R'", std::to_string(own.size())}};
            });
        }
    }
}

} // namespace

std::vector<Claim> filter_claims() {
    return {
        {{"T14", "H_Y and its inverse form a residuated pair fixing strong ideals", {"max-in-Y"}, "ideals^2, filters^2"},
         primary_properties},
        {{"T15", "H_Y is an order isomorphism from strong ideals onto filters", {}, "ideals^2, filters^2"},
         filter_isomorphism},
        {{"T16", "prime and maximal strong ideals match prime filters and ultrafilters", {"max-in-Y"}, "ideals, filters"},
         prime_and_ultra},
        {{"T17", "a proper filter missing a union-closed family extends to a prime filter missing it", {"F-proper"},
          "filters x union-closed families"},
         prime_separation},
        {{"T18", "minimal prime filters are detected by unions landing in the filter", {}, "filters x prime filters"},
         minimal_prime_filters},
        {{"T19", "minimal prime filters correspond to minimal primes of the inverse image", {}, "filters^2, ideals x primes"},
         minimal_filter_and_ideal},
        {{"T20", "filters pass to the quotient by k(Y) with prime, ultra and inverse image preserved", {"I=kY"},
          "ideals in k(Y) x filters"},
         quotient_transport},
        {{"T21", "filters, hulls and class members restrict to subrings", {}, "subrings x filters, subrings x ideals"},
         subring_transport},
    };
}

} // namespace spectral::suite
