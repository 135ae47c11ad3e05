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

std::vector<bool> members_of(const YSpace& space, IdealClass c) {
    std::vector<bool> out;
    for (std::size_t i = 0; i < space.spectrum().ideals.size(); ++i) out.push_back(in_class_at(space, i, c));
    return out;
}

bool contained(const std::vector<bool>& a, const std::vector<bool>& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] && !b[i]) return false;
    return true;
}

void products(Checker& ck) {
    auto& ctx = ck.ctx;
    const auto& ideals = ctx.ideals();
    for (IdealClass c : kClasses) {
        std::vector<std::size_t> pool;
        for (std::size_t i = 0; i < ideals.size(); ++i)
            if (ctx.in(i, c)) pool.push_back(i);
        auto check = [&](const std::vector<std::size_t>& family) {
            ck.visit();
            Ideal prod = ideals[family.front()];
            Ideal meet = prod;
            for (std::size_t k = 1; k < family.size(); ++k) {
                prod = combine(IdealOp::Product, prod, ideals[family[k]]);
                meet = combine(IdealOp::Intersect, meet, ideals[family[k]]);
            }
            const bool lhs = ctx.in(ctx.index(prod), c);
            ck.expect(lhs == (prod == meet), [&] {
                Witness w{{"class", class_name(c)}};
                for (auto k : family) w.emplace_back("J", show(ideals[k]));
                w.emplace_back("product", show(prod));
                w.emplace_back("intersection", show(meet));
                return w;
            });
        };
        for (std::size_t a = 0; a < pool.size(); ++a)
            for (std::size_t b = a; b < pool.size(); ++b) {
                check({pool[a], pool[b]});
                for (std::size_t d = b; d < pool.size(); ++d) check({pool[a], pool[b], pool[d]});
            }
    }
}

void homomorphisms(Checker& ck) {
    auto& ctx = ck.ctx;
    const auto& ideals = ctx.ideals();
    const YSpace& X = ctx.space();
    const Ring& R = ctx.ring();

    // Contraction along R -> R/I, with Y' the whole spectrum of R/I or one prime of it.
    for (const auto& I : ideals) {
        if (I.is_whole()) continue;
        const Quotient q = quotient_ring(I);
        auto spec = std::make_shared<const Spectrum>(spectrum(q.ring, ctx.caps().ideals));
        std::vector<YSelector> selectors{YSelector::spec()};
        for (std::size_t p = 0; p < spec->primes.size(); ++p) selectors.push_back(YSelector::of_indices({p}));
        for (const auto& sel : selectors) {
            const YSpace Yp = build_space(spec, sel);
            for (IdealClass c : kClasses) {
                ck.visit();
                bool all_members = true;
                for (std::size_t j = 0; j < spec->ideals.size(); ++j)
                    if (in_class_at(Yp, j, c) && !in_class(X, contract(q.projection, spec->ideals[j]), c)) all_members = false;
                bool all_primes = true;
                for (const auto& P : Yp.primes())
                    if (!in_class(X, contract(q.projection, P), c)) all_primes = false;
                ck.expect(all_members == all_primes, [&] {
                    return Witness{{"class", class_name(c)}, {"map", R.name() + " -> " + q.ring.name()},
                                   {"Y'", to_string(sel)}, {"every member contracts", show(all_members)},
                                   {"every prime of Y' contracts", show(all_primes)}};
                });
            }
        }

        // J/I against J, with Y/I the images of the primes of Y over I.
        std::vector<std::size_t> over;
        for (const auto& P : X.primes())
            if (I.is_subset_of(P)) over.push_back(*spec->find(extend(q.projection, P).members));
        std::vector<std::size_t> prime_pos;
        for (auto k : over)
            prime_pos.push_back(static_cast<std::size_t>(
                std::find(spec->prime_ideal_index.begin(), spec->prime_ideal_index.end(), k) - spec->prime_ideal_index.begin()));
        std::sort(prime_pos.begin(), prime_pos.end());
        const YSpace YI = build_space(spec, YSelector::of_indices(prime_pos));
        for (std::size_t j = 0; j < ideals.size(); ++j) {
            if (!I.is_subset_of(ideals[j])) continue;
            const Ideal JI = extend(q.projection, ideals[j]);
            for (IdealClass c : kClasses) {
                ck.visit();
                const bool up = in_class(YI, JI, c);
                ck.expect(up == ctx.in(j, c), [&] {
                    return Witness{{"class", class_name(c)}, {"I", show(I)}, {"J", show(ideals[j])},
                                   {"J/I in class over Y/I", show(up)}, {"J in class", show(ctx.in(j, c))}};
                });
            }
        }
    }

    // Two subsets of the same spectrum.
    const BitSet own = ctx.own_mask();
    for (const auto& mask : ctx.prime_subsets()) {
        const YSpace& Xs = ctx.space_over(mask);
        for (IdealClass c : kClasses) {
            ck.visit();
            const auto in_x = members_of(Xs, c);
            std::vector<bool> in_y;
            for (std::size_t i = 0; i < ideals.size(); ++i) in_y.push_back(ctx.in(i, c));
            auto primes_in = [&](const YSpace& from, const std::vector<bool>& cls) {
                return std::all_of(from.primes().begin(), from.primes().end(),
                                   [&](const Ideal& P) { return cls[ctx.index(P)]; });
            };
            const bool x_primes_in_y = primes_in(Xs, in_y);
            const bool x_in_y = contained(in_x, in_y);
            auto witness = [&] {
                return Witness{{"class", class_name(c)}, {"X", show_mask(ctx.spec(), mask)},
                               {"X primes are Y members", show(x_primes_in_y)}, {"X members are Y members", show(x_in_y)}};
            };
            ck.expect(x_primes_in_y == x_in_y, witness);
            if (mask.is_subset_of(own)) {
                ck.expect(x_in_y, witness);
                if (primes_in(X, in_x)) ck.expect(in_x == in_y, witness);
            }

            const Ideal& kx = Xs.kY();
            const bool kx_in_ky = ck.given("kX-in-kY", kx.is_subset_of(X.kY()));
            bool x_minimal = Xs.size() == 0;
            if (kx.is_proper()) {
                const auto mins = min_primes_over(ctx.spec(), kx);
                x_minimal = std::all_of(Xs.primes().begin(), Xs.primes().end(), [&](const Ideal& P) {
                    return std::find(mins.begin(), mins.end(), P) != mins.end();
                });
            }
            if (kx_in_ky && ck.given("X-in-Min(kX)", x_minimal))
                ck.expect(x_in_y == (kx == X.kY()), [&] {
                    return Witness{{"class", class_name(c)}, {"X", show_mask(ctx.spec(), mask)}, {"k(X)", show(kx)},
                                   {"k(Y)", show(X.kY())}, {"X members are Y members", show(x_in_y)}};
                });
        }
    }

    // Direct sums.
    for (std::size_t i = 0; i < ideals.size(); ++i)
        for (std::size_t j = i; j < ideals.size(); ++j) {
            if (!combine(IdealOp::Intersect, ideals[i], ideals[j]).is_zero()) continue;
            const std::size_t s = ctx.index(combine(IdealOp::Sum, ideals[i], ideals[j]));
            for (IdealClass c : kClasses) {
                if (!ctx.in(s, c)) continue;
                ck.visit();
                ck.expect(ctx.in(i, c) && ctx.in(j, c), [&] {
                    return Witness{{"class", class_name(c)}, {"I", show(ideals[i])}, {"J", show(ideals[j])}, {"I+J", show(ideals[s])}};
                });
            }
        }
}

void localizations(Checker& ck) {
    auto& ctx = ck.ctx;
    const Ring& R = ctx.ring();
    const auto& ideals = ctx.ideals();
    for (const auto& A : ctx.mult_sets()) {
        const Ideal kernel = saturate(ctx.zero(), A);
        std::optional<Quotient> loc;
        if (kernel.is_proper()) {
            loc = quotient_ring(kernel);
            for (auto a : A.members()) {
                const Elem image = loc->projection(Elem{static_cast<std::uint32_t>(a)});
                bool unit = false;
                for (Elem b : loc->ring.elements()) unit = unit || loc->ring.mul(image, b) == loc->ring.one();
                ck.expect(unit, [&] {
                    return Witness{{"A", show(R, A.members())}, {"element of A not inverted", R.label(Elem{static_cast<std::uint32_t>(a)})}};
                });
            }
        }
        for (std::size_t i = 0; i < ideals.size(); ++i) {
            ck.visit();
            const Ideal ec = loc ? contract(loc->projection, extend(loc->projection, ideals[i])) : ctx.whole();
            const Ideal sat = saturate(ideals[i], A);
            ck.expect(ec == sat, [&] {
                return Witness{{"A", show(R, A.members())}, {"I", show(ideals[i])}, {"I^ec", show(ec)}, {"I_A", show(sat)}};
            });
            for (IdealClass c : {IdealClass::Hy, IdealClass::Strong})
                if (ctx.in(i, c))
                    ck.expect(ctx.in(ctx.index(ec), c), [&] {
                        return Witness{{"class", class_name(c)}, {"A", show(R, A.members())}, {"I", show(ideals[i])}, {"I^ec", show(ec)}};
                    });
        }
    }
}

} // namespace

std::vector<Claim> operation_claims() {
    return {
        {{"T28", "a product of class members is a member exactly when it equals their intersection", {},
          "classes x pairs and triples"},
         products},
        {{"T29", "contraction along homomorphisms and comparison of two subsets of the spectrum",
          {"kX-in-kY", "X-in-Min(kX)"}, "quotients x selectors, ideal pairs, subsets of Spec"},
         homomorphisms},
        {{"T30", "extending to a localization and contracting back keeps class membership", {},
          "multiplicative sets x ideals"},
         localizations},
    };
}

} // namespace spectral::suite
