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

#include "spectral/ideal.hpp"

#include <algorithm>
#include <unordered_set>

namespace spectral {

namespace {

void require_same_ring(const Ring& a, const Ring& b) {
    if (!a.same_as(b)) throw Error(ErrorKind::RingMismatch, "operands live in different rings: " + a.name() + " vs " + b.name());
}

void require_universe(const Ring& ring, const BitSet& s) {
    if (s.universe() != ring.size()) throw Error(ErrorKind::RingMismatch, "element set does not belong to " + ring.name());
}

// I + J for additive subgroups, by adjoining cosets of I.
BitSet subgroup_sum(const Ring& ring, const BitSet& I, const BitSet& J) {
    BitSet out = I;
    const auto base = I.members();
    for (auto j : J) {
        if (out.test(j)) continue;
        const Elem e{static_cast<std::uint32_t>(j)};
        for (auto i : base) out.set(ring.add(Elem{static_cast<std::uint32_t>(i)}, e).index);
    }
    return out;
}

Ideal from_members(const Ring& ring, BitSet members) {
    auto gens = canonical_gens(ring, members);
    return Ideal{ring, std::move(members), std::move(gens)};
}

} // namespace

std::string format_gens(const Ideal& I) {
    if (I.gens.empty()) return "<" + I.ring.label(I.ring.zero()) + ">";
    std::string out = "<";
    for (std::size_t k = 0; k < I.gens.size(); ++k) {
        if (k) out += ",";
        out += I.ring.label(I.gens[k]);
    }
    return out + ">";
}

std::string display(const Ideal& I) { return format_gens(I) + " = " + format_elems(I.ring, I.members); }

BitSet principal_members(const Ring& ring, Elem a) {
    BitSet out(ring.size());
    for (Elem r : ring.elements()) out.set(ring.mul(r, a).index);
    return out;
}

std::vector<Elem> canonical_gens(const Ring& ring, const BitSet& members) {
    std::vector<Elem> gens;
    BitSet current(ring.size());
    current.set(ring.zero().index);
    if (current == members) return gens;

    std::vector<std::pair<std::size_t, BitSet>> principals;
    for (auto m : members) principals.emplace_back(m, principal_members(ring, Elem{static_cast<std::uint32_t>(m)}));

    while (current != members) {
        std::size_t best = 0;
        std::size_t best_size = 0;
        for (std::size_t k = 0; k < principals.size(); ++k) {
            const auto& [m, P] = principals[k];
            if (current.test(m)) continue;
            // |C + P| = |C| |P| / |C n P| for additive subgroups.
            const std::size_t size = current.count() * P.count() / current.intersection_count(P);
            if (size > best_size) {
                best = k;
                best_size = size;
            }
        }
        current = subgroup_sum(ring, current, principals[best].second);
        gens.push_back(Elem{static_cast<std::uint32_t>(principals[best].first)});
    }
    return gens;
}

Ideal span(const Ring& ring, const std::vector<Elem>& gens) {
    BitSet members(ring.size());
    members.set(ring.zero().index);
    for (Elem g : gens) members = subgroup_sum(ring, members, principal_members(ring, ring.at(g.index)));
    return from_members(ring, std::move(members));
}

Ideal span(const Ring& ring, const BitSet& elements) {
    require_universe(ring, elements);
    std::vector<Elem> gens;
    for (auto i : elements) gens.push_back(Elem{static_cast<std::uint32_t>(i)});
    return span(ring, gens);
}

Ideal ideal_of(const Ring& ring, BitSet members) {
    require_universe(ring, members);
    if (!members.test(ring.zero().index)) throw Error(ErrorKind::NotClosed, "set does not contain zero");
    const auto list = members.members();
    for (auto a : list) {
        const Elem x{static_cast<std::uint32_t>(a)};
        for (auto b : list)
            if (!members.test(ring.add(x, Elem{static_cast<std::uint32_t>(b)}).index))
                throw Error(ErrorKind::NotClosed, "not closed under addition at (" + ring.label(x) + "," +
                                                      ring.label(Elem{static_cast<std::uint32_t>(b)}) + ")");
        for (Elem r : ring.elements())
            if (!members.test(ring.mul(r, x).index))
                throw Error(ErrorKind::NotClosed, "not closed under multiplication at (" + ring.label(r) + "," + ring.label(x) + ")");
    }
    return from_members(ring, std::move(members));
}

Ideal zero_ideal(const Ring& ring) {
    BitSet members(ring.size());
    members.set(ring.zero().index);
    return Ideal{ring, std::move(members), {}};
}

Ideal unit_ideal(const Ring& ring) { return from_members(ring, BitSet::full(ring.size())); }

std::vector<Ideal> all_ideals(const Ring& ring, std::size_t cap) {
    std::vector<BitSet> principals;
    std::unordered_set<BitSet, BitSetHash> seen;
    for (Elem a : ring.elements()) {
        BitSet P = principal_members(ring, a);
        if (seen.insert(P).second) principals.push_back(std::move(P));
    }
    auto over_cap = [&](std::size_t n) {
        if (n > cap) throw Error(ErrorKind::CapExceeded, "ideal count exceeds cap " + std::to_string(cap) + " in " + ring.name());
    };
    over_cap(principals.size());
    // Every ideal is a finite sum of principal ideals.
    std::vector<BitSet> found = principals;
    for (std::size_t i = 0; i < found.size(); ++i) {
        for (const auto& P : principals) {
            if (P.is_subset_of(found[i])) continue;
            BitSet S = subgroup_sum(ring, found[i], P);
            if (seen.insert(S).second) {
                found.push_back(std::move(S));
                over_cap(found.size());
            }
        }
    }
    std::sort(found.begin(), found.end());
    std::vector<Ideal> out;
    out.reserve(found.size());
    for (auto& m : found) out.push_back(from_members(ring, std::move(m)));
    return out;
}

Ideal combine(IdealOp op, const Ideal& I, const Ideal& J) {
    require_same_ring(I.ring, J.ring);
    const Ring& ring = I.ring;
    switch (op) {
    case IdealOp::Sum:
        return from_members(ring, subgroup_sum(ring, I.members, J.members));
    case IdealOp::Intersect:
        return from_members(ring, I.members & J.members);
    case IdealOp::Product: {
        BitSet members(ring.size());
        members.set(ring.zero().index);
        for (Elem a : I.gens)
            for (Elem b : J.gens) members = subgroup_sum(ring, members, principal_members(ring, ring.mul(a, b)));
        return from_members(ring, std::move(members));
    }
    }
    return I;
}

Ideal colon(const Ideal& I, const BitSet& S) {
    require_universe(I.ring, S);
    if (S.empty()) throw Error(ErrorKind::EmptySet, "colon needs a nonempty set");
    const Ring& ring = I.ring;
    BitSet members(ring.size());
    const auto list = S.members();
    for (Elem x : ring.elements()) {
        bool ok = true;
        for (auto s : list)
            if (!I.members.test(ring.mul(x, Elem{static_cast<std::uint32_t>(s)}).index)) {
                ok = false;
                break;
            }
        if (ok) members.set(x.index);
    }
    return from_members(ring, std::move(members));
}

Ideal colon(const Ideal& I, const std::vector<Elem>& S) {
    BitSet set(I.ring.size());
    for (Elem s : S) set.set(I.ring.at(s.index).index);
    return colon(I, set);
}

Ideal annihilator(const Ring& ring, const BitSet& S) { return colon(zero_ideal(ring), S); }

Ideal radical(const Ideal& I) {
    const Ring& ring = I.ring;
    BitSet members(ring.size());
    for (Elem a : ring.elements()) {
        Elem power = a;
        for (std::size_t k = 1; k <= ring.size(); ++k) {
            if (I.contains(power)) {
                members.set(a.index);
                break;
            }
            power = ring.mul(power, a);
        }
    }
    return from_members(ring, std::move(members));
}

bool is_prime_ideal(const Ideal& I) {
    if (!I.is_proper()) return false;
    const Ring& ring = I.ring;
    const auto outside = I.members.complement().members();
    for (auto a : outside)
        for (auto b : outside)
            if (I.members.test(ring.mul(Elem{static_cast<std::uint32_t>(a)}, Elem{static_cast<std::uint32_t>(b)}).index))
                return false;
    return true;
}

MultSet MultSet::closure_of(const Ring& ring, const BitSet& seed) {
    require_universe(ring, seed);
    BitSet members = seed;
    members.set(ring.one().index);
    std::vector<Elem> order;
    for (auto m : members) order.push_back(Elem{static_cast<std::uint32_t>(m)});
    for (std::size_t i = 0; i < order.size(); ++i)
        for (std::size_t j = 0; j <= i; ++j) {
            const Elem p = ring.mul(order[i], order[j]);
            if (!members.test(p.index)) {
                members.set(p.index);
                order.push_back(p);
            }
        }
    return MultSet(ring, std::move(members));
}

MultSet MultSet::exact(const Ring& ring, const BitSet& members) {
    require_universe(ring, members);
    if (!members.test(ring.one().index))
        throw Error(ErrorKind::NotMultiplicativelyClosed, "set does not contain 1");
    for (auto a : members)
        for (auto b : members) {
            const Elem x{static_cast<std::uint32_t>(a)};
            const Elem y{static_cast<std::uint32_t>(b)};
            if (!members.test(ring.mul(x, y).index))
                throw Error(ErrorKind::NotMultiplicativelyClosed,
                            "product of " + ring.label(x) + " and " + ring.label(y) + " leaves the set");
        }
    return MultSet(ring, members);
}

Ideal saturate(const Ideal& I, const MultSet& A) {
    require_same_ring(I.ring, A.ring());
    const Ring& ring = I.ring;
    const auto list = A.members().members();
    BitSet members(ring.size());
    for (Elem r : ring.elements())
        for (auto a : list)
            if (I.contains(ring.mul(r, Elem{static_cast<std::uint32_t>(a)}))) {
                members.set(r.index);
                break;
            }
    return from_members(ring, std::move(members));
}

Ideal quasi_regular(const Ideal& I) {
    const Ring& ring = I.ring;
    BitSet shifted(ring.size());
    for (auto i : I.members) shifted.set(ring.add(ring.one(), Elem{static_cast<std::uint32_t>(i)}).index);
    return saturate(zero_ideal(ring), MultSet::closure_of(ring, shifted));
}

Ideal zero_component(const Ideal& P) {
    if (!is_prime_ideal(P)) throw Error(ErrorKind::Precondition, format_gens(P) + " is not a prime ideal");
    return saturate(zero_ideal(P.ring), MultSet::exact(P.ring, P.members.complement()));
}

Ideal socle(const Ring& ring) { return socle(ring, all_ideals(ring)); }

Ideal socle(const Ring& ring, const std::vector<Ideal>& ideals) {
    BitSet members(ring.size());
    members.set(ring.zero().index);
    for (const auto& I : ideals) {
        if (I.is_zero()) continue;
        const bool minimal = std::none_of(ideals.begin(), ideals.end(), [&](const Ideal& J) {
            return !J.is_zero() && J.members != I.members && J.is_subset_of(I);
        });
        if (minimal) members = subgroup_sum(ring, members, I.members);
    }
    return from_members(ring, std::move(members));
}

IdealFlags ideal_flags(const Ideal& I) { return ideal_flags(I, all_ideals(I.ring)); }

IdealFlags ideal_flags(const Ideal& I, const std::vector<Ideal>& ideals) {
    const Ring& ring = I.ring;
    IdealFlags flags;
    flags.pure = quasi_regular(I) == I;
    flags.regular_ideal = true;
    flags.singular = true;
    for (auto m : I.members) {
        const auto cls = classify_element(ring, Elem{static_cast<std::uint32_t>(m)});
        flags.regular_ideal = flags.regular_ideal && cls.regular;
        flags.singular = flags.singular && (m == ring.zero().index || cls.zero_divisor);
    }
    flags.essential = std::all_of(ideals.begin(), ideals.end(), [&](const Ideal& J) {
        return J.is_zero() || I.members.intersection_count(J.members) > 1;
    });
    flags.minimal_nonzero = !I.is_zero() && std::none_of(ideals.begin(), ideals.end(), [&](const Ideal& J) {
        return !J.is_zero() && J.members != I.members && J.is_subset_of(I);
    });
    return flags;
}

Quotient quotient_ring(const Ideal& I) {
    const Ring& ring = I.ring;
    const std::size_t n = ring.size();
    constexpr std::uint32_t unset = ~std::uint32_t{0};
    std::vector<std::uint32_t> coset(n, unset);
    std::vector<Elem> reps;
    const auto members = I.members.members();
    for (Elem a : ring.elements()) {
        if (coset[a.index] != unset) continue;
        const auto id = static_cast<std::uint32_t>(reps.size());
        reps.push_back(a);
        for (auto i : members) coset[ring.add(a, Elem{static_cast<std::uint32_t>(i)}).index] = id;
    }

    TableSpec t;
    t.size = reps.size();
    t.add.assign(t.size, std::vector<std::uint32_t>(t.size));
    t.mul.assign(t.size, std::vector<std::uint32_t>(t.size));
    for (std::size_t c = 0; c < t.size; ++c) {
        for (std::size_t d = 0; d < t.size; ++d) {
            t.add[c][d] = coset[ring.add(reps[c], reps[d]).index];
            t.mul[c][d] = coset[ring.mul(reps[c], reps[d]).index];
        }
        t.labels.push_back("[" + ring.label(reps[c]) + "]");
    }
    t.zero = coset[ring.zero().index];
    t.one = coset[ring.one().index];
    t.name = ring.name() + "/" + format_gens(I);

    Ring q = build_ring(RingSpec{t}, RingBuildOptions{t.size, false});
    return Quotient{q, build_hom(ring, q, coset)};
}

Ideal contract(const Hom& f, const Ideal& J) {
    require_same_ring(f.target, J.ring);
    BitSet members(f.source.size());
    for (Elem a : f.source.elements())
        if (J.contains(f(a))) members.set(a.index);
    return from_members(f.source, std::move(members));
}

Ideal extend(const Hom& f, const Ideal& I) {
    require_same_ring(f.source, I.ring);
    BitSet image(f.target.size());
    for (auto a : I.members) image.set(f(Elem{static_cast<std::uint32_t>(a)}).index);
    return span(f.target, image);
}

} // namespace spectral
