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

#include "spectral/spectrum.hpp"

#include <algorithm>
#include <numeric>

namespace spectral {

namespace {

Ideal intersect_all(const Ring& ring, const std::vector<const Ideal*>& list) {
    BitSet members = BitSet::full(ring.size());
    for (const Ideal* P : list) members &= P->members;
    return Ideal{ring, members, canonical_gens(ring, members)};
}

bool gens_less(const Ideal& a, const Ideal& b) {
    return std::lexicographical_compare(a.gens.begin(), a.gens.end(), b.gens.begin(), b.gens.end());
}

} // namespace

std::optional<std::size_t> Spectrum::find(const BitSet& members) const {
    if (auto it = lookup.find(members); it != lookup.end()) return it->second;
    return std::nullopt;
}

const Ideal& Spectrum::ideal(const BitSet& members) const {
    if (auto idx = find(members)) return ideals[*idx];
    throw Error(ErrorKind::NotClosed, "set " + format_elems(ring, members) + " is not an ideal of " + ring.name());
}

Spectrum spectrum(const Ring& ring, std::size_t ideal_cap) {
    Spectrum s;
    s.ring = ring;
    s.ideals = all_ideals(ring, ideal_cap);
    for (std::size_t i = 0; i < s.ideals.size(); ++i) s.lookup.emplace(s.ideals[i].members, i);

    std::vector<std::size_t> prime_idx;
    for (std::size_t i = 0; i < s.ideals.size(); ++i)
        if (is_prime_ideal(s.ideals[i])) prime_idx.push_back(i);
    std::stable_sort(prime_idx.begin(), prime_idx.end(),
                     [&](std::size_t a, std::size_t b) { return gens_less(s.ideals[a], s.ideals[b]); });
    for (auto i : prime_idx) s.primes.push_back(s.ideals[i]);
    s.prime_ideal_index = prime_idx;

    const std::size_t k = s.primes.size();
    s.min_mask = BitSet(k);
    s.max_mask = BitSet(k);
    for (std::size_t a = 0; a < k; ++a) {
        bool minimal = true;
        bool maximal = true;
        for (std::size_t b = 0; b < k; ++b) {
            if (a == b) continue;
            if (s.primes[b].is_subset_of(s.primes[a])) minimal = false;
            if (s.primes[a].is_subset_of(s.primes[b])) maximal = false;
        }
        if (minimal) s.min_mask.set(a);
        if (maximal) s.max_mask.set(a);
    }
    if (s.min_mask.count() != k || s.max_mask.count() != k)
        throw Error(ErrorKind::InternalDisagreement, "prime spectrum of a finite ring is not flat in " + ring.name());

    std::vector<const Ideal*> mins;
    std::vector<const Ideal*> maxs;
    for (auto a : s.min_mask) mins.push_back(&s.primes[a]);
    for (auto a : s.max_mask) maxs.push_back(&s.primes[a]);
    s.rad = intersect_all(ring, mins);
    s.jac = intersect_all(ring, maxs);
    if (!(s.rad == radical(zero_ideal(ring))))
        throw Error(ErrorKind::InternalDisagreement, "nilradical disagrees with intersection of minimal primes in " + ring.name());
    return s;
}

std::string format_spectrum(const Spectrum& spec) {
    std::string out = "Spec(" + spec.ring.name() + ") = [";
    for (std::size_t k = 0; k < spec.primes.size(); ++k) {
        if (k) out += ", ";
        out += format_gens(spec.primes[k]);
    }
    return out + "]";
}

std::vector<Ideal> min_primes_over(const Spectrum& spec, const Ideal& I) {
    if (!I.is_proper()) throw Error(ErrorKind::ImproperIdeal, "minimal primes need a proper ideal");
    std::vector<const Ideal*> over;
    for (const auto& P : spec.primes)
        if (I.is_subset_of(P)) over.push_back(&P);
    std::vector<Ideal> out;
    for (const Ideal* P : over) {
        const bool minimal = std::none_of(over.begin(), over.end(), [&](const Ideal* Q) {
            return Q != P && Q->is_subset_of(*P);
        });
        if (minimal) out.push_back(*P);
    }
    return out;
}

BourbakiResult bourbaki(const Spectrum& spec, const Ideal& I) {
    if (!I.is_proper()) throw Error(ErrorKind::ImproperIdeal, "Bourbaki primes need a proper ideal");
    const Ring& ring = spec.ring;
    std::vector<std::optional<Elem>> witness(spec.primes.size());
    for (Elem x : ring.elements()) {
        const Ideal c = colon(I, std::vector<Elem>{x});
        for (std::size_t k = 0; k < spec.primes.size(); ++k)
            if (!witness[k] && spec.primes[k] == c) witness[k] = x;
    }
    BourbakiResult out;
    BitSet meet = BitSet::full(ring.size());
    for (std::size_t k = 0; k < spec.primes.size(); ++k)
        if (witness[k]) {
            out.primes.push_back(BourbakiPrime{spec.primes[k], *witness[k]});
            meet &= spec.primes[k].members;
        }
    out.fixed_place = meet == I.members;
    return out;
}

RingClassFlags ring_flags(const Spectrum& spec) {
    const Ring& ring = spec.ring;
    RingClassFlags f;
    f.reduced = spec.rad.is_zero();
    f.semiprimitive = spec.jac.is_zero();

    std::vector<ElementClassSet> cls;
    for (Elem a : ring.elements()) cls.push_back(classify_element(ring, a));
    f.regular_ring = std::all_of(cls.begin(), cls.end(), [](const ElementClassSet& c) { return c.regular; });

    f.gelfand = true;
    for (const auto& P : spec.primes) {
        std::size_t above = 0;
        for (auto m : spec.max_mask)
            if (P.is_subset_of(spec.primes[m])) ++above;
        f.gelfand = f.gelfand && above == 1;
    }

    f.weakly_regular = std::all_of(spec.ideals.begin(), spec.ideals.end(), [&](const Ideal& I) {
        if (I.is_zero()) return true;
        return std::any_of(I.members.begin(), I.members.end(), [&](std::size_t m) {
            return m != ring.zero().index && cls[m].idempotent;
        });
    });

    std::vector<Ideal> ann_of_elem;
    for (Elem c : ring.elements()) ann_of_elem.push_back(colon(zero_ideal(ring), std::vector<Elem>{c}));

    f.property_A = true;
    f.ac_ring = true;
    for (const auto& I : spec.ideals) {
        const Ideal ann = annihilator(ring, I.members);
        const bool singular = std::all_of(I.members.begin(), I.members.end(), [&](std::size_t m) {
            return m == ring.zero().index || cls[m].zero_divisor;
        });
        if (I.is_proper() && singular && ann.is_zero()) f.property_A = false;
        if (std::none_of(ann_of_elem.begin(), ann_of_elem.end(), [&](const Ideal& A) { return A == ann; })) f.ac_ring = false;
    }
    return f;
}

} // namespace spectral
