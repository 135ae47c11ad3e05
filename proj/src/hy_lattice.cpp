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

#include "spectral/hy_lattice.hpp"

#include <algorithm>
#include <numeric>

namespace spectral {

std::optional<std::size_t> HYLattice::find(const YSet& T) const {
    if (auto it = impl_->lookup.find(T); it != impl_->lookup.end()) return it->second;
    return std::nullopt;
}

std::size_t HYLattice::index(const YSet& T) const {
    if (auto i = find(T)) return *i;
    throw Error(ErrorKind::InternalDisagreement, format_yset(space(), T) + " is not an element of the H_Y lattice");
}

std::size_t HYLattice::meet(std::size_t a, std::size_t b) const { return index(element(a) & element(b)); }
std::size_t HYLattice::join(std::size_t a, std::size_t b) const { return index(element(a) | element(b)); }

HYLattice build_lattice(const YSpace& space) {
    const Spectrum& spec = space.spectrum();
    std::vector<std::pair<YSet, std::vector<Elem>>> found;
    std::unordered_map<YSet, std::size_t, BitSetHash> seen;
    for (std::size_t i = 0; i < spec.ideals.size(); ++i) {
        const YSet& h = space.ideal_hull(i);
        if (seen.emplace(h, found.size()).second) found.emplace_back(h, spec.ideals[i].gens);
    }
    std::stable_sort(found.begin(), found.end(), [](const auto& a, const auto& b) { return a.first < b.first; });

    auto impl = std::make_shared<HYLattice::Impl>();
    impl->space = space;
    for (auto& [h, w] : found) {
        impl->lookup.emplace(h, impl->elements.size());
        impl->elements.push_back(std::move(h));
        impl->witnesses.push_back(std::move(w));
    }
    for (const auto& a : impl->elements)
        for (const auto& b : impl->elements)
            if (!impl->lookup.count(a & b) || !impl->lookup.count(a | b))
                throw Error(ErrorKind::InternalDisagreement, "hull family is not closed under intersection and union");

    HYLattice lattice;
    lattice.impl_ = std::move(impl);
    return lattice;
}

bool HYFilter::is_proper() const { return !members.test(lattice.bottom()); }

bool HYFilter::is_prime() const {
    if (!is_proper()) return false;
    const auto outside = members.complement().members();
    for (auto a : outside)
        for (auto b : outside)
            if (members.test(lattice.join(a, b))) return false;
    return true;
}

bool HYFilter::is_ultra() const {
    if (!is_proper()) return false;
    const auto inside = members.members();
    for (auto x : members.complement()) {
        const bool blocked = std::any_of(inside.begin(), inside.end(), [&](std::size_t f) {
            return lattice.element(lattice.meet(f, x)).empty();
        });
        if (!blocked) return false;
    }
    return true;
}

HYFilter make_filter(const HYLattice& lattice, BitSet members) {
    if (members.universe() != lattice.size()) throw Error(ErrorKind::RingMismatch, "member mask does not match the lattice");
    if (members.empty()) throw Error(ErrorKind::Precondition, "a filter is nonempty");
    const auto list = members.members();
    for (auto a : list) {
        for (std::size_t b = 0; b < lattice.size(); ++b)
            if (lattice.leq(a, b) && !members.test(b))
                throw Error(ErrorKind::Precondition, "not up-closed: " + format_yset(lattice.space(), lattice.element(b)) +
                                                         " lies above a member but is missing");
        for (auto b : list)
            if (!members.test(lattice.meet(a, b)))
                throw Error(ErrorKind::Precondition, "not closed under intersection");
    }
    return HYFilter{lattice, std::move(members)};
}

HYFilter principal_filter(const HYLattice& lattice, std::size_t element) {
    BitSet members(lattice.size());
    for (std::size_t b = 0; b < lattice.size(); ++b)
        if (lattice.leq(element, b)) members.set(b);
    return HYFilter{lattice, std::move(members)};
}

namespace {

std::vector<HYFilter> all_filters_brute(const HYLattice& lattice, std::size_t cap) {
    const std::size_t n = lattice.size();
    if (n > cap)
        throw Error(ErrorKind::CapExceeded, "lattice has " + std::to_string(n) + " elements; filter enumeration cap is " +
                                                std::to_string(cap));
    std::vector<std::uint32_t> up(n, 0);
    std::vector<std::vector<std::size_t>> meets(n, std::vector<std::size_t>(n));
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            if (lattice.leq(a, b)) up[a] |= std::uint32_t{1} << b;
            meets[a][b] = lattice.meet(a, b);
        }
    std::vector<HYFilter> out;
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
        const auto m = static_cast<std::uint32_t>(mask);
        bool ok = true;
        for (std::size_t a = 0; a < n && ok; ++a) {
            if (!(m >> a & 1U)) continue;
            if ((up[a] & ~m) != 0) ok = false;
            for (std::size_t b = a + 1; b < n && ok; ++b)
                if ((m >> b & 1U) && !(m >> meets[a][b] & 1U)) ok = false;
        }
        if (!ok) continue;
        BitSet members(n);
        for (std::size_t a = 0; a < n; ++a)
            if (m >> a & 1U) members.set(a);
        out.push_back(HYFilter{lattice, std::move(members)});
    }
    return out;
}

// Elements that are not the union of the elements strictly below them.
std::vector<std::size_t> join_irreducibles(const HYLattice& lattice) {
    std::vector<std::size_t> out;
    for (std::size_t j = 0; j < lattice.size(); ++j) {
        const YSet& x = lattice.element(j);
        if (j == lattice.bottom()) continue;
        YSet below(x.universe());
        for (std::size_t k = 0; k < lattice.size(); ++k)
            if (k != j && lattice.element(k).is_subset_of(x)) below |= lattice.element(k);
        if (below != x) out.push_back(j);
    }
    return out;
}

} // namespace

std::vector<HYFilter> filters(const HYLattice& lattice, FilterKind kind, std::size_t cap) {
    std::vector<HYFilter> out;
    switch (kind) {
    case FilterKind::All:
        out = all_filters_brute(lattice, cap);
        break;
    case FilterKind::Proper:
        for (auto& f : all_filters_brute(lattice, cap))
            if (f.is_proper()) out.push_back(std::move(f));
        break;
    case FilterKind::Prime:
    case FilterKind::Ultra:
        for (auto j : join_irreducibles(lattice)) {
            HYFilter f = principal_filter(lattice, j);
            if (kind == FilterKind::Prime ? f.is_prime() : f.is_ultra()) out.push_back(std::move(f));
        }
        break;
    }
    std::sort(out.begin(), out.end(), [](const HYFilter& a, const HYFilter& b) { return a.members < b.members; });
    return out;
}

HYFilter to_filter(const HYLattice& lattice, const Ideal& I) {
    const YSpace& space = lattice.space();
    const Spectrum& spec = space.spectrum();
    BitSet members(lattice.size());
    for (std::size_t j = 0; j < spec.ideals.size(); ++j)
        if (spec.ideals[j].is_subset_of(I)) members.set(lattice.index(space.ideal_hull(j)));
    try {
        return make_filter(lattice, std::move(members));
    } catch (const Error& e) {
        throw Error(ErrorKind::InternalDisagreement, std::string("H_Y(I) is not a filter: ") + e.what());
    }
}

Ideal to_ideal(const HYFilter& filter) {
    const YSpace& space = filter.lattice.space();
    const Ring& ring = space.ring();
    BitSet members(ring.size());
    for (Elem a : ring.elements())
        if (filter.members.test(filter.lattice.index(space.hull_of(a)))) members.set(a.index);
    if (auto idx = space.spectrum().find(members)) return space.spectrum().ideals[*idx];
    throw Error(ErrorKind::InternalDisagreement, "H_Y^{-1} of a filter is not an ideal: " + format_elems(ring, members));
}

std::vector<HYFilter> min_prime_filters_over(const HYFilter& filter) {
    if (!filter.is_proper()) throw Error(ErrorKind::Precondition, "minimal prime filters need a proper filter");
    std::vector<HYFilter> over;
    for (auto& p : filters(filter.lattice, FilterKind::Prime))
        if (filter.members.is_subset_of(p.members)) over.push_back(std::move(p));
    std::vector<HYFilter> out;
    for (const auto& p : over) {
        const bool minimal = std::none_of(over.begin(), over.end(), [&](const HYFilter& q) {
            return q.members != p.members && q.members.is_subset_of(p.members);
        });
        if (minimal) out.push_back(p);
    }
    return out;
}

std::string format_filter(const HYFilter& filter) {
    std::string out = "[";
    bool first = true;
    for (auto i : filter.members) {
        if (!first) out += ", ";
        first = false;
        out += format_yset(filter.lattice.space(), filter.lattice.element(i));
    }
    out += "]";
    if (filter.is_prime()) out += " [prime]";
    if (filter.is_ultra()) out += " [ultra]";
    return out;
}

Transport transport_quotient(const HYFilter& filter, const Ideal& I) {
    const YSpace& space = filter.lattice.space();
    if (!I.is_subset_of(space.kY()))
        throw Error(ErrorKind::Precondition, format_gens(I) + " is not contained in k(Y) = " + format_gens(space.kY()));
    Quotient q = quotient_ring(I);
    auto spec = std::make_shared<const Spectrum>(spectrum(q.ring));

    // Position of P/I in the quotient's prime list, for each P in Y.
    std::vector<std::size_t> image_of;
    for (const auto& P : space.primes()) {
        const Ideal image = extend(q.projection, P);
        auto it = std::find(spec->primes.begin(), spec->primes.end(), image);
        if (it == spec->primes.end()) throw Error(ErrorKind::InternalDisagreement, "image of a prime over I is not prime");
        image_of.push_back(static_cast<std::size_t>(it - spec->primes.begin()));
    }
    YSpace target = build_space(spec, YSelector::of_indices(image_of));
    std::vector<std::size_t> position(spec->primes.size(), 0);
    for (std::size_t t = 0; t < target.prime_indices().size(); ++t) position[target.prime_indices()[t]] = t;

    HYLattice lattice = build_lattice(target);
    BitSet members(lattice.size());
    for (auto a : filter.members) {
        YSet moved = target.none();
        for (auto p : filter.lattice.element(a)) moved.set(position[image_of[p]]);
        auto idx = lattice.find(moved);
        if (!idx) throw Error(ErrorKind::InternalDisagreement, "transported set is not an H_T lattice element");
        members.set(*idx);
    }
    HYFilter moved = make_filter(lattice, std::move(members));

    const Ideal before = to_ideal(filter);
    BitSet image(q.ring.size());
    for (auto a : before.members) image.set(q.projection(Elem{static_cast<std::uint32_t>(a)}).index);
    const bool holds = image == to_ideal(moved).members;
    return Transport{target, lattice, moved, q.projection, holds};
}

Transport transport_subring(const HYFilter& filter, const Subring& sub) {
    const YSpace& space = filter.lattice.space();
    if (!sub.embedding.target.same_as(space.ring()))
        throw Error(ErrorKind::RingMismatch, "subring does not embed into " + space.ring().name());
    auto spec = std::make_shared<const Spectrum>(spectrum(sub.ring));

    std::vector<std::size_t> contracted;
    for (const auto& P : space.primes()) {
        const Ideal c = contract(sub.embedding, P);
        auto it = std::find(spec->primes.begin(), spec->primes.end(), c);
        if (it == spec->primes.end()) throw Error(ErrorKind::InternalDisagreement, "contraction of a prime is not prime");
        contracted.push_back(static_cast<std::size_t>(it - spec->primes.begin()));
    }
    std::sort(contracted.begin(), contracted.end());
    contracted.erase(std::unique(contracted.begin(), contracted.end()), contracted.end());
    YSpace target = build_space(spec, YSelector::of_indices(contracted));
    HYLattice lattice = build_lattice(target);

    BitSet members(lattice.size());
    for (std::size_t j = 0; j < spec->ideals.size(); ++j) {
        std::vector<Elem> lifted;
        for (Elem g : spec->ideals[j].gens) lifted.push_back(sub.embedding(g));
        if (filter.members.test(filter.lattice.index(hull(space, lifted))))
            members.set(lattice.index(target.ideal_hull(j)));
    }
    HYFilter moved = make_filter(lattice, std::move(members));
    const bool holds = contract(sub.embedding, to_ideal(filter)) == to_ideal(moved);
    return Transport{target, lattice, moved, sub.embedding, holds};
}

} // namespace spectral
