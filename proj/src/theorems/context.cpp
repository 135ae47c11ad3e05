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

#include "theorems/context.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_set>

namespace spectral::suite {

CaseContext::CaseContext(const Case& c, const Caps& caps) : case_(c), caps_(caps) {
    ring_ = build_ring(c.ring, RingBuildOptions{caps.carrier, true});
    if (ring_.size() > caps.elements)
        throw Error(ErrorKind::CapExceeded, ring_.name() + " has " + std::to_string(ring_.size()) +
                                                " elements, over the cap of " + std::to_string(caps.elements));
    spec_ = std::make_shared<const Spectrum>(spectrum(ring_, caps.ideals));
    space_ = build_space(spec_, c.selector);
    lattice_ = build_lattice(space_);
    flags_ = ring_flags(*spec_);
    bits_.reserve(ideals().size());
    for (const auto& I : ideals())
        bits_.push_back({radical(I) == I, is_hy(space_, I), is_strong_hy(space_, I), is_y_hilbert(space_, I)});
}

bool CaseContext::in(std::size_t i, IdealClass c) const {
    const auto& b = bits(i);
    switch (c) {
    case IdealClass::Hy: return b.hy;
    case IdealClass::Strong: return b.strong;
    case IdealClass::Hilbert: return b.hilbert;
    }
    return false;
}

std::vector<std::size_t> CaseContext::subideals(std::size_t i) const {
    std::vector<std::size_t> out;
    for (std::size_t j = 0; j < ideals().size(); ++j)
        if (ideals()[j].is_subset_of(ideals()[i])) out.push_back(j);
    return out;
}

const std::vector<BitSet>& CaseContext::subsets() {
    if (!subsets_) {
        std::vector<BitSet> out;
        std::unordered_set<BitSet, BitSetHash> seen;
        for (Elem a : ring_.elements()) {
            BitSet s(ring_.size());
            s.set(a.index);
            seen.insert(s);
            out.push_back(std::move(s));
        }
        for (const auto& I : ideals()) {
            BitSet s(ring_.size());
            for (Elem g : I.gens) s.set(g.index);
            if (s.empty()) s.set(ring_.zero().index);
            if (seen.insert(s).second) out.push_back(std::move(s));
        }
        subsets_ = std::move(out);
    }
    return *subsets_;
}

const std::vector<HYFilter>& CaseContext::all_filters() {
    if (!all_filters_) {
        if (lattice_.size() > caps_.lattice)
            throw Error(ErrorKind::CapExceeded, "lattice of size " + std::to_string(lattice_.size()) +
                                                    " is over the subset-scan cap of " + std::to_string(caps_.lattice));
        auto f = filters(lattice_, FilterKind::All, caps_.lattice);
        if (f.size() > caps_.filters)
            throw Error(ErrorKind::CapExceeded, std::to_string(f.size()) + " filters exceed the cap of " +
                                                    std::to_string(caps_.filters));
        all_filters_ = std::move(f);
    }
    return *all_filters_;
}

const std::vector<HYFilter>& CaseContext::prime_filters() {
    if (!prime_filters_) prime_filters_ = filters(lattice_, FilterKind::Prime);
    return *prime_filters_;
}

const std::vector<HYFilter>& CaseContext::ultra_filters() {
    if (!ultra_filters_) ultra_filters_ = filters(lattice_, FilterKind::Ultra);
    return *ultra_filters_;
}

const std::vector<BitSet>& CaseContext::prime_subsets() {
    if (!prime_subsets_) {
        const std::size_t k = spec_->primes.size();
        if (k > 12) throw Error(ErrorKind::CapExceeded, "too many primes to enumerate subsets of Spec");
        std::vector<BitSet> out;
        for (std::uint32_t mask = 0; mask < (1U << k); ++mask) {
            BitSet s(k);
            for (std::size_t p = 0; p < k; ++p)
                if (mask >> p & 1U) s.set(p);
            out.push_back(std::move(s));
        }
        prime_subsets_ = std::move(out);
    }
    return *prime_subsets_;
}

const YSpace& CaseContext::space_over(const BitSet& mask) {
    auto it = spaces_.find(mask);
    if (it == spaces_.end()) it = spaces_.emplace(mask, build_space(spec_, YSelector::of_indices(mask.members()))).first;
    return it->second;
}

const HYLattice& CaseContext::lattice_over(const BitSet& mask) {
    auto it = lattices_.find(mask);
    if (it == lattices_.end()) it = lattices_.emplace(mask, build_lattice(space_over(mask))).first;
    return it->second;
}

BitSet CaseContext::own_mask() const {
    BitSet m(spec_->primes.size());
    for (auto p : space_.prime_indices()) m.set(p);
    return m;
}

const std::vector<MultSet>& CaseContext::mult_sets() {
    if (!mult_sets_) {
        std::vector<MultSet> out;
        std::unordered_set<BitSet, BitSetHash> seen;
        auto add = [&](MultSet m) {
            if (seen.insert(m.members()).second) out.push_back(std::move(m));
        };
        for (Elem a : ring_.elements()) {
            BitSet seed(ring_.size());
            seed.set(a.index);
            add(MultSet::closure_of(ring_, seed));
        }
        for (const auto& P : spec_->primes) {
            add(MultSet::exact(ring_, P.members.complement()));
        }
        for (const auto& I : ideals()) {
            BitSet one_plus(ring_.size());
            for (auto i : I.members) one_plus.set(ring_.add(ring_.one(), Elem{static_cast<std::uint32_t>(i)}).index);
            add(MultSet::exact(ring_, one_plus));
        }
        mult_sets_ = std::move(out);
    }
    return *mult_sets_;
}

const std::vector<Subring>& CaseContext::subrings() {
    if (!subrings_) {
        std::vector<Subring> out;
        std::set<BitSet> seen;
        for (Elem a : ring_.elements()) {
            BitSet s = generated_subring(ring_, {a});
            if (seen.insert(s).second) out.push_back(build_subring(ring_, s));
        }
        subrings_ = std::move(out);
    }
    return *subrings_;
}

bool in_class_at(const YSpace& space, std::size_t i, IdealClass c) {
    return in_class(space, space.spectrum().ideals[i], c);
}

std::size_t smallest_over(const YSpace& space, std::size_t i, IdealClass c) {
    const auto& ideals = space.spectrum().ideals;
    BitSet meet = ideals.back().members;
    for (std::size_t j = 0; j < ideals.size(); ++j)
        if (ideals[i].is_subset_of(ideals[j]) && in_class_at(space, j, c)) meet &= ideals[j].members;
    return *space.spectrum().find(meet);
}

Checker::Checker(CaseContext& context, const ClaimInfo& info, const std::optional<std::string>& dropped)
    : ctx(context), info_(info), dropped_(dropped) {}

bool Checker::given(std::string_view hypothesis, bool holds) {
    if (std::find(info_.hypotheses.begin(), info_.hypotheses.end(), hypothesis) == info_.hypotheses.end())
        throw Error(ErrorKind::InternalDisagreement,
                    info_.id + " tests hypothesis '" + std::string(hypothesis) + "' it does not declare");
    auto it = met_.find(hypothesis);
    if (it == met_.end()) it = met_.emplace(std::string(hypothesis), false).first;
    it->second = it->second || holds;
    if (dropped_ && *dropped_ == hypothesis) return true;
    return holds;
}

void Checker::fail(Witness w) {
    witness_ = std::move(w);
    throw Stop{};
}

std::vector<std::string> Checker::unmet() const {
    std::vector<std::string> out;
    for (const auto& [name, met] : met_)
        if (!met && !(dropped_ && *dropped_ == name)) out.push_back(name);
    return out;
}

std::string show(const Ideal& I) { return format_gens(I); }

std::string show(const YSpace& space, const YSet& T) { return format_yset(space, T); }

std::string show(const HYFilter& f) { return format_filter(f); }

std::string show(const Ring& ring, const BitSet& elements) { return format_elems(ring, elements); }

std::string show(bool b) { return b ? "true" : "false"; }

std::string show_mask(const Spectrum& spec, const BitSet& prime_mask) {
    std::ostringstream out;
    out << '{';
    bool first = true;
    for (auto p : prime_mask) {
        if (!first) out << ',';
        first = false;
        out << format_gens(spec.primes[p]);
    }
    out << '}';
    return out.str();
}

bool all_in(const BitSet& S, const Ideal& I) { return S.is_subset_of(I.members); }

} // namespace spectral::suite
