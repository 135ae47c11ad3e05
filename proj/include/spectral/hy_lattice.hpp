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

#pragma once

#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "spectral/zariski.hpp"

namespace spectral {

/// The sets h_Y(F), F a finite subset of R, ordered by inclusion.
///
/// A finite F spans an ideal with the same hull, so the elements are exactly
/// the hulls of the canonical generator sets of all ideals. Elements are
/// sorted by the YSet order, so the bottom comes first and Y last.
class HYLattice {
public:
    HYLattice() = default;

    const YSpace& space() const noexcept { return impl_->space; }
    std::size_t size() const noexcept { return impl_->elements.size(); }
    const std::vector<YSet>& elements() const noexcept { return impl_->elements; }
    const YSet& element(std::size_t i) const { return impl_->elements.at(i); }
    /// A finite F with h_Y(F) equal to element i.
    const std::vector<Elem>& witness(std::size_t i) const { return impl_->witnesses.at(i); }

    std::optional<std::size_t> find(const YSet& T) const;
    /// Like find, but throws when T is not in the lattice.
    std::size_t index(const YSet& T) const;

    std::size_t meet(std::size_t a, std::size_t b) const;
    std::size_t join(std::size_t a, std::size_t b) const;
    bool leq(std::size_t a, std::size_t b) const { return element(a).is_subset_of(element(b)); }

    /// The empty set, h_Y(1).
    std::size_t bottom() const noexcept { return 0; }
    std::size_t top() const noexcept { return size() - 1; }

    bool same_as(const HYLattice& other) const noexcept { return impl_ == other.impl_; }

    friend HYLattice build_lattice(const YSpace& space);

private:
    struct Impl {
        YSpace space;
        std::vector<YSet> elements;
        std::vector<std::vector<Elem>> witnesses;
        std::unordered_map<YSet, std::size_t, BitSetHash> lookup;
    };

    std::shared_ptr<const Impl> impl_;
};

HYLattice build_lattice(const YSpace& space);

/// A nonempty, up-closed, meet-closed set of lattice elements.
struct HYFilter {
    HYLattice lattice;
    /// Mask over lattice element positions.
    BitSet members;

    bool contains(std::size_t element) const { return members.test(element); }
    bool is_proper() const;
    /// Proper, and A or B is a member whenever their union is.
    bool is_prime() const;
    /// Proper and maximal among proper filters.
    bool is_ultra() const;

    friend bool operator==(const HYFilter& a, const HYFilter& b) { return a.members == b.members; }
};

/// Validates the filter axioms; throws Precondition naming the failure.
HYFilter make_filter(const HYLattice& lattice, BitSet members);
HYFilter principal_filter(const HYLattice& lattice, std::size_t element);

enum class FilterKind { All, Proper, Prime, Ultra };

/// Filters of the given kind, sorted by member mask. All/Proper enumerate
/// every subset of the lattice and need size <= cap; prime and ultra
/// filters come from the join-irreducible elements and have no cap.
std::vector<HYFilter> filters(const HYLattice& lattice, FilterKind kind, std::size_t cap = 20);

/// H_Y(I) = {h_Y(F) : F a finite subset of I}.
HYFilter to_filter(const HYLattice& lattice, const Ideal& I);

/// H_Y^{-1}(F) = {a : h_Y(a) in F}.
Ideal to_ideal(const HYFilter& filter);

/// Prime filters containing F, minimal among those; F must be proper.
std::vector<HYFilter> min_prime_filters_over(const HYFilter& filter);

/// "[{<2>}, {<2>,<3>}] [prime] [ultra]".
std::string format_filter(const HYFilter& filter);

struct Transport {
    YSpace space;
    HYLattice lattice;
    HYFilter filter;
    /// R -> R/I for quotients, R' -> R for subrings.
    Hom hom;
    /// H_Y^{-1}(F)/I = H_T^{-1}(F') for quotients, H_Y^{-1}(F) n R' =
    /// H_{Y'}^{-1}(F') for subrings.
    bool correspondence_holds = false;
};

/// Passes to R/I with T = {P/I : P in Y}; I must lie in k(Y).
Transport transport_quotient(const HYFilter& filter, const Ideal& I);

/// Passes to a subring with Y' = {P n R' : P in Y}, duplicates merged.
Transport transport_subring(const HYFilter& filter, const Subring& sub);

} // namespace spectral
