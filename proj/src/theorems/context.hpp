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

#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "spectral/hy_lattice.hpp"
#include "spectral/ideal_classes.hpp"
#include "spectral/theorems.hpp"

namespace spectral::suite {

struct IdealBits {
    bool semiprime = false;
    bool hy = false;
    bool strong = false;
    bool hilbert = false;
};

/// Everything the claims share for one (ring, Y) case. Expensive pieces are
/// built on first use.
class CaseContext {
public:
    CaseContext(const Case& c, const Caps& caps);

    const Case& source() const noexcept { return case_; }
    const Caps& caps() const noexcept { return caps_; }
    const Ring& ring() const noexcept { return ring_; }
    const Spectrum& spec() const noexcept { return *spec_; }
    const std::shared_ptr<const Spectrum>& spec_ptr() const noexcept { return spec_; }
    const YSpace& space() const noexcept { return space_; }
    const HYLattice& lattice() const noexcept { return lattice_; }
    const RingClassFlags& flags() const noexcept { return flags_; }

    const std::vector<Ideal>& ideals() const noexcept { return spec_->ideals; }
    std::size_t index(const Ideal& I) const { return space_.index_of(I); }
    const Ideal& ideal(const BitSet& members) const { return spec_->ideal(members); }
    const Ideal& whole() const { return ideals().back(); }
    const Ideal& zero() const { return ideals().front(); }

    const IdealBits& bits(std::size_t i) const { return bits_.at(i); }
    bool in(std::size_t i, IdealClass c) const;
    /// Positions of the ideals contained in ideal i.
    std::vector<std::size_t> subideals(std::size_t i) const;

    bool ky_zero() const { return space_.kY().is_zero(); }
    bool max_in_y() const { return space_.size() == spec_->primes.size(); }
    bool min_in_y() const { return max_in_y(); }

    /// Stand-ins for arbitrary subsets of R: the singletons in element
    /// order, then each ideal's generator set not already listed.
    const std::vector<BitSet>& subsets();

    /// Filters of the case lattice; throws CapExceeded past the caps.
    const std::vector<HYFilter>& all_filters();
    const std::vector<HYFilter>& prime_filters();
    const std::vector<HYFilter>& ultra_filters();

    /// Every subset of Spec(R) as a mask over spec().primes.
    const std::vector<BitSet>& prime_subsets();
    /// The space over the same spectrum with Y given by a prime mask.
    const YSpace& space_over(const BitSet& mask);
    const HYLattice& lattice_over(const BitSet& mask);
    /// Mask of the case's own Y.
    BitSet own_mask() const;

    /// Closures of singletons, complements of primes and the sets 1 + I,
    /// without repeats.
    const std::vector<MultSet>& mult_sets();
    /// Subrings generated by one element, without repeats.
    const std::vector<Subring>& subrings();

private:
    Case case_;
    Caps caps_;
    Ring ring_;
    std::shared_ptr<const Spectrum> spec_;
    YSpace space_;
    HYLattice lattice_;
    RingClassFlags flags_;
    std::vector<IdealBits> bits_;

    std::optional<std::vector<BitSet>> subsets_;
    std::optional<std::vector<HYFilter>> all_filters_;
    std::optional<std::vector<HYFilter>> prime_filters_;
    std::optional<std::vector<HYFilter>> ultra_filters_;
    std::optional<std::vector<BitSet>> prime_subsets_;
    std::map<BitSet, YSpace> spaces_;
    std::map<BitSet, HYLattice> lattices_;
    std::optional<std::vector<MultSet>> mult_sets_;
    std::optional<std::vector<Subring>> subrings_;
};

/// Membership of an ideal in a class, for any space over the same spectrum.
bool in_class_at(const YSpace& space, std::size_t i, IdealClass c);

/// Smallest member of the class containing ideal i, as the intersection of
/// all members over it.
std::size_t smallest_over(const YSpace& space, std::size_t i, IdealClass c);

/// Carries one claim evaluation: hypothesis bookkeeping, counters and the
/// first counterexample.
class Checker {
public:
    struct Stop {};

    Checker(CaseContext& ctx, const ClaimInfo& info, const std::optional<std::string>& dropped);

    CaseContext& ctx;

    /// `holds`, or true when the hypothesis is the dropped one.
    bool given(std::string_view hypothesis, bool holds);
    void visit(std::size_t n = 1) noexcept { stats_.instances += n; }

    template <class MakeWitness>
    void expect(bool ok, MakeWitness&& make) {
        ++stats_.conclusions;
        if (!ok) fail(make());
    }

    [[noreturn]] void fail(Witness w);

    const CheckStats& stats() const noexcept { return stats_; }
    const std::optional<Witness>& witness() const noexcept { return witness_; }
    std::vector<std::string> unmet() const;

private:
    const ClaimInfo& info_;
    std::optional<std::string> dropped_;
    CheckStats stats_;
    std::optional<Witness> witness_;
    std::map<std::string, bool, std::less<>> met_;
};

using CheckFn = void (*)(Checker&);

struct Claim {
    ClaimInfo info;
    CheckFn check = nullptr;
};

std::vector<Claim> basic_claims();
std::vector<Claim> class_claims();
std::vector<Claim> filter_claims();
std::vector<Claim> generated_claims();
std::vector<Claim> operation_claims();
std::vector<Claim> closure_claims();

/// All claims, T1..T35.
const std::vector<Claim>& claims();
const Claim& find_claim(std::string_view id);

std::string show(const Ideal& I);
std::string show(const YSpace& space, const YSet& T);
std::string show(const HYFilter& f);
std::string show(const Ring& ring, const BitSet& elements);
std::string show(bool b);
std::string show_mask(const Spectrum& spec, const BitSet& prime_mask);

/// S is a subset of I.
bool all_in(const BitSet& S, const Ideal& I);

} // namespace spectral::suite
