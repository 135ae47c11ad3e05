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
#include <string_view>
#include <utility>
#include <vector>

#include "spectral/spectrum.hpp"

namespace spectral {

/// Subset of Y, as a mask over the positions of YSpace::primes().
using YSet = BitSet;

struct YSelector {
    enum class Kind { Spec, Max, Min, Indices, MinOver };

    Kind kind = Kind::Spec;
    /// Positions in the ring's prime list, for Kind::Indices.
    std::vector<std::size_t> indices;
    /// Element texts of the generators, for Kind::MinOver; resolved against
    /// the ring when the space is built.
    std::vector<std::string> generators;

    static YSelector spec() { return {}; }
    static YSelector max() { return {Kind::Max, {}, {}}; }
    static YSelector min() { return {Kind::Min, {}, {}}; }
    static YSelector of_indices(std::vector<std::size_t> idx) { return {Kind::Indices, std::move(idx), {}}; }
    static YSelector min_over(std::vector<std::string> gens) { return {Kind::MinOver, {}, std::move(gens)}; }

    friend bool operator==(const YSelector&, const YSelector&) = default;
};

/// Text forms: `spec`, `max`, `min`, `idx:0,2`, `minover:<gens>`.
std::string to_string(const YSelector& sel);
YSelector parse_selector(std::string_view text);

/// A ring with a chosen subset Y of its prime spectrum. Hulls of single
/// elements and of every ideal are tabulated once at construction.
class YSpace {
public:
    YSpace() = default;

    const Ring& ring() const noexcept { return impl_->spec->ring; }
    const Spectrum& spectrum() const noexcept { return *impl_->spec; }
    std::shared_ptr<const Spectrum> spectrum_ptr() const noexcept { return impl_->spec; }
    const YSelector& selector() const noexcept { return impl_->selector; }

    /// |Y|.
    std::size_t size() const noexcept { return impl_->primes.size(); }
    const std::vector<Ideal>& primes() const noexcept { return impl_->primes; }
    /// Positions of the members of Y in spectrum().primes.
    const std::vector<std::size_t>& prime_indices() const noexcept { return impl_->prime_indices; }
    /// k(Y); R when Y is empty.
    const Ideal& kY() const noexcept { return impl_->kY; }

    YSet none() const { return YSet(size()); }
    YSet all() const { return YSet::full(size()); }

    const YSet& hull_of(Elem a) const { return impl_->elem_hull.at(a.index); }
    /// kh_Y(a), as a position in spectrum().ideals.
    std::size_t kernel_hull_index(Elem a) const { return impl_->elem_kh.at(a.index); }
    /// h_Y(I) for the ideal at position i of spectrum().ideals.
    const YSet& ideal_hull(std::size_t i) const { return impl_->ideal_hull.at(i); }
    /// kh_Y(I) for the ideal at position i, as a position in spectrum().ideals.
    std::size_t ideal_kernel_hull(std::size_t i) const { return impl_->ideal_kh.at(i); }

    /// Position of the ideal in spectrum().ideals.
    std::size_t index_of(const Ideal& I) const;

    friend YSpace build_space(std::shared_ptr<const Spectrum> spec, const YSelector& sel);

private:
    struct Impl {
        std::shared_ptr<const Spectrum> spec;
        YSelector selector;
        std::vector<Ideal> primes;
        std::vector<std::size_t> prime_indices;
        Ideal kY;
        std::vector<YSet> elem_hull;
        std::vector<std::size_t> elem_kh;
        std::vector<YSet> ideal_hull;
        std::vector<std::size_t> ideal_kh;
    };

    std::shared_ptr<const Impl> impl_;
};

YSpace build_space(std::shared_ptr<const Spectrum> spec, const YSelector& sel);
YSpace build_space(const Ring& ring, const YSelector& sel);

/// h_Y(S) = {P in Y : S subset of P}; h_Y of the empty set is Y.
YSet hull(const YSpace& space, const BitSet& S);
YSet hull(const YSpace& space, const std::vector<Elem>& S);
YSet hull(const YSpace& space, const Ideal& I);

/// k(T), the intersection of the primes in T; R for T empty.
Ideal kernel(const YSpace& space, const YSet& T);

enum class TopoOp { Closure, Interior, Complement };

/// Closure is h_Y k; interior is complement, closure, complement.
YSet topo(const YSpace& space, const YSet& T, TopoOp op);

struct HyPropertyResult {
    bool holds = true;
    /// First pair (a, b) in element order with no c such that
    /// h_Y(a) and h_Y(b) meet in h_Y(c).
    std::optional<std::pair<Elem, Elem>> witness;
};

HyPropertyResult hy_property(const YSpace& space);

/// "{<2>,<3>}" using canonical generators of the primes.
std::string format_yset(const YSpace& space, const YSet& T);

} // namespace spectral
