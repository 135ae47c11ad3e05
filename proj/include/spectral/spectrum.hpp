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

#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "spectral/ideal.hpp"

namespace spectral {

/// Prime spectrum of a finite ring, together with the full ideal list it was
/// filtered from.
///
/// Primes are ordered by their canonical generator lists. For a finite ring
/// every prime is both minimal and maximal; `spectrum` verifies this rather
/// than assuming it.
struct Spectrum {
    Ring ring;
    std::vector<Ideal> ideals;
    std::vector<Ideal> primes;
    /// Positions of `primes` inside `ideals`.
    std::vector<std::size_t> prime_ideal_index;
    BitSet min_mask;
    BitSet max_mask;
    Ideal rad;
    Ideal jac;

    /// Position of an ideal with the given members in `ideals`.
    std::optional<std::size_t> find(const BitSet& members) const;
    /// The listed ideal with these members; throws NotClosed if absent.
    const Ideal& ideal(const BitSet& members) const;

    std::unordered_map<BitSet, std::size_t, BitSetHash> lookup;
};

Spectrum spectrum(const Ring& ring, std::size_t ideal_cap = 65536);

/// "Spec(Z/12) = [<2>, <3>]".
std::string format_spectrum(const Spectrum& spec);

/// Primes over I that are minimal among those; I must be proper.
std::vector<Ideal> min_primes_over(const Spectrum& spec, const Ideal& I);

struct BourbakiPrime {
    Ideal prime;
    /// Smallest x with (I : x) = prime.
    Elem witness;
};

struct BourbakiResult {
    std::vector<BourbakiPrime> primes;
    /// I equals the intersection of its Bourbaki primes (R when there are none).
    bool fixed_place = false;
};

BourbakiResult bourbaki(const Spectrum& spec, const Ideal& I);

struct RingClassFlags {
    bool reduced = false;
    bool semiprimitive = false;
    bool regular_ring = false;
    bool gelfand = false;
    bool weakly_regular = false;
    bool property_A = false;
    bool ac_ring = false;
    friend bool operator==(const RingClassFlags&, const RingClassFlags&) = default;
};

/// Property A is tested over proper ideals made of zero-divisors. The a.c.
/// test uses Ann(I) = Ann(c) over all ideals: Ann(F) depends only on the
/// ideal F spans, so finite subsets need not be enumerated.
RingClassFlags ring_flags(const Spectrum& spec);

} // namespace spectral
