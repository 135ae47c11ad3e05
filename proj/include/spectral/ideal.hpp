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

#include <string>
#include <vector>

#include "spectral/bitset.hpp"
#include "spectral/ring.hpp"

namespace spectral {

/// An ideal together with a canonical generating list.
///
/// Generators are chosen greedily: repeatedly take the member whose
/// principal ideal enlarges the current span the most, smallest index on
/// ties. The zero ideal has no generators.
struct Ideal {
    Ring ring;
    BitSet members;
    std::vector<Elem> gens;

    bool contains(Elem a) const noexcept { return members.test(a.index); }
    std::size_t size() const noexcept { return members.count(); }
    bool is_zero() const noexcept { return members.count() == 1; }
    bool is_whole() const noexcept { return members.count() == ring.size(); }
    bool is_proper() const noexcept { return !is_whole(); }
    bool is_subset_of(const Ideal& other) const noexcept { return members.is_subset_of(other.members); }

    friend bool operator==(const Ideal& a, const Ideal& b) noexcept { return a.members == b.members; }
};

/// "<g1,g2>", or "<0>" for the zero ideal.
std::string format_gens(const Ideal& I);

/// "<2> = {0,2,4}".
std::string display(const Ideal& I);

std::vector<Elem> canonical_gens(const Ring& ring, const BitSet& members);

/// {r a : r in R}.
BitSet principal_members(const Ring& ring, Elem a);

Ideal span(const Ring& ring, const std::vector<Elem>& gens);
Ideal span(const Ring& ring, const BitSet& elements);

/// Wraps a member set after checking it is an ideal.
Ideal ideal_of(const Ring& ring, BitSet members);

Ideal zero_ideal(const Ring& ring);
Ideal unit_ideal(const Ring& ring);

/// Every ideal exactly once, ordered by size and then by sorted member list.
std::vector<Ideal> all_ideals(const Ring& ring, std::size_t cap = 65536);

enum class IdealOp { Sum, Product, Intersect };

Ideal combine(IdealOp op, const Ideal& I, const Ideal& J);

/// {x : x s in I for every s in S}; S must be nonempty.
Ideal colon(const Ideal& I, const BitSet& S);
Ideal colon(const Ideal& I, const std::vector<Elem>& S);

/// Ann(S) = ({0} : S).
Ideal annihilator(const Ring& ring, const BitSet& S);

Ideal radical(const Ideal& I);

bool is_prime_ideal(const Ideal& I);

/// Multiplicatively closed subset containing 1.
class MultSet {
public:
    /// Smallest multiplicatively closed set containing the seed and 1.
    static MultSet closure_of(const Ring& ring, const BitSet& seed);
    /// Uses the set as given; throws when it is not closed or lacks 1.
    static MultSet exact(const Ring& ring, const BitSet& members);

    const Ring& ring() const noexcept { return ring_; }
    const BitSet& members() const noexcept { return members_; }

private:
    MultSet(Ring ring, BitSet members) : ring_(std::move(ring)), members_(std::move(members)) {}

    Ring ring_;
    BitSet members_;
};

/// I_A = {r : r a in I for some a in A}.
Ideal saturate(const Ideal& I, const MultSet& A);

/// m(I) = 0_{1+I} = {a : a = a i for some i in I}.
Ideal quasi_regular(const Ideal& I);

/// O_P = 0_{R \ P}; P must be prime.
Ideal zero_component(const Ideal& P);

/// Sum of the minimal nonzero ideals; {0} when there are none.
Ideal socle(const Ring& ring);
Ideal socle(const Ring& ring, const std::vector<Ideal>& ideals);

struct IdealFlags {
    bool pure = false;
    bool regular_ideal = false;
    bool essential = false;
    bool singular = false;
    bool minimal_nonzero = false;
    friend bool operator==(const IdealFlags&, const IdealFlags&) = default;
};

/// Essential means meeting every nonzero ideal nontrivially.
IdealFlags ideal_flags(const Ideal& I);
IdealFlags ideal_flags(const Ideal& I, const std::vector<Ideal>& ideals);

struct Quotient {
    Ring ring;
    Hom projection;
};

/// R/I as a table ring. Cosets are ordered by least representative and
/// labelled "[rep]".
Quotient quotient_ring(const Ideal& I);

/// f^{-1}(J).
Ideal contract(const Hom& f, const Ideal& J);

/// The ideal of the target generated by f(I).
Ideal extend(const Hom& f, const Ideal& I);

} // namespace spectral
