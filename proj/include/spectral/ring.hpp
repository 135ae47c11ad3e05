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

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <ranges>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "spectral/bitset.hpp"
#include "spectral/error.hpp"

namespace spectral {

/// Position of an element in its ring's carrier.
///
/// Canonical orders: residues ascending for Z/n; for GF(p)[x]/(f) the index
/// is sum c_i p^i, i.e. coefficient vectors compared from the leading
/// coefficient down; for products a mixed-radix tuple with the first factor
/// most significant.
struct Elem {
    std::uint32_t index = 0;
    friend auto operator<=>(Elem, Elem) = default;
};

struct ModularSpec {
    std::uint32_t n = 1;
};

/// GF(p)[x]/(f); coefficients ascending by degree, f monic.
struct PolyQuotientSpec {
    std::uint32_t p = 2;
    std::vector<std::uint32_t> coeffs;
};

struct RingSpec;

struct ProductSpec {
    std::vector<RingSpec> factors;
};

struct TableSpec {
    std::size_t size = 0;
    std::vector<std::vector<std::uint32_t>> add;
    std::vector<std::vector<std::uint32_t>> mul;
    std::uint32_t zero = 0;
    std::uint32_t one = 0;
    /// Display name; element labels default to indices when empty.
    std::string name;
    std::vector<std::string> labels;
};

struct RingSpec {
    std::variant<ModularSpec, PolyQuotientSpec, ProductSpec, TableSpec> value;

    static RingSpec modular(std::uint32_t n) { return {ModularSpec{n}}; }
    static RingSpec poly(std::uint32_t p, std::vector<std::uint32_t> coeffs) {
        return {PolyQuotientSpec{p, std::move(coeffs)}};
    }
    static RingSpec product(std::vector<RingSpec> factors) { return {ProductSpec{std::move(factors)}}; }
};

/// Canonical text for a spec, in the ring-spec mini-language.
std::string to_string(const RingSpec& spec);

struct RingBuildOptions {
    std::size_t carrier_cap = 4096;
    /// Skip the O(n^3) law check for tables that are rings by construction
    /// (quotients, subrings).
    bool check_table_axioms = true;
};

/// Immutable finite commutative ring with unity. Copies share storage.
class Ring {
public:
    Ring() = default;

    std::size_t size() const noexcept { return impl_->size; }
    Elem zero() const noexcept { return Elem{impl_->zero}; }
    Elem one() const noexcept { return Elem{impl_->one}; }

    Elem add(Elem a, Elem b) const noexcept { return Elem{impl_->add[a.index * impl_->size + b.index]}; }
    Elem mul(Elem a, Elem b) const noexcept { return Elem{impl_->mul[a.index * impl_->size + b.index]}; }
    Elem neg(Elem a) const noexcept { return Elem{impl_->neg[a.index]}; }
    Elem sub(Elem a, Elem b) const noexcept { return add(a, neg(b)); }
    Elem pow(Elem a, std::size_t e) const noexcept;

    /// Checked conversion from a raw index.
    Elem at(std::size_t index) const;

    auto elements() const {
        return std::views::iota(std::uint32_t{0}, static_cast<std::uint32_t>(size())) |
               std::views::transform([](std::uint32_t i) { return Elem{i}; });
    }

    const RingSpec& spec() const noexcept { return impl_->spec; }
    const std::string& name() const noexcept { return impl_->name; }
    const std::string& label(Elem a) const { return impl_->labels.at(a.index); }

    /// Parses an element in the ring's display encoding (labels), falling
    /// back to a bare index.
    std::optional<Elem> parse_elem(std::string_view text) const;

    /// Same carrier and operation tables.
    bool same_as(const Ring& other) const noexcept;

    BitSet empty_set() const { return BitSet(size()); }

private:
    struct Impl {
        std::size_t size = 0;
        std::uint32_t zero = 0;
        std::uint32_t one = 0;
        std::vector<std::uint16_t> add;
        std::vector<std::uint16_t> mul;
        std::vector<std::uint16_t> neg;
        std::vector<std::string> labels;
        std::string name;
        RingSpec spec;
    };

    explicit Ring(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}

    friend Ring build_ring(const RingSpec&, const RingBuildOptions&);

    std::shared_ptr<const Impl> impl_;
};

/// Constructs and validates a ring. Table specs pass the full O(n^3)
/// axiom check; the other constructors are rings by construction.
Ring build_ring(const RingSpec& spec, const RingBuildOptions& options = {});

/// Parses the table-ring JSON ingestion format
/// {"size": n, "add": [[...]], "mul": [[...]], "zero": i, "one": j}.
TableSpec parse_table_json(std::string_view json_text);

enum class ArithOp { Add, Mul, Neg };

/// Index-checked arithmetic; `b` is required iff the operation is binary.
Elem elem_arith(const Ring& ring, ArithOp op, std::size_t a, std::optional<std::size_t> b = std::nullopt);

/// zero_divisor means a nonzero a with a b = 0 for some nonzero b.
struct ElementClassSet {
    bool unit = false;
    bool idempotent = false;
    bool nilpotent = false;
    bool zero_divisor = false;
    bool regular = false;
    friend bool operator==(const ElementClassSet&, const ElementClassSet&) = default;
};

/// Flags by exhaustive witness search.
ElementClassSet classify_element(const Ring& ring, Elem a);

struct Hom {
    Ring source;
    Ring target;
    std::vector<Elem> map;

    Elem operator()(Elem a) const { return map.at(a.index); }
};

/// Validates all four homomorphism laws exhaustively.
Hom build_hom(const Ring& source, const Ring& target, const std::vector<std::uint32_t>& map);

struct Subring {
    Ring ring;
    Hom embedding;
};

/// Table ring on a subset containing 0 and 1 and closed under the ring
/// operations, with its inclusion into the parent.
Subring build_subring(const Ring& ring, const BitSet& subset);

/// Smallest subring containing 1 and the given elements.
BitSet generated_subring(const Ring& ring, const std::vector<Elem>& generators);

/// Renders a set of elements as "{a,b,c}" using labels.
std::string format_elems(const Ring& ring, const BitSet& members);

} // namespace spectral
