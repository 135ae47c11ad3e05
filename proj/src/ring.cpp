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

#include "spectral/ring.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>
#include <unordered_map>

#include <json.hpp>

namespace spectral {

std::string_view to_string(ErrorKind kind) noexcept {
    switch (kind) {
    case ErrorKind::AxiomViolation: return "axiom-violation";
    case ErrorKind::NonPrimeModulus: return "non-prime";
    case ErrorKind::NonMonic: return "non-monic";
    case ErrorKind::CapExceeded: return "cap-exceeded";
    case ErrorKind::IndexOutOfRange: return "index-out-of-range";
    case ErrorKind::LawViolation: return "law-violation";
    case ErrorKind::NotClosed: return "not-closed";
    case ErrorKind::MissingUnity: return "missing-unity";
    case ErrorKind::RingMismatch: return "ring-mismatch";
    case ErrorKind::EmptySet: return "empty-set";
    case ErrorKind::NotMultiplicativelyClosed: return "not-multiplicatively-closed";
    case ErrorKind::ImproperIdeal: return "improper-ideal";
    case ErrorKind::InvalidSelector: return "invalid-selector";
    case ErrorKind::Precondition: return "precondition-violation";
    case ErrorKind::InternalDisagreement: return "internal-disagreement";
    case ErrorKind::UnknownTheorem: return "unknown-theorem";
    case ErrorKind::UnknownHypothesis: return "unknown-hypothesis";
    case ErrorKind::Parse: return "parse-error";
    }
    return "error";
}

namespace {

bool is_prime(std::uint32_t p) {
    if (p < 2) return false;
    for (std::uint32_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

std::string poly_text(const std::vector<std::uint32_t>& coeffs) {
    std::string out;
    for (std::size_t k = coeffs.size(); k-- > 0;) {
        const auto c = coeffs[k];
        if (c == 0) continue;
        if (!out.empty()) out += "+";
        if (k == 0) {
            out += std::to_string(c);
            continue;
        }
        if (c != 1) out += std::to_string(c);
        out += "x";
        if (k > 1) out += "^" + std::to_string(k);
    }
    return out.empty() ? "0" : out;
}

std::string tuple_text(const std::vector<std::string>& parts) {
    std::string out = "(";
    for (std::size_t k = 0; k < parts.size(); ++k) {
        if (k) out += ",";
        out += parts[k];
    }
    return out + ")";
}

// Flat operation tables before they are frozen into a Ring.
struct Tables {
    std::size_t size = 0;
    std::vector<std::uint32_t> add;
    std::vector<std::uint32_t> mul;
    std::uint32_t zero = 0;
    std::uint32_t one = 0;
    std::vector<std::string> labels;
};

std::size_t spec_size(const RingSpec& spec, std::size_t cap);

void check_cap(std::size_t size, std::size_t cap) {
    if (size > cap)
        throw Error(ErrorKind::CapExceeded,
                    "carrier size " + std::to_string(size) + " exceeds cap " + std::to_string(cap));
}

std::size_t spec_size(const RingSpec& spec, std::size_t cap) {
    return std::visit(
        [&](const auto& s) -> std::size_t {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, ModularSpec>) {
                return s.n;
            } else if constexpr (std::is_same_v<T, PolyQuotientSpec>) {
                std::size_t size = 1;
                for (std::size_t k = 1; k < s.coeffs.size(); ++k) {
                    size *= s.p;
                    check_cap(size, cap);
                }
                return size;
            } else if constexpr (std::is_same_v<T, ProductSpec>) {
                std::size_t size = 1;
                for (const auto& f : s.factors) {
                    size *= spec_size(f, cap);
                    check_cap(size, cap);
                }
                return size;
            } else {
                return s.size;
            }
        },
        spec.value);
}

Tables modular_tables(const ModularSpec& s) {
    if (s.n < 1) throw Error(ErrorKind::Precondition, "Z/n requires n >= 1");
    Tables t;
    t.size = s.n;
    t.add.resize(t.size * t.size);
    t.mul.resize(t.size * t.size);
    for (std::uint64_t a = 0; a < s.n; ++a) {
        for (std::uint64_t b = 0; b < s.n; ++b) {
            t.add[a * s.n + b] = static_cast<std::uint32_t>((a + b) % s.n);
            t.mul[a * s.n + b] = static_cast<std::uint32_t>((a * b) % s.n);
        }
        t.labels.push_back(std::to_string(a));
    }
    t.zero = 0;
    t.one = s.n == 1 ? 0 : 1;
    return t;
}

Tables poly_tables(const PolyQuotientSpec& s) {
    if (!is_prime(s.p)) throw Error(ErrorKind::NonPrimeModulus, std::to_string(s.p) + " is not prime");
    if (s.coeffs.size() < 2) throw Error(ErrorKind::NonMonic, "modulus polynomial must have degree >= 1");
    if (s.coeffs.back() != 1) throw Error(ErrorKind::NonMonic, "modulus polynomial " + poly_text(s.coeffs) + " is not monic");
    for (auto c : s.coeffs)
        if (c >= s.p) throw Error(ErrorKind::Precondition, "coefficient " + std::to_string(c) + " not reduced mod p");

    const std::size_t degree = s.coeffs.size() - 1;
    std::size_t size = 1;
    for (std::size_t k = 0; k < degree; ++k) size *= s.p;

    std::vector<std::vector<std::uint32_t>> vec(size, std::vector<std::uint32_t>(degree, 0));
    for (std::size_t i = 0; i < size; ++i) {
        std::size_t rest = i;
        for (std::size_t k = 0; k < degree; ++k) {
            vec[i][k] = static_cast<std::uint32_t>(rest % s.p);
            rest /= s.p;
        }
    }
    auto encode = [&](const std::vector<std::uint32_t>& c) {
        std::size_t idx = 0;
        for (std::size_t k = degree; k-- > 0;) idx = idx * s.p + c[k];
        return static_cast<std::uint32_t>(idx);
    };

    Tables t;
    t.size = size;
    t.add.resize(size * size);
    t.mul.resize(size * size);
    std::vector<std::uint64_t> prod(2 * degree);
    std::vector<std::uint32_t> out(degree);
    for (std::size_t a = 0; a < size; ++a) {
        for (std::size_t b = 0; b < size; ++b) {
            for (std::size_t k = 0; k < degree; ++k) out[k] = (vec[a][k] + vec[b][k]) % s.p;
            t.add[a * size + b] = encode(out);

            std::fill(prod.begin(), prod.end(), 0);
            for (std::size_t i = 0; i < degree; ++i)
                for (std::size_t j = 0; j < degree; ++j) prod[i + j] = (prod[i + j] + std::uint64_t{vec[a][i]} * vec[b][j]) % s.p;
            // x^degree = -(lower coefficients of f); reduce from the top.
            for (std::size_t k = 2 * degree - 1; k >= degree; --k) {
                const std::uint64_t c = prod[k];
                if (c == 0) continue;
                prod[k] = 0;
                for (std::size_t j = 0; j < degree; ++j)
                    prod[k - degree + j] = (prod[k - degree + j] + (s.p - s.coeffs[j]) * c) % s.p;
            }
            for (std::size_t k = 0; k < degree; ++k) out[k] = static_cast<std::uint32_t>(prod[k]);
            t.mul[a * size + b] = encode(out);
        }
        std::vector<std::string> parts;
        for (auto c : vec[a]) parts.push_back(std::to_string(c));
        t.labels.push_back(tuple_text(parts));
    }
    t.zero = 0;
    t.one = size == 1 ? 0 : 1;
    return t;
}

Tables build_tables(const RingSpec& spec, std::size_t cap, bool check);

Tables product_tables(const ProductSpec& s, std::size_t cap) {
    if (s.factors.empty()) throw Error(ErrorKind::Precondition, "product needs at least one factor");
    std::vector<Tables> parts;
    std::size_t size = 1;
    for (const auto& f : s.factors) {
        parts.push_back(build_tables(f, cap, true));
        size *= parts.back().size;
        check_cap(size, cap);
    }
    // Mixed radix, first factor most significant.
    const std::size_t k = parts.size();
    std::vector<std::vector<std::uint32_t>> digits(size, std::vector<std::uint32_t>(k));
    for (std::size_t i = 0; i < size; ++i) {
        std::size_t rest = i;
        for (std::size_t f = k; f-- > 0;) {
            digits[i][f] = static_cast<std::uint32_t>(rest % parts[f].size);
            rest /= parts[f].size;
        }
    }
    auto encode = [&](auto&& digit_of) {
        std::size_t idx = 0;
        for (std::size_t f = 0; f < k; ++f) idx = idx * parts[f].size + digit_of(f);
        return static_cast<std::uint32_t>(idx);
    };

    Tables t;
    t.size = size;
    t.add.resize(size * size);
    t.mul.resize(size * size);
    for (std::size_t a = 0; a < size; ++a) {
        for (std::size_t b = 0; b < size; ++b) {
            t.add[a * size + b] = encode([&](std::size_t f) {
                return parts[f].add[digits[a][f] * parts[f].size + digits[b][f]];
            });
            t.mul[a * size + b] = encode([&](std::size_t f) {
                return parts[f].mul[digits[a][f] * parts[f].size + digits[b][f]];
            });
        }
        std::vector<std::string> labels;
        for (std::size_t f = 0; f < k; ++f) labels.push_back(parts[f].labels[digits[a][f]]);
        t.labels.push_back(tuple_text(labels));
    }
    t.zero = encode([&](std::size_t f) { return parts[f].zero; });
    t.one = encode([&](std::size_t f) { return parts[f].one; });
    return t;
}

std::string triple_text(const char* law, std::size_t a, std::size_t b, std::size_t c) {
    std::ostringstream os;
    os << law << " fails at (" << a << "," << b << "," << c << ")";
    return os.str();
}

void validate_tables(const Tables& t) {
    const std::size_t n = t.size;
    auto add = [&](std::size_t a, std::size_t b) { return std::size_t{t.add[a * n + b]}; };
    auto mul = [&](std::size_t a, std::size_t b) { return std::size_t{t.mul[a * n + b]}; };
    auto fail = [](const std::string& what) { throw Error(ErrorKind::AxiomViolation, what); };

    if (n > 1 && t.zero == t.one) fail("zero equals one in a ring with more than one element");
    for (std::size_t a = 0; a < n; ++a) {
        if (add(a, t.zero) != a) fail(triple_text("additive identity", a, t.zero, a));
        if (mul(a, t.one) != a) fail(triple_text("multiplicative identity", a, t.one, a));
        bool has_inverse = false;
        for (std::size_t b = 0; b < n; ++b) {
            if (add(a, b) != add(b, a)) fail(triple_text("commutativity of +", a, b, 0));
            if (mul(a, b) != mul(b, a)) fail(triple_text("commutativity of *", a, b, 0));
            has_inverse = has_inverse || add(a, b) == t.zero;
        }
        if (!has_inverse) fail(triple_text("additive inverse", a, 0, 0));
    }
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t c = 0; c < n; ++c) {
                if (add(add(a, b), c) != add(a, add(b, c))) fail(triple_text("associativity of +", a, b, c));
                if (mul(mul(a, b), c) != mul(a, mul(b, c))) fail(triple_text("associativity of *", a, b, c));
                if (mul(a, add(b, c)) != add(mul(a, b), mul(a, c))) fail(triple_text("distributivity", a, b, c));
            }
}

Tables table_tables(const TableSpec& s, bool check) {
    if (s.size < 1) throw Error(ErrorKind::Precondition, "table ring needs size >= 1");
    const std::size_t n = s.size;
    auto check_matrix = [&](const std::vector<std::vector<std::uint32_t>>& m, const char* what) {
        if (m.size() != n) throw Error(ErrorKind::Precondition, std::string(what) + " table has wrong row count");
        for (const auto& row : m) {
            if (row.size() != n) throw Error(ErrorKind::Precondition, std::string(what) + " table has wrong row length");
            for (auto v : row)
                if (v >= n) throw Error(ErrorKind::IndexOutOfRange, std::string(what) + " table entry out of range");
        }
    };
    check_matrix(s.add, "add");
    check_matrix(s.mul, "mul");
    if (s.zero >= n || s.one >= n) throw Error(ErrorKind::IndexOutOfRange, "zero/one index out of range");

    Tables t;
    t.size = n;
    t.add.reserve(n * n);
    t.mul.reserve(n * n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            t.add.push_back(s.add[a][b]);
            t.mul.push_back(s.mul[a][b]);
        }
    t.zero = s.zero;
    t.one = s.one;
    if (!s.labels.empty()) {
        if (s.labels.size() != n) throw Error(ErrorKind::Precondition, "label count does not match size");
        t.labels = s.labels;
    } else {
        for (std::size_t a = 0; a < n; ++a) t.labels.push_back(std::to_string(a));
    }
    if (check) validate_tables(t);
    return t;
}

Tables build_tables(const RingSpec& spec, std::size_t cap, bool check) {
    check_cap(spec_size(spec, cap), cap);
    return std::visit(
        [&](const auto& s) -> Tables {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, ModularSpec>) return modular_tables(s);
            else if constexpr (std::is_same_v<T, PolyQuotientSpec>) return poly_tables(s);
            else if constexpr (std::is_same_v<T, ProductSpec>) return product_tables(s, cap);
            else return table_tables(s, check);
        },
        spec.value);
}

std::string strip_spaces(std::string_view text) {
    std::string out;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) out += c;
    return out;
}

} // namespace

std::string to_string(const RingSpec& spec) {
    return std::visit(
        [](const auto& s) -> std::string {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, ModularSpec>) {
                return "Z/" + std::to_string(s.n);
            } else if constexpr (std::is_same_v<T, PolyQuotientSpec>) {
                return "GF(" + std::to_string(s.p) + ")[x]/(" + poly_text(s.coeffs) + ")";
            } else if constexpr (std::is_same_v<T, ProductSpec>) {
                std::string out;
                for (std::size_t k = 0; k < s.factors.size(); ++k) {
                    if (k) out += " x ";
                    out += to_string(s.factors[k]);
                }
                return out;
            } else {
                return s.name.empty() ? "table(" + std::to_string(s.size) + ")" : s.name;
            }
        },
        spec.value);
}

Ring build_ring(const RingSpec& spec, const RingBuildOptions& options) {
    Tables t = build_tables(spec, options.carrier_cap, options.check_table_axioms);
    if (t.size > 65535) throw Error(ErrorKind::CapExceeded, "carrier exceeds 16-bit element encoding");

    auto impl = std::make_shared<Ring::Impl>();
    impl->size = t.size;
    impl->zero = t.zero;
    impl->one = t.one;
    impl->add.assign(t.add.begin(), t.add.end());
    impl->mul.assign(t.mul.begin(), t.mul.end());
    impl->neg.resize(t.size);
    for (std::size_t a = 0; a < t.size; ++a)
        for (std::size_t b = 0; b < t.size; ++b)
            if (t.add[a * t.size + b] == t.zero) {
                impl->neg[a] = static_cast<std::uint16_t>(b);
                break;
            }
    impl->labels = std::move(t.labels);
    impl->spec = spec;
    impl->name = to_string(spec);
    return Ring(std::move(impl));
}

Elem Ring::pow(Elem a, std::size_t e) const noexcept {
    Elem result = one();
    Elem base = a;
    while (e > 0) {
        if (e & 1U) result = mul(result, base);
        base = mul(base, base);
        e >>= 1U;
    }
    return result;
}

Elem Ring::at(std::size_t index) const {
    if (index >= size())
        throw Error(ErrorKind::IndexOutOfRange,
                    "element index " + std::to_string(index) + " out of range for " + name());
    return Elem{static_cast<std::uint32_t>(index)};
}

std::optional<Elem> Ring::parse_elem(std::string_view text) const {
    const std::string key = strip_spaces(text);
    for (std::size_t i = 0; i < impl_->labels.size(); ++i)
        if (strip_spaces(impl_->labels[i]) == key) return Elem{static_cast<std::uint32_t>(i)};
    if (!key.empty() && std::all_of(key.begin(), key.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
        if (key.size() > 9) return std::nullopt;
        const auto idx = std::stoul(key);
        if (idx < size()) return Elem{static_cast<std::uint32_t>(idx)};
    }
    return std::nullopt;
}

bool Ring::same_as(const Ring& other) const noexcept {
    if (impl_ == other.impl_) return true;
    if (!impl_ || !other.impl_) return false;
    return impl_->size == other.impl_->size && impl_->zero == other.impl_->zero && impl_->one == other.impl_->one &&
           impl_->add == other.impl_->add && impl_->mul == other.impl_->mul;
}

TableSpec parse_table_json(std::string_view json_text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorKind::Parse, std::string("table ring JSON: ") + e.what());
    }
    TableSpec t;
    try {
        t.size = j.at("size").get<std::size_t>();
        t.add = j.at("add").get<std::vector<std::vector<std::uint32_t>>>();
        t.mul = j.at("mul").get<std::vector<std::vector<std::uint32_t>>>();
        t.zero = j.at("zero").get<std::uint32_t>();
        t.one = j.at("one").get<std::uint32_t>();
        if (j.contains("name")) t.name = j.at("name").get<std::string>();
        if (j.contains("labels")) t.labels = j.at("labels").get<std::vector<std::string>>();
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorKind::Parse, std::string("table ring JSON: ") + e.what());
    }
    return t;
}

Elem elem_arith(const Ring& ring, ArithOp op, std::size_t a, std::optional<std::size_t> b) {
    const Elem x = ring.at(a);
    if ((op == ArithOp::Neg) == b.has_value())
        throw Error(ErrorKind::Precondition, "second operand required iff the operation is binary");
    switch (op) {
    case ArithOp::Add: return ring.add(x, ring.at(*b));
    case ArithOp::Mul: return ring.mul(x, ring.at(*b));
    case ArithOp::Neg: return ring.neg(x);
    }
    return x;
}

ElementClassSet classify_element(const Ring& ring, Elem a) {
    ring.at(a.index);
    ElementClassSet flags;
    const Elem zero = ring.zero();
    const Elem a2 = ring.mul(a, a);
    flags.idempotent = a2 == a;
    for (Elem b : ring.elements()) {
        const Elem ab = ring.mul(a, b);
        flags.unit = flags.unit || ab == ring.one();
        flags.regular = flags.regular || ring.mul(a2, b) == a;
        flags.zero_divisor = flags.zero_divisor || (a != zero && b != zero && ab == zero);
    }
    Elem power = a;
    for (std::size_t k = 1; k <= ring.size() && !flags.nilpotent; ++k) {
        flags.nilpotent = power == zero;
        power = ring.mul(power, a);
    }
    return flags;
}

Hom build_hom(const Ring& source, const Ring& target, const std::vector<std::uint32_t>& map) {
    if (map.size() != source.size())
        throw Error(ErrorKind::Precondition, "map length " + std::to_string(map.size()) + " does not match source size " +
                                                 std::to_string(source.size()));
    Hom h{source, target, {}};
    h.map.reserve(map.size());
    for (auto v : map) h.map.push_back(target.at(v));

    auto violation = [&](const std::string& law, std::size_t a, std::size_t b) {
        throw Error(ErrorKind::LawViolation, law + " fails at (" + source.label(Elem{static_cast<std::uint32_t>(a)}) + "," +
                                                 source.label(Elem{static_cast<std::uint32_t>(b)}) + ")");
    };
    if (h(source.zero()) != target.zero()) violation("map(0)=0", source.zero().index, source.zero().index);
    if (h(source.one()) != target.one()) violation("map(1)=1", source.one().index, source.one().index);
    for (Elem a : source.elements())
        for (Elem b : source.elements()) {
            if (h(source.add(a, b)) != target.add(h(a), h(b))) violation("additivity", a.index, b.index);
            if (h(source.mul(a, b)) != target.mul(h(a), h(b))) violation("multiplicativity", a.index, b.index);
        }
    return h;
}

Subring build_subring(const Ring& ring, const BitSet& subset) {
    if (subset.universe() != ring.size()) throw Error(ErrorKind::RingMismatch, "subset universe does not match ring");
    if (!subset.test(ring.zero().index)) throw Error(ErrorKind::NotClosed, "subset does not contain zero");
    if (!subset.test(ring.one().index)) throw Error(ErrorKind::MissingUnity, "subset does not contain the unity of " + ring.name());

    const auto members = subset.members();
    std::vector<std::int64_t> position(ring.size(), -1);
    for (std::size_t k = 0; k < members.size(); ++k) position[members[k]] = static_cast<std::int64_t>(k);

    TableSpec t;
    t.size = members.size();
    t.add.assign(t.size, std::vector<std::uint32_t>(t.size));
    t.mul.assign(t.size, std::vector<std::uint32_t>(t.size));
    for (std::size_t i = 0; i < t.size; ++i) {
        const Elem a{static_cast<std::uint32_t>(members[i])};
        if (position[ring.neg(a).index] < 0)
            throw Error(ErrorKind::NotClosed, "not closed under negation at " + ring.label(a));
        for (std::size_t j = 0; j < t.size; ++j) {
            const Elem b{static_cast<std::uint32_t>(members[j])};
            const auto s = position[ring.add(a, b).index];
            const auto p = position[ring.mul(a, b).index];
            if (s < 0 || p < 0)
                throw Error(ErrorKind::NotClosed, "not closed at pair (" + ring.label(a) + "," + ring.label(b) + ")");
            t.add[i][j] = static_cast<std::uint32_t>(s);
            t.mul[i][j] = static_cast<std::uint32_t>(p);
        }
        t.labels.push_back(ring.label(a));
    }
    t.zero = static_cast<std::uint32_t>(position[ring.zero().index]);
    t.one = static_cast<std::uint32_t>(position[ring.one().index]);
    t.name = "subring" + format_elems(ring, subset) + " of " + ring.name();

    Ring sub = build_ring(RingSpec{t}, RingBuildOptions{std::max<std::size_t>(t.size, 1), false});
    std::vector<std::uint32_t> inclusion;
    for (auto m : members) inclusion.push_back(static_cast<std::uint32_t>(m));
    return Subring{sub, build_hom(sub, ring, inclusion)};
}

BitSet generated_subring(const Ring& ring, const std::vector<Elem>& generators) {
    BitSet members(ring.size());
    std::vector<Elem> order;
    auto insert = [&](Elem e) {
        if (members.test(e.index)) return;
        members.set(e.index);
        order.push_back(e);
    };
    insert(ring.zero());
    insert(ring.one());
    for (Elem g : generators) insert(g);
    for (std::size_t i = 0; i < order.size(); ++i) {
        const Elem x = order[i];
        insert(ring.neg(x));
        for (std::size_t j = 0; j <= i; ++j) {
            insert(ring.add(x, order[j]));
            insert(ring.mul(x, order[j]));
        }
    }
    return members;
}

std::string format_elems(const Ring& ring, const BitSet& members) {
    std::string out = "{";
    bool first = true;
    for (auto i : members) {
        if (!first) out += ",";
        first = false;
        out += ring.label(Elem{static_cast<std::uint32_t>(i)});
    }
    return out + "}";
}

} // namespace spectral
