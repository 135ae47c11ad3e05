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

#include "spectral/zariski.hpp"

#include <algorithm>
#include <charconv>
#include <set>
#include <unordered_map>

namespace spectral {

namespace {

std::string trim(std::string_view s) {
    const auto b = s.find_first_not_of(" \t\n\r");
    if (b == std::string_view::npos) return {};
    const auto e = s.find_last_not_of(" \t\n\r");
    return std::string(s.substr(b, e - b + 1));
}

// Splits on commas that are not nested inside brackets.
std::vector<std::string> split_top_level(std::string_view text) {
    std::vector<std::string> parts;
    int depth = 0;
    std::string cur;
    for (char c : text) {
        if (c == '(' || c == '[') ++depth;
        if (c == ')' || c == ']') --depth;
        if (c == ',' && depth == 0) {
            parts.push_back(trim(cur));
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (!trim(cur).empty() || !parts.empty()) parts.push_back(trim(cur));
    return parts;
}

BitSet kernel_members(const YSpace& space, const YSet& T) {
    BitSet members = BitSet::full(space.ring().size());
    for (auto k : T) members &= space.primes()[k].members;
    return members;
}

} // namespace

std::string to_string(const YSelector& sel) {
    switch (sel.kind) {
    case YSelector::Kind::Spec: return "spec";
    case YSelector::Kind::Max: return "max";
    case YSelector::Kind::Min: return "min";
    case YSelector::Kind::Indices: {
        std::string out = "idx:";
        for (std::size_t k = 0; k < sel.indices.size(); ++k) {
            if (k) out += ",";
            out += std::to_string(sel.indices[k]);
        }
        return out;
    }
    case YSelector::Kind::MinOver: {
        std::string out = "minover:<";
        for (std::size_t k = 0; k < sel.generators.size(); ++k) {
            if (k) out += ",";
            out += sel.generators[k];
        }
        return out + ">";
    }
    }
    return "spec";
}

YSelector parse_selector(std::string_view raw) {
    const std::string text = trim(raw);
    if (text == "spec") return YSelector::spec();
    if (text == "max") return YSelector::max();
    if (text == "min") return YSelector::min();
    if (text.rfind("idx:", 0) == 0) {
        std::vector<std::size_t> idx;
        const std::string body = text.substr(4);
        if (trim(body).empty()) return YSelector::of_indices({});
        for (const auto& part : split_top_level(body)) {
            std::size_t v = 0;
            const auto* end = part.data() + part.size();
            auto [ptr, ec] = std::from_chars(part.data(), end, v);
            if (part.empty() || ec != std::errc() || ptr != end)
                throw Error(ErrorKind::InvalidSelector, "bad prime index '" + part + "' in selector " + text);
            idx.push_back(v);
        }
        std::sort(idx.begin(), idx.end());
        idx.erase(std::unique(idx.begin(), idx.end()), idx.end());
        return YSelector::of_indices(std::move(idx));
    }
    if (text.rfind("minover:", 0) == 0) {
        std::string body = trim(text.substr(8));
        if (body.size() >= 2 && body.front() == '<' && body.back() == '>') body = body.substr(1, body.size() - 2);
        std::vector<std::string> gens;
        if (!trim(body).empty()) gens = split_top_level(body);
        return YSelector::min_over(std::move(gens));
    }
    throw Error(ErrorKind::InvalidSelector, "unknown selector '" + text + "'");
}

std::size_t YSpace::index_of(const Ideal& I) const {
    if (auto idx = spectrum().find(I.members)) return *idx;
    throw Error(ErrorKind::RingMismatch, "ideal does not belong to " + ring().name());
}

YSpace build_space(std::shared_ptr<const Spectrum> spec, const YSelector& sel) {
    const Ring& ring = spec->ring;
    const std::size_t k = spec->primes.size();
    std::vector<std::size_t> chosen;
    switch (sel.kind) {
    case YSelector::Kind::Spec:
        for (std::size_t i = 0; i < k; ++i) chosen.push_back(i);
        break;
    case YSelector::Kind::Max:
        for (auto i : spec->max_mask) chosen.push_back(i);
        break;
    case YSelector::Kind::Min:
        for (auto i : spec->min_mask) chosen.push_back(i);
        break;
    case YSelector::Kind::Indices: {
        std::set<std::size_t> seen;
        for (auto i : sel.indices) {
            if (i >= k)
                throw Error(ErrorKind::InvalidSelector, "prime index " + std::to_string(i) + " out of range; " + ring.name() +
                                                            " has " + std::to_string(k) + " primes");
            if (!seen.insert(i).second) throw Error(ErrorKind::InvalidSelector, "duplicate prime index " + std::to_string(i));
        }
        chosen.assign(seen.begin(), seen.end());
        break;
    }
    case YSelector::Kind::MinOver: {
        std::vector<Elem> gens;
        for (const auto& g : sel.generators) {
            auto e = ring.parse_elem(g);
            if (!e) throw Error(ErrorKind::InvalidSelector, "'" + g + "' is not an element of " + ring.name());
            gens.push_back(*e);
        }
        for (const auto& P : min_primes_over(*spec, span(ring, gens)))
            for (std::size_t i = 0; i < k; ++i)
                if (spec->primes[i] == P) chosen.push_back(i);
        break;
    }
    }
    if (sel.kind == YSelector::Kind::Max || sel.kind == YSelector::Kind::Min) {
        if (chosen.size() != k)
            throw Error(ErrorKind::InternalDisagreement, "Max/Min differ from Spec in the finite ring " + ring.name());
    }

    auto impl = std::make_shared<YSpace::Impl>();
    impl->spec = spec;
    impl->selector = sel;
    impl->prime_indices = chosen;
    for (auto i : chosen) impl->primes.push_back(spec->primes[i]);

    BitSet meet = BitSet::full(ring.size());
    for (const auto& P : impl->primes) meet &= P.members;
    impl->kY = spec->ideal(meet);

    const std::size_t y = chosen.size();
    impl->elem_hull.assign(ring.size(), YSet(y));
    for (std::size_t p = 0; p < y; ++p)
        for (auto a : impl->primes[p].members) impl->elem_hull[a].set(p);

    std::unordered_map<YSet, std::size_t, BitSetHash> kernel_cache;
    auto kernel_index = [&](const YSet& T) {
        if (auto it = kernel_cache.find(T); it != kernel_cache.end()) return it->second;
        BitSet members = BitSet::full(ring.size());
        for (auto p : T) members &= impl->primes[p].members;
        const std::size_t idx = *spec->find(members);
        kernel_cache.emplace(T, idx);
        return idx;
    };
    for (Elem a : ring.elements()) impl->elem_kh.push_back(kernel_index(impl->elem_hull[a.index]));
    for (const auto& I : spec->ideals) {
        YSet h = YSet::full(y);
        for (Elem g : I.gens) h &= impl->elem_hull[g.index];
        impl->ideal_kh.push_back(kernel_index(h));
        impl->ideal_hull.push_back(std::move(h));
    }

    YSpace space;
    space.impl_ = std::move(impl);
    return space;
}

YSpace build_space(const Ring& ring, const YSelector& sel) {
    return build_space(std::make_shared<const Spectrum>(spectrum(ring)), sel);
}

YSet hull(const YSpace& space, const BitSet& S) {
    if (S.universe() != space.ring().size()) throw Error(ErrorKind::RingMismatch, "element set does not belong to the space's ring");
    YSet h = space.all();
    for (auto a : S) h &= space.hull_of(Elem{static_cast<std::uint32_t>(a)});
    return h;
}

YSet hull(const YSpace& space, const std::vector<Elem>& S) {
    YSet h = space.all();
    for (Elem a : S) h &= space.hull_of(space.ring().at(a.index));
    return h;
}

YSet hull(const YSpace& space, const Ideal& I) { return space.ideal_hull(space.index_of(I)); }

Ideal kernel(const YSpace& space, const YSet& T) {
    if (T.universe() != space.size()) throw Error(ErrorKind::RingMismatch, "Y-set does not belong to the space");
    return space.spectrum().ideal(kernel_members(space, T));
}

YSet topo(const YSpace& space, const YSet& T, TopoOp op) {
    if (T.universe() != space.size()) throw Error(ErrorKind::RingMismatch, "Y-set does not belong to the space");
    auto closure = [&](const YSet& U) { return hull(space, kernel_members(space, U)); };
    switch (op) {
    case TopoOp::Closure: return closure(T);
    case TopoOp::Interior: return closure(T.complement()).complement();
    case TopoOp::Complement: return T.complement();
    }
    return T;
}

HyPropertyResult hy_property(const YSpace& space) {
    const Ring& ring = space.ring();
    std::unordered_map<YSet, std::size_t, BitSetHash> ids;
    std::vector<std::size_t> id_of(ring.size());
    for (Elem a : ring.elements()) id_of[a.index] = ids.emplace(space.hull_of(a), ids.size()).first->second;

    const std::size_t d = ids.size();
    std::vector<signed char> memo(d * d, -1);
    for (Elem a : ring.elements())
        for (Elem b : ring.elements()) {
            auto& m = memo[id_of[a.index] * d + id_of[b.index]];
            if (m < 0) m = ids.count(space.hull_of(a) & space.hull_of(b)) ? 1 : 0;
            if (m == 0) return HyPropertyResult{false, std::make_pair(a, b)};
        }
    return HyPropertyResult{};
}

std::string format_yset(const YSpace& space, const YSet& T) {
    std::string out = "{";
    bool first = true;
    for (auto p : T) {
        if (!first) out += ",";
        first = false;
        out += format_gens(space.primes()[p]);
    }
    return out + "}";
}

} // namespace spectral
