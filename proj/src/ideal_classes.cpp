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

#include "spectral/ideal_classes.hpp"

#include <algorithm>
#include <array>
#include <unordered_set>

namespace spectral {

namespace {

constexpr std::array<std::pair<Variant, std::string_view>, 22> kVariantNames{{
    {Variant::hy_a, "hy_a"},         {Variant::hy_b, "hy_b"},         {Variant::hy_c, "hy_c"},
    {Variant::hy_d, "hy_d"},         {Variant::hy_e, "hy_e"},         {Variant::hy_f, "hy_f"},
    {Variant::hy_g, "hy_g"},         {Variant::hy_h, "hy_h"},         {Variant::hy_k, "hy_k"},
    {Variant::strong_a, "strong_a"}, {Variant::strong_b, "strong_b"}, {Variant::strong_c, "strong_c"},
    {Variant::strong_d, "strong_d"}, {Variant::strong_e, "strong_e"}, {Variant::strong_f, "strong_f"},
    {Variant::strong_g, "strong_g"}, {Variant::strong_k, "strong_k"}, {Variant::strong_l, "strong_l"},
    {Variant::strong_m, "strong_m"}, {Variant::strong_n, "strong_n"}, {Variant::strong_o, "strong_o"},
    {Variant::hilbert_def, "hilbert_def"},
}};

// Tabulated data one variant evaluation needs.
struct View {
    const YSpace& space;
    const Spectrum& spec;
    const Ideal& I;
    std::size_t n;

    explicit View(const YSpace& s, const Ideal& ideal)
        : space(s), spec(s.spectrum()), I(ideal), n(s.ring().size()) {}

    const YSet& h_elem(std::size_t a) const { return space.hull_of(Elem{static_cast<std::uint32_t>(a)}); }
    const BitSet& kh_elem(std::size_t a) const {
        return spec.ideals[space.kernel_hull_index(Elem{static_cast<std::uint32_t>(a)})].members;
    }
    const YSet& h_ideal(std::size_t j) const { return space.ideal_hull(j); }
    const BitSet& kh_ideal(std::size_t j) const { return spec.ideals[space.ideal_kernel_hull(j)].members; }
    bool in_I(std::size_t a) const { return I.members.test(a); }
    bool ideal_in_I(std::size_t j) const { return spec.ideals[j].is_subset_of(I); }
    bool gens_in_I(std::size_t j) const {
        const auto& g = spec.ideals[j].gens;
        return std::all_of(g.begin(), g.end(), [&](Elem e) { return in_I(e.index); });
    }
    YSet h_gens(std::size_t j) const { return hull(space, spec.ideals[j].gens); }

    std::vector<std::size_t> subideals() const {
        std::vector<std::size_t> out;
        for (std::size_t j = 0; j < spec.ideals.size(); ++j)
            if (ideal_in_I(j)) out.push_back(j);
        return out;
    }
};

template <class Pred>
bool for_all_members(const Ideal& I, Pred&& pred) {
    for (auto a : I.members)
        if (!pred(a)) return false;
    return true;
}

bool single_element_variant(const View& v, Variant var) {
    const std::size_t m = v.spec.ideals.size();
    return for_all_members(v.I, [&](std::size_t a) {
        switch (var) {
        case Variant::hy_a:
            for (std::size_t j = 0; j < m; ++j)
                if (v.h_elem(a).is_subset_of(v.h_ideal(j)) && !v.ideal_in_I(j)) return false;
            return true;
        case Variant::hy_b:
            for (std::size_t j = 0; j < m; ++j)
                if (v.h_elem(a) == v.h_ideal(j) && !v.ideal_in_I(j)) return false;
            return true;
        case Variant::hy_c:
            for (std::size_t b = 0; b < v.n; ++b)
                if (v.h_elem(a) == v.h_elem(b) && !v.in_I(b)) return false;
            return true;
        case Variant::hy_d:
            for (std::size_t b = 0; b < v.n; ++b)
                if (v.h_elem(a).is_subset_of(v.h_elem(b)) && !v.in_I(b)) return false;
            return true;
        case Variant::hy_e:
            return v.kh_elem(a).is_subset_of(v.I.members);
        case Variant::hy_f:
            for (std::size_t j = 0; j < m; ++j)
                if (v.kh_ideal(j).is_subset_of(v.kh_elem(a)) && !v.ideal_in_I(j)) return false;
            return true;
        case Variant::hy_g:
            for (std::size_t j = 0; j < m; ++j)
                if (v.kh_ideal(j) == v.kh_elem(a) && !v.ideal_in_I(j)) return false;
            return true;
        case Variant::hy_h:
            for (std::size_t b = 0; b < v.n; ++b)
                if (v.kh_elem(b) == v.kh_elem(a) && !v.in_I(b)) return false;
            return true;
        case Variant::hy_k:
            for (std::size_t b = 0; b < v.n; ++b)
                if (v.kh_elem(b).is_subset_of(v.kh_elem(a)) && !v.in_I(b)) return false;
            return true;
        default:
            return false;
        }
    });
}

bool finite_subset_variant(const View& v, Variant var) {
    const std::size_t m = v.spec.ideals.size();
    const auto subs = v.subideals();

    if (var == Variant::strong_d || var == Variant::strong_e) {
        std::unordered_set<YSet, BitSetHash> image;
        for (auto J : subs) image.insert(v.h_ideal(J));
        if (var == Variant::strong_d) {
            for (std::size_t a = 0; a < v.n; ++a)
                if (image.count(v.h_elem(a)) && !v.in_I(a)) return false;
            return true;
        }
        for (std::size_t j = 0; j < m; ++j)
            if (image.count(v.h_gens(j)) && !v.gens_in_I(j)) return false;
        return true;
    }
    if (var == Variant::strong_k) return is_strong_hy(v.space, v.I);

    for (auto J : subs) {
        switch (var) {
        case Variant::strong_a:
            for (std::size_t s = 0; s < m; ++s)
                if (v.h_ideal(J) == v.h_ideal(s) && !v.ideal_in_I(s)) return false;
            break;
        case Variant::strong_b:
            for (std::size_t g = 0; g < m; ++g)
                if (v.h_ideal(J) == v.h_gens(g) && !v.gens_in_I(g)) return false;
            break;
        case Variant::strong_c:
            for (std::size_t g = 0; g < m; ++g)
                if (v.h_ideal(J).is_subset_of(v.h_gens(g)) && !v.gens_in_I(g)) return false;
            break;
        case Variant::strong_f:
            for (std::size_t a = 0; a < v.n; ++a)
                if (v.h_ideal(J) == v.h_elem(a) && !v.in_I(a)) return false;
            break;
        case Variant::strong_g:
            for (std::size_t a = 0; a < v.n; ++a)
                if (v.h_ideal(J).is_subset_of(v.h_elem(a)) && !v.in_I(a)) return false;
            break;
        case Variant::strong_l:
            for (std::size_t a = 0; a < v.n; ++a)
                if (v.kh_elem(a) == v.kh_ideal(J) && !v.in_I(a)) return false;
            break;
        case Variant::strong_m:
            for (std::size_t a = 0; a < v.n; ++a)
                if (v.kh_elem(a).is_subset_of(v.kh_ideal(J)) && !v.in_I(a)) return false;
            break;
        case Variant::strong_n:
            for (std::size_t s = 0; s < m; ++s)
                if (v.kh_ideal(s) == v.kh_ideal(J) && !v.ideal_in_I(s)) return false;
            break;
        case Variant::strong_o:
            for (std::size_t s = 0; s < m; ++s)
                if (v.kh_ideal(s).is_subset_of(v.kh_ideal(J)) && !v.ideal_in_I(s)) return false;
            break;
        default:
            return false;
        }
    }
    return true;
}

} // namespace

std::string_view to_string(Variant v) {
    for (const auto& [var, name] : kVariantNames)
        if (var == v) return name;
    return "?";
}

std::optional<Variant> parse_variant(std::string_view name) {
    for (const auto& [var, n] : kVariantNames)
        if (n == name) return var;
    return std::nullopt;
}

const std::vector<Variant>& all_variants() {
    static const std::vector<Variant> all = [] {
        std::vector<Variant> out;
        for (const auto& [var, name] : kVariantNames) out.push_back(var);
        return out;
    }();
    return all;
}

std::string_view to_string(IdealClass c) {
    switch (c) {
    case IdealClass::Hy: return "hy";
    case IdealClass::Strong: return "strong";
    case IdealClass::Hilbert: return "hilbert";
    }
    return "?";
}

IdealClass class_of(Variant v) {
    if (v == Variant::hilbert_def) return IdealClass::Hilbert;
    return to_string(v).substr(0, 3) == "hy_" ? IdealClass::Hy : IdealClass::Strong;
}

bool evaluate_variant(const YSpace& space, const Ideal& I, Variant v) {
    const View view(space, I);
    switch (class_of(v)) {
    case IdealClass::Hy: return single_element_variant(view, v);
    case IdealClass::Strong: return finite_subset_variant(view, v);
    case IdealClass::Hilbert: return is_y_hilbert(space, I);
    }
    return false;
}

bool is_hy(const YSpace& space, const Ideal& I) {
    const View view(space, I);
    return for_all_members(I, [&](std::size_t a) { return view.kh_elem(a).is_subset_of(I.members); });
}

bool is_strong_hy(const YSpace& space, const Ideal& I) {
    auto kh_within = [&](const YSet& h) { return kernel(space, h).is_subset_of(I); };
    if (!kh_within(hull(space, I.members))) return false;
    const auto& g = I.gens;
    if (g.size() >= 32) throw Error(ErrorKind::CapExceeded, "generator list too long for subset enumeration");
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << g.size()); ++mask) {
        YSet h = space.all();
        for (std::size_t k = 0; k < g.size(); ++k)
            if (mask >> k & 1U) h &= space.hull_of(g[k]);
        if (!kh_within(h)) return false;
    }
    return true;
}

bool is_y_hilbert(const YSpace& space, const Ideal& I) {
    return space.spectrum().ideals[space.ideal_kernel_hull(space.index_of(I))] == I;
}

bool in_class(const YSpace& space, const Ideal& I, IdealClass c) {
    switch (c) {
    case IdealClass::Hy: return is_hy(space, I);
    case IdealClass::Strong: return is_strong_hy(space, I);
    case IdealClass::Hilbert: return is_y_hilbert(space, I);
    }
    return false;
}

bool ClassReport::variants_agree() const {
    for (const auto& [v, value] : variants) {
        switch (class_of(v)) {
        case IdealClass::Hy:
            if (value != hy) return false;
            break;
        case IdealClass::Strong:
            if (value != strong_hy) return false;
            break;
        case IdealClass::Hilbert:
            if (value != y_hilbert) return false;
            break;
        }
    }
    return true;
}

ClassReport classify_ideal(const YSpace& space, const Ideal& I, const std::vector<Variant>& extra) {
    if (!I.ring.same_as(space.ring())) throw Error(ErrorKind::RingMismatch, "ideal does not belong to " + space.ring().name());
    ClassReport r;
    r.ideal = I;
    r.semiprime = radical(I) == I;
    r.hy = is_hy(space, I);
    r.strong_hy = is_strong_hy(space, I);
    r.y_hilbert = is_y_hilbert(space, I);
    r.variants[Variant::hy_e] = r.hy;
    r.variants[Variant::strong_k] = r.strong_hy;
    r.variants[Variant::hilbert_def] = r.y_hilbert;
    for (Variant v : extra)
        if (!r.variants.count(v)) r.variants[v] = evaluate_variant(space, I, v);
    return r;
}

Ideal closure_hy(const YSpace& space, const Ideal& I) {
    const Spectrum& spec = space.spectrum();
    Ideal current = spec.ideal(I.members);
    while (true) {
        Ideal next = current;
        for (auto a : current.members)
            next = combine(IdealOp::Sum, next, spec.ideals[space.kernel_hull_index(Elem{static_cast<std::uint32_t>(a)})]);
        if (next == current) return spec.ideal(current.members);
        current = std::move(next);
    }
}

StrongClosure closure_strong(const YSpace& space, const HYLattice& lattice, const Ideal& I) {
    const Ideal via_filters = to_ideal(to_filter(lattice, I));
    const Ideal kh = space.spectrum().ideals[space.ideal_kernel_hull(space.index_of(I))];
    if (!(via_filters == kh))
        throw Error(ErrorKind::InternalDisagreement, "H_Y^{-1}H_Y(I) = " + format_gens(via_filters) + " but kh_Y(I) = " +
                                                         format_gens(kh) + " for I = " + format_gens(I));
    return StrongClosure{via_filters, kh};
}

std::vector<Ideal> extremal_search(const YSpace& space, const ExtremalKind& kind, IdealClass cls) {
    const Spectrum& spec = space.spectrum();
    std::vector<const Ideal*> pool;
    bool minimal = false;

    std::visit(
        [&](const auto& k) {
            using K = std::decay_t<decltype(k)>;
            if constexpr (std::is_same_v<K, MaxlInInterval>) {
                if (!k.lower.is_proper()) throw Error(ErrorKind::Precondition, "lower bound must be a proper ideal");
                if (!in_class(space, k.lower, cls))
                    throw Error(ErrorKind::Precondition, format_gens(k.lower) + " is not in the " + std::string(to_string(cls)) + " class");
                if (!k.lower.is_subset_of(k.upper)) throw Error(ErrorKind::Precondition, "lower bound is not below the upper bound");
                for (const auto& K2 : spec.ideals)
                    if (K2.is_proper() && k.lower.is_subset_of(K2) && K2.is_subset_of(k.upper)) pool.push_back(&K2);
            } else if constexpr (std::is_same_v<K, MaxlBelow>) {
                for (const auto& K2 : spec.ideals)
                    if (K2.is_proper() && K2.is_subset_of(k.upper)) pool.push_back(&K2);
            } else if constexpr (std::is_same_v<K, MaximalProper>) {
                for (const auto& K2 : spec.ideals)
                    if (K2.is_proper()) pool.push_back(&K2);
            } else {
                if (!space.kY().is_zero()) throw Error(ErrorKind::Precondition, "minimal class members need k(Y) = 0");
                for (const auto& K2 : spec.ideals)
                    if (!K2.is_zero()) pool.push_back(&K2);
                minimal = true;
            }
        },
        kind);

    std::erase_if(pool, [&](const Ideal* K) { return !in_class(space, *K, cls); });
    std::vector<Ideal> out;
    for (const Ideal* K : pool) {
        const bool extreme = std::none_of(pool.begin(), pool.end(), [&](const Ideal* L) {
            if (L == K) return false;
            return minimal ? L->is_subset_of(*K) : K->is_subset_of(*L);
        });
        if (extreme) out.push_back(*K);
    }
    return out;
}

} // namespace spectral
