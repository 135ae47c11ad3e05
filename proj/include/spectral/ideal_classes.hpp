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
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "spectral/hy_lattice.hpp"

namespace spectral {

/// Equivalent formulations of the H_Y, strong H_Y and Y-Hilbert conditions,
/// named by their condition letters.
///
/// Quantifiers over arbitrary subsets S of R run over all ideals: h_Y(S) and
/// kh_Y(S) only depend on the ideal S spans, and S lies in an ideal I iff
/// its span does. Quantifiers over finite subsets F of I run over the ideals
/// contained in I, for the same reason; finite G of R runs over canonical
/// generator sets.
enum class Variant {
    hy_a, hy_b, hy_c, hy_d, hy_e, hy_f, hy_g, hy_h, hy_k,
    strong_a, strong_b, strong_c, strong_d, strong_e, strong_f, strong_g,
    strong_k, strong_l, strong_m, strong_n, strong_o,
    hilbert_def,
};

std::string_view to_string(Variant v);
std::optional<Variant> parse_variant(std::string_view name);
const std::vector<Variant>& all_variants();

enum class IdealClass { Hy, Strong, Hilbert };

std::string_view to_string(IdealClass c);
/// The class a variant characterizes.
IdealClass class_of(Variant v);

bool evaluate_variant(const YSpace& space, const Ideal& I, Variant v);

/// Default characterizations: (e) for H_Y, (k) for strong, I = kh_Y(I).
bool is_hy(const YSpace& space, const Ideal& I);
/// F runs over subsets of the canonical generators and the full member set.
bool is_strong_hy(const YSpace& space, const Ideal& I);
bool is_y_hilbert(const YSpace& space, const Ideal& I);
bool in_class(const YSpace& space, const Ideal& I, IdealClass c);

struct ClassReport {
    Ideal ideal;
    bool semiprime = false;
    bool hy = false;
    bool strong_hy = false;
    bool y_hilbert = false;
    /// Every evaluated variant, including the three defaults.
    std::map<Variant, bool> variants;

    /// Each variant agrees with the default of its class.
    bool variants_agree() const;
};

ClassReport classify_ideal(const YSpace& space, const Ideal& I, const std::vector<Variant>& extra = {});

/// I_H: least fixpoint of J -> sum over a in J of kh_Y(a), starting at I.
Ideal closure_hy(const YSpace& space, const Ideal& I);

struct StrongClosure {
    /// I_SH through the filters, H_Y^{-1} H_Y(I).
    Ideal strong;
    /// kh_Y(I).
    Ideal kernel_hull;
};

/// Computes I_SH through the filter pair and compares it with kh_Y(I), which
/// is the largest summand of the sum over finite subsets of I (I itself is
/// finite). Throws InternalDisagreement if the routes differ.
StrongClosure closure_strong(const YSpace& space, const HYLattice& lattice, const Ideal& I);

struct MaxlInInterval {
    Ideal lower;
    Ideal upper;
};
/// Proper class members contained in the bound.
struct MaxlBelow {
    Ideal upper;
};
struct MaximalProper {};
struct MinimalNonzero {};

using ExtremalKind = std::variant<MaxlInInterval, MaxlBelow, MaximalProper, MinimalNonzero>;

/// Maximal (or minimal) class members within the bounds, by scanning every
/// ideal. MaxlInInterval needs a proper class member as lower bound below
/// the upper one; MinimalNonzero needs k(Y) = 0.
std::vector<Ideal> extremal_search(const YSpace& space, const ExtremalKind& kind, IdealClass cls);

} // namespace spectral
