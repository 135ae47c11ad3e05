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

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "spectral/ring.hpp"
#include "spectral/zariski.hpp"

namespace spectral {

/// Per-check limits. A check that would exceed one reports cap-exceeded
/// instead of running.
struct Caps {
    std::size_t elements = 256;
    std::size_t ideals = 1024;
    std::size_t filters = 4096;
    /// Largest lattice whose filters are enumerated by subset scan.
    std::size_t lattice = 20;
    std::size_t carrier = 4096;
    friend bool operator==(const Caps&, const Caps&) = default;
};

/// Applies overrides of the form "elements=64,ideals=100" on top of `base`.
Caps parse_caps(std::string_view text, Caps base = {});

/// Defaults, overridden by SPECTRAL_CAPS when it is set.
Caps caps_from_env();

struct Case {
    RingSpec ring;
    YSelector selector;
};

/// Z/n for n = 2..36, GF(4), GF(2)[x]/(x^2), GF(3)[x]/(x^2), GF(2)[x]/(x^3),
/// Z/2 x Z/4, Z/6 x Z/2 and Z/4 x Z/9, each with Y = spec and every
/// singleton and pair of prime positions.
std::vector<Case> default_corpus();

/// Every selector the default corpus pairs with a ring.
std::vector<YSelector> default_selectors(const Ring& ring);

enum class Status { Pass, Fail, Vacuous, CapExceeded, Error };

std::string_view to_string(Status s);

/// Named parts of a counterexample, in the order they were recorded.
using Witness = std::vector<std::pair<std::string, std::string>>;

struct CheckStats {
    /// Quantifier instances visited.
    std::size_t instances = 0;
    /// Conclusions evaluated.
    std::size_t conclusions = 0;
};

struct CheckResult {
    std::string theorem;
    std::string ring;
    std::string selector;
    Status status = Status::Pass;
    std::optional<Witness> witness;
    CheckStats stats;
    /// Hypotheses that were tested and never held.
    std::vector<std::string> unmet;
    /// Error or cap message.
    std::string message;
};

struct ClaimInfo {
    std::string id;
    std::string title;
    std::vector<std::string> hypotheses;
    /// What the claim quantifies over, e.g. "ideals x filters".
    std::string shape;
};

/// T1..T35 in order.
const std::vector<ClaimInfo>& registry();

/// Throws UnknownTheorem.
const ClaimInfo& claim_info(std::string_view id);

struct RunConfig {
    Caps caps;
    /// Registry ids to run; empty runs all of them.
    std::vector<std::string> theorems;
    /// A hypothesis to treat as always satisfied.
    std::optional<std::string> dropped;
};

CheckResult run_check(const Case& c, std::string_view theorem, const RunConfig& config = {});

struct Summary {
    std::size_t cases = 0;
    std::size_t checks = 0;
    std::size_t pass = 0;
    std::size_t fail = 0;
    std::size_t vacuous = 0;
    std::size_t cap_exceeded = 0;
    std::size_t errors = 0;
    /// Sum of CheckStats::instances for T3 and T4.
    std::size_t variant_evaluations = 0;
};

struct Report {
    std::vector<CheckResult> results;
    Summary summary;
    /// No fail, error or cap-exceeded result.
    bool ok() const noexcept;
};

/// Runs every selected claim on every case, in corpus then registry order.
/// A case whose ring cannot be built yields one error result with theorem
/// id "build".
Report run_suite(const std::vector<Case>& corpus, const RunConfig& config = {});

/// One JSON object per line, summary last.
std::string to_json_lines(const Report& report);

struct HuntResult {
    std::optional<CheckResult> witness;
    std::size_t cases_visited = 0;
    std::size_t instances = 0;
    bool cap_exceeded = false;
};

/// First failing case of `theorem` with `drop` treated as satisfied. Throws
/// UnknownTheorem, or UnknownHypothesis when the claim has no such
/// hypothesis.
HuntResult hunt(const std::vector<Case>& corpus, std::string_view theorem, std::optional<std::string> drop,
                const Caps& caps = {});

} // namespace spectral
