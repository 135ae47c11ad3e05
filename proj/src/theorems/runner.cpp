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

#include <algorithm>
#include <map>
#include <sstream>

#include <json.hpp>

#include "theorems/context.hpp"

namespace spectral {

namespace {

using suite::CaseContext;
using suite::Checker;
using suite::Claim;

/// Alternate spellings accepted for hypothesis names.
const std::map<std::string, std::string, std::less<>> kAliases = {
    {"A∩I=∅", "A-disjoint-I"},
    {"k(Y)=0", "kY=0"},
    {"Max⊆Y", "max-in-Y"},
};

std::string canonical_hypothesis(const std::string& name) {
    auto it = kAliases.find(name);
    return it == kAliases.end() ? name : it->second;
}

CheckResult blank(const Case& c, std::string theorem, std::string ring) {
    CheckResult r;
    r.theorem = std::move(theorem);
    r.ring = std::move(ring);
    r.selector = to_string(c.selector);
    return r;
}

CheckResult execute(CaseContext& ctx, const Claim& claim, const std::optional<std::string>& dropped) {
    CheckResult r = blank(ctx.source(), claim.info.id, ctx.ring().name());
    Checker ck(ctx, claim.info, dropped);
    try {
        claim.check(ck);
        r.status = ck.stats().conclusions == 0 ? Status::Vacuous : Status::Pass;
    } catch (const Checker::Stop&) {
        r.status = Status::Fail;
        r.witness = ck.witness();
    } catch (const Error& e) {
        r.status = e.kind() == ErrorKind::CapExceeded ? Status::CapExceeded : Status::Error;
        r.message = e.what();
    }
    r.stats = ck.stats();
    r.unmet = ck.unmet();
    return r;
}

std::vector<const Claim*> selected(const RunConfig& config) {
    std::vector<const Claim*> out;
    if (config.theorems.empty()) {
        for (const auto& c : suite::claims()) out.push_back(&c);
    } else {
        for (const auto& id : config.theorems) out.push_back(&suite::find_claim(id));
    }
    return out;
}

/// Results for a case whose context could not be built.
std::vector<CheckResult> unbuilt(const Case& c, const Error& e, const std::vector<const Claim*>& list) {
    std::vector<CheckResult> out;
    if (e.kind() == ErrorKind::CapExceeded) {
        for (const Claim* claim : list) {
            CheckResult r = blank(c, claim->info.id, to_string(c.ring));
            r.status = Status::CapExceeded;
            r.message = e.what();
            out.push_back(std::move(r));
        }
    } else {
        CheckResult r = blank(c, "build", to_string(c.ring));
        r.status = Status::Error;
        r.message = e.what();
        out.push_back(std::move(r));
    }
    return out;
}

void tally(Summary& s, const CheckResult& r) {
    ++s.checks;
    switch (r.status) {
    case Status::Pass: ++s.pass; break;
    case Status::Fail: ++s.fail; break;
    case Status::Vacuous: ++s.vacuous; break;
    case Status::CapExceeded: ++s.cap_exceeded; break;
    case Status::Error: ++s.errors; break;
    }
    if (r.theorem == "T3" || r.theorem == "T4") s.variant_evaluations += r.stats.instances;
}

} // namespace

std::vector<Case> default_corpus() {
    std::vector<RingSpec> rings;
    for (std::uint32_t n = 2; n <= 36; ++n) rings.push_back(RingSpec::modular(n));
    rings.push_back(RingSpec::poly(2, {1, 1, 1}));
    rings.push_back(RingSpec::poly(2, {0, 0, 1}));
    rings.push_back(RingSpec::poly(3, {0, 0, 1}));
    rings.push_back(RingSpec::poly(2, {0, 0, 0, 1}));
    rings.push_back(RingSpec::product({RingSpec::modular(2), RingSpec::modular(4)}));
    rings.push_back(RingSpec::product({RingSpec::modular(6), RingSpec::modular(2)}));
    rings.push_back(RingSpec::product({RingSpec::modular(4), RingSpec::modular(9)}));

    std::vector<Case> out;
    for (const auto& spec : rings)
        for (auto& sel : default_selectors(build_ring(spec))) out.push_back({spec, std::move(sel)});
    return out;
}

std::vector<YSelector> default_selectors(const Ring& ring) {
    const std::size_t k = spectrum(ring).primes.size();
    std::vector<YSelector> out{YSelector::spec()};
    for (std::size_t i = 0; i < k; ++i) out.push_back(YSelector::of_indices({i}));
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = i + 1; j < k; ++j) out.push_back(YSelector::of_indices({i, j}));
    return out;
}

std::string_view to_string(Status s) {
    switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Vacuous: return "vacuous";
    case Status::CapExceeded: return "cap-exceeded";
    case Status::Error: return "error";
    }
    return "error";
}

CheckResult run_check(const Case& c, std::string_view theorem, const RunConfig& config) {
    const Claim& claim = suite::find_claim(theorem);
    std::optional<std::string> dropped;
    if (config.dropped) dropped = canonical_hypothesis(*config.dropped);
    try {
        CaseContext ctx(c, config.caps);
        return execute(ctx, claim, dropped);
    } catch (const Error& e) {
        return unbuilt(c, e, {&claim}).front();
    }
}

bool Report::ok() const noexcept { return summary.fail == 0 && summary.errors == 0 && summary.cap_exceeded == 0; }

Report run_suite(const std::vector<Case>& corpus, const RunConfig& config) {
    const auto list = selected(config);
    std::optional<std::string> dropped;
    if (config.dropped) dropped = canonical_hypothesis(*config.dropped);
    Report report;
    for (const auto& c : corpus) {
        ++report.summary.cases;
        std::optional<CaseContext> ctx;
        try {
            ctx.emplace(c, config.caps);
        } catch (const Error& e) {
            for (auto& r : unbuilt(c, e, list)) {
                tally(report.summary, r);
                report.results.push_back(std::move(r));
            }
            continue;
        }
        for (const Claim* claim : list) {
            CheckResult r = execute(*ctx, *claim, dropped);
            tally(report.summary, r);
            report.results.push_back(std::move(r));
        }
    }
    return report;
}

std::string to_json_lines(const Report& report) {
    using nlohmann::ordered_json;
    std::ostringstream out;
    for (const auto& r : report.results) {
        ordered_json j;
        j["theorem"] = r.theorem;
        j["ring"] = r.ring;
        j["selector"] = r.selector;
        j["status"] = std::string(to_string(r.status));
        j["instances"] = r.stats.instances;
        j["conclusions"] = r.stats.conclusions;
        j["unmet"] = r.unmet;
        if (r.witness) {
            ordered_json w = ordered_json::array();
            for (const auto& [name, value] : *r.witness) w.push_back({{"name", name}, {"value", value}});
            j["witness"] = w;
        } else {
            j["witness"] = nullptr;
        }
        if (!r.message.empty()) j["message"] = r.message;
        out << j.dump() << '\n';
    }
    const Summary& s = report.summary;
    ordered_json sj;
    sj["cases"] = s.cases;
    sj["checks"] = s.checks;
    sj["pass"] = s.pass;
    sj["fail"] = s.fail;
    sj["vacuous"] = s.vacuous;
    sj["cap_exceeded"] = s.cap_exceeded;
    sj["errors"] = s.errors;
    sj["variant_evaluations"] = s.variant_evaluations;
    out << ordered_json{{"summary", sj}}.dump() << '\n';
    return out.str();
}

HuntResult hunt(const std::vector<Case>& corpus, std::string_view theorem, std::optional<std::string> drop, const Caps& caps) {
    const Claim& claim = suite::find_claim(theorem);
    if (drop) {
        drop = canonical_hypothesis(*drop);
        const auto& hyps = claim.info.hypotheses;
        if (std::find(hyps.begin(), hyps.end(), *drop) == hyps.end())
            throw Error(ErrorKind::UnknownHypothesis, claim.info.id + " has no hypothesis '" + *drop + "'");
    }
    HuntResult out;
    for (const auto& c : corpus) {
        ++out.cases_visited;
        CheckResult r;
        try {
            CaseContext ctx(c, caps);
            r = execute(ctx, claim, drop);
        } catch (const Error& e) {
            r = unbuilt(c, e, {&claim}).front();
        }
        out.instances += r.stats.instances;
        if (r.status == Status::CapExceeded) out.cap_exceeded = true;
        if (r.status == Status::Fail) {
            out.witness = std::move(r);
            break;
        }
    }
    return out;
}

} // namespace spectral
