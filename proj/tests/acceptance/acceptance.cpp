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

// One line per acceptance criterion; exit status 1 when any line fails.

#include <chrono>
#include <cstdio>
#include <iostream>
#include <map>
#include <sstream>
#include <string>

#include "cli/command.hpp"
#include "spectral/hy_lattice.hpp"
#include "spectral/ideal_classes.hpp"
#include "spectral/theorems.hpp"

using namespace spectral;

namespace {

constexpr double kMaxSuiteSeconds = 300.0;
constexpr std::size_t kMinVariantEvaluations = 10000;

int failures = 0;

void line(int id, bool ok, const std::string& what, const std::string& detail) {
    std::cout << (ok ? "PASS" : "FAIL") << "  criterion " << id << "  " << what << "  (" << detail << ")\n";
    failures += ok ? 0 : 1;
}

struct Loaded {
    Ring ring;
    std::shared_ptr<const Spectrum> spec;
};

/// Every default-corpus case as a built space, sharing spectra per ring.
std::vector<YSpace> corpus_spaces() {
    std::vector<YSpace> out;
    std::map<std::string, Loaded> rings;
    for (const auto& c : default_corpus()) {
        const std::string key = to_string(c.ring);
        auto it = rings.find(key);
        if (it == rings.end()) {
            Ring R = build_ring(c.ring);
            it = rings.emplace(key, Loaded{R, std::make_shared<const Spectrum>(spectrum(R))}).first;
        }
        out.push_back(build_space(it->second.spec, c.selector));
    }
    return out;
}

BitSet gen_set(const Ideal& I) {
    BitSet S(I.ring.size());
    for (Elem g : I.gens) S.set(g.index);
    return S;
}

std::string where(const YSpace& s) { return s.ring().name() + " " + to_string(s.selector()); }

void suite_green(const Report& report, double seconds) {
    std::map<std::string, std::size_t> bad;
    for (const auto& r : report.results)
        if (r.status != Status::Pass && r.status != Status::Vacuous) ++bad[r.theorem];
    std::ostringstream d;
    d << report.summary.checks << " checks, " << report.summary.fail << " failures, " << report.summary.errors << " errors, "
      << report.summary.cap_exceeded << " cap-exceeded, " << seconds << " s";
    for (const auto& [id, n] : bad) d << "; " << id << " not green on " << n << " cases";
    line(1, bad.empty() && report.summary.checks == 35 * 130 && seconds < kMaxSuiteSeconds, "suite green on default corpus", d.str());
}

void variant_bundles(const Report& report) {
    std::size_t not_pass = 0;
    for (const auto& r : report.results)
        if ((r.theorem == "T3" || r.theorem == "T4") && r.status != Status::Pass) ++not_pass;
    const std::size_t n = report.summary.variant_evaluations;
    line(2, not_pass == 0 && n >= kMinVariantEvaluations, "T3/T4 variant agreement",
         std::to_string(n) + " evaluations, " + std::to_string(not_pass) + " non-pass results");
}

void oracle_agreement(const std::vector<YSpace>& spaces) {
    std::size_t closures = 0, interiors = 0;
    std::string first;
    for (const auto& s : spaces) {
        const HYLattice L = build_lattice(s);
        for (const auto& I : s.spectrum().ideals) {
            try {
                const StrongClosure c = closure_strong(s, L, I);
                if (!(c.strong == kernel(s, hull(s, I))) && first.empty()) first = where(s) + " " + format_gens(I);
            } catch (const Error& e) {
                if (first.empty()) first = where(s) + " " + format_gens(I) + ": " + e.what();
            }
            ++closures;
        }
        if (!s.kY().is_zero()) continue;
        auto check = [&](const BitSet& S) {
            const YSet in = topo(s, hull(s, S), TopoOp::Interior);
            const YSet ann = hull(s, annihilator(s.ring(), S).members).complement();
            if (in != ann && first.empty()) first = where(s) + " S=" + format_elems(s.ring(), S);
            ++interiors;
        };
        for (const auto& I : s.spectrum().ideals)
            if (!I.gens.empty()) check(gen_set(I));
        for (Elem a : s.ring().elements()) {
            BitSet S(s.ring().size());
            S.set(a.index);
            check(S);
        };
    }
    line(3, first.empty(), "filter route = kernel-hull route; interior = annihilator complement",
         std::to_string(closures) + " closures, " + std::to_string(interiors) + " interiors" + (first.empty() ? "" : "; first mismatch " + first));
}

void finite_coincidence(const std::vector<YSpace>& spaces) {
    std::size_t n = 0;
    std::string first;
    for (const auto& s : spaces) {
        const HYLattice L = build_lattice(s);
        for (const auto& I : s.spectrum().ideals) {
            ++n;
            const bool h = is_hy(s, I), st = is_strong_hy(s, I), y = is_y_hilbert(s, I);
            const Ideal kh = kernel(s, hull(s, I));
            const bool ok = h == st && st == y && closure_hy(s, I) == kh && closure_strong(s, L, I).strong == kh;
            if (!ok && first.empty()) first = where(s) + " " + format_gens(I);
        }
    }
    line(4, first.empty(), "three classes coincide; I_H = I_SH = kh_Y(I)",
         std::to_string(n) + " ideals" + (first.empty() ? "" : "; first mismatch " + first));
}

void filter_correspondence(const std::vector<YSpace>& spaces) {
    std::string first;
    std::size_t filters_seen = 0;
    for (const auto& s : spaces) {
        const HYLattice L = build_lattice(s);
        std::vector<Ideal> prime_strong;
        std::size_t maximal = 0;
        for (const auto& I : s.spectrum().ideals) {
            if (!is_strong_hy(s, I) || I.is_whole()) continue;
            if (is_prime_ideal(I)) prime_strong.push_back(I);
            bool is_max = true;
            for (const auto& J : s.spectrum().ideals)
                if (J.is_proper() && J != I && I.is_subset_of(J) && is_strong_hy(s, J)) is_max = false;
            maximal += is_max;
        }
        const auto primes = filters(L, FilterKind::Prime);
        const auto ultras = filters(L, FilterKind::Ultra);
        if ((primes.size() != prime_strong.size() || ultras.size() != maximal) && first.empty()) first = where(s) + " counts";
        // every filter is H_Y of an ideal, so the ideals enumerate all filters
        for (const auto& I : s.spectrum().ideals) {
            if (I.is_whole()) continue;
            const HYFilter F = to_filter(L, I);
            if (!F.is_proper()) continue;
            const Ideal base = to_ideal(F);
            ++filters_seen;
            std::vector<Ideal> want;
            for (const auto& P : prime_strong) {
                if (!base.is_subset_of(P)) continue;
                bool minimal = true;
                for (const auto& Q : prime_strong)
                    if (Q != P && base.is_subset_of(Q) && Q.is_subset_of(P)) minimal = false;
                if (minimal) want.push_back(P);
            }
            std::vector<Ideal> got;
            for (const auto& P : min_prime_filters_over(F)) got.push_back(to_ideal(P));
            auto order = [](const Ideal& a, const Ideal& b) { return a.members < b.members; };
            std::sort(want.begin(), want.end(), order);
            std::sort(got.begin(), got.end(), order);
            if (got != want && first.empty()) first = where(s) + " Min over " + format_gens(base);
        }
    }
    line(5, first.empty(), "prime/ultra filter counts and Min(F) <-> Min(H^-1 F)",
         std::to_string(spaces.size()) + " cases, " + std::to_string(filters_seen) + " proper filters" +
             (first.empty() ? "" : "; first mismatch " + first));
}

void regular_characterization() {
    std::string first;
    int checked = 0;
    for (std::uint32_t n = 2; n <= 36; ++n) {
        const YSpace s = build_space(build_ring(RingSpec::modular(n)), YSelector::spec());
        bool every = s.kY().is_zero();
        for (const auto& I : s.spectrum().ideals) every = every && is_strong_hy(s, I);
        bool squarefree = true;
        for (std::uint32_t p = 2; p * p <= n; ++p) squarefree = squarefree && n % (p * p) != 0;
        if (every != squarefree && first.empty()) first = "Z/" + std::to_string(n);
        ++checked;
    }
    line(6, first.empty(), "every ideal strong with kY = 0 iff n squarefree",
         std::to_string(checked) + " moduli" + (first.empty() ? "" : "; mismatch at " + first));
}

void hunter_sanity() {
    const HuntResult h = hunt({Case{RingSpec::modular(4), YSelector::spec()}}, "T5", "kY=0");
    bool witness_ok = false;
    if (h.witness && h.witness->witness) {
        const Witness& w = *h.witness->witness;
        std::map<std::string, std::string> m(w.begin(), w.end());
        witness_ok = m["S"] == "{2}" && m["interior(h(S))"] == "{<2>}" && m["complement(h(Ann(S)))"] == "{}";
    }
    std::string found;
    const auto corpus = default_corpus();
    for (const auto& info : registry()) {
        const HuntResult r = hunt(corpus, info.id, std::nullopt);
        if (r.witness) found += (found.empty() ? "" : ", ") + info.id + " in " + r.witness->ring + " " + r.witness->selector;
    }
    line(7, witness_ok && found.empty(), "hunter finds the Z/4 witness and nothing without a drop",
         std::string(witness_ok ? "Z/4 witness S={2} found" : "Z/4 witness missing") +
             (found.empty() ? "; no undropped witnesses" : "; undropped witnesses: " + found));
}

void determinism() {
    auto once = [] {
        std::ostringstream out, err;
        const int code = cli::run({"verify", "--corpus", "default", "--json"}, out, err);
        return std::make_pair(code, out.str());
    };
    const auto a = once();
    const auto b = once();
    line(8, a.second == b.second && !a.second.empty(), "verify --json is byte-identical across runs",
         std::to_string(a.second.size()) + " bytes, exit codes " + std::to_string(a.first) + "/" + std::to_string(b.first));
}

} // namespace

int main() {
    const auto t0 = std::chrono::steady_clock::now();
    const Report report = run_suite(default_corpus());
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const auto spaces = corpus_spaces();

    suite_green(report, seconds);
    variant_bundles(report);
    oracle_agreement(spaces);
    finite_coincidence(spaces);
    filter_correspondence(spaces);
    regular_characterization();
    hunter_sanity();
    determinism();

    std::cout << (8 - failures) << "/8 criteria pass\n";
    return failures == 0 ? 0 : 1;
}
