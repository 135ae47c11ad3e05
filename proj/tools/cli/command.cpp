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

#include "command.hpp"

#include <fstream>
#include <ostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "ring_text.hpp"
#include "spectral/hy_lattice.hpp"
#include "spectral/ideal_classes.hpp"
#include "spectral/spectrum.hpp"
#include "spectral/theorems.hpp"

namespace spectral::cli {

namespace {

using nlohmann::ordered_json;

struct Usage {
    std::string message;
};

struct Setting {
    Ring ring;
    YSpace space;
};

Setting load(const Command& cmd, const Caps& caps) {
    RingBuildOptions opts;
    opts.carrier_cap = caps.carrier;
    Ring ring = build_ring(parse_ring(cmd.ring), opts);
    if (ring.size() > caps.elements)
        throw Error(ErrorKind::CapExceeded, ring.name() + " has more than " + std::to_string(caps.elements) + " elements");
    auto spec = std::make_shared<const Spectrum>(spectrum(ring, caps.ideals));
    return {ring, build_space(spec, parse_selector(cmd.selector))};
}

Ideal ideal_arg(const Setting& s, const Command& cmd) {
    const Ideal I = span(s.ring, parse_elements(s.ring, cmd.ideal));
    return s.space.spectrum().ideals[s.space.index_of(I)];
}

ordered_json labels(const Ring& ring, const BitSet& members) {
    ordered_json out = ordered_json::array();
    for (auto i : members) out.push_back(ring.label(Elem{static_cast<std::uint32_t>(i)}));
    return out;
}

ordered_json gens_list(const std::vector<Ideal>& ideals) {
    ordered_json out = ordered_json::array();
    for (const auto& I : ideals) out.push_back(format_gens(I));
    return out;
}

Caps caps_or_usage() {
    try {
        return caps_from_env();
    } catch (const Error& e) {
        throw Usage{std::string("SPECTRAL_CAPS: ") + e.what()};
    }
}

std::vector<Case> corpus_of(const Command& cmd) {
    if (cmd.ring.empty()) return default_corpus();
    return {Case{parse_ring(cmd.ring), parse_selector(cmd.selector)}};
}

Exit cmd_define(const Command& cmd, std::ostream& out) {
    const Ring ring = build_ring(parse_ring(cmd.ring), RingBuildOptions{caps_or_usage().carrier, true});
    const std::size_t n = ring.size();
    if (cmd.json) {
        ordered_json j;
        j["name"] = ring.name();
        j["size"] = n;
        j["zero"] = ring.zero().index;
        j["one"] = ring.one().index;
        ordered_json lab = ordered_json::array(), add = ordered_json::array(), mul = ordered_json::array();
        for (Elem a : ring.elements()) {
            lab.push_back(ring.label(a));
            ordered_json ar = ordered_json::array(), mr = ordered_json::array();
            for (Elem b : ring.elements()) {
                ar.push_back(ring.add(a, b).index);
                mr.push_back(ring.mul(a, b).index);
            }
            add.push_back(ar);
            mul.push_back(mr);
        }
        j["labels"] = lab;
        j["add"] = add;
        j["mul"] = mul;
        out << j.dump(2) << '\n';
        return Exit::Ok;
    }
    out << ring.name() << ": " << n << " elements, zero " << ring.label(ring.zero()) << ", one " << ring.label(ring.one()) << '\n';
    for (const char* op : {"+", "*"}) {
        out << op << " |";
        for (Elem b : ring.elements()) out << ' ' << ring.label(b);
        out << '\n';
        for (Elem a : ring.elements()) {
            out << ring.label(a) << " |";
            for (Elem b : ring.elements()) out << ' ' << ring.label(*op == '+' ? ring.add(a, b) : ring.mul(a, b));
            out << '\n';
        }
    }
    return Exit::Ok;
}

Exit cmd_spec(const Command& cmd, std::ostream& out) {
    const Caps caps = caps_or_usage();
    const Ring ring = build_ring(parse_ring(cmd.ring), RingBuildOptions{caps.carrier, true});
    const Spectrum spec = spectrum(ring, caps.ideals);
    const RingClassFlags f = ring_flags(spec);
    auto masked = [&](const BitSet& mask) {
        std::vector<Ideal> list;
        for (auto p : mask) list.push_back(spec.primes[p]);
        return list;
    };
    if (cmd.json) {
        ordered_json j;
        j["ring"] = ring.name();
        j["primes"] = gens_list(spec.primes);
        j["min"] = gens_list(masked(spec.min_mask));
        j["max"] = gens_list(masked(spec.max_mask));
        j["rad"] = format_gens(spec.rad);
        j["jac"] = format_gens(spec.jac);
        j["ideals"] = gens_list(spec.ideals);
        j["flags"] = {{"reduced", f.reduced},           {"semiprimitive", f.semiprimitive}, {"regular", f.regular_ring},
                      {"gelfand", f.gelfand},           {"weakly_regular", f.weakly_regular},
                      {"property_A", f.property_A},     {"ac", f.ac_ring}};
        out << j.dump(2) << '\n';
        return Exit::Ok;
    }
    out << format_spectrum(spec) << '\n';
    out << "Rad = " << display(spec.rad) << "\nJac = " << display(spec.jac) << '\n';
    out << spec.ideals.size() << " ideals:\n";
    for (const auto& I : spec.ideals) out << "  " << display(I) << '\n';
    return Exit::Ok;
}

Exit cmd_classify(const Command& cmd, std::ostream& out) {
    const Setting s = load(cmd, caps_or_usage());
    const Ideal I = ideal_arg(s, cmd);
    std::vector<Variant> extra;
    for (const auto& name : cmd.variants) {
        if (name == "all") {
            extra = all_variants();
            break;
        }
        auto v = parse_variant(name);
        if (!v) throw Usage{"unknown variant '" + name + "'"};
        extra.push_back(*v);
    }
    const ClassReport r = classify_ideal(s.space, I, extra);
    if (cmd.json) {
        ordered_json j;
        j["ring"] = s.ring.name();
        j["selector"] = to_string(s.space.selector());
        j["ideal"] = format_gens(I);
        j["members"] = labels(s.ring, I.members);
        j["semiprime"] = r.semiprime;
        j["hy"] = r.hy;
        j["strong_hy"] = r.strong_hy;
        j["y_hilbert"] = r.y_hilbert;
        ordered_json v = ordered_json::object();
        for (const auto& [variant, value] : r.variants) v[std::string(to_string(variant))] = value;
        j["variants"] = v;
        j["variants_agree"] = r.variants_agree();
        out << j.dump(2) << '\n';
        return Exit::Ok;
    }
    out << display(I) << " over Y = " << format_yset(s.space, s.space.all()) << '\n';
    out << "  semiprime  " << (r.semiprime ? "yes" : "no") << '\n';
    out << "  H_Y        " << (r.hy ? "yes" : "no") << '\n';
    out << "  strong H_Y " << (r.strong_hy ? "yes" : "no") << '\n';
    out << "  Y-Hilbert  " << (r.y_hilbert ? "yes" : "no") << '\n';
    for (const auto& [variant, value] : r.variants) out << "  " << to_string(variant) << ' ' << (value ? "yes" : "no") << '\n';
    return Exit::Ok;
}

Exit cmd_closures(const Command& cmd, std::ostream& out) {
    const Setting s = load(cmd, caps_or_usage());
    const Ideal I = ideal_arg(s, cmd);
    const Ideal h = closure_hy(s.space, I);
    const StrongClosure sc = closure_strong(s.space, build_lattice(s.space), I);
    if (cmd.json) {
        ordered_json j;
        j["ring"] = s.ring.name();
        j["selector"] = to_string(s.space.selector());
        j["ideal"] = format_gens(I);
        j["I_H"] = format_gens(h);
        j["I_SH"] = format_gens(sc.strong);
        j["kh_Y"] = format_gens(sc.kernel_hull);
        out << j.dump(2) << '\n';
        return Exit::Ok;
    }
    out << "I    = " << display(I) << "\nI_H  = " << display(h) << "\nI_SH = " << display(sc.strong)
        << "\nkh_Y = " << display(sc.kernel_hull) << '\n';
    return Exit::Ok;
}

Exit cmd_lattice(const Command& cmd, std::ostream& out) {
    const Setting s = load(cmd, caps_or_usage());
    const HYLattice L = build_lattice(s.space);
    auto witness = [&](std::size_t i) { return format_gens(span(s.ring, L.witness(i))); };
    if (cmd.json) {
        ordered_json j;
        j["ring"] = s.ring.name();
        j["selector"] = to_string(s.space.selector());
        j["Y"] = gens_list(s.space.primes());
        ordered_json els = ordered_json::array();
        for (std::size_t i = 0; i < L.size(); ++i)
            els.push_back({{"set", format_yset(s.space, L.element(i))}, {"hull_of", witness(i)}});
        j["elements"] = els;
        out << j.dump(2) << '\n';
        return Exit::Ok;
    }
    out << "H_Y lattice over Y = " << format_yset(s.space, s.space.all()) << ", " << L.size() << " elements\n";
    for (std::size_t i = 0; i < L.size(); ++i) out << "  " << i << ": " << format_yset(s.space, L.element(i)) << " = h(" << witness(i) << ")\n";
    return Exit::Ok;
}

Exit cmd_filters(const Command& cmd, std::ostream& out) {
    const Caps caps = caps_or_usage();
    const Setting s = load(cmd, caps);
    const HYLattice L = build_lattice(s.space);
    FilterKind kind = FilterKind::All;
    if (cmd.kind == "proper") kind = FilterKind::Proper;
    else if (cmd.kind == "prime") kind = FilterKind::Prime;
    else if (cmd.kind == "ultra") kind = FilterKind::Ultra;
    else if (cmd.kind != "all") throw Usage{"unknown filter kind '" + cmd.kind + "'"};
    const auto list = filters(L, kind, caps.lattice);
    if (cmd.json) {
        ordered_json j;
        j["ring"] = s.ring.name();
        j["selector"] = to_string(s.space.selector());
        j["kind"] = cmd.kind;
        ordered_json fs = ordered_json::array();
        for (const auto& f : list) {
            ordered_json m = ordered_json::array();
            for (auto i : f.members) m.push_back(format_yset(s.space, L.element(i)));
            fs.push_back({{"members", m}, {"prime", f.is_prime()}, {"ultra", f.is_ultra()}, {"ideal", format_gens(to_ideal(f))}});
        }
        j["filters"] = fs;
        out << j.dump(2) << '\n';
        return Exit::Ok;
    }
    out << list.size() << ' ' << cmd.kind << " filters\n";
    for (const auto& f : list) out << "  " << format_filter(f) << " -> " << format_gens(to_ideal(f)) << '\n';
    return Exit::Ok;
}

void write_json(const std::optional<std::string>& path, const std::string& text, std::ostream& out) {
    if (!path || path->empty() || *path == "-") {
        out << text;
        return;
    }
    std::ofstream file(*path);
    if (!file) throw Error(ErrorKind::Parse, "cannot write " + *path);
    file << text;
}

Exit cmd_verify(const Command& cmd, std::ostream& out) {
    RunConfig config;
    config.caps = caps_or_usage();
    config.theorems = cmd.theorems;
    config.dropped = cmd.drop;
    const Report report = run_suite(corpus_of(cmd), config);
    const bool to_stdout = cmd.json_path && (cmd.json_path->empty() || *cmd.json_path == "-");
    if (cmd.json_path) write_json(cmd.json_path, to_json_lines(report), out);
    if (!to_stdout) {
        for (const auto& r : report.results) {
            if (r.status == Status::Pass || r.status == Status::Vacuous) continue;
            out << r.theorem << ' ' << r.ring << ' ' << r.selector << ": " << to_string(r.status);
            if (!r.message.empty()) out << " (" << r.message << ')';
            if (r.witness)
                for (const auto& [name, value] : *r.witness) out << "\n    " << name << " = " << value;
            out << '\n';
        }
        const Summary& s = report.summary;
        out << s.cases << " cases, " << s.checks << " checks: " << s.pass << " pass, " << s.vacuous << " vacuous, " << s.fail
            << " failures, " << s.errors << " errors, " << s.cap_exceeded << " cap-exceeded\n";
    }
    if (report.summary.fail > 0 || report.summary.errors > 0) return Exit::Failure;
    return report.summary.cap_exceeded > 0 ? Exit::Cap : Exit::Ok;
}

Exit cmd_hunt(const Command& cmd, std::ostream& out) {
    if (cmd.theorems.size() != 1) throw Usage{"hunt needs exactly one --theorem"};
    const HuntResult h = hunt(corpus_of(cmd), cmd.theorems.front(), cmd.drop, caps_or_usage());
    if (cmd.json_path) {
        ordered_json j;
        j["theorem"] = cmd.theorems.front();
        j["drop"] = cmd.drop ? ordered_json(*cmd.drop) : ordered_json(nullptr);
        j["found"] = h.witness.has_value();
        if (h.witness) {
            j["ring"] = h.witness->ring;
            j["selector"] = h.witness->selector;
            ordered_json w = ordered_json::array();
            for (const auto& [name, value] : *h.witness->witness) w.push_back({{"name", name}, {"value", value}});
            j["witness"] = w;
        }
        j["cases_visited"] = h.cases_visited;
        j["instances"] = h.instances;
        j["cap_exceeded"] = h.cap_exceeded;
        write_json(cmd.json_path, j.dump() + "\n", out);
    } else if (h.witness) {
        out << "witness for " << cmd.theorems.front() << " in " << h.witness->ring << ' ' << h.witness->selector << '\n';
        for (const auto& [name, value] : *h.witness->witness) out << "    " << name << " = " << value << '\n';
    } else {
        out << "none found in " << h.cases_visited << " cases (" << h.instances << " instances)\n";
    }
    return !h.witness && h.cap_exceeded ? Exit::Cap : Exit::Ok;
}

void add_ring(CLI::App* sub, Command& cmd, bool selector) {
    sub->add_option("--ring", cmd.ring, "ring spec, e.g. Z/12 or GF(2)[x]/(x^2) x Z/3")->required();
    if (selector) sub->add_option("--y", cmd.selector, "Y: spec, max, min, idx:0,2 or minover:<gens>");
}

} // namespace

Parsed parse_args(const std::vector<std::string>& args) {
    Command cmd;
    CLI::App app{"Hull-kernel ideal classes and H_Y filters on finite commutative rings", "spectral"};
    app.require_subcommand(1);

    auto* define = app.add_subcommand("define", "print the ring's operation tables");
    add_ring(define, cmd, false);
    define->add_flag("--json", cmd.json, "emit JSON in the table ingestion format");

    auto* spec = app.add_subcommand("spec", "print Spec, Min, Max, radicals and every ideal");
    add_ring(spec, cmd, false);
    spec->add_flag("--json", cmd.json, "emit JSON");

    auto* classify = app.add_subcommand("classify", "class membership of one ideal");
    add_ring(classify, cmd, true);
    classify->add_option("--ideal", cmd.ideal, "generators, comma separated");
    classify->add_option("--variant", cmd.variants, "extra characterizations to evaluate, or 'all'");
    classify->add_flag("--json", cmd.json, "emit JSON");

    auto* closures = app.add_subcommand("closures", "I_H, I_SH and kh_Y(I)");
    add_ring(closures, cmd, true);
    closures->add_option("--ideal", cmd.ideal, "generators, comma separated");
    closures->add_flag("--json", cmd.json, "emit JSON");

    auto* lattice = app.add_subcommand("lattice", "the lattice of hulls of finite sets");
    add_ring(lattice, cmd, true);
    lattice->add_flag("--json", cmd.json, "emit JSON");

    auto* filt = app.add_subcommand("filters", "filters of the hull lattice");
    add_ring(filt, cmd, true);
    filt->add_option("--kind", cmd.kind, "all, proper, prime or ultra");
    filt->add_flag("--json", cmd.json, "emit JSON");

    std::string json_path;
    auto* verify = app.add_subcommand("verify", "run the theorem suite");
    auto* corpus_v = verify->add_option("--corpus", cmd.corpus, "'default'");
    auto* ring_v = verify->add_option("--ring", cmd.ring, "check one ring instead of the corpus");
    verify->add_option("--y", cmd.selector, "Y for --ring");
    verify->add_option("--theorem", cmd.theorems, "registry ids to run (default: all)");
    verify->add_option("--drop", cmd.drop, "treat this hypothesis as satisfied");
    auto* json_v = verify->add_option("--json", json_path, "write JSON lines to PATH, or stdout")->expected(0, 1);
    corpus_v->excludes(ring_v);

    auto* hunt_cmd = app.add_subcommand("hunt", "search the corpus for a counterexample with a hypothesis dropped");
    auto* corpus_h = hunt_cmd->add_option("--corpus", cmd.corpus, "'default'");
    auto* ring_h = hunt_cmd->add_option("--ring", cmd.ring, "search one ring instead of the corpus");
    hunt_cmd->add_option("--y", cmd.selector, "Y for --ring");
    hunt_cmd->add_option("--theorem", cmd.theorems, "registry id")->required();
    hunt_cmd->add_option("--drop", cmd.drop, "hypothesis to drop");
    auto* json_h = hunt_cmd->add_option("--json", json_path, "write JSON to PATH, or stdout")->expected(0, 1);
    corpus_h->excludes(ring_h);

    Parsed parsed;
    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        parsed.text = app.help("", CLI::AppFormatMode::All);
        parsed.exit = Exit::Ok;
        return parsed;
    } catch (const CLI::ParseError& e) {
        parsed.text = std::string(e.what()) + "\nRun with --help for usage.\n";
        parsed.exit = Exit::Usage;
        return parsed;
    }
    cmd.name = app.get_subcommands().front()->get_name();
    if (!cmd.corpus.empty() && cmd.corpus != "default") {
        parsed.text = "unknown corpus '" + cmd.corpus + "'; only 'default' is built in\n";
        parsed.exit = Exit::Usage;
        return parsed;
    }
    if (json_v->count() > 0 || json_h->count() > 0) cmd.json_path = json_path;
    parsed.command = cmd;
    return parsed;
}

Exit execute(const Command& cmd, std::ostream& out, std::ostream& err) {
    auto report = [&](const std::string& kind, const std::string& message) {
        err << "error: " << kind << ": " << message << '\n';
        if (cmd.json || cmd.json_path) out << ordered_json{{"error", {{"kind", kind}, {"message", message}}}}.dump() << '\n';
    };
    try {
        if (cmd.name == "define") return cmd_define(cmd, out);
        if (cmd.name == "spec") return cmd_spec(cmd, out);
        if (cmd.name == "classify") return cmd_classify(cmd, out);
        if (cmd.name == "closures") return cmd_closures(cmd, out);
        if (cmd.name == "lattice") return cmd_lattice(cmd, out);
        if (cmd.name == "filters") return cmd_filters(cmd, out);
        if (cmd.name == "verify") return cmd_verify(cmd, out);
        if (cmd.name == "hunt") return cmd_hunt(cmd, out);
        err << "unknown subcommand " << cmd.name << '\n';
        return Exit::Usage;
    } catch (const Usage& u) {
        err << "usage error: " << u.message << '\n';
        return Exit::Usage;
    } catch (const SyntaxError& e) {
        err << "usage error: " << e.what() << '\n';
        return Exit::Usage;
    } catch (const Error& e) {
        if (e.kind() == ErrorKind::InvalidSelector || e.kind() == ErrorKind::UnknownTheorem ||
            e.kind() == ErrorKind::UnknownHypothesis) {
            err << "usage error: " << e.what() << '\n';
            return Exit::Usage;
        }
        report(std::string(to_string(e.kind())), e.what());
        return e.kind() == ErrorKind::CapExceeded ? Exit::Cap : Exit::Failure;
    }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    const Parsed p = parse_args(args);
    if (!p.command) {
        (p.exit == Exit::Ok ? out : err) << p.text;
        return static_cast<int>(p.exit);
    }
    return static_cast<int>(execute(*p.command, out, err));
}

} // namespace spectral::cli
