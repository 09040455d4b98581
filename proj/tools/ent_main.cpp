// ent: command-line front end for entourage-space computations.

#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ent/io.hpp"

using json = nlohmann::json;
using namespace ent;

namespace {

struct GlobalFlags {
    bool as_json = false;
    bool with_dot = false;
    bool assert_mode = false;
};

const char* yes_no(bool b) { return b ? "yes" : "no"; }

StructureClass class_from_string(const std::string& name) {
    if (name == "entourage") return StructureClass::Entourage;
    if (name == "semi-coarse") return StructureClass::SemiCoarse;
    if (name == "quasi-coarse") return StructureClass::QuasiCoarse;
    if (name == "coarse") return StructureClass::Coarse;
    throw SemanticError("unknown structure class '" + name +
                        "' (expected entourage, semi-coarse, quasi-coarse or coarse)");
}

Workspace load_all(const std::vector<std::string>& files) {
    Workspace ws;
    for (const auto& f : files) ws.load_file(f);
    return ws;
}

json classification_report(const std::string& name, const Space& s) {
    const ConnectivityReport conn = connectivity(s);
    const GeometryReport geo = geometry(s);
    json out;
    out["name"] = name;
    out["class"] = to_string(classify(s));
    out["points"] = s.carrier().size();
    out["connected"] = conn.connected;
    out["strongly_connected"] = conn.strongly_connected;
    out["uniformly_connected"] = conn.uniformly_connected;
    out["components"] = conn.components;
    out["locally_finite"] = geo.locally_finite;
    out["phi"] = geo.phi;
    return out;
}

void print_classification(const json& report) {
    std::cout << "space " << report["name"].get<std::string>() << ": "
              << report["class"].get<std::string>() << '\n'
              << "points: " << report["points"].get<std::size_t>() << '\n'
              << "connected: " << yes_no(report["connected"].get<bool>()) << '\n'
              << "strongly_connected: " << yes_no(report["strongly_connected"].get<bool>()) << '\n'
              << "uniformly_connected: " << yes_no(report["uniformly_connected"].get<bool>())
              << '\n';
    std::cout << "components:";
    for (const auto& block : report["components"]) {
        std::cout << " {";
        bool first = true;
        for (const auto& l : block) {
            if (!first) std::cout << ',';
            std::cout << l.get<std::string>();
            first = false;
        }
        std::cout << '}';
    }
    std::cout << '\n'
              << "locally_finite: " << yes_no(report["locally_finite"].get<bool>()) << '\n'
              << "phi: " << report["phi"].get<std::size_t>() << '\n';
}

void emit(const GlobalFlags& flags, const json& report, const std::string& human) {
    if (flags.as_json)
        std::cout << report.dump(2) << '\n';
    else
        std::cout << human;
}

int cmd_classify(const GlobalFlags& flags, const std::vector<std::string>& files) {
    Workspace ws = load_all(files);
    const std::string name = ws.first_space();
    const json report = classification_report(name, ws.space(name));
    if (flags.as_json)
        std::cout << report.dump(2) << '\n';
    else
        print_classification(report);
    return 0;
}

int cmd_functor(const GlobalFlags& flags, const std::string& tag_name,
                const std::vector<std::string>& files) {
    Workspace ws = load_all(files);
    const FunctorTag tag = functor_tag_from_string(tag_name);
    const std::string name = ws.first_space();
    const Space result = apply_functor(tag, ws.space(name));
    const std::string result_name = to_string(tag) + "(" + name + ")";
    const std::string text = serialize_space(result_name, result);

    json report;
    report["name"] = result_name;
    report["functor"] = to_string(tag);
    report["input"] = name;
    report["input_class"] = to_string(classify(ws.space(name)));
    report["class"] = to_string(classify(result));
    report["space"] = text;
    emit(flags, report, text + "# class: " + to_string(classify(result)) + "\n");
    return 0;
}

int cmd_map(const GlobalFlags& flags, const std::vector<std::string>& files) {
    Workspace ws = load_all(files);
    const std::string name = ws.first_map();
    const Workspace::RawMap& raw = ws.raw_map(name);
    const SpaceMap f = ws.map(name);
    const MapProfile p = profile(f);

    json report;
    report["name"] = name;
    report["src"] = raw.src;
    report["dst"] = raw.dst;
    report["dst_class"] = to_string(classify(f.dst()));
    report["bornologous"] = p.bornologous;
    report["weakly_ubc"] = p.weakly_ubc;
    report["ubc"] = p.ubc;
    report["effectively_proper"] = p.effectively_proper;
    report["ls_injective"] = p.ls_injective;
    report["ls_surjective"] = p.ls_surjective;
    report["asymorphism"] = p.asymorphism;
    // Plain closeness against this target is an equivalence relation only
    // when the target is coarse.
    report["plain_closeness_is_equivalence"] = classify(f.dst()) == StructureClass::Coarse;

    std::string human = "map " + name + " : " + raw.src + " -> " + raw.dst + "\n";
    human += "bornologous: " + std::string(yes_no(p.bornologous)) + "\n";
    human += "weakly_ubc: " + std::string(yes_no(p.weakly_ubc)) + "\n";
    human += "ubc: " + std::string(yes_no(p.ubc)) + "\n";
    human += "effectively_proper: " + std::string(yes_no(p.effectively_proper)) + "\n";
    human += "ls_injective: " + std::string(yes_no(p.ls_injective)) + "\n";
    human += "ls_surjective: " + std::string(yes_no(p.ls_surjective)) + "\n";
    human += "asymorphism: " + std::string(yes_no(p.asymorphism)) + "\n";
    human += "dst_class: " + to_string(classify(f.dst())) + "\n";
    emit(flags, report, human);
    return flags.assert_mode && !p.bornologous ? 1 : 0;
}

int cmd_equiv(const GlobalFlags& flags, const std::vector<std::string>& files) {
    Workspace ws = load_all(files);
    const std::string name = ws.first_map();
    const Workspace::RawMap& raw = ws.raw_map(name);
    const SpaceMap f = ws.map(name);
    const SymEquivalenceResult r = sym_coarse_equivalence(f);

    json report;
    report["name"] = name;
    report["src"] = raw.src;
    report["dst"] = raw.dst;
    report["sym_coarse_equivalence"] = r.yes;
    std::string human = "map " + name + " : " + raw.src + " -> " + raw.dst + "\n";
    if (r.yes) {
        const std::string witness =
            serialize_map(name + "_inverse", raw.dst, raw.src, *r.inverse);
        report["inverse"] = witness;
        human += "sym-coarse-equivalence: yes\n" + witness;
    } else {
        report["failed_criterion"] = r.failed_criterion;
        human += "sym-coarse-equivalence: no (failed: " + r.failed_criterion + ")\n";
    }
    emit(flags, report, human);
    return flags.assert_mode && !r.yes ? 1 : 0;
}

std::vector<std::vector<std::string>> parse_partition(const std::string& text) {
    std::vector<std::vector<std::string>> blocks;
    std::vector<std::string> block;
    std::string current;
    auto flush_label = [&] {
        if (!current.empty()) {
            block.push_back(current);
            current.clear();
        }
    };
    for (char c : text) {
        if (c == '|') {
            flush_label();
            blocks.push_back(block);
            block.clear();
        } else if (c == ' ' || c == ',') {
            flush_label();
        } else {
            current.push_back(c);
        }
    }
    flush_label();
    blocks.push_back(block);
    return blocks;
}

int cmd_quotient(const GlobalFlags& flags, const std::string& partition_text,
                 const std::string& class_name, const std::vector<std::string>& files) {
    Workspace ws = load_all(files);
    const std::string name = ws.first_space();
    const Space& s = ws.space(name);
    const StructureClass target = class_from_string(class_name);
    const QuotientResult q = quotient_by_partition(s, parse_partition(partition_text), target);
    const bool soft = is_weakly_soft(s, q.projection.table());

    const std::string result_name = name + "/q";
    const std::string text = serialize_space(result_name, q.space);
    json report;
    report["name"] = result_name;
    report["input"] = name;
    report["requested_class"] = to_string(target);
    report["class"] = to_string(classify(q.space));
    report["weakly_soft"] = soft;
    report["space"] = text;
    emit(flags, report,
         text + "# class: " + to_string(classify(q.space)) +
             "\n# weakly_soft: " + yes_no(soft) + "\n");
    return 0;
}

int cmd_probe(const GlobalFlags& flags, const std::string& family_name, const std::string& window,
              const std::string& radius, const std::string& smax, const std::string& b3_windows) {
    const BuiltinFamily formula = family_from_string(family_name);

    if (!b3_windows.empty()) {
        std::vector<std::pair<long long, long long>> windows;
        std::string current;
        for (char c : b3_windows + ",") {
            if (c == ',') {
                if (!current.empty()) windows.push_back(parse_window(current));
                current.clear();
            } else {
                current.push_back(c);
            }
        }
        const auto rows = probe_b3_radius({formula, 0, 0}, windows);
        json report;
        report["family"] = family_name;
        report["mode"] = "b3-radius";
        std::string human = "probe " + family_name + " b3-radius\n";
        json jrows = json::array();
        for (const auto& row : rows) {
            json jrow;
            jrow["window"] = std::to_string(row.lo) + ":" + std::to_string(row.hi);
            jrow["radius"] = to_string(row.least_radius);
            jrows.push_back(jrow);
            human += "window " + std::to_string(row.lo) + ":" + std::to_string(row.hi) + ": " +
                     to_string(row.least_radius) + "\n";
        }
        report["rows"] = jrows;
        emit(flags, report, human);
        return 0;
    }

    const auto [lo, hi] = parse_window(window);
    const ExtRat r = parse_ext_rat(radius);
    const ExtRat s = parse_ext_rat(smax);
    if (r.is_inf() || s.is_inf())
        throw SemanticError("radius and smax must be finite");
    const ProbeVerdict verdict = probe_inverse_bound({formula, lo, hi}, r.value(), s.value());

    json report;
    report["family"] = family_name;
    report["mode"] = "inverse-bound";
    report["window"] = window;
    report["radius"] = to_string(r);
    report["smax"] = to_string(s);
    std::string human = "probe " + family_name + " window " + window + " radius " + to_string(r) +
                        " smax " + to_string(s) + "\n";
    const bool holds = verdict.outcome == ProbeVerdict::Outcome::HoldsUpToBound;
    if (holds) {
        report["verdict"] = "holds-up-to-bound";
        report["S"] = to_string(verdict.bound);
        human += "verdict: holds-up-to-bound\nS: " + to_string(verdict.bound) + "\n";
    } else {
        report["verdict"] = "counterexample";
        report["pair"] = {verdict.witness_x, verdict.witness_y};
        report["value"] = to_string(verdict.witness_value);
        human += "verdict: counterexample\npair: (" + verdict.witness_x + ", " +
                 verdict.witness_y + ")\nvalue: " + to_string(verdict.witness_value) + "\n";
    }
    emit(flags, report, human);
    return flags.assert_mode && !holds ? 1 : 0;
}

int cmd_word_metric(const GlobalFlags& flags, const std::string& gens, const std::string& side_name,
                    const std::vector<std::string>& files) {
    Workspace ws = load_all(files);
    const std::string name = ws.first_magma();
    const MagmaTable& m = ws.magma(name);
    const Side side = side_from_string(side_name);

    PointSet sigma(m.carrier());
    std::string current;
    std::vector<std::string> gen_labels;
    for (char c : gens + ",") {
        if (c == ',') {
            if (!current.empty()) {
                sigma.add(current);
                gen_labels.push_back(current);
            }
            current.clear();
        } else {
            current.push_back(c);
        }
    }
    if (sigma.empty())
        throw SemanticError("word-metric needs at least one generator");

    const WeightTable d = word_weight(m, sigma, side);
    const DiGraph cay = cayley(m, sigma, side);

    json report;
    report["monoid"] = name;
    report["side"] = to_string(side);
    report["gens"] = gen_labels;
    report["labels"] = m.carrier().labels();
    json rows = json::array();
    for (std::size_t i = 0; i < m.size(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.size(); ++j) row.push_back(to_string(d.at(i, j)));
        rows.push_back(row);
    }
    report["distances"] = rows;
    if (flags.with_dot) report["dot"] = dot_graph(name, cay);

    std::string human = "word-metric " + name + " : gens {" + gens + "} side " + to_string(side) + "\n";
    for (std::size_t i = 0; i < m.size(); ++i) {
        human += m.carrier().label(i) + " |";
        for (std::size_t j = 0; j < m.size(); ++j) human += " " + to_string(d.at(i, j));
        human += "\n";
    }
    if (flags.with_dot) human += dot_graph(name, cay);
    emit(flags, report, human);
    return 0;
}

int cmd_hyper(const GlobalFlags& flags, bool use_exp, const std::vector<std::string>& files) {
    Workspace ws = load_all(files);
    const std::string name = ws.first_space();
    const Space& base = ws.space(name);
    const Space hyper = hyper_space(base);
    const Space expo = exp_space(base);

    json report;
    report["name"] = name;
    report["base_class"] = to_string(classify(base));
    report["hyper_class"] = to_string(classify(hyper));
    report["exp_class"] = to_string(classify(expo));
    report["points"] = hyper.carrier().size();

    std::string human = "hyper " + name + "\n";
    human += "base_class: " + to_string(classify(base)) + "\n";
    human += "hyper_class: " + to_string(classify(hyper)) + "\n";
    human += "exp_class: " + to_string(classify(expo)) + "\n";
    human += "points: " + std::to_string(hyper.carrier().size()) + "\n";

    if (flags.with_dot) {
        const Space& chosen = use_exp ? expo : hyper;
        std::vector<std::string> non_empty;
        for (std::size_t i = 1; i < chosen.carrier().size(); ++i)
            non_empty.push_back(chosen.carrier().label(i));
        const Space restricted = restrict_to(chosen, non_empty);
        const std::string dot = dot_relation(std::string(use_exp ? "exp" : "hyper") + "(" + name + ")",
                                             restricted.carrier(), restricted.max_ent());
        report["dot"] = dot;
        human += dot;
    }
    emit(flags, report, human);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"entourage-space toolkit: classify, transform and probe "
                 "generalized coarse structures on finite carriers"};
    app.require_subcommand(1);

    GlobalFlags flags;
    app.add_flag("--json", flags.as_json, "emit a JSON report (stable key order)");
    app.add_flag("--dot", flags.with_dot, "include DOT output where supported");
    app.add_flag("--assert", flags.assert_mode, "exit 1 when the probed property fails");

    std::vector<std::string> files;
    std::string tag, partition, target_class = "quasi-coarse";
    std::string family, window, radius, smax, b3_windows;
    std::string gens, side = "left";
    bool use_exp = false;

    CLI::App* classify_cmd = app.add_subcommand("classify", "classify a space file");
    classify_cmd->add_option("files", files, "input files")->required()->expected(-1);

    CLI::App* functor_cmd = app.add_subcommand("functor", "apply sym/usym/w/wsemi/j to a space");
    functor_cmd->add_option("tag", tag, "functor tag")->required();
    functor_cmd->add_option("files", files, "input files")->required()->expected(-1);

    CLI::App* map_cmd = app.add_subcommand("map", "profile a map between spaces");
    map_cmd->add_option("files", files, "input files")->required()->expected(-1);

    CLI::App* equiv_cmd = app.add_subcommand("equiv", "decide Sym-coarse equivalence of a map");
    equiv_cmd->add_option("files", files, "input files")->required()->expected(-1);

    CLI::App* quotient_cmd = app.add_subcommand("quotient", "quotient a space by a partition");
    quotient_cmd->add_option("--partition", partition, "blocks, e.g. \"a b|c\"")->required();
    quotient_cmd->add_option("--class", target_class,
                             "target class: entourage, semi-coarse, quasi-coarse, coarse");
    quotient_cmd->add_option("files", files, "input files")->required()->expected(-1);

    CLI::App* probe_cmd = app.add_subcommand("probe", "windowed probes of the builtin families");
    probe_cmd->add_option("--family", family, "builtin family name")->required();
    probe_cmd->add_option("--window", window, "window lo:hi");
    probe_cmd->add_option("--radius", radius, "entourage radius R");
    probe_cmd->add_option("--smax", smax, "largest bound S to try");
    probe_cmd->add_option("--b3-windows", b3_windows, "comma-separated windows for the B3 scan");

    CLI::App* word_cmd = app.add_subcommand("word-metric", "word quasi-metric of a monoid");
    word_cmd->add_option("--gens", gens, "comma-separated generator labels")->required();
    word_cmd->add_option("--side", side, "left or right");
    word_cmd->add_option("files", files, "input files")->required()->expected(-1);

    CLI::App* hyper_cmd = app.add_subcommand("hyper", "hyperstructures of a space");
    hyper_cmd->add_flag("--exp", use_exp, "restrict the DOT output to the exp structure");
    hyper_cmd->add_option("files", files, "input files")->required()->expected(-1);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // --help
        app.exit(e);
        return 2;
    }

    try {
        if (*classify_cmd) return cmd_classify(flags, files);
        if (*functor_cmd) return cmd_functor(flags, tag, files);
        if (*map_cmd) return cmd_map(flags, files);
        if (*equiv_cmd) return cmd_equiv(flags, files);
        if (*quotient_cmd) return cmd_quotient(flags, partition, target_class, files);
        if (*probe_cmd) {
            if (b3_windows.empty() && (window.empty() || radius.empty() || smax.empty()))
                throw SemanticError("probe needs either --b3-windows or all of --window, --radius, --smax");
            return cmd_probe(flags, family, window, radius, smax, b3_windows);
        }
        if (*word_cmd) return cmd_word_metric(flags, gens, side, files);
        if (*hyper_cmd) return cmd_hyper(flags, use_exp, files);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return 2;
    } catch (const CapError& e) {
        std::cerr << "resource cap: " << e.what() << '\n';
        return 4;
    } catch (const SemanticError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    }
    return 0;
}
