// Acceptance suite: one pass/fail line per criterion, each with its time
// budget enforced.

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "ent/graph.hpp"
#include "ent/hyper.hpp"
#include "ent/io.hpp"
#include "support/census.hpp"
#include "support/oracles.hpp"
#include "support/run_cli.hpp"

using namespace ent;

namespace {

int failures = 0;

void run_criterion(int number, const std::string& label, double budget_ms,
                   const std::function<void()>& body) {
    const auto start = std::chrono::steady_clock::now();
    std::string error;
    try {
        body();
    } catch (const std::exception& e) {
        error = e.what();
    }
    const double elapsed =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    if (error.empty() && elapsed > budget_ms) {
        std::ostringstream msg;
        msg << "time budget exceeded (" << elapsed << " ms > " << budget_ms << " ms)";
        error = msg.str();
    }
    if (error.empty()) {
        std::printf("[PASS] criterion %2d: %s (%.1f ms)\n", number, label.c_str(), elapsed);
    } else {
        ++failures;
        std::printf("[FAIL] criterion %2d: %s -- %s\n", number, label.c_str(), error.c_str());
    }
    std::fflush(stdout);
}

void require(bool condition, const std::string& what) {
    if (!condition) throw std::runtime_error(what);
}

Space e1() {
    const Carrier c = census::numbered_carrier(3);
    return from_generators(c, {Entourage::from_pairs(c, {{"0", "1"}, {"0", "2"}, {"1", "0"}, {"2", "0"}})});
}

Space e2() {
    const Carrier c = census::numbered_carrier(3);
    return from_generators(c, {Entourage::from_pairs(c, {{"0", "1"}, {"0", "2"}})});
}

bool is_sym_class(StructureClass c) {
    return c == StructureClass::SemiCoarse || c == StructureClass::Coarse;
}

bool is_trans_class(StructureClass c) {
    return c == StructureClass::QuasiCoarse || c == StructureClass::Coarse;
}

void criterion_1_bound_example() {
    for (const Space& s : {e1(), e2()}) {
        const BoundednessFlags f = boundedness(s, PointSet(s.carrier(), {"0", "1", "2"}));
        require(f.b1 && !f.b2 && !f.b3, "boundedness flags of the whole carrier");
    }
    require(classify(e1()) == StructureClass::SemiCoarse, "classify(E1)");
    require(classify(e2()) == StructureClass::QuasiCoarse, "classify(E2)");
}

void criterion_2_census() {
    std::size_t semi = 0, quasi = 0, coarse = 0;
    std::size_t oracle_semi = 0, oracle_quasi = 0, oracle_coarse = 0;
    const auto spaces = census::all_spaces(3);
    require(spaces.size() == 64, "64 reflexive relations on 3 points");
    for (const auto& s : spaces) {
        const StructureClass c = classify(s);
        if (is_sym_class(c)) ++semi;
        if (is_trans_class(c)) ++quasi;
        if (c == StructureClass::Coarse) ++coarse;
        const auto verdict = oracle::closure_conditions(s);
        if (verdict.semi_coarse) ++oracle_semi;
        if (verdict.quasi_coarse) ++oracle_quasi;
        if (verdict.semi_coarse && verdict.quasi_coarse) ++oracle_coarse;
    }
    require(semi == oracle_semi && quasi == oracle_quasi && coarse == oracle_coarse,
            "classify counts equal the closure-oracle counts");
    require(coarse == oracle::count_partitions(3),
            "coarse structures are the equivalence relations");
}

void criterion_3_extremality() {
    const auto all = census::all_spaces(3);
    for (const auto& s : all) {
        const Space sym = apply_functor(FunctorTag::Sym, s);
        const Space usym = apply_functor(FunctorTag::USym, s);
        const Space w = apply_functor(FunctorTag::W, s);
        const Space wsemi = apply_functor(FunctorTag::WSemi, s);
        require(is_sym_class(classify(sym)) && sym.max_ent().subset_of(s.max_ent()),
                "Sym is a semi-coarse substructure");
        require(is_sym_class(classify(usym)) && s.max_ent().subset_of(usym.max_ent()),
                "USym is a semi-coarse superstructure");
        require(is_trans_class(classify(w)) && s.max_ent().subset_of(w.max_ent()),
                "W is a quasi-coarse superstructure");
        require(classify(wsemi) == StructureClass::Coarse && s.max_ent().subset_of(wsemi.max_ent()),
                "W after USym is a coarse superstructure");
        for (const auto& candidate : all) {
            const StructureClass cc = classify(candidate);
            if (is_sym_class(cc) && candidate.max_ent().subset_of(s.max_ent()))
                require(candidate.max_ent().subset_of(sym.max_ent()), "Sym maximality");
            if (is_sym_class(cc) && s.max_ent().subset_of(candidate.max_ent()))
                require(usym.max_ent().subset_of(candidate.max_ent()), "USym minimality");
            if (is_trans_class(cc) && s.max_ent().subset_of(candidate.max_ent()))
                require(w.max_ent().subset_of(candidate.max_ent()), "W minimality");
            if (cc == StructureClass::Coarse && s.max_ent().subset_of(candidate.max_ent()))
                require(wsemi.max_ent().subset_of(candidate.max_ent()), "W-USym minimality");
        }
    }
}

void criterion_4_morphism_implications() {
    const auto spaces = census::all_spaces(3);
    const auto tables = census::all_tables(3, 3);
    for (const auto& sx : spaces) {
        const bool quasi_src = is_trans_class(classify(sx));
        for (const auto& sy : spaces) {
            for (const auto& t : tables) {
                const MapProfile p = profile(SpaceMap(sx, sy, t));
                require(!p.effectively_proper || p.ubc, "effectively proper implies ubc");
                require(!p.ubc || p.weakly_ubc, "ubc implies weakly ubc");
                require(!p.effectively_proper || p.ls_injective,
                        "effectively proper implies large-scale injective");
                if (quasi_src) {
                    const bool a = p.ls_injective && p.weakly_ubc;
                    const bool b = p.ls_injective && p.ubc;
                    require(a == b && b == p.effectively_proper,
                            "the copreserving ladder collapses on quasi-coarse sources");
                }
            }
        }
    }
}

void criterion_5_sym_equivalence() {
    std::vector<Space> spaces;
    for (std::size_t n = 1; n <= 3; ++n)
        for (auto& s : census::spaces_of_class(n, StructureClass::QuasiCoarse))
            spaces.push_back(std::move(s));

    for (const auto& x : spaces) {
        for (const auto& y : spaces) {
            bool via_flags = false;
            for (const auto& t : census::all_tables(x.carrier().size(), y.carrier().size())) {
                if (sym_coarse_equivalence(SpaceMap(x, y, t)).yes) {
                    via_flags = true;
                    break;
                }
            }
            const bool via_oracle = equivalence_oracle(x, y);
            require(via_flags == via_oracle, "criterion (d) matches the definition-level search");
            if (via_oracle) {
                if (classify(x) == StructureClass::Coarse)
                    require(classify(y) == StructureClass::Coarse, "coarseness is preserved");
                const ConnectivityReport cx = connectivity(x);
                const ConnectivityReport cy = connectivity(y);
                require(cx.connected == cy.connected, "connectedness is preserved");
                require(cx.strongly_connected == cy.strongly_connected,
                        "strong connectedness is preserved");
                require(cx.uniformly_connected == cy.uniformly_connected,
                        "uniform connectedness is preserved");
            }
        }
    }
}

void criterion_6_probes() {
    for (long long r = 1; r <= 3; ++r) {
        const ProbeVerdict v = probe_inverse_bound({BuiltinFamily::QuasiSymZ, -50, 50}, Rat(r), Rat(2 * r));
        require(v.outcome == ProbeVerdict::Outcome::HoldsUpToBound, "quasi_sym_Z holds");
        require(v.bound <= ExtRat(2 * r), "quasi_sym_Z bound at most 2R");
    }
    const ProbeVerdict bad = probe_inverse_bound({BuiltinFamily::CubicSkew, -10, 10}, Rat(1), Rat(100));
    require(bad.outcome == ProbeVerdict::Outcome::Counterexample, "cubic_skew fails");
    const long long z = std::stoll(bad.witness_y);
    const long long rr = 1;
    require(bad.witness_value == ExtRat(rr * (1 + 3 * z * z + 3 * z * rr + rr * rr)),
            "counterexample value matches the cubic formula");
    const WeightTable w = evaluate_family({BuiltinFamily::CubicSkew, -10, 10});
    require(w.at(bad.witness_y, bad.witness_x) == bad.witness_value,
            "counterexample re-evaluates");
}

void criterion_7_metrization() {
    for (const auto& s : census::spaces_of_class(3, StructureClass::QuasiCoarse)) {
        const WeightTable w = weight_from_chain(subadditive_chain(s));
        require(structure_from_weight(w).space == s, "round-trip equality");
        require(!classify_weight(w).extended == connectivity(s).strongly_connected,
                "non-extended exactly on strongly connected spaces");
    }
    for (std::size_t n = 1; n <= 2; ++n)
        for (const auto& s : census::spaces_of_class(n, StructureClass::QuasiCoarse)) {
            const WeightTable w = weight_from_chain(subadditive_chain(s));
            require(structure_from_weight(w).space == s, "round-trip equality (small carriers)");
        }
}

void criterion_8_monoid_geometry() {
    for (const auto& [name, table] : catalog::all()) {
        const AlgebraProfile p = classify_magma(table);
        if (!p.unitary || !p.associative) continue;
        PointSet sigma(table.carrier());
        sigma.add(std::size_t{1} % table.size());
        const WeightTable d = word_weight(table, sigma, Side::Left);
        require(classify_weight(d).triangle, "word metric triangle inequality on " + name);

        // The Cayley-graphic structure equals the side structure of the
        // submonoid generated by sigma.
        PointSet generated(table.carrier());
        generated.add(table.identity_or_throw());
        for (;;) {
            PointSet next = generated;
            for (std::size_t g : generated.to_indices())
                for (std::size_t s : sigma.to_indices()) next.add(table.op(g, s));
            if (next == generated) break;
            generated = next;
        }
        const Space graphic = graphic_structure(cayley(table, sigma, Side::Left)).space;
        require(graphic == side_structure(table, generated, Side::Left),
                "Cayley-graphic equals the side structure on " + name);
    }

    const MagmaTable z6 = catalog::z6();
    PointSet s1(z6.carrier(), {"1"});
    PointSet s23(z6.carrier(), {"2", "3"});
    const GenInvarianceReport r = gen_invariance(z6, s1, s23);
    require(r.equal_structures, "generating sets induce the same structure");
    require(r.lipschitz, "word metrics are mutually Lipschitz");
    require(r.k == 3 && r.l == 3, "Lipschitz constants for {1} vs {2,3}");
}

void criterion_9_hyper() {
    for (std::size_t n = 1; n <= 3; ++n) {
        for (const auto& s : census::all_spaces(n)) {
            const Space h = hyper_space(s);
            require(Space(intersect(h.max_ent(), inverse(h.max_ent()))) == exp_space(s),
                    "Sym of the hyperstructure is exp");

            std::vector<std::string> non_empty;
            for (std::size_t i = 1; i < h.carrier().size(); ++i)
                non_empty.push_back(h.carrier().label(i));
            const bool semi = restrict_to(h, non_empty).max_ent().is_symmetric();
            const bool b3 = boundedness(s, PointSet(s.carrier(), s.carrier().labels())).b3;
            require(semi == b3, "restricted semi-coarseness is the B3 criterion");
        }
    }
    for (std::size_t a = 1; a <= 3; ++a)
        for (std::size_t b = 1; b <= 3; ++b) {
            const auto sxs = census::all_spaces(a);
            const auto sys = census::all_spaces(b);
            const auto tables = census::all_tables(a, b);
            for (const auto& sx : sxs)
                for (const auto& sy : sys)
                    for (const auto& t : tables) {
                        const SpaceMap f(sx, sy, t);
                        require(profile(f).bornologous == profile(lift_map(f)).bornologous,
                                "a map is bornologous iff its lift is");
                    }
        }
}

void criterion_10_quotient_theorem() {
    for (std::size_t n = 1; n <= 4; ++n) {
        for (const auto& s : census::spaces_of_class(n, StructureClass::QuasiCoarse)) {
            for (std::size_t m = 1; m <= n; ++m) {
                for (const auto& q : census::all_tables(n, m)) {
                    std::vector<bool> hit(m, false);
                    for (std::size_t v : q) hit[v] = true;
                    bool onto = true;
                    for (bool h : hit) onto = onto && h;
                    if (!onto) continue;
                    Entourage img(census::numbered_carrier(m));
                    for (auto [i, j] : s.max_ent().pairs()) img.set(q[i], q[j]);
                    require(img.is_transitive() == is_weakly_soft(s, q),
                            "image transitivity is weak softness");
                }
            }
        }
    }
}

void criterion_11_graphic_realization() {
    for (std::size_t n = 1; n <= 4; ++n)
        for (const auto& s : census::spaces_of_class(n, StructureClass::QuasiCoarse)) {
            if (!connectivity(s).connected) continue;
            require(graphic_structure(graphic_realization(s)).space == s,
                    "graphic realization round-trips");
        }
}

void criterion_12_cli_determinism() {
    const std::string bin = ENT_CLI_PATH;
    const std::string data = ENT_DATA_DIR;
    const std::vector<std::string> commands = {
        bin + " classify " + data + "/e2.ent",
        bin + " classify --json " + data + "/e2.ent",
        bin + " functor sym " + data + "/e2.ent",
        bin + " functor wsemi --json " + data + "/e2.ent",
        bin + " map " + data + "/incl.ent",
        bin + " equiv " + data + "/incl.ent",
        bin + " quotient --partition \"0|1 2\" --class quasi-coarse " + data + "/e2.ent",
        bin + " probe --family quasi_sym_Z --window -20:20 --radius 3 --smax 10",
        bin + " probe --family cubic_skew --window -10:10 --radius 1 --smax 100 --json",
        bin + " probe --family drop_quasi --b3-windows 0:2,0:4,0:6",
        bin + " word-metric --gens 1 --side left " + data + "/z4.mag",
        bin + " word-metric --gens 1 --side left --dot --json " + data + "/z4.mag",
        bin + " hyper " + data + "/e2.ent",
        bin + " hyper --dot --exp " + data + "/e2.ent",
    };
    for (const auto& cmd : commands) {
        const cli::Result first = cli::run(cmd);
        const cli::Result second = cli::run(cmd);
        require(first.exit_code == 0, "command succeeds: " + cmd);
        require(first.exit_code == second.exit_code && first.out == second.out,
                "byte-identical output across runs: " + cmd);
        require(!first.out.empty(), "command produces output: " + cmd);
    }
}

} // namespace

int main() {
    run_criterion(1, "worked boundedness example reproduces", 1.0, criterion_1_bound_example);
    run_criterion(2, "exhaustive 3-point lattice census", 1000.0, criterion_2_census);
    run_criterion(3, "functor extremality against all candidates", 5000.0, criterion_3_extremality);
    run_criterion(4, "morphism implication suite", 60000.0, criterion_4_morphism_implications);
    run_criterion(5, "Sym-coarse equivalence vs definition-level search", 300000.0,
                  criterion_5_sym_equivalence);
    run_criterion(6, "infinite-example probes", 1000.0, criterion_6_probes);
    run_criterion(7, "metrization round-trip", 5000.0, criterion_7_metrization);
    run_criterion(8, "monoid geometry", 1000.0, criterion_8_monoid_geometry);
    run_criterion(9, "hyperstructure suite", 60000.0, criterion_9_hyper);
    run_criterion(10, "quotient weak-softness theorem", 300000.0, criterion_10_quotient_theorem);
    run_criterion(11, "graphic realization round-trip", 10000.0, criterion_11_graphic_realization);
    run_criterion(12, "CLI determinism", 60000.0, criterion_12_cli_determinism);

    if (failures == 0) {
        std::printf("all %d acceptance criteria passed\n", 12);
        return 0;
    }
    std::printf("%d acceptance criteria FAILED\n", failures);
    return 1;
}
