#include <doctest.h>

#include "ent/space_map.hpp"
#include "support/census.hpp"

using namespace ent;

namespace {

Carrier abc() { return Carrier({"0", "1", "2"}); }

Space e1() {
    return from_generators(abc(), {Entourage::from_pairs(abc(), {{"0", "1"}, {"0", "2"}, {"1", "0"}, {"2", "0"}})});
}

Space e2() {
    return from_generators(abc(), {Entourage::from_pairs(abc(), {{"0", "1"}, {"0", "2"}})});
}

Space one_point() { return Space::discrete(Carrier({"pt"})); }

} // namespace

TEST_CASE("profile: the identity from the quasi-coarse to the semi-coarse example") {
    SpaceMap id(e2(), e1(), {0, 1, 2});
    MapProfile p = profile(id);
    CHECK(p.bornologous); // M2 sits inside M1
    CHECK_FALSE(p.effectively_proper); // (1,0) pulls back outside M2
}

TEST_CASE("profile: constant maps are bornologous") {
    for (const auto& dst : census::all_spaces(3)) {
        SpaceMap c = SpaceMap::constant(e1(), dst, "1");
        CHECK(profile(c).bornologous);
    }
}

TEST_CASE("profile: structure-matching bijections are asymorphisms") {
    SpaceMap id = SpaceMap::identity(e2());
    MapProfile p = profile(id);
    CHECK(p.asymorphism);
    CHECK(p.bornologous);
    CHECK(p.effectively_proper);
    CHECK(p.ls_injective);
    CHECK(p.ls_surjective);
}

TEST_CASE("profile flag implications hold for every endomap of 2-point structures") {
    const auto spaces = census::all_spaces(2);
    const auto tables = census::all_tables(2, 2);
    for (const auto& sx : spaces)
        for (const auto& sy : spaces)
            for (const auto& t : tables) {
                MapProfile p = profile(SpaceMap(sx, sy, t));
                if (p.effectively_proper) REQUIRE(p.ubc);
                if (p.ubc) REQUIRE(p.weakly_ubc);
                if (p.effectively_proper) REQUIRE(p.ls_injective);
                if (p.asymorphism) {
                    REQUIRE(p.bornologous);
                    REQUIRE(p.effectively_proper);
                }
            }
}

TEST_CASE("on quasi-coarse sources the copreserving ladder collapses (2-point exhaustive)") {
    const auto sources = census::spaces_of_class(2, StructureClass::QuasiCoarse);
    const auto targets = census::all_spaces(2);
    const auto tables = census::all_tables(2, 2);
    for (const auto& sx : sources)
        for (const auto& sy : targets)
            for (const auto& t : tables) {
                MapProfile p = profile(SpaceMap(sx, sy, t));
                const bool a = p.ls_injective && p.weakly_ubc;
                const bool b = p.ls_injective && p.ubc;
                const bool c = p.effectively_proper;
                REQUIRE(a == b);
                REQUIRE(b == c);
            }
}

TEST_CASE("uniformly bounded copreserving surjections transfer bounded geometry") {
    for (std::size_t ny : {1u, 2u}) {
        const auto sources = census::all_spaces(3);
        const auto targets = census::all_spaces(ny);
        const auto tables = census::all_tables(3, ny);
        for (const auto& sx : sources)
            for (const auto& sy : targets)
                for (const auto& t : tables) {
                    SpaceMap f(sx, sy, t);
                    if (!f.is_surjective()) continue;
                    if (!profile(f).ubc) continue;
                    REQUIRE(geometry(sy).phi <= geometry(sx).phi);
                }
    }
}

TEST_CASE("are_close: reflexivity, indiscrete target, plain-but-not-sym example") {
    SpaceMap f = SpaceMap::identity(e2());
    CHECK(are_close(f, f, CloseMode::Plain));
    CHECK(are_close(f, f, CloseMode::SymFunctor));

    Space ind = Space::indiscrete(abc());
    SpaceMap g(e2(), ind, {0, 1, 2});
    SpaceMap h(e2(), ind, {2, 0, 1});
    CHECK(are_close(g, h, CloseMode::Plain));
    CHECK(are_close(g, h, CloseMode::SymFunctor));

    // On the two-point space generated by (0,1): the identity and the
    // constant-at-1 map are plainly close, but not after Sym.
    Carrier c01({"0", "1"});
    Space s = from_generators(c01, {Entourage::from_pairs(c01, {{"0", "1"}})});
    SpaceMap id = SpaceMap::identity(s);
    SpaceMap const1 = SpaceMap::constant(s, s, "1");
    CHECK(are_close(id, const1, CloseMode::Plain));
    CHECK_FALSE(are_close(id, const1, CloseMode::SymFunctor));

    // The swap lands outside the maximum entirely, in both modes.
    SpaceMap swap(s, s, {1, 0});
    CHECK_FALSE(are_close(id, swap, CloseMode::Plain));
    CHECK_FALSE(are_close(id, swap, CloseMode::SymFunctor));

    CHECK_THROWS_AS(are_close(id, g, CloseMode::Plain), SemanticError);
}

TEST_CASE("sym_coarse_equivalence: bounded space collapses to a point") {
    Carrier c01({"0", "1"});
    Space ind = Space::indiscrete(c01);
    SpaceMap collapse = SpaceMap::constant(ind, one_point(), "pt");
    SymEquivalenceResult r = sym_coarse_equivalence(collapse);
    CHECK(r.yes);
    REQUIRE(r.inverse.has_value());
    CHECK(are_close(compose(collapse, *r.inverse), SpaceMap::identity(one_point()),
                    CloseMode::SymFunctor));
    CHECK(are_close(compose(*r.inverse, collapse), SpaceMap::identity(ind),
                    CloseMode::SymFunctor));
}

TEST_CASE("sym_coarse_equivalence: discrete two points do not collapse") {
    Carrier c01({"0", "1"});
    SpaceMap collapse = SpaceMap::constant(Space::discrete(c01), one_point(), "pt");
    SymEquivalenceResult r = sym_coarse_equivalence(collapse);
    CHECK_FALSE(r.yes);
    CHECK(r.failed_criterion == "effectively proper");
}

TEST_CASE("sym_coarse_equivalence refuses non-quasi-coarse inputs") {
    SpaceMap id = SpaceMap::identity(e1()); // semi-coarse, not quasi-coarse
    CHECK_THROWS_WITH_AS(sym_coarse_equivalence(id),
                         "sym_coarse_equivalence: source is not quasi-coarse", SemanticError);
}

TEST_CASE("inclusions of large subspaces are Sym-coarse equivalences (3-point exhaustive)") {
    const std::vector<std::vector<std::string>> subsets = {
        {"0"}, {"1"}, {"2"}, {"0", "1"}, {"0", "2"}, {"1", "2"}, {"0", "1", "2"}};
    for (const auto& s : census::spaces_of_class(3, StructureClass::QuasiCoarse)) {
        const Entourage sym = intersect(s.max_ent(), inverse(s.max_ent()));
        for (const auto& sub : subsets) {
            PointSet y(s.carrier(), sub);
            if (!image(sym, y).is_full()) continue; // not large in Sym
            Space restricted = restrict_to(s, sub);
            std::vector<std::size_t> table;
            for (const auto& l : sub) table.push_back(s.carrier().index(l));
            SymEquivalenceResult r = sym_coarse_equivalence(SpaceMap(restricted, s, table));
            REQUIRE(r.yes);
        }
    }
}

TEST_CASE("equivalence_oracle: identities, bounded collapse, discrete non-collapse") {
    CHECK(equivalence_oracle(e2(), e2()));
    Carrier c01({"0", "1"});
    CHECK(equivalence_oracle(Space::indiscrete(c01), one_point()));
    CHECK_FALSE(equivalence_oracle(Space::discrete(c01), one_point()));
}

TEST_CASE("equivalence_oracle guards its enumeration budget") {
    std::vector<std::string> labels;
    for (int i = 0; i < 12; ++i) labels.push_back(std::to_string(i));
    Carrier big(labels);
    CHECK_THROWS_AS(equivalence_oracle(Space::discrete(big), Space::discrete(big)), CapError);
}

TEST_CASE("criterion (d) agrees with the definition-level inverse search per map (2-point)") {
    const auto spaces = census::spaces_of_class(2, StructureClass::QuasiCoarse);
    const auto tables = census::all_tables(2, 2);
    for (const auto& sx : spaces)
        for (const auto& sy : spaces)
            for (const auto& t : tables) {
                SpaceMap f(sx, sy, t);
                const bool flags = sym_coarse_equivalence(f).yes;

                bool definition = false;
                if (profile(f).bornologous) {
                    for (const auto& gt : tables) {
                        SpaceMap g(sy, sx, gt);
                        if (!profile(g).bornologous) continue;
                        if (are_close(compose(g, f), SpaceMap::identity(sx), CloseMode::SymFunctor) &&
                            are_close(compose(f, g), SpaceMap::identity(sy), CloseMode::SymFunctor)) {
                            definition = true;
                            break;
                        }
                    }
                }
                REQUIRE(flags == definition);
            }
}
