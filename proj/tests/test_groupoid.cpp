#include <gpd/fixtures.hpp>
#include <gpd/groupoid.hpp>

#include <doctest.h>

#include <set>
#include <vector>

using namespace gpd;

TEST_CASE("every fixture satisfies the groupoid axioms") {
    for (const std::string& name : fixture_names()) {
        CAPTURE(name);
        GroupoidDocument doc = fixture_by_name(name);
        ValidationReport v = validate(doc.g);
        for (const std::string& s : v.violations) CAPTURE(s);
        CHECK(v.valid);
    }
}

TEST_CASE("principality of the fixtures") {
    CHECK(is_principal(fixture_triv2().g));
    CHECK(is_principal(fixture_r2().g));
    CHECK(is_principal(fixture_r3().g));
    CHECK(is_principal(fixture_swap().g));
    CHECK(!is_principal(fixture_z2pt().g));
    CHECK(!is_principal(fixture_trivaction().g));
}

TEST_CASE("composition satisfies associativity and inverse laws") {
    for (const std::string& name : fixture_names()) {
        CAPTURE(name);
        const FiniteGroupoid g = fixture_by_name(name).g;
        for (int a = 0; a < g.arrows(); ++a) {
            CHECK(g.comp[a][g.inv[a]] == g.unit_arrow(g.rng[a]));
            CHECK(g.comp[g.inv[a]][a] == g.unit_arrow(g.src[a]));
            for (int b = 0; b < g.arrows(); ++b) {
                if (!g.composable(a, b)) {
                    CHECK(g.comp[a][b] == -1);
                    continue;
                }
                int ab = g.comp[a][b];
                CHECK(g.src[ab] == g.src[b]);
                CHECK(g.rng[ab] == g.rng[a]);
                for (int c = 0; c < g.arrows(); ++c) {
                    if (!g.composable(b, c)) continue;
                    CHECK(g.comp[ab][c] == g.comp[a][g.comp[b][c]]);
                }
            }
        }
    }
}

TEST_CASE("validate rejects a mass mismatch") {
    GroupoidData data;
    data.atoms = {{"x", Rat(1) / 3}, {"y", Rat(1) / 3}};
    FiniteGroupoid g = assemble(data);
    ValidationReport v = validate(g);
    CHECK(!v.valid);
}

TEST_CASE("validate rejects weight transport violations") {
    GroupoidData data;
    data.atoms = {{"x", Rat(1) / 3}, {"y", Rat(2) / 3}};
    data.arrows = {{"f", "x", "y"}, {"fi", "y", "x"}};
    data.inverses = {{"f", "fi"}};
    FiniteGroupoid g = assemble(data);
    ValidationReport v = validate(g);
    CHECK(!v.valid);
}

TEST_CASE("mu assigns source mass to arrow sets") {
    const FiniteGroupoid g = fixture_r3().g;
    CHECK(mu_g(g, g.unit_set()) == Rat(1));
    CHECK(mu_g(g, g.nonunit_arrows()) == Rat(2));
    int ab = g.arrow_by_label("ab");
    REQUIRE(ab >= 0);
    CHECK(mu_g(g, {ab}) == Rat(1) / 3);
}

TEST_CASE("one sheeted sets and their partial bijections") {
    const FiniteGroupoid g = fixture_r3().g;
    int ab = g.arrow_by_label("ab");
    int bc = g.arrow_by_label("bc");
    int ba = g.arrow_by_label("ba");
    CHECK(is_one_sheeted(g, {ab, bc}));
    // ab and ba share neither source nor range, yet ba starts at b like bc
    CHECK(is_one_sheeted(g, {ab, ba}));
    CHECK(!is_one_sheeted(g, {ba, bc}));
    std::map<int, int> f = partial_bijection(g, {ab, bc});
    CHECK(f.at(g.src[ab]) == g.rng[ab]);
    CHECK(f.at(g.src[bc]) == g.rng[bc]);
}

TEST_CASE("one sheeted decomposition partitions the arrows") {
    for (const std::string& name : fixture_names()) {
        CAPTURE(name);
        const FiniteGroupoid g = fixture_by_name(name).g;
        std::vector<ArrowSet> pieces = one_sheeted_decomposition(g);
        std::set<int> seen;
        for (const ArrowSet& p : pieces) {
            CHECK(is_one_sheeted(g, p));
            for (int a : p) {
                CHECK(!seen.count(a));
                seen.insert(a);
                // a piece never holds an arrow together with its distinct inverse
                if (g.inv[a] != a) CHECK(!set_contains(p, g.inv[a]));
            }
        }
        CHECK(static_cast<int>(seen.size()) == g.arrows());
        CHECK(pieces[0] == g.unit_set());
    }
}

TEST_CASE("arrow closure is closed and contains units") {
    const FiniteGroupoid g = fixture_r3().g;
    int ab = g.arrow_by_label("ab");
    ArrowSet c = arrow_closure(g, {ab});
    // closure of one arrow: units, the arrow, its inverse
    CHECK(c == normalized({0, 1, 2, ab, g.inv[ab]}));
    for (int x : c) {
        CHECK(set_contains(c, g.inv[x]));
        for (int y : c)
            if (g.composable(x, y)) CHECK(set_contains(c, g.comp[x][y]));
    }
}

TEST_CASE("generation of the full relation needs a spanning set") {
    const FiniteGroupoid g = fixture_r3().g;
    int ab = g.arrow_by_label("ab");
    int ac = g.arrow_by_label("ac");
    int bc = g.arrow_by_label("bc");
    CHECK(generates(g, {ab, ac}));
    CHECK(generates(g, {ab, bc}));
    CHECK(!generates(g, {ab}));
    CHECK(!generates(g, {}));
}

TEST_CASE("generated subgroupoid of a spanning set is the whole groupoid") {
    const FiniteGroupoid g = fixture_r3().g;
    int ab = g.arrow_by_label("ab");
    int ac = g.arrow_by_label("ac");
    FiniteGroupoid h = generated_subgroupoid(g, {ab, ac});
    CHECK(h.arrows() == g.arrows());
    CHECK(h.atoms() == g.atoms());
    CHECK(validate(h).valid);
}

TEST_CASE("generated subgroupoid of one arrow is a partial relation") {
    const FiniteGroupoid g = fixture_r3().g;
    int ab = g.arrow_by_label("ab");
    FiniteGroupoid h = generated_subgroupoid(g, {ab});
    CHECK(h.atoms() == 3);
    CHECK(h.arrows() == 5);
    ValidationReport v = validate(h);
    CHECK(v.valid);
    CHECK(v.principal);
}

TEST_CASE("restriction keeps ambient weights and composes") {
    const FiniteGroupoid g = fixture_r3().g;
    int a = g.atom_by_label("a");
    int b = g.atom_by_label("b");
    FiniteGroupoid h = restriction(g, {a, b});
    CHECK(h.atoms() == 2);
    CHECK(h.arrows() == 4);
    CHECK(h.declared_mass == Rat(2) / 3);
    CHECK(validate(h).valid);
}

TEST_CASE("orbit relation collapses isotropy") {
    const FiniteGroupoid z = fixture_z2pt().g;
    FiniteGroupoid r = orbit_relation(z);
    CHECK(r.atoms() == 1);
    CHECK(r.arrows() == 1);
    CHECK(is_principal(r));

    const FiniteGroupoid s = fixture_swap().g;
    FiniteGroupoid rs = orbit_relation(s);
    CHECK(rs.arrows() == s.arrows());
    CHECK(is_principal(rs));
    CHECK(validate(rs).valid);
}

TEST_CASE("invariant partition finds the atom orbits") {
    CHECK(invariant_partition(fixture_r3().g) ==
          std::vector<std::vector<int>>{{0, 1, 2}});
    CHECK(invariant_partition(fixture_triv2().g) ==
          std::vector<std::vector<int>>{{0}, {1}});
    CHECK(invariant_partition(fixture_trivaction().g) ==
          std::vector<std::vector<int>>{{0}, {1}});
}

TEST_CASE("transformation groupoid of the swap action") {
    // Z/2 = {e, s} acting on two atoms by exchange
    std::vector<std::vector<int>> table = {{0, 1}, {1, 0}};
    std::vector<std::vector<int>> action = {{0, 1}, {1, 0}};
    FiniteGroupoid g = transformation_groupoid(
        table, {"e", "s"}, action, {{"x", Rat(1) / 2}, {"y", Rat(1) / 2}});
    CHECK(g == fixture_swap().g);
    CHECK(validate(g).valid);
    CHECK(is_principal(g));
}

TEST_CASE("isotropy groups of the fixtures") {
    const FiniteGroupoid z = fixture_z2pt().g;
    IsotropyGroup iso = isotropy(z, 0);
    CHECK(iso.arrows.size() == 2);
    CHECK(iso.table[1][1] == 0);

    const FiniteGroupoid r = fixture_r3().g;
    CHECK(isotropy(r, 0).arrows.size() == 1);
}

TEST_CASE("assemble rejects structural nonsense") {
    GroupoidData missing_inverse;
    missing_inverse.atoms = {{"x", Rat(1) / 2}, {"y", Rat(1) / 2}};
    missing_inverse.arrows = {{"f", "x", "y"}};
    CHECK_THROWS_AS(assemble(missing_inverse), std::invalid_argument);

    GroupoidData unknown_atom;
    unknown_atom.atoms = {{"x", Rat(1)}};
    unknown_atom.arrows = {{"f", "x", "z"}};
    CHECK_THROWS_AS(assemble(unknown_atom), std::invalid_argument);
}
