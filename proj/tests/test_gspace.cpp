#include <gpd/fixtures.hpp>
#include <gpd/gspace.hpp>

#include <doctest.h>

#include <algorithm>
#include <set>
#include <vector>

using namespace gpd;

namespace {

// independent re-check of a section decomposition: sections are anchor
// injective, every point is reached exactly once as arrow . representative
void check_decomposition(const GSpace& u, const SectionDecomposition& d) {
    std::vector<int> hit(u.points(), 0);
    for (const auto& sec : d.sections) {
        std::set<int> anchors;
        REQUIRE(sec.points.size() == sec.atoms.size());
        for (size_t i = 0; i < sec.points.size(); ++i) {
            CHECK(u.anchor[sec.points[i]] == sec.atoms[i]);
            CHECK(!anchors.count(sec.atoms[i]));
            anchors.insert(sec.atoms[i]);
        }
    }
    for (int p = 0; p < u.points(); ++p) {
        int r = d.rep[p];
        int a = d.via[p];
        CHECK(u.apply(a, r) == p);
        int s = d.to_section[p];
        REQUIRE(s >= 0);
        REQUIRE(s < static_cast<int>(d.sections.size()));
        CHECK(std::count(d.sections[s].points.begin(), d.sections[s].points.end(), r) == 1);
        ++hit[p];
    }
    for (int p = 0; p < u.points(); ++p) CHECK(hit[p] == 1);
}

}  // namespace

TEST_CASE("translation space is a valid free G-space") {
    for (const std::string& name : fixture_names()) {
        CAPTURE(name);
        const FiniteGroupoid g = fixture_by_name(name).g;
        GSpace u = translation_space(g);
        CHECK(validate_gspace(u).empty());
        CHECK(u.points() == g.arrows());
        FundamentalDomain fd = check_quasi_periodic(u);
        // one orbit per atom, represented by measure equal to total mass
        CHECK(fd.measure == g.declared_mass);
        CHECK(static_cast<int>(gspace_orbits(u).size()) == g.atoms());
    }
}

TEST_CASE("model space of an atom subset") {
    const FiniteGroupoid g = fixture_r3().g;
    int a = g.atom_by_label("a");
    GSpace u = model_space(g, {a});
    CHECK(validate_gspace(u).empty());
    CHECK(u.points() == 3);
    CHECK(check_quasi_periodic(u).measure == Rat(1) / 3);
    CHECK(gspace_orbits(u).size() == 1);
}

TEST_CASE("model space of all atoms is the translation space") {
    const FiniteGroupoid g = fixture_r2().g;
    std::vector<int> all = {0, 1};
    GSpace u = model_space(g, all);
    GSpace t = translation_space(g);
    CHECK(u.points() == t.points());
    CHECK(check_quasi_periodic(u).measure == check_quasi_periodic(t).measure);
}

TEST_CASE("isotropy breaks freeness") {
    const FiniteGroupoid z = fixture_z2pt().g;
    GSpace u;
    u.g = &z;
    u.anchor = {0};
    u.act = {{0}, {0}};
    u.point_labels = {"pt"};
    CHECK(validate_gspace(u).empty());
    CHECK_THROWS_AS(check_quasi_periodic(u), NotFreeError);
}

TEST_CASE("validate rejects anchor transport violations") {
    const FiniteGroupoid g = fixture_r2().g;
    GSpace u = translation_space(g);
    // the point of arrow xy is anchored at its range y; move it to x
    u.anchor[g.arrow_by_label("xy")] = g.atom_by_label("x");
    CHECK(!validate_gspace(u).empty());
}

TEST_CASE("quasi periodic decomposition covers each point once") {
    for (const std::string& name : fixture_names()) {
        CAPTURE(name);
        const FiniteGroupoid g = fixture_by_name(name).g;
        GSpace u = translation_space(g);
        check_decomposition(u, quasi_periodic_decomposition(u));
        check_decomposition(u, singleton_decomposition(u));
    }
}

TEST_CASE("the two decompositions pick different representatives") {
    const FiniteGroupoid g = fixture_r3().g;
    GSpace u = translation_space(g);
    SectionDecomposition lo = quasi_periodic_decomposition(u);
    SectionDecomposition hi = singleton_decomposition(u);
    for (const auto& sec : hi.sections) CHECK(sec.points.size() == 1);
    std::set<int> lo_reps(lo.rep.begin(), lo.rep.end());
    std::set<int> hi_reps(hi.rep.begin(), hi.rep.end());
    CHECK(lo_reps != hi_reps);
}

TEST_CASE("disjoint union adds points and measures") {
    const FiniteGroupoid g = fixture_r2().g;
    GSpace t = translation_space(g);
    GSpace m = model_space(g, {0});
    GSpace u = disjoint_union(t, m);
    CHECK(validate_gspace(u).empty());
    CHECK(u.points() == t.points() + m.points());
    CHECK(check_quasi_periodic(u).measure ==
          check_quasi_periodic(t).measure + check_quasi_periodic(m).measure);
}

TEST_CASE("measure sums anchor weights") {
    const FiniteGroupoid g = fixture_r3().g;
    GSpace u = translation_space(g);
    std::vector<int> all(u.points());
    for (int p = 0; p < u.points(); ++p) all[p] = p;
    CHECK(u.measure(all) == Rat(3));
    CHECK(u.measure({}) == Rat(0));
}
