#include <gpd/betti.hpp>
#include <gpd/complex.hpp>
#include <gpd/fixtures.hpp>
#include <gpd/hilbert.hpp>

#include <doctest.h>

#include <cmath>
#include <vector>

using namespace gpd;

namespace {

Graphing singleton_graphing(const FiniteGroupoid& g, const std::vector<std::string>& labels) {
    Graphing out;
    for (const std::string& l : labels) out.push_back({g.arrow_by_label(l)});
    return out;
}

GComplex default_complex(const FiniteGroupoid& g) {
    Graphing graphing;
    for (int a : minimal_generating_set(g)) graphing.push_back({a});
    return build_graphing_complex(g, graphing);
}

// independent route to the zeroth number: one term per atom orbit, the
// weight of one atom divided by the order of its isotropy group
Rat beta0_orbit_formula(const FiniteGroupoid& g) {
    Rat total = 0;
    for (const std::vector<int>& block : invariant_partition(g)) {
        int x = block[0];
        total += g.atom_weights[x] / Rat(static_cast<int>(isotropy(g, x).arrows.size()));
    }
    return total;
}

}  // namespace

TEST_CASE("zeroth numbers of the fixtures") {
    CHECK(betti_groupoid(fixture_triv2().g).beta0 == Rat(1));
    CHECK(betti_groupoid(fixture_r2().g).beta0 == Rat(1) / 2);
    CHECK(betti_groupoid(fixture_r3().g).beta0 == Rat(1) / 3);
    CHECK(betti_groupoid(fixture_z2pt().g).beta0 == Rat(1) / 2);
    CHECK(betti_groupoid(fixture_swap().g).beta0 == Rat(1) / 2);
    CHECK(betti_groupoid(fixture_trivaction().g).beta0 == Rat(1) / 2);
}

TEST_CASE("zeroth number matches the orbit formula on every fixture") {
    for (const std::string& name : fixture_names()) {
        CAPTURE(name);
        const FiniteGroupoid g = fixture_by_name(name).g;
        CHECK(betti_groupoid(g).beta0 == beta0_orbit_formula(g));
    }
}

TEST_CASE("first numbers vanish exactly when the fibers are trees") {
    for (const std::string& name : fixture_names()) {
        CAPTURE(name);
        GroupoidBetti b = betti_groupoid(fixture_by_name(name).g);
        CHECK(b.exact1);
        CHECK(b.beta1_upper == Rat(0));
    }
}

TEST_CASE("betti numbers agree with the kernel minus image route") {
    const FiniteGroupoid g = fixture_r3().g;
    GComplex cx = eg_truncation(g, 1, 3, 3);
    for (int n = 0; n <= cx.dimension(); ++n) {
        Rat hodge = betti_complex(cx, n);
        Rat ker = dim_ker_boundary(cx, n);
        Rat im = cx.has_level(n + 1) ? dim_im_boundary(cx, n + 1) : Rat(0);
        CHECK(hodge == ker - im);
    }
}

TEST_CASE("laplacian is self adjoint for the chain inner product") {
    const FiniteGroupoid g = fixture_r3().g;
    GComplex cx = default_complex(g);
    for (int n = 0; n <= cx.dimension(); ++n) {
        ChainOperator d = laplacian(cx, n);
        for (int i = 0; i < d.m.nr; ++i)
            for (int j = 0; j < d.m.nc; ++j)
                CHECK(d.m(i, j) * d.w[j] == d.m(j, i) * d.w[i]);
    }
}

TEST_CASE("betti of a redundant generating set sees the cycle") {
    const FiniteGroupoid g = fixture_r3().g;
    GComplex cx = build_graphing_complex(g, singleton_graphing(g, {"ab", "ac", "bc"}));
    CHECK(betti_complex(cx, 0) == Rat(1) / 3);
    // one independent cycle of mass one third per fiber
    CHECK(betti_complex(cx, 1) == Rat(1) / 3);
}

TEST_CASE("euler characteristic equals its harmonic form") {
    for (const std::string& name : fixture_names()) {
        CAPTURE(name);
        const FiniteGroupoid g = fixture_by_name(name).g;
        GComplex cx = default_complex(g);
        EulerReport e = euler(cx);
        CHECK(e.equal);
    }
    const FiniteGroupoid g = fixture_r3().g;
    GComplex cyc = build_graphing_complex(g, singleton_graphing(g, {"ab", "ac", "bc"}));
    EulerReport e = euler(cyc);
    CHECK(e.equal);
    CHECK(e.chi == Rat(0));
}

TEST_CASE("morse inequalities hold with the image gap") {
    const FiniteGroupoid g = fixture_r3().g;
    for (const GComplex& cx :
         {default_complex(g), build_graphing_complex(g, singleton_graphing(g, {"ab", "ac", "bc"})),
          eg_truncation(g, 1, 3, 3)}) {
        for (int n = 0; n <= cx.dimension(); ++n) {
            MorseReport m = morse_check(cx, n);
            CHECK(m.holds);
            CHECK(m.gap >= 0);
            CHECK(m.alpha_side - m.betti_side == m.gap);
            Rat im = cx.has_level(n + 1) ? dim_im_boundary(cx, n + 1) : Rat(0);
            CHECK(m.gap == im);
        }
    }
}

TEST_CASE("minimal generating sets of the fixtures") {
    const FiniteGroupoid r3 = fixture_r3().g;
    ArrowSet s = minimal_generating_set(r3);
    CHECK(s.size() == 2);
    CHECK(generates(r3, s));
    CHECK(minimal_generating_set(fixture_triv2().g).empty());
    const FiniteGroupoid z = fixture_z2pt().g;
    ArrowSet zs = minimal_generating_set(z);
    CHECK(zs.size() == 1);
}

TEST_CASE("nabla of a complex into itself returns its betti number") {
    const FiniteGroupoid g = fixture_r2().g;
    GComplex cx = eg_truncation(g, 1, 3, 2);
    CHECK(is_subcomplex(cx, cx));
    for (int n = 0; n <= cx.dimension(); ++n)
        CHECK(nabla(cx, cx, n) == betti_complex(cx, n));
}

TEST_CASE("nabla rejects non subcomplexes") {
    const FiniteGroupoid g = fixture_r3().g;
    GComplex a = build_graphing_complex(g, singleton_graphing(g, {"ab"}));
    GComplex b = build_graphing_complex(g, singleton_graphing(g, {"ac"}));
    CHECK(!is_subcomplex(a, b));
    CHECK_THROWS_AS(nabla(a, b, 0), std::invalid_argument);
}

TEST_CASE("exhaustion of the two point relation converges to one half") {
    const FiniteGroupoid g = fixture_r2().g;
    GComplex c1 = eg_truncation(g, 1, 1, 2);
    GComplex c2 = eg_truncation(g, 1, 2, 2);
    GComplex c3 = eg_truncation(g, 1, 3, 2);
    CHECK(is_subcomplex(c1, c2));
    CHECK(is_subcomplex(c2, c3));
    ExhaustionTable t = betti_via_exhaustion({&c1, &c2, &c3}, 0);
    REQUIRE(t.value.size() == 3);
    // increasing in the inner index, decreasing in the outer one
    CHECK(t.value[0][0] >= t.value[0][1]);
    CHECK(t.value[1][1] >= t.value[1][2]);
    CHECK(t.value[0][1] <= t.value[1][1]);
    CHECK(t.value[1][2] <= t.value[2][2]);
    CHECK(t.limit == Rat(1) / 2);
    CHECK(t.limit == betti_groupoid(g).beta0);
}

TEST_CASE("float nullity of the laplacian matches the exact kernel") {
    const FiniteGroupoid g = fixture_r3().g;
    for (const GComplex& cx :
         {default_complex(g), eg_truncation(g, 1, 3, 3)}) {
        for (int n = 0; n <= cx.dimension(); ++n) {
            FloatCheck fc = laplacian_float_check(cx, n);
            CHECK(fc.agree);
        }
    }
}

TEST_CASE("boundary norms respect the local simplex bound") {
    const FiniteGroupoid g = fixture_r3().g;
    GComplex cx = eg_truncation(g, 1, 3, 3);
    ComplexReport rep = validate_complex(cx);
    REQUIRE(rep.valid);
    for (int n = 1; n <= cx.dimension(); ++n) {
        double norm = boundary_norm_float(cx, n);
        CHECK(norm <= n * std::sqrt(static_cast<double>(rep.ulb_bound)) + 1e-9);
    }
}

TEST_CASE("harmonic kernel dimensions are decomposition independent") {
    const FiniteGroupoid g = fixture_r2().g;
    GComplex cx = eg_truncation(g, 1, 2, 2);
    int n = 0;
    ChainOperator d = laplacian(cx, n);
    Mat<Rat> ker = kernel_basis(d.m);
    LevelSpace lv = level_space(cx, n);
    Mat<Rat> emb = chain_embedding(cx, n);
    InvariantSubspace v = {&lv.space, emb * ker};
    CHECK(vn_dimension_with_sections(v, quasi_periodic_decomposition(lv.space)) ==
          vn_dimension_with_sections(v, singleton_decomposition(lv.space)));
    CHECK(vn_dimension(v) == betti_complex(cx, n));
}
