#include <gpd/complex.hpp>
#include <gpd/fixtures.hpp>

#include <doctest.h>

#include <algorithm>
#include <set>
#include <vector>

using namespace gpd;

namespace {

Graphing singleton_graphing(const FiniteGroupoid& g, const std::vector<std::string>& labels) {
    Graphing out;
    for (const std::string& l : labels) out.push_back({g.arrow_by_label(l)});
    return out;
}

// boundary evaluated on ordered tuples from first principles: the value
// coordinate of a chain on face f is the alternating sum over positions
Mat<Rat> raw_boundary(const GComplex& cx, int n) {
    LevelSpace lo = level_space(cx, n - 1);
    ChainSpace cn = chain_space(cx, n);
    ChainSpace cm = chain_space(cx, n - 1);
    Mat<Rat> m(cm.size(), cn.size());
    for (int j = 0; j < cn.size(); ++j) {
        const std::vector<int>& t = cn.reps[j];
        for (size_t f = 0; f <= static_cast<size_t>(n); ++f) {
            std::vector<int> face = t;
            face.erase(face.begin() + static_cast<int>(f));
            auto [i, sign] = rep_and_sign(cm, face);
            m(i, j) += (f % 2 == 0 ? Rat(1) : Rat(-1)) * Rat(sign);
        }
    }
    (void)lo;
    return m;
}

}  // namespace

TEST_CASE("graphing complex of a spanning star has tree fibers") {
    const FiniteGroupoid g = fixture_r3().g;
    GComplex cx = build_graphing_complex(g, singleton_graphing(g, {"ab", "ac"}));
    CHECK(validate_complex(cx).valid);
    CHECK(cx.dimension() == 1);
    // every atom fiber sees all three vertices and the two star edges
    FiberReport fr = fiber_report(cx);
    CHECK(fr.one_dimensional);
    CHECK(fr.all_connected);
    CHECK(fr.all_trees);
    for (const FiberInfo& fi : fr.per_atom) {
        CHECK(fi.vertex_count == 3);
        CHECK(fi.edge_count == 2);
    }
}

TEST_CASE("graphing complex with a redundant generator has a cycle") {
    const FiniteGroupoid g = fixture_r3().g;
    GComplex cx = build_graphing_complex(g, singleton_graphing(g, {"ab", "ac", "bc"}));
    CHECK(validate_complex(cx).valid);
    FiberReport fr = fiber_report(cx);
    CHECK(fr.all_connected);
    CHECK(!fr.all_trees);
    for (const FiberInfo& fi : fr.per_atom) CHECK(fi.edge_count == 3);
}

TEST_CASE("graphing complex rejects overlapping pieces") {
    const FiniteGroupoid g = fixture_r3().g;
    int ab = g.arrow_by_label("ab");
    CHECK_THROWS_AS(build_graphing_complex(g, {{ab}, {ab}}), std::invalid_argument);
}

TEST_CASE("disconnected graphing complex") {
    const FiniteGroupoid g = fixture_r3().g;
    GComplex cx = build_graphing_complex(g, singleton_graphing(g, {"ab"}));
    FiberReport fr = fiber_report(cx);
    CHECK(!fr.all_connected);
    CHECK(!fr.all_trees);
}

TEST_CASE("levels are permutation and face closed and invariant") {
    const FiniteGroupoid g = fixture_r2().g;
    for (int k = 1; k <= 3; ++k) {
        CAPTURE(k);
        GComplex cx = eg_truncation(g, 1, k, 2);
        ComplexReport rep = validate_complex(cx);
        for (const std::string& s : rep.violations) CAPTURE(s);
        CHECK(rep.valid);
    }
}

TEST_CASE("eg truncation of the two point relation grows with k") {
    const FiniteGroupoid g = fixture_r2().g;
    GComplex c1 = eg_truncation(g, 1, 1, 2);
    GComplex c2 = eg_truncation(g, 1, 2, 2);
    GComplex c3 = eg_truncation(g, 1, 3, 2);
    // one copy of each arrow, so four vertices throughout
    CHECK(c1.level_count(0) == 4);
    CHECK(c2.level_count(0) == 4);
    CHECK(c3.level_count(0) == 4);
    // piece 1 is the units: only degenerate quotients, no edges yet
    CHECK(c1.dimension() == 0);
    // pieces up to 2 bring the off-diagonal arrows and the first edges
    CHECK(c2.level_count(1) > 0);
    CHECK(c3.level_count(1) >= c2.level_count(1));
    for (int n = 1; n <= c3.dimension(); ++n) {
        // ordered tuple lists are closed under permutations, so sizes are
        // multiples of (n+1)!
        int fact = 1;
        for (int i = 2; i <= n + 1; ++i) fact *= i;
        CHECK(c3.level_count(n) % fact == 0);
    }
}

TEST_CASE("eg membership is monotone in k") {
    const FiniteGroupoid g = fixture_r3().g;
    GComplex c2 = eg_truncation(g, 1, 2, 2);
    GComplex c3 = eg_truncation(g, 1, 3, 2);
    for (int m = 0; m < c2.dimension(); ++m) {
        if (m >= c3.dimension()) break;
        std::set<std::vector<int>> big(c3.higher[m].begin(), c3.higher[m].end());
        for (const std::vector<int>& t : c2.higher[m]) CHECK(big.count(t));
    }
}

TEST_CASE("local simplex bound is reported and satisfied") {
    const FiniteGroupoid g = fixture_r2().g;
    GComplex cx = eg_truncation(g, 1, 3, 2);
    ComplexReport rep = validate_complex(cx);
    CHECK(rep.valid);
    // with one copy the bound sums to 1 + (k-1) + (k-1)(k-2) at k = 3
    CHECK(rep.ulb_bound <= 1 + 2 + 2);
}

TEST_CASE("chain space keeps one sorted representative per simplex") {
    const FiniteGroupoid g = fixture_r3().g;
    GComplex cx = build_graphing_complex(g, singleton_graphing(g, {"ab", "ac"}));
    ChainSpace c1 = chain_space(cx, 1);
    CHECK(2 * c1.size() == cx.level_count(1));
    for (const std::vector<int>& t : c1.reps) CHECK(std::is_sorted(t.begin(), t.end()));
    ChainSpace c0 = chain_space(cx, 0);
    CHECK(c0.size() == cx.level_count(0));
}

TEST_CASE("rep and sign track the sorting permutation parity") {
    const FiniteGroupoid g = fixture_r3().g;
    GComplex cx = build_graphing_complex(g, singleton_graphing(g, {"ab", "ac"}));
    ChainSpace c1 = chain_space(cx, 1);
    const std::vector<int>& t = c1.reps[0];
    auto [i0, s0] = rep_and_sign(c1, t);
    CHECK(i0 == 0);
    CHECK(s0 == 1);
    auto [i1, s1] = rep_and_sign(c1, {t[1], t[0]});
    CHECK(i1 == 0);
    CHECK(s1 == -1);
}

TEST_CASE("boundary of a boundary vanishes") {
    const FiniteGroupoid g = fixture_r3().g;
    GComplex cx = eg_truncation(g, 1, 3, 3);
    for (int n = 2; n <= cx.dimension(); ++n) {
        Mat<Rat> d1 = boundary_matrix(cx, n - 1);
        Mat<Rat> d2 = boundary_matrix(cx, n);
        CHECK((d1 * d2).is_zero());
    }
}

TEST_CASE("boundary matrix agrees with the alternating face sum") {
    const FiniteGroupoid g = fixture_r3().g;
    GComplex cx = eg_truncation(g, 1, 3, 2);
    for (int n = 1; n <= cx.dimension(); ++n) {
        CHECK(boundary_matrix(cx, n) == raw_boundary(cx, n));
    }
}

TEST_CASE("antisymmetrization is idempotent and fixes chain expansions") {
    const FiniteGroupoid g = fixture_r2().g;
    GComplex cx = eg_truncation(g, 1, 2, 2);
    int n = 1;
    LevelSpace lv = level_space(cx, n);
    std::vector<Rat> f(lv.tuples.size());
    for (size_t i = 0; i < f.size(); ++i) f[i] = Rat(static_cast<int>(i) % 5 - 2);
    std::vector<Rat> once = antisymmetrize(cx, n, f);
    std::vector<Rat> twice = antisymmetrize(cx, n, once);
    CHECK(once == twice);

    Mat<Rat> emb = chain_embedding(cx, n);
    ChainSpace chain = chain_space(cx, n);
    for (int j = 0; j < chain.size(); ++j) {
        std::vector<Rat> col = emb.column(j);
        CHECK(antisymmetrize(cx, n, col) == col);
    }
}

TEST_CASE("chain embedding scatters signs onto ordered tuples") {
    const FiniteGroupoid g = fixture_r2().g;
    GComplex cx = eg_truncation(g, 1, 2, 1);
    LevelSpace lv = level_space(cx, 1);
    Mat<Rat> emb = chain_embedding(cx, 1);
    ChainSpace chain = chain_space(cx, 1);
    for (size_t t = 0; t < lv.tuples.size(); ++t) {
        auto [i, sign] = rep_and_sign(chain, lv.tuples[t]);
        for (int j = 0; j < chain.size(); ++j)
            CHECK(emb(static_cast<int>(t), j) == (j == i ? Rat(sign) : Rat(0)));
    }
}

TEST_CASE("the two alpha routes agree") {
    const FiniteGroupoid g = fixture_r3().g;
    GComplex cx = eg_truncation(g, 1, 3, 2);
    for (int n = 0; n <= cx.dimension(); ++n) {
        AlphaPair a = alpha(cx, n);
        CHECK(a.by_domain == a.by_dimension);
        CHECK(alpha_value(cx, n) == a.by_domain);
    }
}

TEST_CASE("alpha of the vertex level is the domain measure") {
    const FiniteGroupoid g = fixture_r3().g;
    GComplex cx = build_graphing_complex(g, singleton_graphing(g, {"ab", "ac"}));
    CHECK(alpha_value(cx, 0) == Rat(1));
    // two orbit classes of edges (one per star generator), each carrying
    // one fundamental slice of weight 1/3, doubled by orientation: 2/3
    CHECK(alpha_value(cx, 1) == Rat(2) / 3);
}

TEST_CASE("level space of the edge level carries the diagonal action") {
    const FiniteGroupoid g = fixture_r2().g;
    GComplex cx = build_graphing_complex(g, singleton_graphing(g, {"xy"}));
    LevelSpace lv = level_space(cx, 1);
    CHECK(validate_gspace(lv.space).empty());
    for (size_t t = 0; t < lv.tuples.size(); ++t)
        for (int a = 0; a < g.arrows(); ++a) {
            int img = lv.space.apply(a, static_cast<int>(t));
            if (img < 0) continue;
            for (size_t pos = 0; pos < lv.tuples[t].size(); ++pos)
                CHECK(lv.tuples[img][pos] ==
                      cx.vertices.apply(a, lv.tuples[t][pos]));
        }
}
