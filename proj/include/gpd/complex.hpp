#pragma once

/*
 * Simplicial G-complexes and their chain spaces.
 *
 * A complex is a free level-0 G-space of vertices plus, for each level
 * n >= 1, a set of ordered (n+1)-tuples of vertices sharing an anchor.
 * Levels are closed under permutations, faces and the diagonal action,
 * and tuples have pairwise distinct entries.
 *
 * The chain space at level n keeps one representative per unordered
 * simplex (the tuple sorted by vertex id); a coordinate vector c stands
 * for the antisymmetric function whose value on a permuted tuple is the
 * permutation sign times the value at the representative. The chain
 * inner product weighs a representative by its anchor weight. In this
 * basis the boundary of a representative is the alternating sum of its
 * sorted faces and the operator norm of level-n boundaries is at most
 * n sqrt(N), N being the local simplex bound reported by validation.
 */

#include <gpd/gspace.hpp>
#include <gpd/linalg.hpp>

#include <map>
#include <optional>
#include <vector>

namespace gpd {

using Graphing = std::vector<ArrowSet>;

struct GComplex {
    GSpace vertices;
    /* higher[m] is level m+1: ordered (m+2)-tuples of vertex ids in
     * lexicographic order. dimension() == higher.size(). */
    std::vector<std::vector<std::vector<int>>> higher;

    int dimension() const { return static_cast<int>(higher.size()); }
    bool has_level(int n) const { return n >= 0 && n <= dimension(); }
    int level_count(int n) const {
        if (n == 0) return vertices.points();
        return static_cast<int>(higher[n - 1].size());
    }
};

/* Level n as a G-space of tuples with the diagonal action. */
struct LevelSpace {
    GSpace space;
    std::vector<std::vector<int>> tuples;
    std::map<std::vector<int>, int> index;
};

LevelSpace level_space(const GComplex& cx, int n);

/* Vertices are the arrows of G anchored by range; a pair (g0, g1) with a
 * common range is an edge when g0^-1 g1 or its inverse lies in one of the
 * graphing pieces. Two levels only. Pieces must be disjoint one-sheeted
 * sets. */
GComplex build_graphing_complex(const FiniteGroupoid& g, const Graphing& graphing);

/* Truncation of the universal complex: vertices are n_copies labelled
 * copies of the arrows; a tuple of distinct vertices over one fiber is a
 * simplex when some arrow w lies in every g_j * E_k, where E_k is the
 * union of the first k one-sheeted decomposition pieces (so the
 * quotients g_j^-1 g_l all lie in E_k E_k^-1). Levels are built up to
 * dim_cap. The per-vertex simplex count is asserted against the bound
 * sum_{n<k} n_copies^n * k(k-1)...(k-n). */
GComplex eg_truncation(const FiniteGroupoid& g, int n_copies, int k, int dim_cap);

struct ComplexReport {
    bool valid = false;
    std::vector<std::string> violations;
    int ulb_bound = 0;       // max over vertices of #{unordered simplices containing it}
    Rat domain_measure = 0;  // level-0 fundamental domain measure
    std::vector<int> level_sizes;
};

ComplexReport validate_complex(const GComplex& cx);

struct ChainSpace {
    int n = 0;
    std::vector<std::vector<int>> reps;  // sorted tuples in lexicographic order
    std::map<std::vector<int>, int> index;
    std::vector<Rat> w;  // anchor weight per representative

    int size() const { return static_cast<int>(reps.size()); }
};

ChainSpace chain_space(const GComplex& cx, int n);

/* Representative index and sorting-permutation sign of an ordered tuple. */
std::pair<int, int> rep_and_sign(const ChainSpace& chain, const std::vector<int>& tuple);

/* Matrix of the level-n boundary in the representative bases. */
Mat<Rat> boundary_matrix(const GComplex& cx, int n);

/* Averages the signed permutations of a function on ordered level-n
 * tuples; idempotent, fixes antisymmetric functions. */
std::vector<Rat> antisymmetrize(const GComplex& cx, int n, const std::vector<Rat>& f);

/* Columns expand each chain representative to the antisymmetric function
 * on ordered tuples; spans the image of the antisymmetrizer. */
Mat<Rat> chain_embedding(const GComplex& cx, int n);

struct AlphaPair {
    Rat by_domain;     // fundamental-domain measure over (n+1)!
    Rat by_dimension;  // dimension of the antisymmetrizer image
};

AlphaPair alpha(const GComplex& cx, int n);

/* The common value; throws when the two routes disagree. */
Rat alpha_value(const GComplex& cx, int n);

struct FiberInfo {
    int atom = 0;
    int vertex_count = 0;
    int edge_count = 0;  // unordered
    bool connected = false;
    bool tree = false;  // meaningful for complexes of dimension <= 1
};

struct FiberReport {
    std::vector<FiberInfo> per_atom;
    bool one_dimensional = false;
    bool all_connected = false;
    bool all_trees = false;  // false when not one_dimensional
};

FiberReport fiber_report(const GComplex& cx);

}  // namespace gpd
