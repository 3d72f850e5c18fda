#pragma once

/*
 * Finite G-spaces: a point set fibered over the atoms, with a partial
 * action of the arrows. An arrow g moves points anchored at s(g) to
 * points anchored at r(g); units act as the identity and the action is
 * compatible with composition. All spaces here are quasi-periodic: the
 * action is free, so the space decomposes into translates of finitely
 * many sections of the anchor map.
 *
 * The measure of a point set is the sum of the anchor weights of its
 * points; a fundamental domain (one point per orbit) always has finite
 * measure at this scale and its measure is the dimension of the
 * associated Hilbert module.
 */

#include <gpd/groupoid.hpp>

#include <stdexcept>
#include <string>
#include <vector>

namespace gpd {

struct GSpace {
    const FiniteGroupoid* g = nullptr;
    std::vector<int> anchor;               // point -> atom
    std::vector<std::vector<int>> act;     // act[arrow][point] -> point, -1 undefined
    std::vector<std::string> point_labels;

    int points() const { return static_cast<int>(anchor.size()); }
    int apply(int arrow, int point) const { return act[arrow][point]; }
    Rat point_weight(int point) const { return g->atom_weights[anchor[point]]; }
    Rat measure(const std::vector<int>& point_set) const;
};

/* Structural checks: anchors in range, action defined exactly when
 * s(arrow) = anchor(point), anchors transported to r(arrow), units act
 * as the identity, action compatible with composition. */
std::vector<std::string> validate_gspace(const GSpace& u);

struct NotFreeError : std::runtime_error {
    int arrow;
    int point;
    NotFreeError(const GSpace& u, int a, int p);
};

struct FundamentalDomain {
    std::vector<int> points;  // least point id per orbit, ascending
    Rat measure;
};

/* Orbits of the arrow action, each sorted, ordered by least member. */
std::vector<std::vector<int>> gspace_orbits(const GSpace& u);

/* Verifies freeness (throws NotFreeError with a witness) and returns the
 * least-id orbit transversal with its measure. */
FundamentalDomain check_quasi_periodic(const GSpace& u);

/* A fundamental domain split into sections on which the anchor map is
 * injective. to_section/via record, for every point, which section its
 * orbit representative lies in and which arrow carries that
 * representative to the point; this is the equivariant bijection between
 * the space and the disjoint union of the G-translates of the sections. */
struct SectionDecomposition {
    struct Section {
        std::vector<int> points;  // orbit representatives
        std::vector<int> atoms;   // their anchors (X_i)
    };
    std::vector<Section> sections;
    std::vector<int> to_section;  // point -> section of its representative
    std::vector<int> rep;         // point -> orbit representative
    std::vector<int> via;         // point -> arrow with arrow . rep = point
};

SectionDecomposition quasi_periodic_decomposition(const GSpace& u);

/* A different valid decomposition: greatest-id orbit representatives,
 * one singleton section per orbit. */
SectionDecomposition singleton_decomposition(const GSpace& u);

/* G as a G-space over itself: points are the arrows, the anchor is the
 * range map, arrows act by left composition. */
GSpace translation_space(const FiniteGroupoid& g);

/* The translate space G.Y: points are arrows with source in Y, anchored
 * by range, with the left-composition action. */
GSpace model_space(const FiniteGroupoid& g, const std::vector<int>& atom_set);

/* Disjoint union of two spaces over the same groupoid. */
GSpace disjoint_union(const GSpace& a, const GSpace& b);

}  // namespace gpd
