#pragma once

/*
 * Finite probability-measure-preserving discrete groupoids.
 *
 * A groupoid is stored as a pair of finite tables: a weighted atom list
 * (the unit space) and an arrow list with source, range, inverse and a
 * full composition table. Arrows 0..atoms-1 are the unit arrows, one per
 * atom and in atom order; every other arrow follows. comp[g1][g2] holds
 * the id of g1*g2 when s(g1) = r(g2) and -1 otherwise. The composition
 * orientation is the transformation-groupoid one: g1*g2 is defined when
 * the source of g1 equals the range of g2.
 *
 * Weights are exact rationals. A standalone groupoid carries total mass 1;
 * restricting to a subset of atoms keeps the ambient weights, so the
 * restricted object carries the mass of that subset instead.
 */

#include <gpd/rational.hpp>

#include <map>
#include <string>
#include <vector>

namespace gpd {

using ArrowSet = std::vector<int>;  // sorted, duplicate-free arrow ids

struct FiniteGroupoid {
    std::vector<std::string> atom_labels;
    std::vector<Rat> atom_weights;
    Rat declared_mass = 1;

    std::vector<std::string> arrow_labels;
    std::vector<int> src;
    std::vector<int> rng;
    std::vector<int> inv;
    std::vector<std::vector<int>> comp;

    int atoms() const { return static_cast<int>(atom_labels.size()); }
    int arrows() const { return static_cast<int>(arrow_labels.size()); }
    bool is_unit(int g) const { return g < atoms(); }
    int unit_arrow(int x) const { return x; }
    bool composable(int g1, int g2) const { return src[g1] == rng[g2]; }
    int compose(int g1, int g2) const { return comp[g1][g2]; }
    const Rat& weight(int x) const { return atom_weights[x]; }

    ArrowSet unit_set() const;
    ArrowSet nonunit_arrows() const;
    int arrow_by_label(const std::string& label) const;  // -1 when absent
    int atom_by_label(const std::string& label) const;

    friend bool operator==(const FiniteGroupoid&, const FiniteGroupoid&) = default;
};

/* Raw ingredients for building a groupoid. Unit arrows are implied; the
 * arrow list names only non-unit arrows. Composition triples cover
 * non-unit pairs whose product is needed; unit laws and g*g^-1 products
 * are filled in automatically. */
struct GroupoidData {
    std::vector<std::pair<std::string, Rat>> atoms;                     // label, weight
    std::vector<std::tuple<std::string, std::string, std::string>> arrows;  // label, source, range
    std::vector<std::pair<std::string, std::string>> inverses;          // g, g^-1
    std::vector<std::tuple<std::string, std::string, std::string>> compositions;  // g1, g2, g1*g2
};

/* Builds the tables; throws std::invalid_argument on structural nonsense
 * (unknown labels, conflicting entries, missing inverses, or a composable
 * non-unit pair without a product). Axiom checking is validate()'s job. */
FiniteGroupoid assemble(const GroupoidData& data);

struct ValidationReport {
    bool valid = false;
    bool principal = false;
    std::vector<std::string> violations;
};

/* Checks the groupoid axioms and the measure-invariance condition
 * weight(s(g)) = weight(r(g)); violations are reported, not thrown.
 * Total mass is compared against declared_mass. */
ValidationReport validate(const FiniteGroupoid& g);

bool is_principal(const FiniteGroupoid& g);

/* Sum of source weights over the set. */
Rat mu_g(const FiniteGroupoid& g, const ArrowSet& set);

bool is_one_sheeted(const FiniteGroupoid& g, const ArrowSet& set);

/* Greedy partition of all arrows into one-sheeted pieces. The unit set
 * comes first; every other arrow goes to the first existing piece that
 * stays one-sheeted and does not already hold its inverse, else starts a
 * new piece. Deterministic in the arrow-id order. */
std::vector<ArrowSet> one_sheeted_decomposition(const FiniteGroupoid& g);

/* The bijection s(E) -> r(E) induced by a one-sheeted set. */
std::map<int, int> partial_bijection(const FiniteGroupoid& g, const ArrowSet& e);

/* Closure of A together with inverses and units under composition. */
ArrowSet arrow_closure(const FiniteGroupoid& g, const ArrowSet& a);

bool generates(const FiniteGroupoid& g, const ArrowSet& a);

/* The wide subgroupoid generated by A, as a standalone groupoid. Arrow
 * ids are re-indexed; labels and weights are inherited. */
FiniteGroupoid generated_subgroupoid(const FiniteGroupoid& g, const ArrowSet& a);

/* Arrows with both endpoints in Y; atom weights are kept un-normalized,
 * so the result carries mass mu(Y). */
FiniteGroupoid restriction(const FiniteGroupoid& g, const std::vector<int>& y);

/* The principal quotient: one arrow per (range, source) pair hit by G. */
FiniteGroupoid orbit_relation(const FiniteGroupoid& g);

/* Finest partition of the atoms into G-invariant blocks (atom orbits). */
std::vector<std::vector<int>> invariant_partition(const FiniteGroupoid& g);

/* Transformation groupoid of a finite group acting on weighted atoms from
 * the right. table[i][j] is the product of elements i and j, element 0 is
 * the identity, action[x][i] the image atom of x under element i. */
FiniteGroupoid transformation_groupoid(const std::vector<std::vector<int>>& table,
                                       const std::vector<std::string>& element_names,
                                       const std::vector<std::vector<int>>& action,
                                       const std::vector<std::pair<std::string, Rat>>& atoms);

struct IsotropyGroup {
    std::vector<int> arrows;              // ids in g, first entry the unit
    std::vector<std::vector<int>> table;  // indices into arrows
};

IsotropyGroup isotropy(const FiniteGroupoid& g, int x);

ArrowSet normalized(ArrowSet set);
ArrowSet set_union(const ArrowSet& a, const ArrowSet& b);
bool set_contains(const ArrowSet& a, int g);

}  // namespace gpd
