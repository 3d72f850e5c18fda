#pragma once

/*
 * Von Neumann dimension of invariant subspaces of the L2 sections of a
 * quasi-periodic G-space.
 *
 * A subspace V of functions on the points is invariant when it is closed
 * under the operator of every single arrow (one-sheeted singletons
 * generate the whole algebra of equivariant operators, and the family is
 * closed under weighted adjoints since the adjoint of an arrow operator
 * is the operator of its inverse). For invariant V the dimension is
 *
 *   dim V = sum_i <P_V 1_{F_i}, 1_{F_i}>
 *
 * over the sections F_i of a quasi-periodic decomposition, with the inner
 * product weighted by anchor weights. With B a column basis of V and
 * W the weight matrix, P_V = B (B^t W B)^-1 B^t W, so each summand is
 * y^t (B^t W B)^-1 y with y = B^t W 1_{F_i}; the result is independent of
 * the decomposition.
 */

#include <gpd/gspace.hpp>
#include <gpd/linalg.hpp>

namespace gpd {

struct InvariantSubspace {
    const GSpace* space = nullptr;
    Mat<Rat> span;  // columns spanning V in point coordinates
};

/* The matrix of the action of one arrow on point indicator functions:
 * column u holds the indicator of arrow.u (zero column off the source
 * fiber). */
Mat<Rat> arrow_operator(const GSpace& u, int arrow);

/* Empty when invariant, otherwise a human-readable witness. */
std::vector<std::string> invariance_violations(const InvariantSubspace& v);

/* Throws std::invalid_argument when V is not invariant or the ambient
 * action is not free. */
Rat vn_dimension(const InvariantSubspace& v);

/* Same, against a caller-chosen decomposition (used to confirm the value
 * does not depend on the choice). */
Rat vn_dimension_with_sections(const InvariantSubspace& v, const SectionDecomposition& dec);

/* Dimension of the full section space; checked against the fundamental
 * domain measure, which it must equal. */
Rat gamma2_dimension(const GSpace& u);

/* Weights of the ambient inner product: anchor weight per point. */
std::vector<Rat> point_weights(const GSpace& u);

}  // namespace gpd
