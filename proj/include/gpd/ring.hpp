#pragma once

/*
 * The groupoid ring: finitely supported complex-rational functions on the
 * arrows, with convolution product and the adjoint f*(g) = conj(f(g^-1)).
 * The trace pairs a function with the unit arrows against the atom
 * weights; one-sheeted indicator functions are partial isometries.
 *
 * regular_rep(f) is the matrix of left convolution by f on the arrow
 * indicator basis of L2 of the arrows, whose inner product weighs the
 * indicator of g by the weight of s(g).
 */

#include <gpd/groupoid.hpp>
#include <gpd/linalg.hpp>

#include <vector>

namespace gpd {

struct ArrowFunction {
    const FiniteGroupoid* g = nullptr;
    std::vector<CRat> v;  // one entry per arrow

    static ArrowFunction zero(const FiniteGroupoid& g);
    CRat& operator[](int arrow) { return v[arrow]; }
    const CRat& operator[](int arrow) const { return v[arrow]; }
    bool is_zero() const;
    friend bool operator==(const ArrowFunction& a, const ArrowFunction& b) {
        return a.g == b.g && a.v == b.v;
    }
};

ArrowFunction indicator(const FiniteGroupoid& g, const ArrowSet& set);
ArrowFunction unit_indicator(const FiniteGroupoid& g);

/* 1_E for one-sheeted E; throws when E is not one-sheeted. */
ArrowFunction partial_isometry(const FiniteGroupoid& g, const ArrowSet& e);

ArrowFunction convolve(const ArrowFunction& f1, const ArrowFunction& f2);
ArrowFunction adjoint(const ArrowFunction& f);
ArrowFunction add(const ArrowFunction& f1, const ArrowFunction& f2);
ArrowFunction scale(const CRat& c, const ArrowFunction& f);

CRat trace(const ArrowFunction& f);

/* Restriction to the unit arrows, zero elsewhere. */
ArrowFunction conditional_expectation(const ArrowFunction& f);

/* A matrix acting on a coordinate space whose inner product is
 * <e_i, e_j> = [i = j] * w[i]. */
struct LinearOperator {
    Mat<CRat> m;
    std::vector<Rat> w;
};

LinearOperator regular_rep(const ArrowFunction& f);

/* Adjoint with respect to the weighted inner products. */
LinearOperator weighted_adjoint(const LinearOperator& op);

/* <m a, b> in the weighted inner product of op.w. */
CRat weighted_inner(const std::vector<Rat>& w, const std::vector<CRat>& a,
                    const std::vector<CRat>& b);

}  // namespace gpd
