#pragma once

// L2-Betti numbers of equivariant complexes. On each chain space the
// Laplacian is D_n = d_n* d_n + d_{n+1} d_{n+1}*, with adjoints taken in the
// weighted inner products; its kernel is the harmonic subspace, whose
// von Neumann dimension is the n-th Betti number. Inclusions of complexes
// induce maps on harmonic spaces, giving the nabla table whose stabilized
// corner recovers the Betti number of an exhausted limit complex.

#include <gpd/complex.hpp>
#include <gpd/linalg.hpp>
#include <gpd/rational.hpp>

#include <vector>

namespace gpd {

// matrix on a chain space together with that space's inner product weights
struct ChainOperator {
    Mat<Rat> m;
    std::vector<Rat> w;
};

ChainOperator laplacian(const GComplex& cx, int n);

// von Neumann dimension of ker D_n, zero for levels the complex lacks
Rat betti_complex(const GComplex& cx, int n);

Rat dim_ker_boundary(const GComplex& cx, int n);
Rat dim_im_boundary(const GComplex& cx, int n);

bool is_subcomplex(const GComplex& sub, const GComplex& super);

// dimension of the image of harmonic n-chains of the subcomplex inside the
// harmonic space of the supercomplex
Rat nabla(const GComplex& sub, const GComplex& super, int n);

struct ExhaustionTable {
    std::vector<std::vector<Rat>> value;  // value[i][j] defined for j >= i
    Rat limit;
};

ExhaustionTable betti_via_exhaustion(const std::vector<const GComplex*>& chain, int n);

// smallest generating set of non-unit arrows, one per inverse pair,
// first in size-then-lexicographic order
ArrowSet minimal_generating_set(const FiniteGroupoid& g);

struct GroupoidBetti {
    Rat beta0;
    Rat beta1_upper;
    bool exact1 = false;  // true when the complex used has tree fibers
    ArrowSet generating;
};

GroupoidBetti betti_groupoid(const FiniteGroupoid& g);

struct EulerReport {
    Rat chi;
    Rat chi2;
    bool equal = false;
};

EulerReport euler(const GComplex& cx);

struct MorseReport {
    int n = 0;
    Rat alpha_side;
    Rat betti_side;
    Rat gap;  // dimension of the closure of im d_{n+1}
    bool holds = false;
};

MorseReport morse_check(const GComplex& cx, int n);

struct FloatCheck {
    int exact_nullity = 0;
    int float_nullity = 0;
    bool agree = false;
};

// floating-point spectral cross-check of the exact kernel dimension
FloatCheck laplacian_float_check(const GComplex& cx, int n);

// operator norm of the n-th boundary map in the weighted inner products
double boundary_norm_float(const GComplex& cx, int n);

}  // namespace gpd
