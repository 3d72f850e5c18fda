#include <gpd/betti.hpp>
#include <gpd/hilbert.hpp>

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

namespace gpd {

namespace {

// adjoint of m : (col space, col_w) -> (row space, row_w)
Mat<Rat> weighted_adjoint_rat(const Mat<Rat>& m, const std::vector<Rat>& row_w,
                              const std::vector<Rat>& col_w) {
    Mat<Rat> a(m.nc, m.nr);
    for (int i = 0; i < m.nc; ++i)
        for (int j = 0; j < m.nr; ++j) a(i, j) = m(j, i) * row_w[j] / col_w[i];
    return a;
}

// orthogonal projection onto the span of b's (independent) columns
Mat<Rat> weighted_projection(const Mat<Rat>& b, const std::vector<Rat>& w) {
    Mat<Rat> btw(b.nc, b.nr);
    for (int i = 0; i < b.nc; ++i)
        for (int j = 0; j < b.nr; ++j) btw(i, j) = b(j, i) * w[j];
    Mat<Rat> gram = btw * b;
    Mat<Rat> solved(b.nc, b.nr);
    for (int c = 0; c < b.nr; ++c) {
        std::vector<Rat> rhs(b.nc);
        for (int i = 0; i < b.nc; ++i) rhs[i] = btw(i, c);
        auto y = solve(gram, rhs);
        if (!y) throw std::logic_error("projection Gram matrix is singular");
        for (int i = 0; i < b.nc; ++i) solved(i, c) = (*y)[i];
    }
    return b * solved;
}

Rat vn_dimension_of_chain_span(const GComplex& cx, int n, const Mat<Rat>& chain_span) {
    LevelSpace ls = level_space(cx, n);
    Mat<Rat> ambient = chain_embedding(cx, n) * chain_span;
    InvariantSubspace sub{&ls.space, ambient};
    return vn_dimension(sub);
}

}  // namespace

ChainOperator laplacian(const GComplex& cx, int n) {
    ChainSpace cn = chain_space(cx, n);
    Mat<Rat> delta(cn.size(), cn.size());
    if (n >= 1) {
        Mat<Rat> m = boundary_matrix(cx, n);
        ChainSpace below = chain_space(cx, n - 1);
        delta = delta + weighted_adjoint_rat(m, below.w, cn.w) * m;
    }
    if (cx.has_level(n + 1)) {
        Mat<Rat> m = boundary_matrix(cx, n + 1);
        ChainSpace above = chain_space(cx, n + 1);
        delta = delta + m * weighted_adjoint_rat(m, cn.w, above.w);
    }
    return {delta, cn.w};
}

Rat betti_complex(const GComplex& cx, int n) {
    if (!cx.has_level(n)) return 0;
    ChainOperator d = laplacian(cx, n);
    return vn_dimension_of_chain_span(cx, n, kernel_basis(d.m));
}

Rat dim_ker_boundary(const GComplex& cx, int n) {
    if (!cx.has_level(n)) return 0;
    if (n == 0) {
        ChainSpace c0 = chain_space(cx, 0);
        return vn_dimension_of_chain_span(cx, 0, Mat<Rat>::identity(c0.size()));
    }
    return vn_dimension_of_chain_span(cx, n, kernel_basis(boundary_matrix(cx, n)));
}

Rat dim_im_boundary(const GComplex& cx, int n) {
    if (n < 1 || !cx.has_level(n)) return 0;
    return vn_dimension_of_chain_span(cx, n - 1, boundary_matrix(cx, n));
}

bool is_subcomplex(const GComplex& sub, const GComplex& super) {
    const GSpace& a = sub.vertices;
    const GSpace& b = super.vertices;
    if (a.g != b.g && !(*a.g == *b.g)) return false;
    if (a.anchor != b.anchor || a.act != b.act) return false;
    for (int n = super.dimension() + 1; n <= sub.dimension(); ++n)
        if (sub.level_count(n) > 0) return false;
    for (int n = 1; n <= std::min(sub.dimension(), super.dimension()); ++n) {
        std::set<std::vector<int>> have(super.higher[n - 1].begin(), super.higher[n - 1].end());
        for (const auto& t : sub.higher[n - 1])
            if (!have.count(t)) return false;
    }
    return true;
}

Rat nabla(const GComplex& sub, const GComplex& super, int n) {
    if (!is_subcomplex(sub, super)) throw std::invalid_argument("not a subcomplex");
    if (!super.has_level(n)) return 0;
    ChainSpace cj = chain_space(super, n);
    Mat<Rat> harmonics = kernel_basis(laplacian(super, n).m);

    Mat<Rat> ext(cj.size(), 0);
    if (sub.has_level(n)) {
        ChainSpace ci = chain_space(sub, n);
        Mat<Rat> ki = kernel_basis(laplacian(sub, n).m);
        ext = Mat<Rat>(cj.size(), ki.nc);
        for (int r = 0; r < ci.size(); ++r) {
            auto it = cj.index.find(ci.reps[r]);
            if (it == cj.index.end()) throw std::logic_error("subcomplex rep missing above");
            for (int c = 0; c < ki.nc; ++c) ext(it->second, c) = ki(r, c);
        }
    }

    Mat<Rat> image(cj.size(), 0);
    if (harmonics.nc > 0 && ext.nc > 0) image = weighted_projection(harmonics, cj.w) * ext;
    return vn_dimension_of_chain_span(super, n, image);
}

ExhaustionTable betti_via_exhaustion(const std::vector<const GComplex*>& chain, int n) {
    if (chain.empty()) throw std::invalid_argument("empty chain of complexes");
    for (size_t i = 0; i + 1 < chain.size(); ++i)
        if (!is_subcomplex(*chain[i], *chain[i + 1]))
            throw std::invalid_argument("chain of complexes is not nested");

    int m = static_cast<int>(chain.size());
    ExhaustionTable table;
    table.value.assign(m, std::vector<Rat>(m, Rat(0)));
    for (int i = 0; i < m; ++i)
        for (int j = i; j < m; ++j) table.value[i][j] = nabla(*chain[i], *chain[j], n);

    for (int j = 0; j < m; ++j)
        for (int i = 0; i + 1 <= j; ++i)
            if (table.value[i][j] > table.value[i + 1][j])
                throw std::logic_error("nabla table not increasing in the subcomplex index");
    for (int i = 0; i < m; ++i)
        for (int j = i; j + 1 < m; ++j)
            if (table.value[i][j] < table.value[i][j + 1])
                throw std::logic_error("nabla table not decreasing in the supercomplex index");

    table.limit = table.value[m - 1][m - 1];
    return table;
}

ArrowSet minimal_generating_set(const FiniteGroupoid& g) {
    std::vector<int> reps;
    for (int a : g.nonunit_arrows())
        if (g.inv[a] >= a) reps.push_back(a);

    int total = static_cast<int>(reps.size());
    for (int size = 0; size <= total; ++size) {
        std::vector<int> pick(size);
        for (int i = 0; i < size; ++i) pick[i] = i;
        while (true) {
            ArrowSet candidate;
            for (int i : pick) candidate.push_back(reps[i]);
            if (generates(g, candidate)) return candidate;
            int pos = size - 1;
            while (pos >= 0 && pick[pos] == total - size + pos) --pos;
            if (pos < 0) break;
            ++pick[pos];
            for (int i = pos + 1; i < size; ++i) pick[i] = pick[i - 1] + 1;
        }
    }
    throw std::logic_error("arrow set of the groupoid fails to generate it");
}

GroupoidBetti betti_groupoid(const FiniteGroupoid& g) {
    ArrowSet chosen = minimal_generating_set(g);
    Graphing graphing;
    for (int a : chosen) graphing.push_back({a});
    GComplex cx = build_graphing_complex(g, graphing);

    GroupoidBetti out;
    out.generating = chosen;
    out.beta0 = betti_complex(cx, 0);
    out.beta1_upper = betti_complex(cx, 1);
    out.exact1 = fiber_report(cx).all_trees;
    return out;
}

EulerReport euler(const GComplex& cx) {
    EulerReport out;
    out.chi = 0;
    out.chi2 = 0;
    for (int n = 0; n <= cx.dimension(); ++n) {
        Rat sign = n % 2 == 0 ? 1 : -1;
        out.chi += sign * alpha_value(cx, n);
        out.chi2 += sign * betti_complex(cx, n);
    }
    out.equal = out.chi == out.chi2;
    return out;
}

MorseReport morse_check(const GComplex& cx, int n) {
    MorseReport out;
    out.n = n;
    out.alpha_side = 0;
    out.betti_side = 0;
    for (int k = 0; k <= n; ++k) {
        Rat sign = (n - k) % 2 == 0 ? 1 : -1;
        out.alpha_side += sign * (cx.has_level(k) ? alpha_value(cx, k) : Rat(0));
        out.betti_side += sign * betti_complex(cx, k);
    }
    out.gap = dim_im_boundary(cx, n + 1);
    out.holds = out.alpha_side - out.betti_side == out.gap && out.gap >= 0;
    return out;
}

FloatCheck laplacian_float_check(const GComplex& cx, int n) {
    ChainOperator d = laplacian(cx, n);
    FloatCheck out;
    out.exact_nullity = d.m.nr - rank(d.m);
    if (d.m.nr == 0) {
        out.float_nullity = 0;
        out.agree = out.exact_nullity == 0;
        return out;
    }
    // conjugate by W^(1/2) so the operator becomes an honest symmetric matrix
    Eigen::MatrixXd s(d.m.nr, d.m.nr);
    for (int i = 0; i < d.m.nr; ++i)
        for (int j = 0; j < d.m.nr; ++j)
            s(i, j) = rat_double(d.m(i, j)) *
                      std::sqrt(rat_double(d.w[i]) / rat_double(d.w[j]));
    Eigen::MatrixXd sym = (s + s.transpose()) / 2.0;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(sym);
    out.float_nullity = 0;
    for (int i = 0; i < d.m.nr; ++i)
        if (std::abs(solver.eigenvalues()[i]) < 1e-9) ++out.float_nullity;
    out.agree = out.exact_nullity == out.float_nullity;
    return out;
}

double boundary_norm_float(const GComplex& cx, int n) {
    if (n < 1 || !cx.has_level(n)) return 0.0;
    Mat<Rat> m = boundary_matrix(cx, n);
    if (m.nr == 0 || m.nc == 0) return 0.0;
    ChainSpace cn = chain_space(cx, n);
    ChainSpace below = chain_space(cx, n - 1);
    Eigen::MatrixXd b(m.nr, m.nc);
    for (int i = 0; i < m.nr; ++i)
        for (int j = 0; j < m.nc; ++j)
            b(i, j) = rat_double(m(i, j)) *
                      std::sqrt(rat_double(below.w[i]) / rat_double(cn.w[j]));
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(
        Eigen::MatrixXd(b.transpose() * b));
    double top = solver.eigenvalues().maxCoeff();
    return top > 0 ? std::sqrt(top) : 0.0;
}

}  // namespace gpd
