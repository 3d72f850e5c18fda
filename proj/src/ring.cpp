#include <gpd/ring.hpp>

#include <stdexcept>

namespace gpd {

ArrowFunction ArrowFunction::zero(const FiniteGroupoid& g) {
    return {&g, std::vector<CRat>(g.arrows())};
}

bool ArrowFunction::is_zero() const {
    for (const CRat& c : v)
        if (!c.is_zero()) return false;
    return true;
}

ArrowFunction indicator(const FiniteGroupoid& g, const ArrowSet& set) {
    ArrowFunction f = ArrowFunction::zero(g);
    for (int a : set) {
        if (a < 0 || a >= g.arrows()) throw std::invalid_argument("arrow id out of range");
        f.v[a] = CRat(Rat(1));
    }
    return f;
}

ArrowFunction unit_indicator(const FiniteGroupoid& g) { return indicator(g, g.unit_set()); }

ArrowFunction partial_isometry(const FiniteGroupoid& g, const ArrowSet& e) {
    if (!is_one_sheeted(g, e)) throw std::invalid_argument("arrow set is not one-sheeted");
    return indicator(g, e);
}

static void require_same(const ArrowFunction& f1, const ArrowFunction& f2) {
    if (f1.g != f2.g) throw std::invalid_argument("ambient groupoid mismatch");
}

ArrowFunction convolve(const ArrowFunction& f1, const ArrowFunction& f2) {
    require_same(f1, f2);
    const FiniteGroupoid& g = *f1.g;
    ArrowFunction out = ArrowFunction::zero(g);
    for (int a = 0; a < g.arrows(); ++a) {
        if (f1.v[a].is_zero()) continue;
        for (int b = 0; b < g.arrows(); ++b) {
            if (f2.v[b].is_zero() || !g.composable(a, b)) continue;
            out.v[g.comp[a][b]] += f1.v[a] * f2.v[b];
        }
    }
    return out;
}

ArrowFunction adjoint(const ArrowFunction& f) {
    ArrowFunction out = ArrowFunction::zero(*f.g);
    for (int a = 0; a < f.g->arrows(); ++a) out.v[a] = conj_val(f.v[f.g->inv[a]]);
    return out;
}

ArrowFunction add(const ArrowFunction& f1, const ArrowFunction& f2) {
    require_same(f1, f2);
    ArrowFunction out = f1;
    for (size_t i = 0; i < out.v.size(); ++i) out.v[i] += f2.v[i];
    return out;
}

ArrowFunction scale(const CRat& c, const ArrowFunction& f) {
    ArrowFunction out = f;
    for (CRat& x : out.v) x *= c;
    return out;
}

CRat trace(const ArrowFunction& f) {
    CRat t;
    for (int x = 0; x < f.g->atoms(); ++x)
        t += f.v[f.g->unit_arrow(x)] * CRat(f.g->atom_weights[x]);
    return t;
}

ArrowFunction conditional_expectation(const ArrowFunction& f) {
    ArrowFunction out = ArrowFunction::zero(*f.g);
    for (int x = 0; x < f.g->atoms(); ++x) out.v[x] = f.v[x];
    return out;
}

LinearOperator regular_rep(const ArrowFunction& f) {
    const FiniteGroupoid& g = *f.g;
    const int n = g.arrows();
    LinearOperator op;
    op.m = Mat<CRat>(n, n);
    for (int a = 0; a < n; ++a) {
        if (f.v[a].is_zero()) continue;
        for (int b = 0; b < n; ++b)
            if (g.composable(a, b)) op.m(g.comp[a][b], b) += f.v[a];
    }
    op.w.resize(n);
    for (int a = 0; a < n; ++a) op.w[a] = g.atom_weights[g.src[a]];
    return op;
}

LinearOperator weighted_adjoint(const LinearOperator& op) {
    if (op.m.nr != op.m.nc) throw std::invalid_argument("adjoint of non-square operator");
    LinearOperator out;
    out.w = op.w;
    out.m = op.m.conj_transpose();
    for (int i = 0; i < out.m.nr; ++i)
        for (int j = 0; j < out.m.nc; ++j)
            if (!out.m(i, j).is_zero()) out.m(i, j) *= CRat(op.w[j] / op.w[i]);
    return out;
}

CRat weighted_inner(const std::vector<Rat>& w, const std::vector<CRat>& a,
                    const std::vector<CRat>& b) {
    if (a.size() != w.size() || b.size() != w.size())
        throw std::invalid_argument("shape mismatch");
    CRat t;
    for (size_t i = 0; i < w.size(); ++i) t += a[i] * conj_val(b[i]) * CRat(w[i]);
    return t;
}

}  // namespace gpd
