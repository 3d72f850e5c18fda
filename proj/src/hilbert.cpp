#include <gpd/hilbert.hpp>

#include <stdexcept>

namespace gpd {

Mat<Rat> arrow_operator(const GSpace& u, int arrow) {
    Mat<Rat> m(u.points(), u.points());
    for (int p = 0; p < u.points(); ++p) {
        int q = u.act[arrow][p];
        if (q >= 0) m(q, p) = 1;
    }
    return m;
}

std::vector<Rat> point_weights(const GSpace& u) {
    std::vector<Rat> w(u.points());
    for (int p = 0; p < u.points(); ++p) w[p] = u.point_weight(p);
    return w;
}

std::vector<std::string> invariance_violations(const InvariantSubspace& v) {
    std::vector<std::string> bad;
    const GSpace& u = *v.space;
    if (v.span.nr != u.points()) {
        bad.push_back("span has wrong ambient dimension");
        return bad;
    }
    std::vector<int> basis = independent_columns(v.span);
    RowSpan<Rat> membership(u.points());
    for (int j : basis) membership.insert(v.span.column(j));
    for (int a = 0; a < u.g->arrows(); ++a) {
        for (int j : basis) {
            // the action moves points injectively, so applying the arrow
            // operator is a sparse relabeling of coordinates
            std::vector<Rat> col = v.span.column(j);
            std::vector<Rat> image(u.points(), Rat(0));
            for (int p = 0; p < u.points(); ++p) {
                int q = u.act[a][p];
                if (q >= 0) image[q] += col[p];
            }
            if (membership.contains(image)) continue;
            bad.push_back("subspace not closed under arrow " + u.g->arrow_labels[a]);
            break;
        }
    }
    return bad;
}

static Rat dimension_from_sections(const InvariantSubspace& v, const SectionDecomposition& dec) {
    const GSpace& u = *v.space;
    std::vector<int> basis = independent_columns(v.span);
    if (basis.empty()) return 0;
    std::vector<std::vector<Rat>> cols;
    for (int j : basis) cols.push_back(v.span.column(j));
    Mat<Rat> b = Mat<Rat>::from_columns(cols);
    std::vector<Rat> w = point_weights(u);

    const int k = b.nc;
    Mat<Rat> gram(k, k);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) {
            Rat acc = 0;
            for (int p = 0; p < b.nr; ++p) acc += b(p, i) * w[p] * b(p, j);
            gram(i, j) = acc;
        }

    Rat dim = 0;
    for (const auto& section : dec.sections) {
        std::vector<Rat> y(k, Rat(0));
        for (int p : section.points)
            for (int i = 0; i < k; ++i) y[i] += b(p, i) * w[p];
        auto z = solve(gram, y);
        if (!z) throw std::logic_error("gram matrix not invertible");
        for (int i = 0; i < k; ++i) dim += y[i] * (*z)[i];
    }
    return dim;
}

Rat vn_dimension_with_sections(const InvariantSubspace& v, const SectionDecomposition& dec) {
    std::vector<std::string> bad = invariance_violations(v);
    if (!bad.empty()) throw std::invalid_argument(bad.front());
    return dimension_from_sections(v, dec);
}

Rat vn_dimension(const InvariantSubspace& v) {
    return vn_dimension_with_sections(v, quasi_periodic_decomposition(*v.space));
}

Rat gamma2_dimension(const GSpace& u) {
    FundamentalDomain f = check_quasi_periodic(u);
    InvariantSubspace full{&u, Mat<Rat>::identity(u.points())};
    Rat dim = vn_dimension(full);
    if (dim != f.measure)
        throw std::logic_error("full-space dimension " + rat_str(dim) +
                               " differs from fundamental domain measure " + rat_str(f.measure));
    return dim;
}

}  // namespace gpd
