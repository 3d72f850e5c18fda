#include <gpd/gspace.hpp>

#include <algorithm>
#include <stdexcept>

namespace gpd {

Rat GSpace::measure(const std::vector<int>& point_set) const {
    Rat total = 0;
    for (int p : point_set) total += point_weight(p);
    return total;
}

NotFreeError::NotFreeError(const GSpace& u, int a, int p)
    : std::runtime_error("action not free: arrow " + u.g->arrow_labels[a] + " fixes point " +
                         u.point_labels[p]),
      arrow(a),
      point(p) {}

std::vector<std::string> validate_gspace(const GSpace& u) {
    std::vector<std::string> bad;
    const FiniteGroupoid& g = *u.g;
    const int n = u.points();
    if (static_cast<int>(u.act.size()) != g.arrows()) {
        bad.push_back("action table has wrong arrow count");
        return bad;
    }
    for (int p = 0; p < n; ++p)
        if (u.anchor[p] < 0 || u.anchor[p] >= g.atoms()) {
            bad.push_back("anchor out of range at point " + u.point_labels[p]);
            return bad;
        }
    for (int a = 0; a < g.arrows(); ++a) {
        if (static_cast<int>(u.act[a].size()) != n) {
            bad.push_back("action table has wrong point count");
            return bad;
        }
        for (int p = 0; p < n; ++p) {
            int q = u.act[a][p];
            bool defined = g.src[a] == u.anchor[p];
            if (!defined && q != -1)
                bad.push_back("action of " + g.arrow_labels[a] + " defined off its source fiber");
            if (defined) {
                if (q < 0 || q >= n) {
                    bad.push_back("action of " + g.arrow_labels[a] + " undefined at " +
                                  u.point_labels[p]);
                } else if (u.anchor[q] != g.rng[a]) {
                    bad.push_back("anchor not transported by " + g.arrow_labels[a]);
                }
            }
        }
    }
    for (int x = 0; x < g.atoms(); ++x)
        for (int p = 0; p < n; ++p)
            if (u.anchor[p] == x && u.act[g.unit_arrow(x)][p] != p)
                bad.push_back("unit does not fix " + u.point_labels[p]);
    for (int a = 0; a < g.arrows(); ++a)
        for (int b = 0; b < g.arrows(); ++b) {
            if (!g.composable(a, b)) continue;
            int ab = g.comp[a][b];
            for (int p = 0; p < n; ++p) {
                if (u.anchor[p] != g.src[b]) continue;
                int q = u.act[b][p];
                if (q < 0 || u.act[a][q] < 0 || u.act[ab][p] < 0) continue;
                if (u.act[a][q] != u.act[ab][p])
                    bad.push_back("action not compatible with composition at (" +
                                  g.arrow_labels[a] + ", " + g.arrow_labels[b] + ", " +
                                  u.point_labels[p] + ")");
            }
        }
    return bad;
}

std::vector<std::vector<int>> gspace_orbits(const GSpace& u) {
    const int n = u.points();
    std::vector<int> orbit_of(n, -1);
    std::vector<std::vector<int>> orbits;
    for (int p = 0; p < n; ++p) {
        if (orbit_of[p] >= 0) continue;
        int id = static_cast<int>(orbits.size());
        std::vector<int> todo{p}, members;
        orbit_of[p] = id;
        while (!todo.empty()) {
            int q = todo.back();
            todo.pop_back();
            members.push_back(q);
            for (int a = 0; a < u.g->arrows(); ++a) {
                int t = u.act[a][q];
                if (t >= 0 && orbit_of[t] < 0) {
                    orbit_of[t] = id;
                    todo.push_back(t);
                }
            }
        }
        std::sort(members.begin(), members.end());
        orbits.push_back(std::move(members));
    }
    return orbits;
}

FundamentalDomain check_quasi_periodic(const GSpace& u) {
    std::vector<std::string> bad = validate_gspace(u);
    if (!bad.empty()) throw std::invalid_argument("invalid G-space: " + bad.front());
    const FiniteGroupoid& g = *u.g;
    for (int a = g.atoms(); a < g.arrows(); ++a)
        for (int p = 0; p < u.points(); ++p)
            if (u.act[a][p] == p) throw NotFreeError(u, a, p);
    FundamentalDomain f;
    for (const auto& orbit : gspace_orbits(u)) f.points.push_back(orbit.front());
    f.measure = u.measure(f.points);
    return f;
}

/* Sweep the orbit of r, recording the arrow that reaches each point. */
static void sweep_orbit(const GSpace& u, int r, int sec, SectionDecomposition& dec) {
    dec.rep[r] = r;
    dec.via[r] = u.g->unit_arrow(u.anchor[r]);
    dec.to_section[r] = sec;
    std::vector<int> todo{r};
    while (!todo.empty()) {
        int p = todo.back();
        todo.pop_back();
        for (int a = 0; a < u.g->arrows(); ++a) {
            int q = u.act[a][p];
            if (q < 0 || dec.rep[q] >= 0) continue;
            dec.rep[q] = r;
            dec.via[q] = u.g->comp[a][dec.via[p]];
            dec.to_section[q] = sec;
            todo.push_back(q);
        }
    }
}

SectionDecomposition quasi_periodic_decomposition(const GSpace& u) {
    FundamentalDomain f = check_quasi_periodic(u);
    SectionDecomposition dec;
    const int n = u.points();
    dec.to_section.assign(n, -1);
    dec.rep.assign(n, -1);
    dec.via.assign(n, -1);

    for (int r : f.points) {
        int sec = -1;
        for (size_t i = 0; i < dec.sections.size(); ++i) {
            const auto& atoms = dec.sections[i].atoms;
            if (std::find(atoms.begin(), atoms.end(), u.anchor[r]) == atoms.end()) {
                sec = static_cast<int>(i);
                break;
            }
        }
        if (sec < 0) {
            sec = static_cast<int>(dec.sections.size());
            dec.sections.emplace_back();
        }
        dec.sections[sec].points.push_back(r);
        dec.sections[sec].atoms.push_back(u.anchor[r]);
        sweep_orbit(u, r, sec, dec);
    }
    return dec;
}

SectionDecomposition singleton_decomposition(const GSpace& u) {
    check_quasi_periodic(u);
    SectionDecomposition dec;
    const int n = u.points();
    dec.to_section.assign(n, -1);
    dec.rep.assign(n, -1);
    dec.via.assign(n, -1);
    for (const auto& orbit : gspace_orbits(u)) {
        int r = orbit.back();
        int sec = static_cast<int>(dec.sections.size());
        dec.sections.push_back({{r}, {u.anchor[r]}});
        sweep_orbit(u, r, sec, dec);
    }
    return dec;
}

GSpace translation_space(const FiniteGroupoid& g) {
    GSpace u;
    u.g = &g;
    u.anchor = g.rng;
    u.point_labels = g.arrow_labels;
    u.act = g.comp;
    return u;
}

GSpace model_space(const FiniteGroupoid& g, const std::vector<int>& atom_set) {
    std::vector<bool> in(g.atoms(), false);
    for (int x : atom_set) {
        if (x < 0 || x >= g.atoms()) throw std::invalid_argument("atom id out of range");
        in[x] = true;
    }
    GSpace u;
    u.g = &g;
    std::vector<int> point_of(g.arrows(), -1);
    for (int a = 0; a < g.arrows(); ++a) {
        if (!in[g.src[a]]) continue;
        point_of[a] = u.points();
        u.anchor.push_back(g.rng[a]);
        u.point_labels.push_back(g.arrow_labels[a]);
    }
    u.act.assign(g.arrows(), std::vector<int>(u.points(), -1));
    for (int a = 0; a < g.arrows(); ++a)
        for (int b = 0; b < g.arrows(); ++b) {
            if (point_of[b] < 0 || !g.composable(a, b)) continue;
            u.act[a][point_of[b]] = point_of[g.comp[a][b]];
        }
    return u;
}

GSpace disjoint_union(const GSpace& a, const GSpace& b) {
    if (a.g != b.g) throw std::invalid_argument("different ambient groupoids");
    GSpace u;
    u.g = a.g;
    u.anchor = a.anchor;
    u.anchor.insert(u.anchor.end(), b.anchor.begin(), b.anchor.end());
    for (const std::string& l : a.point_labels) u.point_labels.push_back("L." + l);
    for (const std::string& l : b.point_labels) u.point_labels.push_back("R." + l);
    const int na = a.points();
    u.act.assign(u.g->arrows(), std::vector<int>(u.points(), -1));
    for (int arrow = 0; arrow < u.g->arrows(); ++arrow) {
        for (int p = 0; p < na; ++p)
            if (a.act[arrow][p] >= 0) u.act[arrow][p] = a.act[arrow][p];
        for (int p = 0; p < b.points(); ++p)
            if (b.act[arrow][p] >= 0) u.act[arrow][na + p] = na + b.act[arrow][p];
    }
    return u;
}

}  // namespace gpd
