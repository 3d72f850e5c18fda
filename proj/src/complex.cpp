#include <gpd/complex.hpp>
#include <gpd/hilbert.hpp>

#include <algorithm>
#include <set>
#include <stdexcept>

namespace gpd {

namespace {

std::string tuple_label(const GSpace& vertices, const std::vector<int>& t) {
    std::string s = "(";
    for (size_t i = 0; i < t.size(); ++i) {
        if (i) s += ",";
        s += vertices.point_labels[t[i]];
    }
    return s + ")";
}

Int factorial(int n) {
    Int f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

int permutation_sign(const std::vector<int>& p) {
    int inversions = 0;
    for (size_t i = 0; i < p.size(); ++i)
        for (size_t j = i + 1; j < p.size(); ++j)
            if (p[i] > p[j]) ++inversions;
    return inversions % 2 == 0 ? 1 : -1;
}

}  // namespace

LevelSpace level_space(const GComplex& cx, int n) {
    if (!cx.has_level(n)) throw std::invalid_argument("level missing");
    LevelSpace ls;
    const GSpace& v = cx.vertices;
    if (n == 0) {
        ls.space = v;
        for (int p = 0; p < v.points(); ++p) {
            ls.tuples.push_back({p});
            ls.index[{p}] = p;
        }
        return ls;
    }
    ls.tuples = cx.higher[n - 1];
    for (size_t i = 0; i < ls.tuples.size(); ++i) ls.index[ls.tuples[i]] = static_cast<int>(i);

    GSpace& u = ls.space;
    u.g = v.g;
    for (const auto& t : ls.tuples) {
        u.anchor.push_back(v.anchor[t[0]]);
        u.point_labels.push_back(tuple_label(v, t));
    }
    u.act.assign(v.g->arrows(), std::vector<int>(u.points(), -1));
    for (int a = 0; a < v.g->arrows(); ++a)
        for (int i = 0; i < u.points(); ++i) {
            if (v.g->src[a] != u.anchor[i]) continue;
            std::vector<int> image;
            for (int p : ls.tuples[i]) {
                int q = v.act[a][p];
                if (q < 0) throw std::logic_error("vertex action undefined on its fiber");
                image.push_back(q);
            }
            auto it = ls.index.find(image);
            if (it == ls.index.end()) throw std::logic_error("level not closed under the action");
            u.act[a][i] = it->second;
        }
    return ls;
}

GComplex build_graphing_complex(const FiniteGroupoid& g, const Graphing& graphing) {
    std::vector<char> in_piece(g.arrows(), 0);
    for (const ArrowSet& piece : graphing) {
        if (!is_one_sheeted(g, piece))
            throw std::invalid_argument("graphing piece is not one-sheeted");
        for (int a : piece) {
            if (a < 0 || a >= g.arrows()) throw std::invalid_argument("arrow id out of range");
            if (in_piece[a]) throw std::invalid_argument("graphing pieces are not disjoint");
            in_piece[a] = 1;
        }
    }
    std::vector<char> edge_arrow(g.arrows(), 0);
    for (int a = 0; a < g.arrows(); ++a)
        if (in_piece[a] || in_piece[g.inv[a]]) edge_arrow[a] = 1;

    GComplex cx;
    cx.vertices = translation_space(g);
    std::vector<std::vector<int>> edges;
    for (int p = 0; p < g.arrows(); ++p)
        for (int q = 0; q < g.arrows(); ++q) {
            if (p == q || g.rng[p] != g.rng[q]) continue;
            int quotient = g.comp[g.inv[p]][q];
            if (edge_arrow[quotient]) edges.push_back({p, q});
        }
    cx.higher.push_back(std::move(edges));
    return cx;
}

GComplex eg_truncation(const FiniteGroupoid& g, int n_copies, int k, int dim_cap) {
    if (n_copies < 1 || k < 1 || dim_cap < 0)
        throw std::invalid_argument("need n_copies >= 1, k >= 1, dim_cap >= 0");

    std::vector<ArrowSet> pieces = one_sheeted_decomposition(g);
    std::vector<char> in_ek(g.arrows(), 0);
    for (int i = 0; i < std::min<int>(k, static_cast<int>(pieces.size())); ++i)
        for (int a : pieces[i]) in_ek[a] = 1;

    GComplex cx;
    GSpace& v = cx.vertices;
    v.g = &g;
    for (int a = 0; a < g.arrows(); ++a)
        for (int c = 0; c < n_copies; ++c) {
            v.anchor.push_back(g.rng[a]);
            v.point_labels.push_back(g.arrow_labels[a] + "." + std::to_string(c + 1));
        }
    v.act.assign(g.arrows(), std::vector<int>(v.points(), -1));
    for (int a = 0; a < g.arrows(); ++a)
        for (int b = 0; b < g.arrows(); ++b) {
            if (!g.composable(a, b)) continue;
            for (int c = 0; c < n_copies; ++c) v.act[a][b * n_copies + c] = g.comp[a][b] * n_copies + c;
        }

    /* witness arrows of a single vertex over arrow b: all b*h with h in E_k */
    std::vector<std::vector<char>> witness(g.arrows(), std::vector<char>(g.arrows(), 0));
    for (int b = 0; b < g.arrows(); ++b)
        for (int h = 0; h < g.arrows(); ++h)
            if (in_ek[h] && g.composable(b, h)) witness[b][g.comp[b][h]] = 1;

    std::vector<std::vector<std::vector<int>>> unordered(dim_cap >= 1 ? dim_cap : 0);
    std::vector<int> chosen;
    auto record = [&](const std::vector<int>& simplex) {
        unordered[static_cast<int>(simplex.size()) - 2].push_back(simplex);
    };
    std::vector<int> fiber;
    auto dfs = [&](auto&& self, const std::vector<char>& common, size_t next_slot) -> void {
        if (static_cast<int>(chosen.size()) >= 2) record(chosen);
        if (static_cast<int>(chosen.size()) == dim_cap + 1) return;
        for (size_t s = next_slot; s < fiber.size(); ++s) {
            int vertex = fiber[s];
            const std::vector<char>& mine = witness[vertex / n_copies];
            std::vector<char> meet(g.arrows(), 0);
            bool nonempty = false;
            for (int w = 0; w < g.arrows(); ++w)
                if (common[w] && mine[w]) {
                    meet[w] = 1;
                    nonempty = true;
                }
            if (!nonempty) continue;
            chosen.push_back(vertex);
            self(self, meet, s + 1);
            chosen.pop_back();
        }
    };
    if (dim_cap >= 1) {
        for (int x = 0; x < g.atoms(); ++x) {
            fiber.clear();
            for (int p = 0; p < v.points(); ++p)
                if (v.anchor[p] == x) fiber.push_back(p);
            for (size_t s = 0; s < fiber.size(); ++s) {
                chosen.assign(1, fiber[s]);
                dfs(dfs, witness[fiber[s] / n_copies], s + 1);
            }
        }
    }

    for (int m = 0; m < static_cast<int>(unordered.size()); ++m) {
        std::vector<std::vector<int>> level;
        for (const std::vector<int>& s : unordered[m]) {
            std::vector<int> perm = s;
            do {
                level.push_back(perm);
            } while (std::next_permutation(perm.begin(), perm.end()));
        }
        std::sort(level.begin(), level.end());
        cx.higher.push_back(std::move(level));
    }
    while (!cx.higher.empty() && cx.higher.back().empty()) cx.higher.pop_back();

    /* local boundedness: simplices at a vertex, the vertex itself included */
    Int bound = 0;
    for (int n = 0; n <= k - 1; ++n) {
        Int term = 1;
        for (int t = 0; t <= n; ++t) term *= (k - t);
        Int copies = 1;
        for (int t = 0; t < n; ++t) copies *= n_copies;
        bound += copies * term;
    }
    std::vector<Int> at_vertex(v.points(), Int(1));
    for (const auto& level : unordered)
        for (const auto& s : level)
            for (int p : s) at_vertex[p] += 1;
    for (int p = 0; p < v.points(); ++p)
        if (at_vertex[p] > bound)
            throw std::logic_error("local simplex count " + at_vertex[p].str() +
                                   " exceeds the bound " + bound.str() + " at vertex " +
                                   v.point_labels[p]);
    return cx;
}

ComplexReport validate_complex(const GComplex& cx) {
    ComplexReport rep;
    const GSpace& v = cx.vertices;
    auto flag = [&](const std::string& msg) { rep.violations.push_back(msg); };

    for (const std::string& msg : validate_gspace(v)) flag("level 0: " + msg);
    rep.level_sizes.push_back(v.points());
    for (int n = 1; n <= cx.dimension(); ++n)
        rep.level_sizes.push_back(cx.level_count(n));

    std::vector<std::set<std::vector<int>>> level_sets(cx.dimension() + 1);
    for (int n = 1; n <= cx.dimension(); ++n)
        for (const auto& t : cx.higher[n - 1]) level_sets[n].insert(t);

    for (int n = 1; n <= cx.dimension(); ++n) {
        for (const auto& t : cx.higher[n - 1]) {
            if (static_cast<int>(t.size()) != n + 1) {
                flag("level " + std::to_string(n) + ": tuple of wrong length");
                continue;
            }
            bool in_range = true;
            for (int p : t)
                if (p < 0 || p >= v.points()) in_range = false;
            if (!in_range) {
                flag("level " + std::to_string(n) + ": vertex id out of range");
                continue;
            }
            for (size_t i = 1; i < t.size(); ++i)
                if (v.anchor[t[i]] != v.anchor[t[0]])
                    flag("level " + std::to_string(n) + ": mixed anchors in " +
                         tuple_label(v, t));
            if (t.size() >= 2 && t[0] == t[1])
                flag("level " + std::to_string(n) + ": degenerate tuple " + tuple_label(v, t));

            std::vector<int> perm = t;
            std::sort(perm.begin(), perm.end());
            do {
                if (!level_sets[n].count(perm)) {
                    flag("level " + std::to_string(n) + ": permutation closure fails for " +
                         tuple_label(v, t));
                    break;
                }
            } while (std::next_permutation(perm.begin(), perm.end()));

            if (n >= 2) {
                for (size_t j = 0; j < t.size(); ++j) {
                    std::vector<int> face = t;
                    face.erase(face.begin() + static_cast<long>(j));
                    if (!level_sets[n - 1].count(face)) {
                        flag("level " + std::to_string(n) + ": face closure fails for " +
                             tuple_label(v, t));
                        break;
                    }
                }
            }

            for (int a = 0; a < v.g->arrows(); ++a) {
                if (v.g->src[a] != v.anchor[t[0]]) continue;
                std::vector<int> image;
                bool defined = true;
                for (int p : t) {
                    int q = v.act[a][p];
                    if (q < 0) defined = false;
                    else image.push_back(q);
                }
                if (!defined || !level_sets[n].count(image)) {
                    flag("level " + std::to_string(n) + ": not invariant under " +
                         v.g->arrow_labels[a] + " at " + tuple_label(v, t));
                    break;
                }
            }
        }
    }

    try {
        FundamentalDomain f = check_quasi_periodic(v);
        rep.domain_measure = f.measure;
    } catch (const NotFreeError& e) {
        flag(std::string("level 0: ") + e.what());
    } catch (const std::invalid_argument&) {
        // structural issues already reported by validate_gspace
    }

    std::vector<Int> at_vertex(v.points(), Int(1));
    for (int n = 1; n <= cx.dimension(); ++n) {
        std::set<std::vector<int>> reps;
        for (const auto& t : cx.higher[n - 1]) {
            std::vector<int> s = t;
            std::sort(s.begin(), s.end());
            reps.insert(s);
        }
        for (const auto& s : reps)
            for (int p : s)
                if (p >= 0 && p < v.points()) at_vertex[p] += 1;
    }
    Int ulb = 0;
    for (int p = 0; p < v.points(); ++p) ulb = std::max(ulb, at_vertex[p]);
    rep.ulb_bound = v.points() == 0 ? 0 : ulb.convert_to<int>();

    rep.valid = rep.violations.empty();
    return rep;
}

ChainSpace chain_space(const GComplex& cx, int n) {
    if (!cx.has_level(n)) throw std::invalid_argument("level missing");
    ChainSpace chain;
    chain.n = n;
    const GSpace& v = cx.vertices;
    if (n == 0) {
        for (int p = 0; p < v.points(); ++p) {
            chain.reps.push_back({p});
            chain.index[{p}] = p;
            chain.w.push_back(v.point_weight(p));
        }
        return chain;
    }
    for (const auto& t : cx.higher[n - 1]) {
        if (!std::is_sorted(t.begin(), t.end())) continue;
        chain.index[t] = chain.size();
        chain.reps.push_back(t);
        chain.w.push_back(v.point_weight(t[0]));
    }
    return chain;
}

std::pair<int, int> rep_and_sign(const ChainSpace& chain, const std::vector<int>& tuple) {
    std::vector<int> sorted = tuple;
    int sign = 1;
    for (size_t i = 0; i < sorted.size(); ++i)
        for (size_t j = i + 1; j < sorted.size(); ++j)
            if (sorted[i] > sorted[j]) {
                std::swap(sorted[i], sorted[j]);
                sign = -sign;
            }
    auto it = chain.index.find(sorted);
    if (it == chain.index.end()) throw std::logic_error("tuple not in the chain space");
    return {it->second, sign};
}

Mat<Rat> boundary_matrix(const GComplex& cx, int n) {
    if (n < 1 || !cx.has_level(n)) throw std::invalid_argument("level missing");
    ChainSpace cn = chain_space(cx, n);
    ChainSpace cm = chain_space(cx, n - 1);
    Mat<Rat> m(cm.size(), cn.size());
    for (int j = 0; j < cn.size(); ++j) {
        const std::vector<int>& t = cn.reps[j];
        for (size_t f = 0; f < t.size(); ++f) {
            std::vector<int> face = t;
            face.erase(face.begin() + static_cast<long>(f));
            auto it = cm.index.find(face);
            if (it == cm.index.end()) throw std::logic_error("face missing from the complex");
            m(it->second, j) += (f % 2 == 0 ? Rat(1) : Rat(-1));
        }
    }
    return m;
}

std::vector<Rat> antisymmetrize(const GComplex& cx, int n, const std::vector<Rat>& f) {
    LevelSpace ls = level_space(cx, n);
    if (f.size() != ls.tuples.size()) throw std::invalid_argument("shape mismatch");
    Rat norm = Rat(1) / Rat(factorial(n + 1));
    std::vector<Rat> out(f.size());
    std::vector<int> positions(n + 1);
    for (size_t i = 0; i < ls.tuples.size(); ++i) {
        const std::vector<int>& u = ls.tuples[i];
        for (int p = 0; p <= n; ++p) positions[p] = p;
        Rat acc = 0;
        do {
            std::vector<int> permuted(n + 1);
            for (int p = 0; p <= n; ++p) permuted[p] = u[positions[p]];
            auto it = ls.index.find(permuted);
            if (it == ls.index.end()) throw std::logic_error("level not permutation closed");
            acc += Rat(permutation_sign(positions)) * f[it->second];
        } while (std::next_permutation(positions.begin(), positions.end()));
        out[i] = acc * norm;
    }
    return out;
}

Mat<Rat> chain_embedding(const GComplex& cx, int n) {
    LevelSpace ls = level_space(cx, n);
    ChainSpace chain = chain_space(cx, n);
    Mat<Rat> e(static_cast<int>(ls.tuples.size()), chain.size());
    for (size_t i = 0; i < ls.tuples.size(); ++i) {
        auto [r, sign] = rep_and_sign(chain, ls.tuples[i]);
        e(static_cast<int>(i), r) = sign;
    }
    return e;
}

AlphaPair alpha(const GComplex& cx, int n) {
    LevelSpace ls = level_space(cx, n);
    FundamentalDomain f = check_quasi_periodic(ls.space);
    AlphaPair out;
    out.by_domain = f.measure / Rat(factorial(n + 1));
    InvariantSubspace image{&ls.space, chain_embedding(cx, n)};
    out.by_dimension = vn_dimension(image);
    return out;
}

Rat alpha_value(const GComplex& cx, int n) {
    AlphaPair p = alpha(cx, n);
    if (p.by_domain != p.by_dimension)
        throw std::logic_error("chain dimension " + rat_str(p.by_dimension) +
                               " differs from domain measure route " + rat_str(p.by_domain));
    return p.by_domain;
}

FiberReport fiber_report(const GComplex& cx) {
    FiberReport rep;
    rep.one_dimensional = cx.dimension() <= 1;
    const GSpace& v = cx.vertices;
    ChainSpace edges;
    if (cx.dimension() >= 1) edges = chain_space(cx, 1);

    rep.all_connected = true;
    rep.all_trees = rep.one_dimensional;
    for (int x = 0; x < v.g->atoms(); ++x) {
        FiberInfo info;
        info.atom = x;
        std::vector<int> local(v.points(), -1);
        std::vector<int> verts;
        for (int p = 0; p < v.points(); ++p)
            if (v.anchor[p] == x) {
                local[p] = static_cast<int>(verts.size());
                verts.push_back(p);
            }
        info.vertex_count = static_cast<int>(verts.size());

        std::vector<int> parent(verts.size());
        for (size_t i = 0; i < verts.size(); ++i) parent[i] = static_cast<int>(i);
        auto find = [&](int i) {
            while (parent[i] != i) i = parent[i] = parent[parent[i]];
            return i;
        };
        for (int e = 0; e < edges.size(); ++e) {
            if (v.anchor[edges.reps[e][0]] != x) continue;
            ++info.edge_count;
            int a = find(local[edges.reps[e][0]]), b = find(local[edges.reps[e][1]]);
            if (a != b) parent[a] = b;
        }
        int components = 0;
        for (size_t i = 0; i < verts.size(); ++i)
            if (find(static_cast<int>(i)) == static_cast<int>(i)) ++components;
        info.connected = components <= 1;
        info.tree = rep.one_dimensional && info.connected &&
                    (info.vertex_count == 0 || info.edge_count == info.vertex_count - 1);
        rep.all_connected = rep.all_connected && info.connected;
        rep.all_trees = rep.all_trees && info.tree;
        rep.per_atom.push_back(info);
    }
    return rep;
}

}  // namespace gpd
