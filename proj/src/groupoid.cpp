#include <gpd/groupoid.hpp>

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace gpd {

ArrowSet normalized(ArrowSet set) {
    std::sort(set.begin(), set.end());
    set.erase(std::unique(set.begin(), set.end()), set.end());
    return set;
}

ArrowSet set_union(const ArrowSet& a, const ArrowSet& b) {
    ArrowSet out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

bool set_contains(const ArrowSet& a, int g) {
    return std::binary_search(a.begin(), a.end(), g);
}

ArrowSet FiniteGroupoid::unit_set() const {
    ArrowSet s(atoms());
    for (int i = 0; i < atoms(); ++i) s[i] = i;
    return s;
}

ArrowSet FiniteGroupoid::nonunit_arrows() const {
    ArrowSet s;
    for (int g = atoms(); g < arrows(); ++g) s.push_back(g);
    return s;
}

int FiniteGroupoid::arrow_by_label(const std::string& label) const {
    for (int g = 0; g < arrows(); ++g)
        if (arrow_labels[g] == label) return g;
    return -1;
}

int FiniteGroupoid::atom_by_label(const std::string& label) const {
    for (int x = 0; x < atoms(); ++x)
        if (atom_labels[x] == label) return x;
    return -1;
}

FiniteGroupoid assemble(const GroupoidData& data) {
    FiniteGroupoid g;
    std::map<std::string, int> atom_id;
    for (const auto& [label, w] : data.atoms) {
        if (atom_id.count(label)) throw std::invalid_argument("duplicate atom: " + label);
        atom_id[label] = g.atoms();
        g.atom_labels.push_back(label);
        g.atom_weights.push_back(w);
    }
    if (g.atoms() == 0) throw std::invalid_argument("empty unit space");

    std::map<std::string, int> arrow_id;
    for (int x = 0; x < g.atoms(); ++x) {
        arrow_id[g.atom_labels[x]] = x;
        g.arrow_labels.push_back(g.atom_labels[x]);
        g.src.push_back(x);
        g.rng.push_back(x);
    }
    for (const auto& [label, s, r] : data.arrows) {
        if (arrow_id.count(label)) throw std::invalid_argument("duplicate arrow: " + label);
        if (!atom_id.count(s) || !atom_id.count(r))
            throw std::invalid_argument("arrow " + label + " references unknown atom");
        arrow_id[label] = g.arrows();
        g.arrow_labels.push_back(label);
        g.src.push_back(atom_id[s]);
        g.rng.push_back(atom_id[r]);
    }

    int n = g.arrows();
    g.inv.assign(n, -1);
    for (int x = 0; x < g.atoms(); ++x) g.inv[x] = x;
    auto need_arrow = [&](const std::string& label) {
        auto it = arrow_id.find(label);
        if (it == arrow_id.end()) throw std::invalid_argument("unknown arrow: " + label);
        return it->second;
    };
    for (const auto& [a, b] : data.inverses) {
        int ga = need_arrow(a), gb = need_arrow(b);
        if ((g.inv[ga] != -1 && g.inv[ga] != gb) || (g.inv[gb] != -1 && g.inv[gb] != ga))
            throw std::invalid_argument("conflicting inverse for " + a);
        g.inv[ga] = gb;
        g.inv[gb] = ga;
    }
    for (int a = 0; a < n; ++a)
        if (g.inv[a] == -1)
            throw std::invalid_argument("arrow " + g.arrow_labels[a] + " has no inverse");

    g.comp.assign(n, std::vector<int>(n, -1));
    auto put = [&](int a, int b, int c) {
        if (g.comp[a][b] != -1 && g.comp[a][b] != c)
            throw std::invalid_argument("conflicting product " + g.arrow_labels[a] + " * " +
                                        g.arrow_labels[b]);
        g.comp[a][b] = c;
    };
    for (int a = 0; a < n; ++a) {
        put(g.unit_arrow(g.rng[a]), a, a);
        put(a, g.unit_arrow(g.src[a]), a);
        if (g.src[a] == g.rng[g.inv[a]]) {
            put(a, g.inv[a], g.unit_arrow(g.rng[a]));
            put(g.inv[a], a, g.unit_arrow(g.src[a]));
        }
    }
    for (const auto& [a, b, c] : data.compositions)
        put(need_arrow(a), need_arrow(b), need_arrow(c));
    for (int a = g.atoms(); a < n; ++a)
        for (int b = g.atoms(); b < n; ++b)
            if (g.composable(a, b) && g.comp[a][b] == -1)
                throw std::invalid_argument("missing product " + g.arrow_labels[a] + " * " +
                                            g.arrow_labels[b]);
    return g;
}

bool is_principal(const FiniteGroupoid& g) {
    std::set<std::pair<int, int>> seen;
    for (int a = 0; a < g.arrows(); ++a)
        if (!seen.insert({g.rng[a], g.src[a]}).second) return false;
    return true;
}

ValidationReport validate(const FiniteGroupoid& g) {
    ValidationReport rep;
    auto flag = [&](const std::string& msg) { rep.violations.push_back(msg); };
    const int n = g.arrows();

    Rat total = 0;
    for (int x = 0; x < g.atoms(); ++x) {
        if (g.atom_weights[x] <= 0)
            flag("atom " + g.atom_labels[x] + " has non-positive weight");
        total += g.atom_weights[x];
    }
    if (total != g.declared_mass)
        flag("atom weights sum to " + rat_str(total) + ", expected " + rat_str(g.declared_mass));

    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
            int c = g.comp[a][b];
            if (g.composable(a, b)) {
                if (c < 0) {
                    flag("missing product " + g.arrow_labels[a] + " * " + g.arrow_labels[b]);
                } else if (g.src[c] != g.src[b] || g.rng[c] != g.rng[a]) {
                    flag("product " + g.arrow_labels[a] + " * " + g.arrow_labels[b] +
                         " has wrong endpoints");
                }
            } else if (c != -1) {
                flag("non-composable pair " + g.arrow_labels[a] + " * " + g.arrow_labels[b] +
                     " has a product");
            }
        }
    }

    for (int x = 0; x < g.atoms(); ++x) {
        int u = g.unit_arrow(x);
        if (g.src[u] != x || g.rng[u] != x) flag("unit of " + g.atom_labels[x] + " misplaced");
    }
    for (int a = 0; a < n; ++a) {
        int u_r = g.unit_arrow(g.rng[a]), u_s = g.unit_arrow(g.src[a]);
        if (g.comp[u_r][a] != a || g.comp[a][u_s] != a)
            flag("unit law fails at " + g.arrow_labels[a]);
    }

    for (int a = 0; a < n; ++a) {
        int b = g.inv[a];
        if (b < 0 || b >= n || g.inv[b] != a) {
            flag("inverse of " + g.arrow_labels[a] + " is not involutive");
            continue;
        }
        if (g.src[b] != g.rng[a] || g.rng[b] != g.src[a])
            flag("inverse of " + g.arrow_labels[a] + " has wrong endpoints");
        else if (g.comp[a][b] != g.unit_arrow(g.rng[a]) || g.comp[b][a] != g.unit_arrow(g.src[a]))
            flag("inverse law fails at " + g.arrow_labels[a]);
    }

    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            if (!g.composable(a, b)) continue;
            int ab = g.comp[a][b];
            if (ab < 0) continue;
            for (int c = 0; c < n; ++c) {
                if (!g.composable(b, c)) continue;
                int bc = g.comp[b][c];
                if (bc < 0 || g.comp[ab][c] < 0 || g.comp[a][bc] < 0) continue;
                if (g.comp[ab][c] != g.comp[a][bc])
                    flag("associativity fails at (" + g.arrow_labels[a] + ", " +
                         g.arrow_labels[b] + ", " + g.arrow_labels[c] + ")");
            }
        }

    for (int a = 0; a < n; ++a)
        if (g.atom_weights[g.src[a]] != g.atom_weights[g.rng[a]])
            flag("weight(s) != weight(r) at " + g.arrow_labels[a]);

    rep.valid = rep.violations.empty();
    rep.principal = is_principal(g);
    return rep;
}

Rat mu_g(const FiniteGroupoid& g, const ArrowSet& set) {
    Rat total = 0;
    for (int a : set) {
        if (a < 0 || a >= g.arrows()) throw std::invalid_argument("arrow id out of range");
        total += g.atom_weights[g.src[a]];
    }
    return total;
}

bool is_one_sheeted(const FiniteGroupoid& g, const ArrowSet& set) {
    std::set<int> sources, ranges;
    for (int a : set) {
        if (!sources.insert(g.src[a]).second) return false;
        if (!ranges.insert(g.rng[a]).second) return false;
    }
    return true;
}

std::vector<ArrowSet> one_sheeted_decomposition(const FiniteGroupoid& g) {
    std::vector<ArrowSet> pieces;
    pieces.push_back(g.unit_set());
    for (int a = g.atoms(); a < g.arrows(); ++a) {
        bool placed = false;
        for (ArrowSet& piece : pieces) {
            if (set_contains(piece, g.inv[a])) continue;
            ArrowSet trial = piece;
            trial.push_back(a);
            if (!is_one_sheeted(g, trial)) continue;
            piece = std::move(trial);
            placed = true;
            break;
        }
        if (!placed) pieces.push_back({a});
    }
    return pieces;
}

std::map<int, int> partial_bijection(const FiniteGroupoid& g, const ArrowSet& e) {
    if (!is_one_sheeted(g, e)) throw std::invalid_argument("arrow set is not one-sheeted");
    std::map<int, int> phi;
    for (int a : e) phi[g.src[a]] = g.rng[a];
    return phi;
}

ArrowSet arrow_closure(const FiniteGroupoid& g, const ArrowSet& a) {
    std::vector<bool> in(g.arrows(), false);
    for (int x = 0; x < g.atoms(); ++x) in[x] = true;
    for (int arrow : a) {
        in[arrow] = true;
        in[g.inv[arrow]] = true;
    }
    bool grew = true;
    while (grew) {
        grew = false;
        for (int p = 0; p < g.arrows(); ++p) {
            if (!in[p]) continue;
            for (int q = 0; q < g.arrows(); ++q) {
                if (!in[q] || !g.composable(p, q)) continue;
                int pq = g.comp[p][q];
                if (pq >= 0 && !in[pq]) {
                    in[pq] = true;
                    grew = true;
                }
            }
        }
    }
    ArrowSet out;
    for (int arrow = 0; arrow < g.arrows(); ++arrow)
        if (in[arrow]) out.push_back(arrow);
    return out;
}

bool generates(const FiniteGroupoid& g, const ArrowSet& a) {
    return static_cast<int>(arrow_closure(g, a).size()) == g.arrows();
}

FiniteGroupoid generated_subgroupoid(const FiniteGroupoid& g, const ArrowSet& a) {
    ArrowSet keep = arrow_closure(g, a);
    std::vector<int> new_id(g.arrows(), -1);
    for (size_t i = 0; i < keep.size(); ++i) new_id[keep[i]] = static_cast<int>(i);

    FiniteGroupoid h;
    h.atom_labels = g.atom_labels;
    h.atom_weights = g.atom_weights;
    h.declared_mass = g.declared_mass;
    for (int arrow : keep) {
        h.arrow_labels.push_back(g.arrow_labels[arrow]);
        h.src.push_back(g.src[arrow]);
        h.rng.push_back(g.rng[arrow]);
        h.inv.push_back(new_id[g.inv[arrow]]);
    }
    int n = static_cast<int>(keep.size());
    h.comp.assign(n, std::vector<int>(n, -1));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            int c = g.comp[keep[i]][keep[j]];
            if (c >= 0) h.comp[i][j] = new_id[c];
        }
    return h;
}

FiniteGroupoid restriction(const FiniteGroupoid& g, const std::vector<int>& y_in) {
    std::vector<int> y = y_in;
    std::sort(y.begin(), y.end());
    y.erase(std::unique(y.begin(), y.end()), y.end());
    if (y.empty()) throw std::invalid_argument("restriction to empty atom set");
    for (int x : y)
        if (x < 0 || x >= g.atoms()) throw std::invalid_argument("atom id out of range");

    std::vector<int> new_atom(g.atoms(), -1);
    FiniteGroupoid h;
    h.declared_mass = 0;
    for (int x : y) {
        new_atom[x] = h.atoms();
        h.atom_labels.push_back(g.atom_labels[x]);
        h.atom_weights.push_back(g.atom_weights[x]);
        h.declared_mass += g.atom_weights[x];
    }

    ArrowSet keep;
    for (int x : y) keep.push_back(g.unit_arrow(x));
    for (int a = g.atoms(); a < g.arrows(); ++a)
        if (new_atom[g.src[a]] >= 0 && new_atom[g.rng[a]] >= 0) keep.push_back(a);

    std::vector<int> new_id(g.arrows(), -1);
    for (size_t i = 0; i < keep.size(); ++i) new_id[keep[i]] = static_cast<int>(i);
    for (int arrow : keep) {
        h.arrow_labels.push_back(g.arrow_labels[arrow]);
        h.src.push_back(new_atom[g.src[arrow]]);
        h.rng.push_back(new_atom[g.rng[arrow]]);
        h.inv.push_back(new_id[g.inv[arrow]]);
    }
    int n = static_cast<int>(keep.size());
    h.comp.assign(n, std::vector<int>(n, -1));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            int c = g.comp[keep[i]][keep[j]];
            if (c >= 0) h.comp[i][j] = new_id[c];
        }
    return h;
}

FiniteGroupoid orbit_relation(const FiniteGroupoid& g) {
    std::set<std::pair<int, int>> pairs;  // (range, source), non-unit
    for (int a = g.atoms(); a < g.arrows(); ++a)
        if (g.rng[a] != g.src[a]) pairs.insert({g.rng[a], g.src[a]});

    GroupoidData data;
    for (int x = 0; x < g.atoms(); ++x) data.atoms.push_back({g.atom_labels[x], g.atom_weights[x]});
    auto pair_label = [&](int r, int s) { return g.atom_labels[r] + "|" + g.atom_labels[s]; };
    for (auto [r, s] : pairs)
        data.arrows.push_back({pair_label(r, s), g.atom_labels[s], g.atom_labels[r]});
    for (auto [r, s] : pairs) data.inverses.push_back({pair_label(r, s), pair_label(s, r)});
    for (auto [r1, s1] : pairs)
        for (auto [r2, s2] : pairs) {
            if (s1 != r2 || r1 == s2) continue;
            data.compositions.push_back({pair_label(r1, s1), pair_label(r2, s2), pair_label(r1, s2)});
        }
    return assemble(data);
}

std::vector<std::vector<int>> invariant_partition(const FiniteGroupoid& g) {
    std::vector<int> block(g.atoms(), -1);
    std::vector<std::vector<int>> blocks;
    for (int x = 0; x < g.atoms(); ++x) {
        if (block[x] >= 0) continue;
        int id = static_cast<int>(blocks.size());
        std::vector<int> todo{x}, members;
        block[x] = id;
        while (!todo.empty()) {
            int y = todo.back();
            todo.pop_back();
            members.push_back(y);
            for (int a = 0; a < g.arrows(); ++a) {
                if (g.src[a] == y && block[g.rng[a]] < 0) {
                    block[g.rng[a]] = id;
                    todo.push_back(g.rng[a]);
                }
                if (g.rng[a] == y && block[g.src[a]] < 0) {
                    block[g.src[a]] = id;
                    todo.push_back(g.src[a]);
                }
            }
        }
        std::sort(members.begin(), members.end());
        blocks.push_back(std::move(members));
    }
    return blocks;
}

FiniteGroupoid transformation_groupoid(const std::vector<std::vector<int>>& table,
                                       const std::vector<std::string>& element_names,
                                       const std::vector<std::vector<int>>& action,
                                       const std::vector<std::pair<std::string, Rat>>& atoms) {
    const int k = static_cast<int>(table.size());
    if (k == 0 || static_cast<int>(element_names.size()) != k)
        throw std::invalid_argument("bad group table");
    for (const auto& row : table)
        if (static_cast<int>(row.size()) != k) throw std::invalid_argument("bad group table");
    for (int i = 0; i < k; ++i)
        if (table[0][i] != i || table[i][0] != i)
            throw std::invalid_argument("element 0 is not an identity");
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            for (int l = 0; l < k; ++l)
                if (table[table[i][j]][l] != table[i][table[j][l]])
                    throw std::invalid_argument("group table not associative");
    std::vector<int> ginv(k, -1);
    for (int i = 0; i < k; ++i) {
        for (int j = 0; j < k; ++j)
            if (table[i][j] == 0 && table[j][i] == 0) ginv[i] = j;
        if (ginv[i] < 0) throw std::invalid_argument("group table lacks inverses");
    }

    const int na = static_cast<int>(atoms.size());
    if (static_cast<int>(action.size()) != na) throw std::invalid_argument("bad action table");
    for (const auto& row : action) {
        if (static_cast<int>(row.size()) != k) throw std::invalid_argument("bad action table");
        for (int img : row)
            if (img < 0 || img >= na) throw std::invalid_argument("bad action table");
    }
    for (int x = 0; x < na; ++x)
        if (action[x][0] != x) throw std::invalid_argument("identity does not act trivially");
    for (int x = 0; x < na; ++x)
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j)
                if (action[action[x][i]][j] != action[x][table[i][j]])
                    throw std::invalid_argument("action is not a right action");
    for (int x = 0; x < na; ++x)
        for (int i = 0; i < k; ++i)
            if (atoms[action[x][i]].second != atoms[x].second)
                throw std::invalid_argument("action does not preserve the measure");

    GroupoidData data;
    data.atoms = atoms;
    auto name = [&](int x, int i) { return atoms[x].first + "*" + element_names[i]; };
    for (int x = 0; x < na; ++x)
        for (int i = 1; i < k; ++i)
            data.arrows.push_back({name(x, i), atoms[action[x][i]].first, atoms[x].first});
    for (int x = 0; x < na; ++x)
        for (int i = 1; i < k; ++i) data.inverses.push_back({name(x, i), name(action[x][i], ginv[i])});
    for (int x = 0; x < na; ++x)
        for (int i = 1; i < k; ++i)
            for (int j = 1; j < k; ++j) {
                int ij = table[i][j];
                std::string product =
                    ij == 0 ? atoms[x].first : name(x, ij);
                data.compositions.push_back({name(x, i), name(action[x][i], j), product});
            }
    return assemble(data);
}

IsotropyGroup isotropy(const FiniteGroupoid& g, int x) {
    if (x < 0 || x >= g.atoms()) throw std::invalid_argument("atom id out of range");
    IsotropyGroup iso;
    iso.arrows.push_back(g.unit_arrow(x));
    for (int a = g.atoms(); a < g.arrows(); ++a)
        if (g.src[a] == x && g.rng[a] == x) iso.arrows.push_back(a);
    int n = static_cast<int>(iso.arrows.size());
    std::map<int, int> idx;
    for (int i = 0; i < n; ++i) idx[iso.arrows[i]] = i;
    iso.table.assign(n, std::vector<int>(n, -1));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) iso.table[i][j] = idx.at(g.comp[iso.arrows[i]][iso.arrows[j]]);
    return iso;
}

}  // namespace gpd
