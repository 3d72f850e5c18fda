#include <gpd/cost.hpp>
#include <gpd/betti.hpp>

#include <algorithm>
#include <queue>
#include <stdexcept>

namespace gpd {

namespace {

std::vector<int> inverse_reduced_reps(const FiniteGroupoid& g) {
    std::vector<int> reps;
    for (int a : g.nonunit_arrows())
        if (g.inv[a] >= a) reps.push_back(a);
    return reps;
}

bool next_combination(std::vector<int>& pick, int total) {
    int size = static_cast<int>(pick.size());
    int pos = size - 1;
    while (pos >= 0 && pick[pos] == total - size + pos) --pos;
    if (pos < 0) return false;
    ++pick[pos];
    for (int i = pos + 1; i < size; ++i) pick[i] = pick[i - 1] + 1;
    return true;
}

}  // namespace

GraphingCheck is_graphing(const FiniteGroupoid& g, const Graphing& e) {
    ArrowSet all;
    for (const ArrowSet& piece : e) {
        if (!is_one_sheeted(g, piece))
            throw std::invalid_argument("graphing piece is not one-sheeted");
        all = set_union(all, piece);
    }
    ArrowSet closure = arrow_closure(g, all);
    GraphingCheck out;
    if (static_cast<int>(closure.size()) == g.arrows()) {
        out.ok = true;
        return out;
    }
    for (int a = 0; a < g.arrows(); ++a)
        if (!set_contains(closure, a)) {
            out.witness = a;
            break;
        }
    return out;
}

Rat cost_of_graphing(const FiniteGroupoid& g, const Graphing& e) {
    Rat total = 0;
    for (const ArrowSet& piece : e) total += mu_g(g, piece);
    return total;
}

Graphing disjointify(const Graphing& e) {
    Graphing out;
    ArrowSet seen;
    for (const ArrowSet& piece : e) {
        ArrowSet pruned;
        for (int a : piece)
            if (!set_contains(seen, a)) pruned.push_back(a);
        seen = set_union(seen, pruned);
        out.push_back(pruned);
    }
    return out;
}

CostCertificate minimal_cost(const FiniteGroupoid& g, long long budget) {
    std::vector<int> order = inverse_reduced_reps(g);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        const Rat& wa = g.weight(g.src[a]);
        const Rat& wb = g.weight(g.src[b]);
        if (wa != wb) return wa > wb;
        return a < b;
    });

    CostCertificate cert;
    cert.generating = normalized(order);
    cert.value = mu_g(g, cert.generating);

    ArrowSet current;
    Rat mass = 0;
    bool exhausted = false;
    auto dfs = [&](auto&& self, size_t idx) -> void {
        if (exhausted) return;
        ++cert.nodes;
        if (cert.nodes > budget) {
            exhausted = true;
            return;
        }
        if (mass >= cert.value) {
            ++cert.prunes;
            return;
        }
        ArrowSet sorted = normalized(current);
        if (generates(g, sorted)) {
            cert.value = mass;
            cert.generating = sorted;
            return;  // supersets only cost more
        }
        if (idx == order.size()) return;
        int a = order[idx];
        current.push_back(a);
        mass += g.weight(g.src[a]);
        self(self, idx + 1);
        current.pop_back();
        mass -= g.weight(g.src[a]);
        self(self, idx + 1);
    };
    dfs(dfs, 0);
    cert.exact = !exhausted;

    if (!generates(g, cert.generating) || mu_g(g, cert.generating) != cert.value)
        throw std::logic_error("cost certificate failed re-verification");
    return cert;
}

Rat minimal_cost_exhaustive(const FiniteGroupoid& g) {
    std::vector<int> reps = inverse_reduced_reps(g);
    if (reps.size() > 20) throw std::invalid_argument("too many arrows for exhaustive search");
    bool have = false;
    Rat best = 0;
    for (unsigned long mask = 0; mask < (1ul << reps.size()); ++mask) {
        ArrowSet sub;
        for (size_t i = 0; i < reps.size(); ++i)
            if (mask >> i & 1) sub.push_back(reps[i]);
        if (!generates(g, sub)) continue;
        Rat m = mu_g(g, sub);
        if (!have || m < best) {
            best = m;
            have = true;
        }
    }
    if (!have) throw std::logic_error("arrow set of the groupoid fails to generate it");
    return best;
}

TreeingReport is_treeing(const FiniteGroupoid& g, const Graphing& e) {
    for (const ArrowSet& piece : e)
        if (!is_one_sheeted(g, piece))
            throw std::invalid_argument("treeing piece is not one-sheeted");
    for (size_t i = 0; i < e.size(); ++i)
        for (size_t j = i + 1; j < e.size(); ++j)
            if (!e[i].empty() && normalized(e[i]) == normalized(e[j]))
                throw std::invalid_argument("duplicate graphing member");

    TreeingReport out;
    int pieces = static_cast<int>(e.size());
    if (pieces == 0) {
        out.treeing = true;
        return out;
    }
    auto arrows_of = [&](int piece, int sign01) {
        if (sign01 == 0) return e[piece];
        ArrowSet flipped;
        for (int a : e[piece]) flipped.push_back(g.inv[a]);
        std::sort(flipped.begin(), flipped.end());
        return flipped;
    };
    auto state_id = [&](int arrow, int piece, int sign01) {
        return (arrow * pieces + piece) * 2 + sign01;
    };
    auto letters_to_root = [&](const std::vector<int>& parent, int id) {
        std::vector<std::pair<int, int>> word;
        while (id != -1) {
            int sign01 = id % 2;
            int piece = (id / 2) % pieces;
            word.push_back({piece, sign01 == 0 ? 1 : -1});
            id = parent[id];
        }
        std::reverse(word.begin(), word.end());
        return word;
    };

    std::vector<int> parent(static_cast<size_t>(g.arrows()) * pieces * 2, -2);
    std::queue<int> queue;
    for (int p = 0; p < pieces; ++p)
        for (int s = 0; s < 2; ++s)
            for (int a : arrows_of(p, s)) {
                if (g.is_unit(a)) {
                    out.witness = {{p, s == 0 ? 1 : -1}};
                    out.unit_arrow = a;
                    return out;
                }
                int id = state_id(a, p, s);
                if (parent[id] == -2) {
                    parent[id] = -1;
                    queue.push(id);
                }
            }
    while (!queue.empty()) {
        int id = queue.front();
        queue.pop();
        int sign01 = id % 2;
        int piece = (id / 2) % pieces;
        int arrow = id / 2 / pieces;
        for (int p2 = 0; p2 < pieces; ++p2)
            for (int t = 0; t < 2; ++t) {
                if (p2 == piece && t != sign01) continue;  // cancelling letter
                for (int h : arrows_of(p2, t)) {
                    if (!g.composable(arrow, h)) continue;
                    int product = g.comp[arrow][h];
                    if (g.is_unit(product)) {
                        out.witness = letters_to_root(parent, id);
                        out.witness.push_back({p2, t == 0 ? 1 : -1});
                        out.unit_arrow = product;
                        return out;
                    }
                    int nid = state_id(product, p2, t);
                    if (parent[nid] == -2) {
                        parent[nid] = id;
                        queue.push(nid);
                    }
                }
            }
    }
    out.treeing = true;
    return out;
}

TreeabilityResult treeable_search(const FiniteGroupoid& g, long long budget) {
    TreeabilityResult out;
    std::vector<int> reps = inverse_reduced_reps(g);
    int total = static_cast<int>(reps.size());
    long long used = 0;
    for (int size = 0; size <= total; ++size) {
        std::vector<int> pick(size);
        for (int i = 0; i < size; ++i) pick[i] = i;
        while (true) {
            if (++used > budget) return out;
            ArrowSet sub;
            for (int i : pick) sub.push_back(reps[i]);
            if (generates(g, sub)) {
                Graphing e;
                for (int a : sub) e.push_back({a});
                if (is_treeing(g, e).treeing) {
                    out.decided = true;
                    out.treeable = true;
                    out.treeing = e;
                    return out;
                }
            }
            if (!next_combination(pick, total)) break;
        }
    }
    out.decided = true;
    out.treeable = false;
    return out;
}

TreeingCostReport treeing_cost_check(const FiniteGroupoid& g, const Graphing& e) {
    TreeingCostReport out;
    if (!is_graphing(g, e).ok) {
        out.unmet = "the pieces do not generate the groupoid";
        return out;
    }
    if (!is_treeing(g, e).treeing) {
        out.unmet = "the graphing is not a treeing";
        return out;
    }
    out.applicable = true;
    out.minimal = minimal_cost(g).value;
    out.graphing_cost = cost_of_graphing(g, e);
    out.equal = out.minimal == out.graphing_cost;
    return out;
}

InductionReport induction_check(const FiniteGroupoid& g, const std::vector<int>& atoms_y) {
    InductionReport out;
    std::vector<int> y = atoms_y;
    std::sort(y.begin(), y.end());
    y.erase(std::unique(y.begin(), y.end()), y.end());
    for (int x : y)
        if (x < 0 || x >= g.atoms()) throw std::invalid_argument("atom id out of range");
    if (y.empty()) {
        out.unmet = "the subset is empty";
        return out;
    }
    for (const std::vector<int>& block : invariant_partition(g)) {
        bool meets = false;
        for (int x : block) meets = meets || std::binary_search(y.begin(), y.end(), x);
        if (!meets) {
            out.unmet = "the subset misses the orbit of " + g.atom_labels[block[0]];
            return out;
        }
    }
    out.applicable = true;
    FiniteGroupoid h = restriction(g, y);
    Rat mass_y = 0;
    for (int x : y) mass_y += g.weight(x);
    out.lhs = minimal_cost(g).value - g.declared_mass;
    out.rhs = minimal_cost(h).value - mass_y;
    out.equal = out.lhs == out.rhs;

    TreeabilityResult whole = treeable_search(g);
    TreeabilityResult restricted = treeable_search(h);
    out.treeability_decided = whole.decided && restricted.decided;
    if (out.treeability_decided) {
        out.treeable_whole = whole.treeable;
        out.treeable_restricted = restricted.treeable;
        out.treeability_matches = whole.treeable == restricted.treeable;
    }
    return out;
}

DecompositionReport cost_decomposition_check(const FiniteGroupoid& g) {
    DecompositionReport out;
    out.whole = minimal_cost(g).value;
    Rat sum = 0;
    for (const std::vector<int>& block : invariant_partition(g)) {
        Rat part = minimal_cost(restriction(g, block)).value;
        out.parts.push_back(part);
        sum += part;
    }
    out.equal = out.whole == sum;
    return out;
}

FreeProductReport free_product_check(const FiniteGroupoid& g, const ArrowSet& g1,
                                     const ArrowSet& g2) {
    FreeProductReport out;
    FreeProductCertificate& cert = out.cert;
    cert.g1 = normalized(g1);
    cert.g2 = normalized(g2);
    for (int a : set_union(cert.g1, cert.g2))
        if (a < 0 || a >= g.arrows()) throw std::invalid_argument("arrow id out of range");
    std::set_intersection(cert.g1.begin(), cert.g1.end(), cert.g2.begin(), cert.g2.end(),
                          std::back_inserter(cert.g3));

    for (int x = 0; x < g.atoms(); ++x)
        if (!set_contains(cert.g1, g.unit_arrow(x)) || !set_contains(cert.g2, g.unit_arrow(x))) {
            out.unmet = "designated subgroupoids must contain every unit";
            return out;
        }
    cert.subgroupoids =
        arrow_closure(g, cert.g1) == cert.g1 && arrow_closure(g, cert.g2) == cert.g2;
    if (!cert.subgroupoids) {
        out.unmet = "a designated arrow set is not a subgroupoid";
        return out;
    }
    cert.generation = generates(g, set_union(cert.g1, cert.g2));
    if (!cert.generation) {
        out.unmet = "the designated subgroupoids do not generate";
        return out;
    }
    cert.principal3 = true;
    for (size_t i = 0; i < cert.g3.size() && cert.principal3; ++i)
        for (size_t j = i + 1; j < cert.g3.size(); ++j)
            if (g.rng[cert.g3[i]] == g.rng[cert.g3[j]] && g.src[cert.g3[i]] == g.src[cert.g3[j]]) {
                cert.principal3 = false;
                break;
            }
    if (!cert.principal3) {
        out.unmet = "the shared subgroupoid is not principal";
        return out;
    }

    // alternating products: letters alternate between the two proper sides
    ArrowSet letters[2];
    for (int a : cert.g1)
        if (!set_contains(cert.g3, a)) letters[0].push_back(a);
    for (int a : cert.g2)
        if (!set_contains(cert.g3, a)) letters[1].push_back(a);

    std::vector<int> parent(static_cast<size_t>(g.arrows()) * 2, -2);
    std::vector<int> via(static_cast<size_t>(g.arrows()) * 2, -1);
    std::queue<int> queue;
    cert.freeness = true;
    for (int side = 0; side < 2; ++side)
        for (int a : letters[side]) {
            int id = a * 2 + side;
            if (parent[id] == -2) {
                parent[id] = -1;
                via[id] = a;
                queue.push(id);
            }
        }
    while (!queue.empty() && cert.freeness) {
        int id = queue.front();
        queue.pop();
        int side = id % 2;
        int arrow = id / 2;
        int other = 1 - side;
        for (int h : letters[other]) {
            if (!g.composable(arrow, h)) continue;
            int product = g.comp[arrow][h];
            if (set_contains(cert.g3, product)) {
                for (int cur = id; cur != -1; cur = parent[cur]) cert.witness.push_back(via[cur]);
                std::reverse(cert.witness.begin(), cert.witness.end());
                cert.witness.push_back(h);
                cert.freeness = false;
                break;
            }
            int nid = product * 2 + other;
            if (parent[nid] == -2) {
                parent[nid] = id;
                via[nid] = h;
                queue.push(nid);
            }
        }
    }
    if (!cert.freeness) {
        out.unmet = "an alternating product lands in the shared subgroupoid";
        return out;
    }

    out.applicable = true;
    out.whole = minimal_cost(g).value;
    out.part1 = minimal_cost(generated_subgroupoid(g, cert.g1)).value;
    out.part2 = minimal_cost(generated_subgroupoid(g, cert.g2)).value;
    out.shared = minimal_cost(generated_subgroupoid(g, cert.g3)).value;
    out.equal = out.whole == out.part1 + out.part2 - out.shared;
    return out;
}

OrbitCostReport orbit_relation_cost_check(const FiniteGroupoid& g) {
    OrbitCostReport out;
    out.cost_groupoid = minimal_cost(g).value;
    FiniteGroupoid relation = orbit_relation(g);
    out.cost_relation = minimal_cost(relation).value;
    out.holds = out.cost_groupoid >= out.cost_relation;
    return out;
}

GraphingIdentityReport graphing_cost_identity(const FiniteGroupoid& g, const Graphing& e) {
    GraphingIdentityReport out;
    GComplex cx = build_graphing_complex(g, e);
    ArrowSet all;
    for (const ArrowSet& piece : e) all = set_union(all, piece);
    out.equality_expected = true;
    for (int a : all)
        if (g.is_unit(a) || set_contains(all, g.inv[a])) out.equality_expected = false;
    out.alpha1 = alpha_value(cx, 1);
    out.cost = cost_of_graphing(g, e);
    out.equal = out.alpha1 == out.cost;
    out.flagged = !out.equality_expected && !out.equal;
    return out;
}

CostBettiReport cost_vs_betti_check(const FiniteGroupoid& g) {
    CostBettiReport out;
    GroupoidBetti betti = betti_groupoid(g);
    out.beta0 = betti.beta0;
    out.beta1_upper = betti.beta1_upper;
    out.beta1_exact = betti.exact1;
    CostCertificate cost = minimal_cost(g);
    out.cost = cost.value;
    out.cost_exact = cost.exact;

    // without an exact beta_1 only its trivial lower bound can be asserted
    Rat beta1_low = out.beta1_exact ? out.beta1_upper : Rat(0);
    out.holds = beta1_low - out.beta0 + g.declared_mass <= out.cost;

    TreeabilityResult tree = treeable_search(g);
    out.treeability_decided = tree.decided;
    if (tree.decided) {
        out.treeable = tree.treeable;
        if (tree.treeable)
            out.equality =
                out.beta1_exact && out.beta1_upper - out.beta0 + g.declared_mass == out.cost;
    }
    return out;
}

}  // namespace gpd
