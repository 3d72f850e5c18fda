#include <gpd/fixtures.hpp>

#include <stdexcept>

namespace gpd {

GroupoidDocument fixture_triv2() {
    GroupoidData data;
    data.atoms = {{"x", Rat(1, 2)}, {"y", Rat(1, 2)}};
    return {assemble(data), {}, {}};
}

GroupoidDocument fixture_full_relation(const std::vector<std::string>& atom_labels) {
    const int n = static_cast<int>(atom_labels.size());
    if (n == 0) throw std::invalid_argument("no atoms");
    GroupoidData data;
    for (const std::string& name : atom_labels) data.atoms.push_back({name, Rat(1, n)});
    auto lbl = [&](int s, int r) { return atom_labels[s] + atom_labels[r]; };
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            data.arrows.push_back({lbl(i, j), atom_labels[i], atom_labels[j]});
            data.arrows.push_back({lbl(j, i), atom_labels[j], atom_labels[i]});
            data.inverses.push_back({lbl(i, j), lbl(j, i)});
        }
    for (int s1 = 0; s1 < n; ++s1)
        for (int r1 = 0; r1 < n; ++r1) {
            if (r1 == s1) continue;
            for (int s2 = 0; s2 < n; ++s2) {
                if (s2 == s1) continue;  // (s2 -> s1) would be a unit, law auto-filled
                if (s2 == r1) continue;  // inverse pair, product auto-filled
                data.compositions.push_back({lbl(s1, r1), lbl(s2, s1), lbl(s2, r1)});
            }
        }
    return {assemble(data), {}, {}};
}

GroupoidDocument fixture_r2() { return fixture_full_relation({"x", "y"}); }

GroupoidDocument fixture_r3() { return fixture_full_relation({"a", "b", "c"}); }

GroupoidDocument fixture_z2pt() {
    GroupoidData data;
    data.atoms = {{"p", Rat(1)}};
    data.arrows = {{"a", "p", "p"}};
    data.inverses = {{"a", "a"}};
    return {assemble(data), {}, {}};
}

GroupoidDocument fixture_amalg3() {
    GroupoidDocument doc = fixture_r3();
    const FiniteGroupoid& g = doc.g;
    ArrowSet g1 = g.unit_set(), g2 = g.unit_set(), g3 = g.unit_set();
    g1 = set_union(g1, normalized({g.arrow_by_label("ab"), g.arrow_by_label("ba")}));
    g2 = set_union(g2, normalized({g.arrow_by_label("bc"), g.arrow_by_label("cb")}));
    doc.arrow_sets = {{"G1", g1}, {"G2", g2}, {"G3", g3}};
    return doc;
}

GroupoidDocument fixture_swap() {
    std::vector<std::vector<int>> table = {{0, 1}, {1, 0}};
    std::vector<std::vector<int>> action = {{0, 1}, {1, 0}};
    FiniteGroupoid g = transformation_groupoid(table, {"e", "s"}, action,
                                               {{"x", Rat(1, 2)}, {"y", Rat(1, 2)}});
    return {g, {}, {}};
}

GroupoidDocument fixture_trivaction() {
    std::vector<std::vector<int>> table = {{0, 1}, {1, 0}};
    std::vector<std::vector<int>> action = {{0, 0}, {1, 1}};
    FiniteGroupoid g = transformation_groupoid(table, {"e", "s"}, action,
                                               {{"x", Rat(1, 2)}, {"y", Rat(1, 2)}});
    return {g, {}, {}};
}

const std::vector<std::string>& fixture_names() {
    static const std::vector<std::string> names = {"triv2", "r2",   "r3",        "z2pt",
                                                   "amalg3", "swap", "trivaction"};
    return names;
}

GroupoidDocument fixture_by_name(const std::string& name) {
    if (name == "triv2") return fixture_triv2();
    if (name == "r2") return fixture_r2();
    if (name == "r3") return fixture_r3();
    if (name == "z2pt") return fixture_z2pt();
    if (name == "amalg3") return fixture_amalg3();
    if (name == "swap") return fixture_swap();
    if (name == "trivaction") return fixture_trivaction();
    throw std::invalid_argument("unknown fixture: " + name);
}

}  // namespace gpd
