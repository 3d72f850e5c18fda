#include <gpd/random_gen.hpp>
#include <gpd/groupoid.hpp>

#include <random>
#include <stdexcept>
#include <tuple>

namespace gpd {

GroupoidDocument random_groupoid(std::uint64_t seed, int atoms, int isotropy_max,
                                 long long arrow_budget) {
    if (atoms < 1) throw std::invalid_argument("need at least one atom");
    if (isotropy_max < 1) throw std::invalid_argument("need isotropy_max >= 1");
    std::mt19937_64 rng(seed);
    // raw modulo keeps the draw sequence identical across standard libraries
    auto draw = [&](int bound) { return static_cast<int>(rng() % static_cast<std::uint64_t>(bound)); };

    std::vector<std::vector<int>> orbits;
    int next = 0;
    while (next < atoms) {
        int size = 1 + draw(atoms - next);
        std::vector<int> orbit;
        for (int i = 0; i < size; ++i) orbit.push_back(next++);
        orbits.push_back(orbit);
    }
    std::vector<int> twist(orbits.size());
    long long total_arrows = 0;
    for (size_t o = 0; o < orbits.size(); ++o) {
        twist[o] = 1 + draw(isotropy_max);
        long long m = static_cast<long long>(orbits[o].size());
        total_arrows += m * m * twist[o];
    }
    if (total_arrows > arrow_budget) throw std::invalid_argument("arrow budget exceeded");

    std::vector<int> share(orbits.size());
    int total_share = 0;
    for (auto& s : share) {
        s = 1 + draw(9);
        total_share += s;
    }

    std::vector<std::string> label(atoms);
    for (int x = 0; x < atoms; ++x) label[x] = "a" + std::to_string(x);
    auto arrow_name = [&](int rng_atom, int src_atom, int j) {
        std::string s = label[src_atom] + ">" + label[rng_atom];
        if (j > 0) s += "#" + std::to_string(j);
        return s;
    };

    GroupoidData data;
    for (size_t o = 0; o < orbits.size(); ++o) {
        Rat weight = Rat(share[o]) / (Rat(total_share) * Rat(static_cast<int>(orbits[o].size())));
        for (int x : orbits[o]) data.atoms.push_back({label[x], weight});
    }
    for (size_t o = 0; o < orbits.size(); ++o) {
        int k = twist[o];
        for (int y : orbits[o])
            for (int x : orbits[o])
                for (int j = 0; j < k; ++j) {
                    if (x == y && j == 0) continue;
                    data.arrows.push_back({arrow_name(y, x, j), label[x], label[y]});
                    std::tuple<int, int, int> mine{y, x, j};
                    std::tuple<int, int, int> other{x, y, (k - j) % k};
                    if (mine <= other)
                        data.inverses.push_back(
                            {arrow_name(y, x, j), arrow_name(x, y, (k - j) % k)});
                }
        for (int y : orbits[o])
            for (int x : orbits[o])
                for (int z : orbits[o])
                    for (int i = 0; i < k; ++i)
                        for (int j = 0; j < k; ++j) {
                            if (x == y && i == 0) continue;          // unit left factor
                            if (z == x && j == 0) continue;          // unit right factor
                            if (z == y && (i + j) % k == 0) continue;  // inverse pair
                            data.compositions.push_back({arrow_name(y, x, i), arrow_name(x, z, j),
                                                         arrow_name(y, z, (i + j) % k)});
                        }
    }

    GroupoidDocument doc;
    doc.g = assemble(data);

    ArrowSet gen;
    std::vector<int> transversal;
    for (size_t o = 0; o < orbits.size(); ++o) {
        transversal.push_back(orbits[o][0]);
        for (size_t i = 1; i < orbits[o].size(); ++i)
            gen.push_back(doc.g.arrow_by_label(arrow_name(orbits[o][i], orbits[o][0], 0)));
        if (twist[o] > 1)
            gen.push_back(doc.g.arrow_by_label(arrow_name(orbits[o][0], orbits[o][0], 1)));
    }
    doc.arrow_sets.push_back({"gen", normalized(gen)});
    doc.atom_sets.push_back({"transversal", transversal});
    return doc;
}

}  // namespace gpd
