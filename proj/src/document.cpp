#include <gpd/document.hpp>

#include <algorithm>
#include <fstream>
#include <sstream>

namespace gpd {

const ArrowSet* GroupoidDocument::find_arrow_set(const std::string& name) const {
    for (const auto& [n, set] : arrow_sets)
        if (n == name) return &set;
    return nullptr;
}

namespace {

std::vector<std::string> tokenize(const std::string& line) {
    std::istringstream in(line);
    std::vector<std::string> tokens;
    std::string tok;
    while (in >> tok) {
        if (tok[0] == '#') break;
        tokens.push_back(tok);
    }
    return tokens;
}

}  // namespace

GroupoidDocument parse_document(const std::string& text) {
    GroupoidData data;
    Rat mass = 1;
    bool mass_given = false;
    std::vector<std::pair<std::string, std::vector<std::string>>> raw_asets, raw_atomsets;

    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    auto fail = [&](const std::string& msg) {
        throw ParseError("line " + std::to_string(lineno) + ": " + msg);
    };
    while (std::getline(in, line)) {
        ++lineno;
        std::vector<std::string> tok = tokenize(line);
        if (tok.empty()) continue;
        const std::string& kw = tok[0];
        if (kw == "unit") {
            if (tok.size() != 3) fail("unit needs: label weight");
            try {
                data.atoms.push_back({tok[1], parse_rat(tok[2])});
            } catch (const std::invalid_argument& e) {
                fail(e.what());
            }
        } else if (kw == "arrow") {
            if (tok.size() != 4) fail("arrow needs: label source range");
            data.arrows.push_back({tok[1], tok[2], tok[3]});
        } else if (kw == "inverse") {
            if (tok.size() != 3) fail("inverse needs: arrow arrow");
            data.inverses.push_back({tok[1], tok[2]});
        } else if (kw == "compose") {
            if (tok.size() != 4) fail("compose needs: arrow arrow product");
            data.compositions.push_back({tok[1], tok[2], tok[3]});
        } else if (kw == "mass") {
            if (tok.size() != 2) fail("mass needs: value");
            mass = parse_rat(tok[1]);
            mass_given = true;
        } else if (kw == "aset") {
            if (tok.size() < 2) fail("aset needs: name [arrows...]");
            raw_asets.push_back({tok[1], {tok.begin() + 2, tok.end()}});
        } else if (kw == "atoms") {
            if (tok.size() < 2) fail("atoms needs: name [atoms...]");
            raw_atomsets.push_back({tok[1], {tok.begin() + 2, tok.end()}});
        } else {
            fail("unknown directive: " + kw);
        }
    }

    GroupoidDocument doc;
    try {
        doc.g = assemble(data);
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
    if (mass_given) doc.g.declared_mass = mass;

    for (const auto& [name, labels] : raw_asets) {
        ArrowSet set;
        for (const std::string& label : labels) {
            int a = doc.g.arrow_by_label(label);
            if (a < 0) throw ParseError("aset " + name + ": unknown arrow " + label);
            set.push_back(a);
        }
        doc.arrow_sets.push_back({name, normalized(set)});
    }
    for (const auto& [name, labels] : raw_atomsets) {
        std::vector<int> set;
        for (const std::string& label : labels) {
            int x = doc.g.atom_by_label(label);
            if (x < 0) throw ParseError("atoms " + name + ": unknown atom " + label);
            set.push_back(x);
        }
        std::sort(set.begin(), set.end());
        set.erase(std::unique(set.begin(), set.end()), set.end());
        doc.atom_sets.push_back({name, set});
    }
    return doc;
}

std::string serialize_document(const GroupoidDocument& doc) {
    const FiniteGroupoid& g = doc.g;
    std::ostringstream out;
    if (g.declared_mass != 1) out << "mass " << rat_str(g.declared_mass) << "\n";
    for (int x = 0; x < g.atoms(); ++x)
        out << "unit " << g.atom_labels[x] << " " << rat_str(g.atom_weights[x]) << "\n";
    for (int a = g.atoms(); a < g.arrows(); ++a)
        out << "arrow " << g.arrow_labels[a] << " " << g.atom_labels[g.src[a]] << " "
            << g.atom_labels[g.rng[a]] << "\n";
    for (int a = g.atoms(); a < g.arrows(); ++a)
        if (g.inv[a] >= a)
            out << "inverse " << g.arrow_labels[a] << " " << g.arrow_labels[g.inv[a]] << "\n";
    for (int a = g.atoms(); a < g.arrows(); ++a)
        for (int b = g.atoms(); b < g.arrows(); ++b)
            if (g.comp[a][b] >= 0)
                out << "compose " << g.arrow_labels[a] << " " << g.arrow_labels[b] << " "
                    << g.arrow_labels[g.comp[a][b]] << "\n";
    for (const auto& [name, set] : doc.arrow_sets) {
        out << "aset " << name;
        for (int a : set) out << " " << g.arrow_labels[a];
        out << "\n";
    }
    for (const auto& [name, set] : doc.atom_sets) {
        out << "atoms " << name;
        for (int x : set) out << " " << g.atom_labels[x];
        out << "\n";
    }
    return out.str();
}

GroupoidDocument load_document(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_document(buf.str());
}

void save_document(const GroupoidDocument& doc, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << serialize_document(doc);
}

std::uint64_t document_digest(const GroupoidDocument& doc) {
    std::string text = serialize_document(doc);
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : text) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

std::string digest_hex(std::uint64_t digest) {
    static const char* hexdigits = "0123456789abcdef";
    std::string s(16, '0');
    for (int i = 15; i >= 0; --i) {
        s[i] = hexdigits[digest & 0xf];
        digest >>= 4;
    }
    return s;
}

}  // namespace gpd
