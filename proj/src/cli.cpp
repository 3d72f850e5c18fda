#include <gpd/cli.hpp>

#include <gpd/betti.hpp>
#include <gpd/complex.hpp>
#include <gpd/cost.hpp>
#include <gpd/document.hpp>
#include <gpd/gspace.hpp>
#include <gpd/random_gen.hpp>

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace gpd {
namespace {

std::string yesno(bool b) { return b ? "yes" : "no"; }

std::string arrow_labels(const FiniteGroupoid& g, const ArrowSet& s) {
    if (s.empty()) return "(empty)";
    std::string out;
    for (size_t i = 0; i < s.size(); ++i) {
        if (i) out += " ";
        out += g.arrow_labels[s[i]];
    }
    return out;
}

std::string atom_labels(const FiniteGroupoid& g, const std::vector<int>& s) {
    if (s.empty()) return "(empty)";
    std::string out;
    for (size_t i = 0; i < s.size(); ++i) {
        if (i) out += " ";
        out += g.atom_labels[s[i]];
    }
    return out;
}

std::string word_str(const std::vector<std::pair<int, int>>& letters) {
    std::string out;
    for (size_t i = 0; i < letters.size(); ++i) {
        if (i) out += " ";
        out += "E" + std::to_string(letters[i].first + 1);
        if (letters[i].second < 0) out += "^-1";
    }
    return out;
}

struct ReportSink {
    std::ostringstream text;
    bool any_fail = false;
    bool any_unmet = false;

    void line(const std::string& s) { text << s << "\n"; }
    void pass(const std::string& name, const std::string& detail) {
        text << "item " << name << ": pass" << (detail.empty() ? "" : " " + detail) << "\n";
    }
    void fail(const std::string& name, const std::string& detail) {
        any_fail = true;
        text << "item " << name << ": FAIL" << (detail.empty() ? "" : " " + detail) << "\n";
    }
    void unmet(const std::string& name, const std::string& reason) {
        any_unmet = true;
        text << "item " << name << ": unmet " << reason << "\n";
    }
    void skip(const std::string& name, const std::string& reason) {
        text << "item " << name << ": skipped " << reason << "\n";
    }
    int verdict() const { return any_fail ? 1 : any_unmet ? 3 : 0; }
};

std::string verdict_word(int code) {
    switch (code) {
        case 0: return "pass";
        case 1: return "FAIL";
        case 3: return "unmet";
        default: return "error";
    }
}

std::vector<std::string> split_csv(const std::string& s) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == ',') {
            if (!cur.empty()) out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (!cur.empty()) out.push_back(cur);
    return out;
}

void header(ReportSink& r, const std::string& command, const std::string& path,
            const GroupoidDocument& doc) {
    r.line("command: " + command);
    r.line("file: " + path);
    r.line("digest: " + digest_hex(document_digest(doc)));
}

// loads and validates; on validation failure reports violations and
// leaves ok false so the caller can exit with a semantic error
GroupoidDocument load_checked(const std::string& path, ReportSink& r, bool& ok) {
    GroupoidDocument doc = load_document(path);
    ValidationReport v = validate(doc.g);
    ok = v.valid;
    if (!v.valid)
        for (const std::string& s : v.violations) r.line("violation: " + s);
    return doc;
}

GComplex groupoid_complex(const FiniteGroupoid& g) {
    Graphing graphing;
    for (int a : minimal_generating_set(g)) graphing.push_back({a});
    return build_graphing_complex(g, graphing);
}

int cmd_validate(const std::string& path, ReportSink& r) {
    GroupoidDocument doc = load_document(path);
    header(r, "validate", path, doc);
    ValidationReport v = validate(doc.g);
    r.line("atoms: " + std::to_string(doc.g.atoms()));
    r.line("arrows: " + std::to_string(doc.g.arrows()));
    r.line("mass: " + rat_str(doc.g.declared_mass));
    for (const std::string& s : v.violations) r.line("violation: " + s);
    r.line("valid: " + yesno(v.valid));
    r.line("principal: " + yesno(v.principal));
    return v.valid ? 0 : 2;
}

int cmd_decompose(const std::string& path, ReportSink& r) {
    bool ok = false;
    GroupoidDocument doc = load_checked(path, r, ok);
    if (!ok) return 2;
    header(r, "decompose", path, doc);
    std::vector<ArrowSet> pieces = one_sheeted_decomposition(doc.g);
    Rat total = 0;
    for (size_t i = 0; i < pieces.size(); ++i) {
        Rat mass = mu_g(doc.g, pieces[i]);
        total += mass;
        r.line("piece " + std::to_string(i) + ": mass=" + rat_str(mass) + " arrows=" +
               arrow_labels(doc.g, pieces[i]));
    }
    r.line("pieces: " + std::to_string(pieces.size()));
    r.line("total_mass: " + rat_str(total));
    return 0;
}

int cmd_betti(const std::string& path, const std::string& kind, int eg_n, int eg_k,
              int eg_cap, ReportSink& r) {
    bool ok = false;
    GroupoidDocument doc = load_checked(path, r, ok);
    if (!ok) return 2;
    header(r, "betti", path, doc);
    if (kind == "graphing") {
        GroupoidBetti b = betti_groupoid(doc.g);
        r.line("complex: graphing");
        r.line("generating: " + arrow_labels(doc.g, b.generating));
        r.line("beta0: " + rat_str(b.beta0));
        r.line("beta1: " + rat_str(b.beta1_upper) +
               (b.exact1 ? "" : " (upper bound, fibers not all trees)"));
        r.line("beta1_exact: " + yesno(b.exact1));
        return 0;
    }
    GComplex cx = eg_truncation(doc.g, eg_n, eg_k, eg_cap);
    ComplexReport rep = validate_complex(cx);
    r.line("complex: eg N=" + std::to_string(eg_n) + " k=" + std::to_string(eg_k) +
           " dim-cap=" + std::to_string(eg_cap));
    std::string sizes;
    for (size_t i = 0; i < rep.level_sizes.size(); ++i)
        sizes += (i ? " " : "") + std::to_string(rep.level_sizes[i]);
    r.line("levels: " + sizes);
    r.line("ulb_bound: " + std::to_string(rep.ulb_bound));
    r.line("domain_measure: " + rat_str(rep.domain_measure));
    if (!rep.valid) {
        for (const std::string& s : rep.violations) r.fail("complex", s);
        return 1;
    }
    for (int n = 0; n <= cx.dimension(); ++n) {
        r.line("alpha" + std::to_string(n) + ": " + rat_str(alpha_value(cx, n)));
        r.line("beta" + std::to_string(n) + ": " + rat_str(betti_complex(cx, n)));
    }
    return 0;
}

int cmd_cost(const std::string& path, long long budget, ReportSink& r) {
    bool ok = false;
    GroupoidDocument doc = load_checked(path, r, ok);
    if (!ok) return 2;
    header(r, "cost", path, doc);
    CostCertificate cert = minimal_cost(doc.g, budget);
    r.line("value: " + rat_str(cert.value));
    r.line("generating: " + arrow_labels(doc.g, cert.generating));
    r.line("nodes: " + std::to_string(cert.nodes));
    r.line("prunes: " + std::to_string(cert.prunes));
    r.line("exact: " + yesno(cert.exact));
    if (!cert.exact) {
        r.any_unmet = true;
        r.line("note: node budget exhausted, the value is only an upper bound");
    }
    return cert.exact ? 0 : 3;
}

void suite_morse(const GroupoidDocument& doc, ReportSink& r) {
    GComplex cx = groupoid_complex(doc.g);
    for (int n = 0; n <= cx.dimension(); ++n) {
        MorseReport m = morse_check(cx, n);
        std::string detail = "alpha_side=" + rat_str(m.alpha_side) +
                             " betti_side=" + rat_str(m.betti_side) + " gap=" + rat_str(m.gap);
        if (m.holds)
            r.pass("morse.n" + std::to_string(n), detail);
        else
            r.fail("morse.n" + std::to_string(n), detail);
    }
}

void suite_euler(const GroupoidDocument& doc, ReportSink& r) {
    EulerReport e = euler(groupoid_complex(doc.g));
    std::string detail = "chi=" + rat_str(e.chi) + " chi2=" + rat_str(e.chi2);
    if (e.equal)
        r.pass("euler", detail);
    else
        r.fail("euler", detail);
}

void suite_induction(const GroupoidDocument& doc, const std::vector<int>& y, ReportSink& r) {
    InductionReport rep = induction_check(doc.g, y);
    if (!rep.applicable) {
        r.unmet("induction", rep.unmet);
        return;
    }
    std::string detail = "Y={" + atom_labels(doc.g, y) + "} lhs=" + rat_str(rep.lhs) +
                         " rhs=" + rat_str(rep.rhs);
    if (rep.equal)
        r.pass("induction.identity", detail);
    else
        r.fail("induction.identity", detail);
    if (!rep.treeability_decided) {
        r.unmet("induction.treeability", "search budget exhausted");
        return;
    }
    std::string tdetail = "whole=" + yesno(rep.treeable_whole) +
                          " restricted=" + yesno(rep.treeable_restricted);
    if (rep.treeability_matches)
        r.pass("induction.treeability", tdetail);
    else
        r.fail("induction.treeability", tdetail);
}

void suite_additivity(const GroupoidDocument& doc, bool explicit_request, ReportSink& r) {
    const ArrowSet* g1 = doc.find_arrow_set("G1");
    const ArrowSet* g2 = doc.find_arrow_set("G2");
    if (!g1 || !g2) {
        if (explicit_request)
            r.unmet("additivity", "document names no G1/G2 arrow sets");
        else
            r.skip("additivity", "document names no G1/G2 arrow sets");
        return;
    }
    FreeProductReport rep = free_product_check(doc.g, *g1, *g2);
    if (!rep.applicable) {
        std::string reason = rep.unmet;
        if (!rep.cert.witness.empty())
            reason += " (witness " + arrow_labels(doc.g, rep.cert.witness) + ")";
        r.unmet("additivity", reason);
        return;
    }
    std::string detail = "whole=" + rat_str(rep.whole) + " part1=" + rat_str(rep.part1) +
                         " part2=" + rat_str(rep.part2) + " shared=" + rat_str(rep.shared);
    if (rep.equal)
        r.pass("additivity", detail);
    else
        r.fail("additivity", detail);
}

void suite_treeing(const GroupoidDocument& doc, ReportSink& r) {
    TreeabilityResult t = treeable_search(doc.g);
    if (!t.decided) {
        r.unmet("treeing", "search budget exhausted");
        return;
    }
    if (!t.treeable) {
        r.pass("treeing", "not treeable, equality vacuous");
        return;
    }
    TreeingCostReport rep = treeing_cost_check(doc.g, t.treeing);
    if (!rep.applicable) {
        r.unmet("treeing", rep.unmet);
        return;
    }
    std::string pieces;
    for (size_t i = 0; i < t.treeing.size(); ++i)
        pieces += (i ? " | " : "") + arrow_labels(doc.g, t.treeing[i]);
    std::string detail = "minimal=" + rat_str(rep.minimal) +
                         " treeing_cost=" + rat_str(rep.graphing_cost) + " pieces=" + pieces;
    if (rep.equal)
        r.pass("treeing", detail);
    else
        r.fail("treeing", detail);
}

void suite_cvb(const GroupoidDocument& doc, ReportSink& r) {
    CostBettiReport c = cost_vs_betti_check(doc.g);
    if (!c.cost_exact) {
        r.unmet("cvb", "cost budget exhausted");
        return;
    }
    std::string detail = "beta0=" + rat_str(c.beta0) + " beta1=" + rat_str(c.beta1_upper) +
                         (c.beta1_exact ? "" : " (upper bound)") + " cost=" + rat_str(c.cost);
    if (c.holds)
        r.pass("cvb.bound", detail);
    else
        r.fail("cvb.bound", detail);
    if (!c.treeability_decided) {
        r.unmet("cvb.equality", "treeability undecided");
        return;
    }
    if (!c.treeable) {
        r.pass("cvb.equality", "not treeable, equality vacuous");
        return;
    }
    if (c.equality)
        r.pass("cvb.equality", detail);
    else
        r.fail("cvb.equality", detail);
}

void suite_decomp(const GroupoidDocument& doc, ReportSink& r) {
    DecompositionReport rep = cost_decomposition_check(doc.g);
    std::string parts;
    for (size_t i = 0; i < rep.parts.size(); ++i) parts += (i ? "+" : "") + rat_str(rep.parts[i]);
    std::string detail = "whole=" + rat_str(rep.whole) + " parts=" + parts;
    if (rep.equal)
        r.pass("decomp", detail);
    else
        r.fail("decomp", detail);
}

void suite_orbit(const GroupoidDocument& doc, ReportSink& r) {
    OrbitCostReport rep = orbit_relation_cost_check(doc.g);
    std::string detail =
        "cost=" + rat_str(rep.cost_groupoid) + " relation_cost=" + rat_str(rep.cost_relation);
    if (rep.holds)
        r.pass("orbit", detail);
    else
        r.fail("orbit", detail);
}

int cmd_verify(const std::string& path, const std::string& suite_csv, const std::string& yname,
               ReportSink& r) {
    bool ok = false;
    GroupoidDocument doc = load_checked(path, r, ok);
    if (!ok) return 2;
    header(r, "verify", path, doc);

    static const std::vector<std::string> known = {"morse",    "euler",   "induction",
                                                   "additivity", "treeing", "cvb",
                                                   "decomp",   "orbit"};
    std::vector<std::string> requested = split_csv(suite_csv);
    bool all = requested.size() == 1 && requested[0] == "all";
    std::vector<std::string> suites;
    if (all) {
        suites = known;
    } else {
        for (const std::string& name : requested) {
            if (std::find(known.begin(), known.end(), name) == known.end())
                throw std::invalid_argument("unknown suite: " + name);
            suites.push_back(name);
        }
    }

    std::vector<int> y;
    if (!yname.empty()) {
        const std::vector<int>* named = nullptr;
        for (const auto& [name, atoms] : doc.atom_sets)
            if (name == yname) named = &atoms;
        if (!named) throw std::invalid_argument("unknown atom set: " + yname);
        y = *named;
    } else {
        for (const std::vector<int>& block : invariant_partition(doc.g))
            y.push_back(*std::min_element(block.begin(), block.end()));
        std::sort(y.begin(), y.end());
    }

    for (const std::string& name : suites) {
        if (name == "morse") suite_morse(doc, r);
        else if (name == "euler") suite_euler(doc, r);
        else if (name == "induction") suite_induction(doc, y, r);
        else if (name == "additivity") suite_additivity(doc, !all, r);
        else if (name == "treeing") suite_treeing(doc, r);
        else if (name == "cvb") suite_cvb(doc, r);
        else if (name == "decomp") suite_decomp(doc, r);
        else if (name == "orbit") suite_orbit(doc, r);
    }
    return r.verdict();
}

int cmd_random(std::uint64_t seed, int atoms, int isotropy_max, const std::string& out_path,
               ReportSink& r, bool& raw_output) {
    GroupoidDocument doc = random_groupoid(seed, atoms, isotropy_max);
    ValidationReport v = validate(doc.g);
    if (!v.valid) throw std::logic_error("random instance failed validation: " + v.violations[0]);
    if (out_path.empty()) {
        raw_output = true;
        r.text << serialize_document(doc);
        return 0;
    }
    save_document(doc, out_path);
    r.line("command: random");
    r.line("seed: " + std::to_string(seed));
    r.line("atoms: " + std::to_string(atoms));
    r.line("digest: " + digest_hex(document_digest(doc)));
    r.line("written: " + out_path);
    return 0;
}

}  // namespace

int run_command(int argc, const char* const* argv) {
    CLI::App app{"exact Betti numbers and costs of finite measured groupoids"};
    app.require_subcommand(1);

    std::string file;
    std::string out_path;

    CLI::App* c_validate = app.add_subcommand("validate", "check the groupoid axioms");
    c_validate->add_option("file", file, "groupoid document")->required();
    c_validate->add_option("--out", out_path, "write the report to this path");

    CLI::App* c_decompose =
        app.add_subcommand("decompose", "partition the arrows into one-sheeted pieces");
    c_decompose->add_option("file", file, "groupoid document")->required();
    c_decompose->add_option("--out", out_path, "write the report to this path");

    CLI::App* c_betti = app.add_subcommand("betti", "Betti numbers of a complex over the groupoid");
    std::string kind = "graphing";
    int eg_n = 1;
    int eg_k = 3;
    int eg_cap = 2;
    c_betti->add_option("file", file, "groupoid document")->required();
    c_betti->add_option("--complex", kind, "complex family")
        ->check(CLI::IsMember({"graphing", "eg"}));
    c_betti->add_option("--N", eg_n, "copies per arrow in the eg complex");
    c_betti->add_option("--k", eg_k, "decomposition pieces used by the eg complex");
    c_betti->add_option("--dim-cap", eg_cap, "highest simplex dimension kept");
    c_betti->add_option("--out", out_path, "write the report to this path");

    CLI::App* c_cost = app.add_subcommand("cost", "minimal cost of a generating arrow set");
    long long budget = 1000000;
    c_cost->add_option("file", file, "groupoid document")->required();
    c_cost->add_option("--budget", budget, "search node budget");
    c_cost->add_option("--out", out_path, "write the report to this path");

    CLI::App* c_verify = app.add_subcommand("verify", "run theorem assertion suites");
    std::string suite = "all";
    std::string yname;
    c_verify->add_option("file", file, "groupoid document")->required();
    c_verify->add_option("--suite", suite, "comma-separated suites, or all");
    c_verify->add_option("--Y", yname, "named atom set for the induction suite");
    c_verify->add_option("--out", out_path, "write the report to this path");

    CLI::App* c_random = app.add_subcommand("random", "generate a random groupoid document");
    std::uint64_t seed = 1;
    int r_atoms = 3;
    int r_iso = 1;
    c_random->add_option("--seed", seed, "random seed");
    c_random->add_option("--atoms", r_atoms, "number of atoms");
    c_random->add_option("--isotropy-max", r_iso, "largest cyclic isotropy order");
    c_random->add_option("--out", out_path, "write the document to this path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    auto start = std::chrono::steady_clock::now();
    ReportSink r;
    bool raw_output = false;
    int code = 0;
    try {
        if (app.got_subcommand(c_validate)) code = cmd_validate(file, r);
        else if (app.got_subcommand(c_decompose)) code = cmd_decompose(file, r);
        else if (app.got_subcommand(c_betti)) code = cmd_betti(file, kind, eg_n, eg_k, eg_cap, r);
        else if (app.got_subcommand(c_cost)) code = cmd_cost(file, budget, r);
        else if (app.got_subcommand(c_verify)) code = cmd_verify(file, suite, yname, r);
        else if (app.got_subcommand(c_random))
            code = cmd_random(seed, r_atoms, r_iso, out_path, r, raw_output);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const NotFreeError& e) {
        std::cerr << "hypothesis unmet: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::logic_error& e) {
        std::cerr << "theorem assertion failed: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }

    if (!raw_output) {
        auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                           std::chrono::steady_clock::now() - start)
                           .count();
        r.line("elapsed_ms: " + std::to_string(elapsed));
        r.line("result: " + verdict_word(code));
    }
    bool report_to_file = !out_path.empty() && !app.got_subcommand(c_random);
    if (report_to_file) {
        std::ofstream f(out_path);
        f << r.text.str();
    } else {
        std::cout << r.text.str();
    }
    return code;
}

int run_command(const std::vector<std::string>& args) {
    std::vector<const char*> argv;
    argv.push_back("gpd");
    for (const std::string& a : args) argv.push_back(a.c_str());
    return run_command(static_cast<int>(argv.size()), argv.data());
}

}  // namespace gpd
