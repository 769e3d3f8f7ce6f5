#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "g2pc/affine_model.hpp"
#include "g2pc/perfectness.hpp"
#include "g2pc/qlevel1.hpp"

using namespace g2pc;
using json = nlohmann::ordered_json;

namespace {

std::string word_of(const GTableau& t) {
    std::string s;
    for (Letter a : t.letters) {
        if (!s.empty()) s += ',';
        s += letter_name(a);
    }
    return s;
}

// DOT ids: bare words; the empty tableau is the weight-zero vector "9".
std::string dot_id(const GTableau& t) { return t.empty() ? "9" : word_of(t); }

json weight_json(const ClassicalWeight& w) { return json::array({w.m0, w.m1, w.m2}); }

std::string wstr(const ClassicalWeight& w) {
    return "(" + std::to_string(w.m0) + "," + std::to_string(w.m1) + "," + std::to_string(w.m2) + ")";
}

const char* yes(bool b) { return b ? "yes" : "no"; }

struct Ctx {
    int level = -1;
    int max_level = 8;
    std::string format = "text";
    std::string out;
    bool dump = false;
    bool skip_square = false;
};

int cmd_dims(const Ctx& c, std::ostream& os) {
    bool ok = true;
    json rows = json::array();
    std::ostringstream t;
    t << "l\tsum_dim\tA_blocks\n";
    for (int l = 0; l <= c.max_level; ++l) {
        const auto g = count_G(l), a = count_A(l);
        ok &= g == a;
        t << l << '\t' << g << '\t' << a << "\tA-model count matches: " << yes(g == a) << '\n';
        rows.push_back({{"level", l}, {"sum_dim", g}, {"a_count", a}, {"match", g == a}});
    }
    if (c.format == "json") os << json{{"rows", rows}, {"all_match", ok}}.dump(2) << '\n';
    else os << t.str();
    return ok ? 0 : 1;
}

int cmd_enumerate(const Ctx& c, std::ostream& os) {
    AffineModel M;
    const CrystalGraph G = build_Bl(M.level(c.level));
    if (c.format == "json") {
        json vs = json::array();
        for (const auto& t : G.vertices) vs.push_back({{"word", t.str()}, {"weight", weight_json(t.classical_weight())}});
        os << json{{"level", c.level}, {"size", G.size()}, {"vertices", vs}}.dump(2) << '\n';
    } else {
        for (const auto& t : G.vertices) os << t.str() << '\t' << wstr(t.classical_weight()) << '\n';
    }
    return 0;
}

int cmd_graph(const Ctx& c, std::ostream& os) {
    AffineModel M;
    const CrystalGraph G = build_Bl(M.level(c.level));
    if (c.format == "dot") {
        os << "digraph B" << c.level << " {\n";
        for (const auto& t : G.vertices) os << "  \"" << dot_id(t) << "\";\n";
        for (int v = 0; v < G.size(); ++v)
            for (int i = 0; i < 3; ++i)
                if (G.f[i][v] >= 0)
                    os << "  \"" << dot_id(G.vertices[v]) << "\" -> \"" << dot_id(G.vertices[G.f[i][v]])
                       << "\" [label=\"" << i << "\"];\n";
        os << "}\n";
    } else if (c.format == "json") {
        json vs = json::array(), es = json::array();
        for (const auto& t : G.vertices) vs.push_back(t.str());
        for (int v = 0; v < G.size(); ++v)
            for (int i = 0; i < 3; ++i) {
                const int w = G.f[i][v];
                if (w < 0) continue;
                const auto& a = G.vertices[v].str();
                const auto& b = G.vertices[w].str();
                es.push_back({{"color", i},
                              {"from", a},
                              {"to", b},
                              {"reverse", {{"op", "e"}, {"color", i}, {"from", b}, {"to", G.vertices[G.e[i][w]].str()}}}});
            }
        os << json{{"level", c.level}, {"vertices", vs}, {"edges", es}}.dump(2) << '\n';
    } else {
        for (int v = 0; v < G.size(); ++v) {
            os << G.vertices[v].str();
            for (int i = 0; i < 3; ++i)
                os << "\tf" << i << '=' << (G.f[i][v] >= 0 ? G.vertices[G.f[i][v]].str() : "-");
            os << '\n';
        }
    }
    return 0;
}

int cmd_verify(const Ctx& c, std::ostream& os) {
    AffineModel M;
    for (int l = 1; l <= c.level; ++l) {
        const Level* L = nullptr;
        try {
            L = &M.level(l);
        } catch (const ConstructionFault& e) {
            os << "level " << l << ": construction fault\n" << e.what() << '\n';
            return 1;
        }
        const auto rep = verify_construction(*L);
        bool ok = rep.ok();
        for (const auto& ch : rep.checks) {
            os << "level " << l << "  " << (ch.pass ? "PASS" : "FAIL") << "  " << ch.name << "  (" << ch.checked
               << " checked)\n";
            for (const auto& ce : ch.counterexamples) os << "    " << ce << '\n';
        }
        const CrystalGraph G = build_Bl(*L);
        for (const auto& ch : check_crystal_axioms(G)) {
            ok &= ch.pass;
            os << "level " << l << "  " << (ch.pass ? "PASS" : "FAIL") << "  crystal " << ch.name << '\n';
        }
        const auto p = check_perfect(G, !c.skip_square);
        ok &= p.ok() || (c.skip_square && p.cond_unique_top_weight && p.cond_level_bound && p.cond_eps_phi_bijective);
        if (!c.skip_square)
            os << "level " << l << "  " << (p.cond_connected_square ? "PASS" : "FAIL") << "  tensor square connected ("
               << p.square.vertices << " elements, " << p.square.components << " components)\n";
        os << "level " << l << "  " << (p.cond_unique_top_weight ? "PASS" : "FAIL") << "  unique top weight "
           << wstr(p.top_weight) << '\n';
        os << "level " << l << "  " << (p.cond_level_bound ? "PASS" : "FAIL") << "  level bound\n";
        os << "level " << l << "  " << (p.cond_eps_phi_bijective ? "PASS" : "FAIL") << "  eps/phi bijective ("
           << p.minimal.size() << " minimal)\n";
        if (!ok) return 1;
    }
    os << "all levels 1.." << c.level << " pass\n";
    return 0;
}

int cmd_minimal(const Ctx& c, std::ostream& os) {
    AffineModel M;
    const auto mins = minimal_elements(build_Bl(M.level(c.level)));
    if (c.format == "json") {
        json a = json::array();
        for (const auto& m : mins)
            a.push_back({{"word", m.tableau.str()}, {"eps", weight_json(m.eps)}, {"phi", weight_json(m.phi)}});
        os << json{{"level", c.level}, {"minimal", a}}.dump(2) << '\n';
    } else {
        for (const auto& m : mins) os << m.tableau.str() << "\teps=" << wstr(m.eps) << "\tphi=" << wstr(m.phi) << '\n';
    }
    return mins.size() == dominant_weights(c.level).size() ? 0 : 1;
}

int cmd_phi(const Ctx& c, std::ostream& os) {
    AffineModel M;
    const Level& L = M.level(c.level);
    if (c.format == "json") {
        json a = json::array();
        for (int i = 0; i < L.size(); ++i)
            a.push_back({{"a", L.param(i).str()}, {"tableau", L.tableau(L.phi(i)).str()}, {"rule", L.phi_rule(i)}});
        os << json{{"level", c.level}, {"phi", a}}.dump(2) << '\n';
    } else {
        for (int i = 0; i < L.size(); ++i)
            os << L.param(i).str() << '\t' << L.tableau(L.phi(i)).str() << '\t' << L.phi_rule(i) << '\n';
    }
    return 0;
}

int cmd_connectivity(const Ctx& c, std::ostream& os) {
    AffineModel M;
    const CrystalGraph G = build_Bl(M.level(c.level));
    const int comps = count_components(G);
    const auto sq = tensor_square_components(G);
    if (c.format == "json")
        os << json{{"level", c.level},
                   {"size", G.size()},
                   {"components", comps},
                   {"square_size", sq.vertices},
                   {"square_components", sq.components}}
                  .dump(2)
           << '\n';
    else
        os << "B^" << c.level << ": " << G.size() << " elements, " << comps << " component(s)\n"
           << "B^" << c.level << " (x) B^" << c.level << ": " << sq.vertices << " elements, " << sq.components
           << " component(s)\n";
    return comps == 1 && sq.components == 1 ? 0 : 1;
}

int cmd_qcheck(const Ctx& c, std::ostream& os) {
    bool ok = true;
    auto line = [&](bool pass, const std::string& what, const std::string& detail = "") {
        ok &= pass;
        os << (pass ? "PASS" : "FAIL") << "  " << what;
        if (!detail.empty()) os << "  [" << detail << "]";
        os << '\n';
    };
    for (const auto& r : verify_module_relations()) line(r.pass, "relation " + r.name, r.detail);
    const auto s = verify_singular();
    for (const auto& r : s.checks) line(r.pass, "singular " + r.name, r.detail);
    for (const auto& f : verify_fusion_identities()) {
        std::string note = f.reconstruction;
        if (f.printed_holds) note += std::string(note.empty() ? "" : "; ") + "printed form " + (*f.printed_holds ? "holds" : "fails");
        line(f.pass, "fusion item " + std::to_string(f.number) + ": " + f.word + " u_" + f.source, note);
        if (c.dump) os << "      = (" << f.expected.str() << ") u_" << f.target << '\n';
    }
    const auto r = rmatrix_checks();
    for (const auto& x : r.checks) line(x.pass, "R-matrix " + x.name, x.detail);
    for (const auto& x : r.printed_forms) os << "note  " << x.name << ": " << (x.pass ? "holds" : "fails") << '\n';
    const auto p = check_polarization();
    line(p.solution_unique && p.axioms_hold, "polarization: unique symmetric solution satisfying the adjointness axioms");
    line(p.gram_identity_at_zero, "polarization: Gram matrix is the identity at q = 0");
    for (const auto& x : p.string_norms) line(x.pass, "polarization " + x.name, x.detail);
    for (const auto& x : p.printed_forms) os << "note  " << x.name << ": " << (x.pass ? "holds" : "fails") << '\n';
    if (c.dump)
        for (int a : {6, 7, kPhi})
            for (int b : {6, 7, kPhi})
                if (a <= b)
                    os << "      (" << v1_basis_name(a) << "," << v1_basis_name(b) << ") = " << p.gram[a][b].str() << '\n';
    const auto lim = crystal_limit();
    AffineModel M;
    const CrystalGraph G = build_Bl(M.level(1));
    bool match = lim.lattice_preserved && lim.problems.empty();
    for (int v = 0; v < G.size(); ++v) {
        const GTableau& t = G.vertices[v];
        const int b = t.empty() ? kPhi : static_cast<int>(t.letters[0]);
        for (int i = 0; i < 3; ++i) {
            const int w = G.f[i][v];
            const int want = w < 0 ? -1 : G.vertices[w].empty() ? kPhi : static_cast<int>(G.vertices[w].letters[0]);
            match &= lim.f[i][b] == want;
        }
    }
    line(match, "crystal limit of V^1 equals B^1");
    return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"G2(1) perfect crystal toolkit"};
    app.require_subcommand(1);
    Ctx c;
    auto level_opt = [&](CLI::App* s) {
        s->add_option("--level,-l", c.level, "level l")->required()->check(CLI::NonNegativeNumber);
    };
    auto fmt_opt = [&](CLI::App* s, std::vector<std::string> allowed) {
        s->add_option("--format", c.format, "output format")->check(CLI::IsMember(allowed));
    };
    app.add_option("--out,-o", c.out, "write output to PATH");

    auto* dims = app.add_subcommand("dims", "dimension table and block-sum identity");
    dims->add_option("--max-level", c.max_level, "largest level")->check(CLI::NonNegativeNumber);
    fmt_opt(dims, {"text", "json"});
    auto* en = app.add_subcommand("enumerate", "list the elements of B^l");
    level_opt(en);
    fmt_opt(en, {"text", "json"});
    auto* gr = app.add_subcommand("graph", "export the crystal graph of B^l");
    level_opt(gr);
    fmt_opt(gr, {"text", "json", "dot"});
    auto* ve = app.add_subcommand("verify", "construction axioms and perfectness for levels 1..l");
    level_opt(ve);
    ve->add_flag("--skip-square", c.skip_square, "skip the tensor-square connectivity check");
    auto* mi = app.add_subcommand("minimal", "minimal elements of B^l");
    level_opt(mi);
    fmt_opt(mi, {"text", "json"});
    auto* ph = app.add_subcommand("phi", "the bijection from the model crystal onto B^l");
    level_opt(ph);
    fmt_opt(ph, {"text", "json"});
    auto* co = app.add_subcommand("connectivity", "components of B^l and B^l (x) B^l");
    level_opt(co);
    fmt_opt(co, {"text", "json"});
    auto* qc = app.add_subcommand("qcheck", "exact checks on the level-1 quantum module");
    qc->add_flag("--dump", c.dump, "print right-hand sides and the Gram block");

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    std::ofstream file;
    if (!c.out.empty()) {
        file.open(c.out);
        if (!file) {
            std::cerr << "cannot open " << c.out << '\n';
            return 2;
        }
    }
    std::ostream& os = c.out.empty() ? std::cout : file;

    try {
        if (dims->parsed()) return cmd_dims(c, os);
        if (en->parsed()) return cmd_enumerate(c, os);
        if (gr->parsed()) return cmd_graph(c, os);
        if (ve->parsed()) return cmd_verify(c, os);
        if (mi->parsed()) return cmd_minimal(c, os);
        if (ph->parsed()) return cmd_phi(c, os);
        if (co->parsed()) return cmd_connectivity(c, os);
        if (qc->parsed()) return cmd_qcheck(c, os);
    } catch (const ConstructionFault& e) {
        std::cerr << e.what() << '\n';
        return 1;
    }
    return 2;
}
