// mcg — exact-arithmetic command-line front end for the library.
//
// Subcommands mirror the library modules; every number printed is an exact
// integer (or integer polynomial coefficient).  Exit codes: 0 = verified /
// success, 1 = claim fails or obstruction found (a structured report is still
// emitted), 2 = usage or input error.
//
// MCG_SEARCH_BUDGET overrides the default search caps.  Accepted forms:
// a single integer (applied to every cap) or comma-separated assignments
// "brute=5,lift=64,graph=12".

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "mcg/recipes.hpp"

using nlohmann::ordered_json;
using namespace mcg;

namespace {

// ---------------------------------------------------------------------------
// search budgets

struct Budgets {
    long long brute = 5;  // oracle-roots entry bound
    int lift = 64;        // lift-exponent cap
    int graph = 12;       // automorphism search vertex budget
};

Budgets budgets_from_env() {
    Budgets b;
    const char* env = std::getenv("MCG_SEARCH_BUDGET");
    if (!env || !*env) return b;
    std::string s(env);
    if (s.find('=') == std::string::npos) {
        long long v = std::stoll(s);
        b.brute = v;
        b.lift = static_cast<int>(v);
        b.graph = static_cast<int>(v);
        return b;
    }
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        auto eq = item.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("MCG_SEARCH_BUDGET: expected key=value, got " + item);
        std::string key = item.substr(0, eq);
        long long v = std::stoll(item.substr(eq + 1));
        if (key == "brute") b.brute = v;
        else if (key == "lift") b.lift = static_cast<int>(v);
        else if (key == "graph") b.graph = static_cast<int>(v);
        else throw std::invalid_argument("MCG_SEARCH_BUDGET: unknown key " + key);
    }
    return b;
}

// ---------------------------------------------------------------------------
// JSON helpers (exact integers: emit as JSON numbers when they fit in 64
// bits, as decimal strings otherwise; accept both on input)

ordered_json int_json(const Int& v) {
    if (v >= std::numeric_limits<long long>::min() && v <= std::numeric_limits<long long>::max())
        return static_cast<long long>(v);
    return v.str();
}

Int json_int(const ordered_json& j) {
    if (j.is_number_integer()) return Int(j.get<long long>());
    if (j.is_string()) return Int(j.get<std::string>());
    throw std::invalid_argument("expected an integer (number or decimal string)");
}

ordered_json parse_json_arg(const std::string& inline_text, const std::string& file) {
    if (!inline_text.empty() && !file.empty())
        throw std::invalid_argument("give inline JSON or --file, not both");
    if (!file.empty()) {
        std::ifstream in(file);
        if (!in) throw std::invalid_argument("cannot open file: " + file);
        return ordered_json::parse(in);
    }
    if (inline_text.empty()) throw std::invalid_argument("missing JSON input");
    return ordered_json::parse(inline_text);
}

Sl2 parse_matrix(const std::string& text) {
    ordered_json j = ordered_json::parse(text);
    if (!j.is_array() || j.size() != 2 || !j[0].is_array() || j[0].size() != 2 ||
        !j[1].is_array() || j[1].size() != 2)
        throw std::invalid_argument("matrix must be [[a,b],[c,d]]");
    return Sl2(json_int(j[0][0]), json_int(j[0][1]), json_int(j[1][0]), json_int(j[1][1]));
}

ordered_json matrix_json(const Sl2& m) {
    return ordered_json::array(
        {{int_json(m.a), int_json(m.b)}, {int_json(m.c), int_json(m.d)}});
}

TwistWord parse_word(const std::string& text) {
    ordered_json j = ordered_json::parse(text);
    TwistWord w;
    if (!j.is_array()) throw std::invalid_argument("word must be [[\"curve\",exp],...]");
    for (const auto& f : j) {
        if (!f.is_array() || f.size() != 2 || !f[0].is_string())
            throw std::invalid_argument("word factor must be [\"curve\",exp]");
        w.factors.emplace_back(f[0].get<std::string>(), f[1].get<int>());
    }
    return w;
}

ordered_json endo_json(const FreeEndo& e) {
    ordered_json imgs = ordered_json::array();
    for (const FreeWord& w : e.images()) imgs.push_back(w.letters());
    return ordered_json{{"rank", e.rank()}, {"images", imgs}};
}

FreeEndo parse_endo(const ordered_json& j) {
    int rank = j.at("rank").get<int>();
    std::vector<FreeWord> imgs;
    for (const auto& row : j.at("images"))
        imgs.push_back(FreeWord::reduce(row.get<std::vector<int>>(), rank));
    return FreeEndo(rank, std::move(imgs));
}

GluingPattern parse_pattern(const std::string& pattern_id, const std::string& file) {
    if (!pattern_id.empty()) {
        auto colon = pattern_id.find(':');
        if (colon == std::string::npos)
            throw std::invalid_argument("--pattern expects f:<rho> or g:<rho>");
        std::string fam = pattern_id.substr(0, colon);
        int rho = std::stoi(pattern_id.substr(colon + 1));
        if (fam == "f") return f_pattern(rho);
        if (fam == "g") return g_pattern(rho);
        throw std::invalid_argument("unknown pattern family: " + fam);
    }
    ordered_json j = parse_json_arg("", file);
    GluingPattern p;
    p.n_arcs = j.at("n_arcs").get<int>();
    p.pairing = j.at("pairing").get<std::vector<int>>();
    p.rotation_shift = j.at("rotation_shift").get<int>();
    return p;
}

CoverDatum parse_cover(const ordered_json& j) {
    CoverDatum c;
    c.m = j.at("m").get<long long>();
    c.chi_total = j.at("chi_total").get<long long>();
    c.chi_quotient = j.at("chi_quotient").get<long long>();
    for (const auto& b : j.at("branch"))
        c.branch.push_back({b.at("o").get<long long>(), b.at("r").get<long long>()});
    return c;
}

DecompositionGraph parse_graph(const ordered_json& j) {
    DecompositionGraph g;
    for (const auto& c : j.at("components"))
        g.components.push_back({c.at("id").get<std::string>(), c.at("genus").get<int>()});
    g.leaves = j.at("leaves").get<std::vector<std::string>>();
    for (const auto& e : j.at("edges")) {
        auto ends = e.at("ends").get<std::vector<std::string>>();
        if (ends.size() != 2) throw std::invalid_argument("edge ends must have 2 entries");
        g.edges.push_back({e.at("id").get<std::string>(), {ends[0], ends[1]}});
    }
    return g;
}

// Print a polynomial as (x+1)^a(x-1)^b when it factors that way exactly,
// expanded form otherwise.
std::string poly_display(const IntPolynomial& p) {
    std::vector<Int> c = p.coeffs;
    auto divide_by_linear = [&](long long root) -> bool {
        // synthetic division by (x - root); succeeds iff remainder is 0
        if (c.size() < 2) return false;
        std::vector<Int> q(c.size() - 1);
        Int carry = 0;
        for (std::size_t i = c.size(); i-- > 1;) {
            q[i - 1] = c[i] + carry;
            carry = q[i - 1] * root;
        }
        if (c[0] + carry != 0) return false;
        c = q;
        return true;
    };
    int plus = 0, minus = 0;
    while (divide_by_linear(-1)) ++plus;
    while (divide_by_linear(1)) ++minus;
    if (c.size() == 1 && c[0] == 1 && (plus > 0 || minus > 0)) {
        std::string s;
        if (plus) s += "(x+1)" + (plus > 1 ? "^" + std::to_string(plus) : "");
        if (minus) s += "(x-1)" + (minus > 1 ? "^" + std::to_string(minus) : "");
        return s;
    }
    return p.str();
}

ordered_json poly_json(const IntPolynomial& p) {
    ordered_json coeffs = ordered_json::array();
    for (const Int& c : p.coeffs) coeffs.push_back(int_json(c));
    return ordered_json{{"coeffs", coeffs}, {"display", poly_display(p)}};
}

// ---------------------------------------------------------------------------
// output plumbing

struct Out {
    bool json = false;
    int rc = 0;

    void emit(const ordered_json& j, const std::string& human) {
        if (json) std::cout << j.dump() << "\n";
        else std::cout << human << "\n";
    }
};

std::string join_lines(const std::vector<std::string>& lines) {
    std::string s;
    for (std::size_t i = 0; i < lines.size(); ++i) {
        if (i) s += "\n";
        s += lines[i];
    }
    return s;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact verification toolkit for twist relations, matrix roots, "
                 "gluing homology, dihedral symmetries, covering feasibility, "
                 "reduction graphs, and ordered groups"};
    app.require_subcommand(1);
    Out out;
    app.add_flag("--json", out.json, "emit machine-readable JSON on stdout");
    Budgets budgets = budgets_from_env();
    std::vector<std::function<void()>> deferred;  // single action, run after parse

    // ---------------------------------------------------------- sl2z
    auto* sl2 = app.add_subcommand("sl2z", "integer 2x2 determinant-1 matrices");
    sl2->require_subcommand(1);
    {
        static std::string mat;
        static int m_exp = 1;
        static long long bound_opt = 0;

        auto* c_order = sl2->add_subcommand("order", "multiplicative order (or infinite)");
        c_order->add_option("--matrix", mat, "[[a,b],[c,d]]")->required();
        c_order->callback([&] {
            auto ord = element_order(parse_matrix(mat));
            ordered_json j{{"finite", ord.has_value()},
                           {"order", ord ? ordered_json(*ord) : ordered_json(nullptr)}};
            out.emit(j, ord ? std::to_string(*ord) : "infinite");
        });

        auto* c_cls = sl2->add_subcommand("classify", "trace classification");
        c_cls->add_option("--matrix", mat, "[[a,b],[c,d]]")->required();
        c_cls->callback([&] {
            Sl2 m = parse_matrix(mat);
            auto ord = element_order(m);
            std::string cls = trace_class_name(trace_classify(m));
            ordered_json j{{"trace_class", cls},
                           {"trace", int_json(m.trace())},
                           {"order", ord ? ordered_json(*ord) : ordered_json(nullptr)}};
            out.emit(j, cls + " (trace " + m.trace().str() + ", " +
                            (ord ? "order " + std::to_string(*ord) : "infinite order") + ")");
        });

        auto* c_roots = sl2->add_subcommand("roots", "complete m-th root enumeration");
        c_roots->add_option("--matrix", mat, "[[a,b],[c,d]]")->required();
        c_roots->add_option("-m", m_exp, "root exponent")->required();
        c_roots->callback([&] {
            RootSet rs = mth_roots(parse_matrix(mat), m_exp);
            if (rs.kind == RootSet::Kind::Finite) {
                ordered_json roots = ordered_json::array();
                std::string human;
                for (const Sl2& r : rs.roots) {
                    roots.push_back(matrix_json(r));
                    human += (human.empty() ? "" : "\n") + r.str();
                }
                out.emit(ordered_json{{"kind", "finite"}, {"roots", roots}},
                         rs.roots.empty() ? "no roots" : human);
            } else {
                ordered_json fam = ordered_json::array();
                std::string human = "torsion family:";
                for (TorsionLabel l : rs.family) {
                    fam.push_back(torsion_label_name(l));
                    human += std::string(" ") + torsion_label_name(l);
                }
                out.emit(ordered_json{{"kind", "torsion_family"}, {"family", fam}}, human);
            }
        });

        auto* c_tc = sl2->add_subcommand("torsion-class", "conjugacy class of a finite-order matrix");
        c_tc->add_option("--matrix", mat, "[[a,b],[c,d]]")->required();
        c_tc->callback([&] {
            const char* name = torsion_label_name(torsion_class(parse_matrix(mat)));
            out.emit(ordered_json{{"torsion_class", name}}, name);
        });

        auto* c_or = sl2->add_subcommand("oracle-roots", "brute-force root search (independent oracle)");
        c_or->add_option("--matrix", mat, "[[a,b],[c,d]]")->required();
        c_or->add_option("-m", m_exp, "root exponent")->required();
        c_or->add_option("--bound", bound_opt, "entry bound (default: search budget)");
        c_or->callback([&] {
            long long bound = bound_opt > 0 ? bound_opt : budgets.brute;
            auto roots = brute_force_roots(parse_matrix(mat), m_exp, bound);
            std::sort(roots.begin(), roots.end());
            ordered_json arr = ordered_json::array();
            std::string human;
            for (const Sl2& r : roots) {
                arr.push_back(matrix_json(r));
                human += (human.empty() ? "" : "\n") + r.str();
            }
            out.emit(ordered_json{{"bound", bound}, {"roots", arr}},
                     roots.empty() ? "no roots" : human);
        });
    }

    // ---------------------------------------------------------- twist
    auto* tw = app.add_subcommand("twist", "curve-twist words on the bundled surface models");
    tw->require_subcommand(1);
    {
        static std::string rel_id, model_name, word_text;

        auto* c_verify = tw->add_subcommand("verify", "check a named relation");
        c_verify->add_option("relation", rel_id, "relation id (see `twist verify --help`)")
            ->required();
        c_verify->callback([&] {
            NamedRelation r = named_relation(rel_id);
            bool ok = verify_relation(model(r.model_name), r.lhs, r.rhs);
            out.emit(ordered_json{{"id", r.id}, {"model", r.model_name}, {"verified", ok}},
                     r.id + " on " + r.model_name + ": " + (ok ? "verified" : "FAILED"));
            if (!ok) out.rc = 1;
        });

        auto* c_comp = tw->add_subcommand("compose", "evaluate a twist word to an automorphism");
        c_comp->add_option("--model", model_name, "model name")->required();
        c_comp->add_option("--word", word_text, "[[\"curve\",exp],...]")->required();
        c_comp->callback([&] {
            FreeEndo e = evaluate(model(model_name), parse_word(word_text));
            std::vector<std::string> lines;
            for (int g = 1; g <= e.rank(); ++g)
                lines.push_back("g" + std::to_string(g) + " -> " + e.image(g).str());
            out.emit(endo_json(e), join_lines(lines));
        });

        auto* c_h1 = tw->add_subcommand("h1", "induced matrix on the genus homology summand");
        c_h1->add_option("--model", model_name, "model name")->required();
        c_h1->add_option("--word", word_text, "[[\"curve\",exp],...]")->required();
        c_h1->callback([&] {
            auto m = h1_matrix(model(model_name), parse_word(word_text));
            ordered_json j = ordered_json::array();
            std::string human;
            for (const auto& row : m) {
                j.push_back(row);
                human += (human.empty() ? "[" : " [");
                for (std::size_t i = 0; i < row.size(); ++i)
                    human += (i ? "," : "") + std::to_string(row[i]);
                human += "]";
            }
            out.emit(ordered_json{{"matrix", j}}, human);
        });

        auto* c_cert = tw->add_subcommand("certify", "run the model's structural certificate");
        c_cert->add_option("--model", model_name, "model name")->required();
        c_cert->callback([&] {
            CertReport r = certify_model(model(model_name));
            ordered_json j{{"model", model_name},
                           {"passed", r.passed},
                           {"checks", r.checks},
                           {"failures", r.failures}};
            std::vector<std::string> lines = r.checks;
            for (const auto& f : r.failures) lines.push_back("FAILURE: " + f);
            lines.push_back(r.passed ? "certificate: PASS" : "certificate: FAIL");
            out.emit(j, join_lines(lines));
            if (!r.passed) out.rc = 1;
        });
    }

    // ---------------------------------------------------------- glue
    auto* gl = app.add_subcommand("glue", "polygon gluing patterns and their homology");
    gl->require_subcommand(1);
    {
        static std::string pattern_id, file;

        auto add_pattern_opts = [&](CLI::App* c) {
            c->add_option("--pattern", pattern_id, "f:<rho> or g:<rho>");
            c->add_option("--file", file, "JSON file with {n_arcs, pairing, rotation_shift}");
        };

        auto* c_an = gl->add_subcommand("analyze", "quotient surface report");
        add_pattern_opts(c_an);
        c_an->callback([&] {
            QuotientSurfaceReport r = analyze(parse_pattern(pattern_id, file));
            ordered_json j{{"vertex_classes", r.vertex_classes},
                           {"edges", r.edges},
                           {"genus", r.genus},
                           {"boundary_count", r.boundary_count},
                           {"h1_rank", r.h1_rank}};
            out.emit(j, "genus " + std::to_string(r.genus) + ", " +
                            std::to_string(r.boundary_count) + " boundary, h1 rank " +
                            std::to_string(r.h1_rank) + " (" +
                            std::to_string(r.vertex_classes) + " vertex classes, " +
                            std::to_string(r.edges) + " edges)");
        });

        auto* c_ind = gl->add_subcommand("induced", "rotation action on first homology");
        add_pattern_opts(c_ind);
        c_ind->callback([&] {
            auto m = induced_h1(parse_pattern(pattern_id, file));
            ordered_json rows = ordered_json::array();
            std::string human;
            for (const auto& row : m) {
                ordered_json r = ordered_json::array();
                std::string line = "[";
                for (std::size_t i = 0; i < row.size(); ++i) {
                    r.push_back(int_json(row[i]));
                    line += (i ? "," : "") + row[i].str();
                }
                rows.push_back(r);
                human += (human.empty() ? "" : "\n") + line + "]";
            }
            out.emit(ordered_json{{"matrix", rows}}, human);
        });

        auto* c_cp = gl->add_subcommand("charpoly", "characteristic polynomial of the action");
        add_pattern_opts(c_cp);
        c_cp->callback([&] {
            IntPolynomial p = char_poly(induced_h1(parse_pattern(pattern_id, file)));
            out.emit(poly_json(p), poly_display(p));
        });
    }

    // ---------------------------------------------------------- sym
    auto* sy = app.add_subcommand("sym", "dihedral-type symmetry groups");
    sy->require_subcommand(1);
    {
        static std::string group_spec, elem_a, elem_b;
        static int want_order = 0, rho = 0, construction = 0;

        auto* c_el = sy->add_subcommand("elements", "list elements (optionally of one order)");
        c_el->add_option("--group", group_spec, "D2n:<n> or D2nxC2:<n>")->required();
        c_el->add_option("--order", want_order, "restrict to elements of this order");
        c_el->callback([&] {
            SymGroup g = parse_group(group_spec);
            auto elems = want_order > 0 ? elements_of_order(g, want_order) : all_elements(g);
            ordered_json arr = ordered_json::array();
            std::string human;
            for (const SymElement& e : elems) {
                arr.push_back(element_str(g, e));
                human += (human.empty() ? "" : " ") + element_str(g, e);
            }
            out.emit(ordered_json{{"group", group_spec}, {"elements", arr}},
                     human.empty() ? "(none)" : human);
        });

        auto* c_ord = sy->add_subcommand("order", "order of one element");
        c_ord->add_option("--group", group_spec, "D2n:<n> or D2nxC2:<n>")->required();
        c_ord->add_option("--elem", elem_a, "e.g. R^2*S")->required();
        c_ord->callback([&] {
            SymGroup g = parse_group(group_spec);
            int o = elem_order(g, parse_element(g, elem_a));
            out.emit(ordered_json{{"elem", elem_a}, {"order", o}}, std::to_string(o));
        });

        auto* c_com = sy->add_subcommand("commute", "do two elements commute?");
        c_com->add_option("--group", group_spec, "D2n:<n> or D2nxC2:<n>")->required();
        c_com->add_option("--elem", elem_a, "first element")->required();
        c_com->add_option("--other", elem_b, "second element")->required();
        c_com->callback([&] {
            SymGroup g = parse_group(group_spec);
            bool ok = commutes(g, parse_element(g, elem_a), parse_element(g, elem_b));
            out.emit(ordered_json{{"commute", ok}}, ok ? "commute" : "do not commute");
            if (!ok) out.rc = 1;
        });

        auto* c_cj = sy->add_subcommand("conj", "are two elements conjugate?");
        c_cj->add_option("--group", group_spec, "D2n:<n> or D2nxC2:<n>")->required();
        c_cj->add_option("--elem", elem_a, "first element")->required();
        c_cj->add_option("--other", elem_b, "second element")->required();
        c_cj->callback([&] {
            SymGroup g = parse_group(group_spec);
            bool ok = conjugate_exists(g, parse_element(g, elem_a), parse_element(g, elem_b));
            out.emit(ordered_json{{"conjugate", ok}}, ok ? "conjugate" : "not conjugate");
            if (!ok) out.rc = 1;
        });

        auto* c_fx = sy->add_subcommand("fixed", "stated fixed-point count of an element");
        c_fx->add_option("--construction", construction, "521 or 522")->required();
        c_fx->add_option("--rho", rho, "family parameter")->required();
        c_fx->add_option("--elem", elem_a, "element")->required();
        c_fx->callback([&] {
            FixedPointRule rule{construction == 522 ? FpConstruction::Thm522
                                                    : FpConstruction::Thm521,
                                rho};
            if (construction != 521 && construction != 522)
                throw std::invalid_argument("--construction must be 521 or 522");
            SymGroup g = rule.group();
            int n = fixed_points(rule, parse_element(g, elem_a));
            bool inf = n == infinite_fixed_points;
            out.emit(ordered_json{{"fixed_points",
                                   inf ? ordered_json("infinite") : ordered_json(n)}},
                     inf ? "infinite" : std::to_string(n));
        });

        // must outlive this setup block: the parse-time callbacks call it
        static std::function<void(int)> run_sym_verify = [&](int which) {
            SymCheckReport r = which == 521 ? verify_thm_5_2_1(rho) : verify_thm_5_2_2(rho);
            ordered_json j{{"rho", rho}, {"passed", r.passed}, {"lines", r.lines}};
            std::vector<std::string> lines = r.lines;
            lines.push_back(r.passed ? "all checks PASS" : "some checks FAIL");
            out.emit(j, join_lines(lines));
            if (!r.passed) out.rc = 1;
        };
        auto* c_v1 = sy->add_subcommand("verify-521", "first rigidity recipe");
        c_v1->add_option("--rho", rho, "family parameter (>= 2)")->required();
        c_v1->callback([&] { run_sym_verify(521); });
        auto* c_v2 = sy->add_subcommand("verify-522", "second rigidity recipe");
        c_v2->add_option("--rho", rho, "family parameter (multiple of 4)")->required();
        c_v2->callback([&] { run_sym_verify(522); });
    }

    // ---------------------------------------------------------- orb
    auto* ob = app.add_subcommand("orb", "Euler characteristics, coverings, feasibility");
    ob->require_subcommand(1);
    {
        static long long genus = 0, boundaries = 0, chi = 0, n_arg = 0, m_arg = 0, q_arg = 0;
        static int index_arg = 0, cap_arg = 0;
        static std::string prongs_text, cover_text, points_text, rep_text, endo_text, file;

        auto* c_eu = ob->add_subcommand("euler", "Euler characteristic of a surface");
        c_eu->add_option("-g,--genus", genus, "genus")->required();
        c_eu->add_option("-b,--boundaries", boundaries, "boundary components");
        c_eu->callback([&] {
            long long chi_v = euler_char(genus, boundaries);
            out.emit(ordered_json{{"euler_char", chi_v}}, std::to_string(chi_v));
        });

        auto* c_pr = ob->add_subcommand("prongs", "check the singularity-index identity");
        c_pr->add_option("--chi", chi, "Euler characteristic")->required();
        c_pr->add_option("--prongs", prongs_text, "JSON list of prong counts, e.g. [1,1,1,1]")
            ->required();
        c_pr->callback([&] {
            ordered_json j = ordered_json::parse(prongs_text);
            std::vector<SingularityDatum> data;
            int id = 0;
            for (const auto& p : j)
                data.push_back({"p" + std::to_string(id++), p.get<int>(), false});
            bool ok = check_prong_formula(chi, data);
            out.emit(ordered_json{{"chi", chi}, {"satisfied", ok}},
                     ok ? "identity holds" : "identity FAILS");
            if (!ok) out.rc = 1;
        });

        auto* c_rh = ob->add_subcommand("rh", "check the covering degree identity");
        c_rh->add_option("--cover", cover_text, "CoverDatum JSON");
        c_rh->add_option("--file", file, "CoverDatum JSON file");
        c_rh->callback([&] {
            bool ok = check_riemann_hurwitz(parse_cover(parse_json_arg(cover_text, file)));
            out.emit(ordered_json{{"satisfied", ok}}, ok ? "identity holds" : "identity FAILS");
            if (!ok) out.rc = 1;
        });

        auto* c_pv = ob->add_subcommand("pivot", "is the chosen branch point a pivot?");
        c_pv->add_option("--points", points_text, "JSON [[ind,r],...]")->required();
        c_pv->add_option("--index", index_arg, "candidate position (0-based)")->required();
        c_pv->callback([&] {
            ordered_json j = ordered_json::parse(points_text);
            std::vector<PivotPoint> pts;
            for (const auto& p : j)
                pts.push_back({p.at(0).get<long long>(), p.at(1).get<long long>()});
            bool ok = is_pivot(pts, index_arg);
            out.emit(ordered_json{{"pivot", ok}}, ok ? "pivot" : "not a pivot");
            if (!ok) out.rc = 1;
        });

        auto* c_od = ob->add_subcommand("orders", "admissible periodic orders for (genus, q)");
        c_od->add_option("-g,--genus", genus, "genus")->required();
        c_od->add_option("-q", q_arg, "marked-point count")->required();
        c_od->callback([&] {
            auto orders = admissible_orders(genus, q_arg);
            ordered_json arr = ordered_json::array();
            std::string human;
            for (long long o : orders) {
                arr.push_back(o);
                human += (human.empty() ? "" : " ") + std::to_string(o);
            }
            out.emit(ordered_json{{"orders", arr}}, human);
        });

        auto* c_mf = ob->add_subcommand("maxfix", "max fixed points of an order-m sphere map");
        c_mf->add_option("-m", m_arg, "order (>= 2)")->required();
        c_mf->callback([&] {
            long long v = max_fixed_points_sphere(m_arg);
            out.emit(ordered_json{{"max_fixed_points", v}}, std::to_string(v));
        });

        auto* c_lk = ob->add_subcommand("liftk", "least exponent making a deck action lift");
        c_lk->add_option("--rep", rep_text, "{\"degree\":d,\"perms\":[[...]]}")->required();
        c_lk->add_option("--endo", endo_text, "{\"rank\":r,\"images\":[[letters]]}")->required();
        c_lk->add_option("--cap", cap_arg, "search cap (default: search budget)");
        c_lk->callback([&] {
            ordered_json rj = ordered_json::parse(rep_text);
            PermRep rep;
            rep.degree = rj.at("degree").get<int>();
            for (const auto& p : rj.at("perms")) rep.images.push_back({p.get<std::vector<int>>()});
            FreeEndo phi = parse_endo(ordered_json::parse(endo_text));
            int cap = cap_arg > 0 ? cap_arg : budgets.lift;
            auto k = lift_exponent(rep, phi, cap);
            out.emit(ordered_json{{"k", k ? ordered_json(*k) : ordered_json(nullptr)}},
                     k ? std::to_string(*k) : "not found within cap");
            if (!k) out.rc = 1;
        });

        auto* c_ps = ob->add_subcommand("primesplit", "factorizations n = o*m with o,m >= 2");
        c_ps->add_option("-n", n_arg, "integer to split")->required();
        c_ps->callback([&] {
            auto fac = cyclic_orbit_factorizations(n_arg);
            ordered_json arr = ordered_json::array();
            std::string human;
            for (auto [o, m] : fac) {
                arr.push_back(ordered_json::array({o, m}));
                human += (human.empty() ? "" : " ") + std::to_string(o) + "*" +
                         std::to_string(m);
            }
            out.emit(ordered_json{{"n", n_arg}, {"factorizations", arr}},
                     human.empty() ? "none" : human);
        });
    }

    // ---------------------------------------------------------- graph
    auto* gr = app.add_subcommand("graph", "decomposition graphs of reducible classes");
    gr->require_subcommand(1);
    {
        static std::string graph_text, file;
        auto add_graph_opts = [&](CLI::App* c) {
            c->add_option("--graph", graph_text, "graph JSON");
            c->add_option("--file", file, "graph JSON file");
        };

        auto* c_val = gr->add_subcommand("validate", "check the structural invariants");
        add_graph_opts(c_val);
        c_val->callback([&] {
            GraphDiagnostic d = validate_report(parse_graph(parse_json_arg(graph_text, file)));
            out.emit(ordered_json{{"ok", d.ok}, {"message", d.message}},
                     d.ok ? "valid" : "invalid: " + d.message);
            if (!d.ok) out.rc = 1;
        });

        auto* c_rk = gr->add_subcommand("rank", "cycle rank");
        add_graph_opts(c_rk);
        c_rk->callback([&] {
            long long r = cycle_rank(parse_graph(parse_json_arg(graph_text, file)));
            out.emit(ordered_json{{"cycle_rank", r}}, std::to_string(r));
        });

        auto* c_cl = gr->add_subcommand("classify", "which of the four cases");
        add_graph_opts(c_cl);
        c_cl->callback([&] {
            const char* name = case_name(classify_case(parse_graph(parse_json_arg(graph_text, file))));
            out.emit(ordered_json{{"case", name}}, name);
        });

        auto* c_au = gr->add_subcommand("autos", "leaf-fixing automorphism group");
        add_graph_opts(c_au);
        c_au->callback([&] {
            DecompositionGraph g = parse_graph(parse_json_arg(graph_text, file));
            auto autos = leaf_fixing_automorphisms(g, budgets.graph);
            ordered_json arr = ordered_json::array();
            for (const auto& a : autos) {
                ordered_json vm = ordered_json::object(), em = ordered_json::object(),
                             lr = ordered_json::object();
                for (const auto& [k, v] : a.vertex_map) vm[k] = v;
                for (const auto& [k, v] : a.edge_map) em[k] = v;
                for (const auto& [k, v] : a.loop_reversed) lr[k] = v;
                arr.push_back(ordered_json{
                    {"vertex_map", vm}, {"edge_map", em}, {"loop_reversed", lr}});
            }
            out.emit(ordered_json{{"count", arr.size()}, {"automorphisms", arr}},
                     std::to_string(autos.size()) + " leaf-fixing automorphism(s)");
        });
    }

    // ---------------------------------------------------------- order
    auto* od = app.add_subcommand("order", "bi-invariant orders and unique roots");
    od->require_subcommand(1);
    {
        static std::string f_text, h_text;
        static int split = 0, m_exp = 1;

        auto* c_demo = od->add_subcommand("demo", "worked comparisons on Z^3 and an extension");
        c_demo->callback([&] {
            ZqLex G{3};
            LexExtension E{2, 1};
            ordered_json j;
            auto ord_name = [](Ordering o) {
                return o == Ordering::Less ? "less" : o == Ordering::Equal ? "equal" : "greater";
            };
            Ordering o1 = G.compare({1, -5, 0}, {1, -4, 100});
            Ordering o2 = E.compare({{0, 3}, {7}}, {{0, 3}, {6}});
            bool unique = unique_root_check(G, ZqLex::Elem{2, 1, 0}, ZqLex::Elem{2, 1, 0}, 3);
            j["compare (1,-5,0) vs (1,-4,100) in Z^3"] = ord_name(o1);
            j["compare ((0,3),(7)) vs ((0,3),(6)) in the extension"] = ord_name(o2);
            j["unique_root_check (2,1,0) m=3"] = unique;
            out.emit(j, "(1,-5,0) < (1,-4,100) in lex Z^3: " +
                            std::string(ord_name(o1)) + "\n((0,3),(7)) vs ((0,3),(6)): " +
                            ord_name(o2) + "\nunique_root_check (2,1,0), m=3: " +
                            (unique ? "true" : "false"));
        });

        auto* c_chk = od->add_subcommand("check", "unique-root check for two elements");
        c_chk->add_option("--left", f_text, "JSON integer vector")->required();
        c_chk->add_option("--right", h_text, "JSON integer vector")->required();
        c_chk->add_option("-m", m_exp, "exponent")->required();
        c_chk->add_option("--split", split,
                          "treat the first <split> coordinates as the ordered quotient");
        c_chk->callback([&] {
            auto f = ordered_json::parse(f_text).get<std::vector<long long>>();
            auto h = ordered_json::parse(h_text).get<std::vector<long long>>();
            if (f.size() != h.size() || f.empty())
                throw std::invalid_argument("--left and --right must be nonempty, equal length");
            bool ok;
            if (split > 0) {
                int q = split, k = static_cast<int>(f.size()) - split;
                if (k < 1) throw std::invalid_argument("--split leaves an empty kernel");
                LexExtension E{q, k};
                auto cut = [&](const std::vector<long long>& v) {
                    return LexExtension::Elem{
                        std::vector<long long>(v.begin(), v.begin() + q),
                        std::vector<long long>(v.begin() + q, v.end())};
                };
                ok = unique_root_check(E, cut(f), cut(h), m_exp);
            } else {
                ZqLex G{static_cast<int>(f.size())};
                ok = unique_root_check(G, f, h, m_exp);
            }
            out.emit(ordered_json{{"unique_root", ok}},
                     ok ? "consistent: equal powers force equal elements"
                        : "COUNTEREXAMPLE found");
            if (!ok) out.rc = 1;
        });
    }

    // ---------------------------------------------------------- verify
    auto* vf = app.add_subcommand("verify", "run the bundled verification recipes");
    {
        static bool timing = false;
        auto* c_all = vf->add_subcommand("all", "every recipe, with a per-recipe report");
        c_all->add_flag("--timing", timing, "include wall-clock timings (non-deterministic)");
        c_all->callback([&] {
            ordered_json arr = ordered_json::array();
            std::vector<std::string> lines;
            bool all_ok = true;
            for (const auto& r : recipes::all()) {
                auto t0 = std::chrono::steady_clock::now();
                bool ok = false;
                try {
                    ok = r.run();
                } catch (const std::exception&) {
                    ok = false;
                }
                auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                              std::chrono::steady_clock::now() - t0)
                              .count();
                ordered_json e{{"id", r.id}, {"description", r.description}, {"passed", ok}};
                std::string line = std::string(r.id) + " (" + r.description + "): " +
                                   (ok ? "PASS" : "FAIL");
                if (timing) {
                    e["ms"] = ms;
                    line += " (" + std::to_string(ms) + " ms)";
                }
                arr.push_back(e);
                lines.push_back(line);
                all_ok = all_ok && ok;
            }
            lines.push_back(all_ok ? "all recipes PASS" : "some recipes FAIL");
            out.emit(ordered_json{{"recipes", arr}, {"passed", all_ok}}, join_lines(lines));
            if (!all_ok) out.rc = 1;
        });
        vf->require_subcommand(1);
    }

    // let the global --json flag appear after any subcommand
    std::function<void(CLI::App*)> enable_fallthrough = [&](CLI::App* a) {
        for (CLI::App* sub : a->get_subcommands({})) {
            sub->fallthrough(true);
            enable_fallthrough(sub);
        }
    };
    enable_fallthrough(&app);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return out.rc;
}
