// Command-line interface to the tangle calculus engine: evaluation and
// closure of tangle expressions, Schubert classification, the processive and
// distributive equation solvers, the brute-force diagram oracle, and SVG
// rendering.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "tanglecalc/diagram.hpp"
#include "tanglecalc/fourplat.hpp"
#include "tanglecalc/notation.hpp"
#include "tanglecalc/render.hpp"
#include "tanglecalc/solver.hpp"

using json = nlohmann::ordered_json;
using namespace tanglecalc;

namespace {

struct ModeOption {
    bool mirror_agnostic = false;
    bool chirality_sensitive = false;

    EquivalenceMode resolve() const {
        if (mirror_agnostic && chirality_sensitive)
            throw CLI::ValidationError("pick one equivalence mode");
        if (mirror_agnostic) return EquivalenceMode::mirror_agnostic;
        if (chirality_sensitive) return EquivalenceMode::chirality_sensitive;
        if (const char* env = std::getenv("TANGLECALC_MODE")) {
            std::string v = env;
            if (v == "chirality-sensitive") return EquivalenceMode::chirality_sensitive;
            if (v == "mirror-agnostic") return EquivalenceMode::mirror_agnostic;
            throw std::invalid_argument("TANGLECALC_MODE must be mirror-agnostic or "
                                        "chirality-sensitive");
        }
        return EquivalenceMode::mirror_agnostic;
    }
};

void add_mode_flags(CLI::App* cmd, ModeOption& mode) {
    cmd->add_flag("--mirror-agnostic", mode.mirror_agnostic,
                  "merge mirror classes (default)");
    cmd->add_flag("--chirality-sensitive", mode.chirality_sensitive,
                  "distinguish mirror classes");
}

std::string mode_str(EquivalenceMode m) {
    return m == EquivalenceMode::mirror_agnostic ? "mirror-agnostic" : "chirality-sensitive";
}

std::string tangle_kind(const Tangle& t) {
    if (const auto* r = std::get_if<RationalTangle>(&t)) {
        if (r->is_infinite()) return "rational (infinity)";
        if (r->is_integral()) return "rational (integral)";
        return "rational";
    }
    return "montesinos";
}

json link_json(const TwoBridgeLink& k, EquivalenceMode mode) {
    TwoBridgeLink canon = schubert_normalize(k, mode);
    json j;
    j["p"] = canon.p;
    j["q"] = canon.q;
    j["notation"] = canon.str();
    if (auto name = display_name(canon)) j["name"] = *name;
    j["determinant"] = determinant(canon);
    j["crossing_number"] = crossing_number(canon);
    return j;
}

std::string link_text(const TwoBridgeLink& k, EquivalenceMode mode) {
    TwoBridgeLink canon = schubert_normalize(k, mode);
    std::string s = canon.str();
    if (auto name = display_name(canon)) s += " (" + *name + ")";
    return s;
}

json note_json(const VerdictNote& n) {
    return json{{"rule", n.rule}, {"citation", n.note}};
}

json solution_json(const ProcessiveSolution& s) {
    return json{{"O", s.outside.str()}, {"R", s.recombinant.str()}, {"P", s.parental.str()}};
}

const char* kChiralityWarning =
    "handedness names depend on the diagram sign convention: this build draws positive "
    "twists as negative crossings and anchors N(T(-1/2)+T(2)) as the left-handed trefoil";

Tangle eval_text(const std::string& text) { return eval_sum(parse_tangle_sum(text)); }

PlanarDiagram diagram_for(const Tangle& t, int cap) {
    if (const auto* r = std::get_if<RationalTangle>(&t))
        return diagram_of_closure(*r, cap);
    const auto& m = std::get<MontesinosTangle>(t);
    TangleDiagramBuilder b = builder_from_twist_word(tangle_to_word(m.summands[0]), cap);
    for (std::size_t i = 1; i < m.summands.size(); ++i)
        b.append(builder_from_twist_word(tangle_to_word(m.summands[i]), cap));
    if (b.partial().crossing_count() > cap) throw std::runtime_error("crossing cap exceeded");
    return b.close_numerator();
}

// Jones values live in Z[t^(1/2), t^(-1/2)]; integer powers print as t^k,
// odd ones as t^(k/2).
std::string jones_text(const LaurentPolynomial& p) {
    if (p.terms.empty()) return "0";
    std::string s;
    for (auto it = p.terms.rbegin(); it != p.terms.rend(); ++it) {
        auto [e, c] = *it;
        if (!s.empty()) s += c > 0 ? " + " : " - ";
        else if (c < 0) s += "-";
        std::int64_t a = c < 0 ? -c : c;
        if (a != 1 || e == 0) s += std::to_string(a);
        if (e != 0) {
            if (a != 1) s += "*";
            if (e == 2) s += "t";
            else if (e % 2 == 0) s += "t^" + std::to_string(e / 2);
            else s += "t^(" + std::to_string(e) + "/2)";
        }
    }
    return s;
}

void write_output(const std::string& path, const std::string& content) {
    if (path.empty() || path == "-") {
        std::cout << content;
        return;
    }
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << content;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

ChiralityObservation parse_observation(const std::string& text) {
    detail::Scanner s(text);
    auto word = s.ident();
    // accepts "round1=left" and "1=left"
    Int round = -1;
    if (word) {
        if (word->rfind("round", 0) != 0 || word->size() == 5)
            throw std::invalid_argument("expected roundN=left|right");
        round = std::stoll(word->substr(5));
    } else {
        round = s.integer();
    }
    s.expect('=');
    auto hand = s.ident();
    if (!hand || (*hand != "left" && *hand != "right"))
        throw std::invalid_argument("expected 'left' or 'right'");
    return {static_cast<std::size_t>(round),
            *hand == "left" ? Handedness::left : Handedness::right};
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"rational tangle calculus, 2-bridge classification and tangle-equation solvers"};
    app.require_subcommand(1);

    bool as_json = false;
    app.add_flag("--json", as_json, "machine-readable output");

    // --- eval ---------------------------------------------------------------
    std::string eval_expr, eval_word;
    auto* eval_cmd = app.add_subcommand("eval", "evaluate a tangle expression or twist word");
    eval_cmd->add_option("expr", eval_expr, "tangle expression, e.g. T(-1/2)+T(2)");
    eval_cmd->add_option("--word", eval_word, "twist word, e.g. 'h^2 r h^3 r'");

    // --- closure ------------------------------------------------------------
    std::string closure_expr;
    ModeOption closure_mode;
    auto* closure_cmd = app.add_subcommand("closure", "numerator closure of a tangle expression");
    closure_cmd->add_option("expr", closure_expr, "e.g. N(T(-1/2)+T(2))")->required();
    add_mode_flags(closure_cmd, closure_mode);

    // --- distance -----------------------------------------------------------
    std::vector<std::string> distance_args;
    auto* distance_cmd = app.add_subcommand("distance", "tangle distance |ps - rq|");
    distance_cmd->add_option("tangles", distance_args, "two rational tangles")
        ->expected(2)
        ->required();

    // --- classify -----------------------------------------------------------
    std::string classify_arg;
    ModeOption classify_mode;
    auto* classify_cmd = app.add_subcommand("classify", "Schubert normal form of b(p,q)");
    classify_cmd->add_option("link", classify_arg, "e.g. b(11,6)")->required();
    add_mode_flags(classify_cmd, classify_mode);

    // --- solve-processive ----------------------------------------------------
    std::string proc_products, proc_file, proc_chirality;
    ModeOption proc_mode;
    SearchBounds proc_bounds;
    auto* proc_cmd = app.add_subcommand("solve-processive", "solve N(O+iR) = K_i");
    proc_cmd->add_option("--products", proc_products,
                         "comma-separated products, e.g. b(1,1),b(3,1),b(7,3),7-crossing");
    proc_cmd->add_option("--file", proc_file, "equation document (one equation per line)");
    proc_cmd->add_option("--chirality", proc_chirality,
                         "observed handedness, e.g. round1=left");
    proc_cmd->add_option("--max-num", proc_bounds.max_num, "bound on |u| in O = T(u/v)");
    proc_cmd->add_option("--max-den", proc_bounds.max_den, "bound on |v|");
    proc_cmd->add_option("--max-twist", proc_bounds.max_twist, "bound on |r| in R = T(r)");
    add_mode_flags(proc_cmd, proc_mode);

    // --- solve-distributive ---------------------------------------------------
    std::string dist_file, dist_k1, dist_product, dist_parental = "T(0)", dist_recomb = "T(2)";
    ModeOption dist_mode;
    SearchBounds dist_bounds;
    auto* dist_cmd = app.add_subcommand("solve-distributive",
                                        "solve N(Q+P) = K1, N(Q+R) = K2#K3");
    dist_cmd->add_option("--file", dist_file, "equation document with P and R assignments");
    dist_cmd->add_option("--k1", dist_k1, "round-one product, e.g. b(3,1)");
    dist_cmd->add_option("--product", dist_product, "composite product, e.g. b(3,1)#b(3,1)");
    dist_cmd->add_option("--parental", dist_parental, "tangle P (default T(0))");
    dist_cmd->add_option("--recombinant", dist_recomb, "tangle R (default T(2))");
    dist_cmd->add_option("--max-num", dist_bounds.max_num, "bound on |u| in the core T(u/v)");
    dist_cmd->add_option("--max-den", dist_bounds.max_den, "bound on |v|");
    dist_cmd->add_option("--max-twist", dist_bounds.max_twist, "family window for d(P,R)=1");
    add_mode_flags(dist_cmd, dist_mode);

    // --- montesinos-family ----------------------------------------------------
    std::vector<Int> family_args;
    Int family_from = 0, family_to = 0;
    std::optional<Int> family_target;
    ModeOption family_mode;
    auto* family_cmd = app.add_subcommand(
        "montesinos-family", "4-plats N(T(s/r)+T(u/t)+T(m)): p = st+ru+rtm over a range of m");
    family_cmd->add_option("rstu", family_args, "the four integers r s t u")
        ->expected(4)
        ->required();
    family_cmd->add_option("--m-from", family_from, "first m")->required();
    family_cmd->add_option("--m-to", family_to, "last m")->required();
    family_cmd->add_option("--target-p", family_target,
                           "report only members whose raw p equals this value");
    add_mode_flags(family_cmd, family_mode);

    // --- oracle ----------------------------------------------------------------
    std::string oracle_word, oracle_tangle;
    bool oracle_bracket = false, oracle_edges = false, oracle_open = false;
    int oracle_cap = kDefaultCrossingCap;
    auto* oracle_cmd = app.add_subcommand(
        "oracle", "brute-force diagram invariants (Jones, bracket, Goeritz determinant)");
    oracle_cmd->add_option("--word", oracle_word, "twist word to realize");
    oracle_cmd->add_option("--tangle", oracle_tangle, "tangle expression to close and realize");
    oracle_cmd->add_flag("--bracket", oracle_bracket, "print the Kauffman bracket too");
    oracle_cmd->add_flag("--edges", oracle_edges, "print the diagram edge list");
    oracle_cmd->add_flag("--open", oracle_open,
                         "leave a twist-word tangle unclosed (edge list only)");
    oracle_cmd->add_option("--cap", oracle_cap, "crossing cap (default 16)");

    // --- render -----------------------------------------------------------------
    std::string render_word, render_closure, render_out;
    auto* render_cmd = app.add_subcommand("render", "SVG picture of a twist word or closure");
    render_cmd->add_option("--word", render_word, "twist word");
    render_cmd->add_option("--closure", render_closure, "closure expression N(...)");
    render_cmd->add_option("-o,--out", render_out, "output file (default stdout)");

    for (CLI::App* sub : app.get_subcommands([](const CLI::App*) { return true; }))
        sub->fallthrough();

    CLI11_PARSE(app, argc, argv);

    try {
        if (*eval_cmd) {
            if (eval_expr.empty() == eval_word.empty())
                throw std::invalid_argument("eval needs an expression or --word");
            Tangle t = eval_word.empty() ? eval_text(eval_expr)
                                         : Tangle(word_to_tangle(parse_twist_word(eval_word)));
            json j;
            j["query"] = eval_word.empty() ? eval_expr : eval_word;
            j["value"] = tangle_str(t);
            j["kind"] = tangle_kind(t);
            if (const auto* r = std::get_if<RationalTangle>(&t)) {
                j["fraction"] = r->fraction.str();
                j["word"] = tangle_to_word(*r).str();
            }
            if (as_json) std::cout << j.dump(2) << "\n";
            else {
                std::cout << tangle_str(t) << "  [" << tangle_kind(t) << "]\n";
                if (const auto* r = std::get_if<RationalTangle>(&t))
                    std::cout << "word: " << tangle_to_word(*r).str() << "\n";
            }
            return 0;
        }

        if (*closure_cmd) {
            EquivalenceMode mode = closure_mode.resolve();
            Tangle t = eval_text(closure_expr);
            KnotValue k = close_numerator(t);
            json j;
            j["query"] = closure_expr;
            j["mode"] = mode_str(mode);
            if (const auto* link = std::get_if<TwoBridgeLink>(&k)) {
                j["result"] = link_json(*link, mode);
                if (as_json) std::cout << j.dump(2) << "\n";
                else std::cout << link_text(*link, mode) << "\n";
            } else {
                const auto& c = std::get<CompositeKnot>(k);
                json factors = json::array();
                std::string text;
                for (const auto& f : c.factors) {
                    factors.push_back(link_json(f, mode));
                    if (!text.empty()) text += " # ";
                    text += link_text(f, mode);
                }
                j["result"] = json{{"connected_sum", factors},
                                   {"determinant", determinant(c)}};
                if (as_json) std::cout << j.dump(2) << "\n";
                else std::cout << text << "\n";
            }
            return 0;
        }

        if (*distance_cmd) {
            auto as_rational = [](const std::string& text) {
                Tangle t = eval_text(text);
                if (const auto* r = std::get_if<RationalTangle>(&t)) return *r;
                throw std::invalid_argument("distance needs rational tangles");
            };
            std::cout << distance(as_rational(distance_args[0]), as_rational(distance_args[1]))
                      << "\n";
            return 0;
        }

        if (*classify_cmd) {
            EquivalenceMode mode = classify_mode.resolve();
            ast::KnotExpr k = parse_knot(classify_arg);
            const auto* lit = std::get_if<ast::SchubertLit>(&k);
            if (!lit) throw std::invalid_argument("classify takes a single b(p,q)");
            TwoBridgeLink link(lit->p, lit->q);
            TwoBridgeLink canon = schubert_normalize(link, mode);
            json j;
            j["query"] = classify_arg;
            j["mode"] = mode_str(mode);
            j["canonical"] = link_json(link, mode);
            j["equivalent_q"] = schubert_orbit(canon, mode);
            j["knot"] = canon.is_knot();
            if (as_json) std::cout << j.dump(2) << "\n";
            else {
                std::cout << "canonical: " << link_text(link, mode) << "\n";
                std::cout << "equivalent q: ";
                auto orbit = schubert_orbit(canon, mode);
                for (std::size_t i = 0; i < orbit.size(); ++i)
                    std::cout << (i ? ", " : "") << orbit[i];
                std::cout << "\ndeterminant: " << determinant(canon)
                          << "\ncrossing number: " << crossing_number(canon) << "\n";
            }
            return 0;
        }

        if (*proc_cmd) {
            EquivalenceMode mode = proc_mode.resolve();
            ProcessiveSystem sys;
            sys.mode = mode;
            sys.bounds = proc_bounds;
            if (!proc_file.empty())
                sys = processive_from_document(parse_document(read_file(proc_file)), mode,
                                               proc_bounds);
            else if (!proc_products.empty())
                sys.products = parse_product_list(proc_products);
            else
                throw std::invalid_argument("solve-processive needs --products or --file");

            ProcessiveResult result = solve_processive(sys);
            std::vector<ProcessiveSolution> solutions = result.solutions;
            json warnings = json::array();
            if (!proc_chirality.empty()) {
                solutions = chirality_filter(solutions, sys, parse_observation(proc_chirality));
                warnings.push_back(kChiralityWarning);
            }

            json j;
            {
                std::string q;
                for (const auto& p : sys.products) {
                    if (!q.empty()) q += ",";
                    q += product_str(p);
                }
                j["query"] = q;
            }
            j["mode"] = mode_str(mode);
            json sols = json::array();
            for (const auto& s : solutions) sols.push_back(solution_json(s));
            j["solutions"] = sols;
            json rejected = json::array();
            for (const auto& r : result.rejections)
                rejected.push_back(json{{"O", r.outside.str()},
                                        {"R", r.recombinant.str()},
                                        {"round", r.round},
                                        {"computed", r.computed.str()},
                                        {"reason", r.reason}});
            j["rejections"] = rejected;
            json prov = json::array();
            for (const auto& n : result.provenance) prov.push_back(note_json(n));
            j["provenance"] = prov;
            j["warnings"] = warnings;
            if (as_json) {
                std::cout << j.dump(2) << "\n";
            } else {
                std::cout << "solutions (" << solutions.size() << "):\n";
                for (const auto& s : solutions)
                    std::cout << "  O = " << s.outside.str() << ", R = " << s.recombinant.str()
                              << ", P = " << s.parental.str() << "\n";
                if (!result.rejections.empty()) {
                    std::cout << "rejected candidates (" << result.rejections.size() << "):\n";
                    for (const auto& r : result.rejections)
                        std::cout << "  O = " << r.outside.str() << ", R = "
                                  << r.recombinant.str() << ": " << r.reason << "\n";
                }
                for (const auto& n : result.provenance)
                    std::cout << "rule " << n.rule << ": " << n.note << "\n";
                for (const auto& w : warnings)
                    std::cout << "warning: " << w.get<std::string>() << "\n";
            }
            return 0;
        }

        if (*dist_cmd) {
            EquivalenceMode mode = dist_mode.resolve();
            std::optional<DistributiveSystem> sys;
            if (!dist_file.empty()) {
                sys = distributive_from_document(parse_document(read_file(dist_file)), mode,
                                                 dist_bounds);
            } else {
                if (dist_k1.empty() || dist_product.empty())
                    throw std::invalid_argument(
                        "solve-distributive needs --file or --k1 and --product");
                auto k1 = parse_knot(dist_k1);
                const auto* b = std::get_if<ast::SchubertLit>(&k1);
                if (!b) throw std::invalid_argument("--k1 must be a single b(p,q)");
                auto prod = parse_knot(dist_product);
                const auto* cs = std::get_if<ast::ConnectedSumLit>(&prod);
                if (!cs) throw std::invalid_argument("--product must be a connected sum");
                std::vector<TwoBridgeLink> factors;
                for (const auto& f : cs->factors) factors.emplace_back(f.p, f.q);
                auto rational_arg = [](const std::string& text, const char* role) {
                    Tangle t = eval_text(text);
                    if (const auto* r = std::get_if<RationalTangle>(&t)) return *r;
                    throw std::invalid_argument(std::string(role) + " must be rational");
                };
                sys = DistributiveSystem{TwoBridgeLink(b->p, b->q),
                                         CompositeKnot(std::move(factors)),
                                         rational_arg(dist_parental, "parental"),
                                         rational_arg(dist_recomb, "recombinant"),
                                         mode,
                                         dist_bounds};
            }

            SolutionSet out = solve_distributive(*sys);
            json j;
            j["query"] = "N(Q+" + sys->parental.str() + ") = " + sys->k1.str() + "; N(Q+" +
                         sys->recombinant.str() + ") = " + sys->product.str();
            j["mode"] = mode_str(mode);
            json rational = json::array();
            for (const auto& t : out.rational) rational.push_back(t.str());
            json prime = json::array();
            for (const auto& c : out.prime)
                prime.push_back(json{{"m", c.m}, {"p", c.raw_p}, {"member", c.member.str()}});
            json local = json::array();
            for (const auto& s : out.locally_knotted)
                local.push_back(json{{"core", s.core.str()},
                                     {"insert", s.insert.str()},
                                     {"placement", placement_str(s.placement)}});
            j["solutions"] = json{{"rational", rational},
                                  {"prime", prime},
                                  {"prime_unresolved_non_montesinos", out.prime_unresolved},
                                  {"locally_knotted", local}};
            json prov = json::array();
            prov.push_back(note_json(out.rational_verdict));
            prov.push_back(note_json(out.prime_verdict));
            for (const auto& n : out.notes) prov.push_back(note_json(n));
            j["provenance"] = prov;
            j["warnings"] = json::array();
            if (as_json) {
                std::cout << j.dump(2) << "\n";
            } else {
                std::cout << "rational solutions: " << (out.rational.empty() ? "none" : "")
                          << "\n";
                std::cout << "  " << out.rational_verdict.rule << ": "
                          << out.rational_verdict.note << "\n";
                std::cout << "prime solutions: " << (out.prime.empty() ? "none" : "") << "\n";
                for (const auto& c : out.prime)
                    std::cout << "  m = " << c.m << ": p = " << c.raw_p << ", "
                              << c.member.str() << "\n";
                std::cout << "  " << out.prime_verdict.rule << ": " << out.prime_verdict.note
                          << "\n";
                std::cout << "locally knotted solutions (" << out.locally_knotted.size()
                          << "):\n";
                for (const auto& s : out.locally_knotted)
                    std::cout << "  core " << s.core.str() << ", insert " << s.insert.str()
                              << ", " << placement_str(s.placement) << "\n";
                for (const auto& n : out.notes)
                    std::cout << "rule " << n.rule << ": " << n.note << "\n";
            }
            return 0;
        }

        if (*family_cmd) {
            EquivalenceMode mode = family_mode.resolve();
            Int r = family_args[0], s = family_args[1], t = family_args[2], u = family_args[3];
            json members = json::array();
            Int hits = 0, total = 0;
            montesinos_distance_one_family_visit(
                r, s, t, u, family_from, family_to,
                [&](Int m, Int raw_p, TwoBridgeLink member) {
                    ++total;
                    if (family_target && raw_p != *family_target) return;
                    ++hits;
                    if (members.size() < 1000)
                        members.push_back(json{{"m", m},
                                               {"p", raw_p},
                                               {"member",
                                                schubert_normalize(member, mode).str()}});
                });
            json j;
            j["query"] = "family(" + std::to_string(r) + "," + std::to_string(s) + "," +
                         std::to_string(t) + "," + std::to_string(u) + "), m in [" +
                         std::to_string(family_from) + "," + std::to_string(family_to) + "]";
            j["mode"] = mode_str(mode);
            j["members_scanned"] = total;
            if (family_target) j["target_p"] = *family_target;
            j["matches"] = hits;
            j["members"] = members;
            if (as_json) {
                std::cout << j.dump(2) << "\n";
            } else {
                if (family_target)
                    std::cout << hits << " of " << total << " members have p = "
                              << *family_target << "\n";
                for (const auto& m : members)
                    std::cout << "  m = " << m["m"].get<Int>() << ": p = " << m["p"].get<Int>()
                              << ", " << m["member"].get<std::string>() << "\n";
            }
            return 0;
        }

        if (*oracle_cmd) {
            if (oracle_word.empty() == oracle_tangle.empty())
                throw std::invalid_argument("oracle needs --word or --tangle");
            PlanarDiagram d;
            std::string query;
            if (!oracle_word.empty()) {
                TwistWord w = parse_twist_word(oracle_word);
                query = w.str();
                d = oracle_open ? builder_from_twist_word(w, oracle_cap).partial()
                                : diagram_from_twist_word(w, oracle_cap);
            } else {
                query = oracle_tangle;
                d = diagram_for(eval_text(oracle_tangle), oracle_cap);
            }
            json j;
            j["query"] = query;
            j["crossings"] = d.crossing_count();
            if (!oracle_open) {
                j["components"] = d.component_count();
                j["jones"] = jones_text(jones(d, oracle_cap));
                if (oracle_bracket) j["bracket"] = kauffman_bracket(d, oracle_cap).str("A");
                try {
                    j["goeritz_determinant"] = goeritz_determinant(d);
                } catch (const std::invalid_argument&) {
                    j["goeritz_determinant"] = nullptr;  // disconnected diagram
                }
            }
            if (oracle_edges) j["edges"] = d.edge_list();
            if (as_json) {
                std::cout << j.dump(2) << "\n";
            } else {
                std::cout << "crossings: " << d.crossing_count() << "\n";
                if (!oracle_open) {
                    std::cout << "components: " << j["components"].get<int>() << "\n";
                    std::cout << "jones: " << j["jones"].get<std::string>() << "\n";
                    if (oracle_bracket)
                        std::cout << "bracket: " << j["bracket"].get<std::string>() << "\n";
                    if (j["goeritz_determinant"].is_null())
                        std::cout << "goeritz determinant: (disconnected)\n";
                    else
                        std::cout << "goeritz determinant: "
                                  << j["goeritz_determinant"].get<Int>() << "\n";
                }
                if (oracle_edges) std::cout << d.edge_list();
            }
            return 0;
        }

        if (*render_cmd) {
            if (render_word.empty() == render_closure.empty())
                throw std::invalid_argument("render needs --word or --closure");
            std::string svg;
            if (!render_word.empty()) {
                svg = render_twist_word_svg(parse_twist_word(render_word), false);
            } else {
                Tangle t = eval_text(render_closure);
                std::vector<RationalTangle> summands;
                if (const auto* r = std::get_if<RationalTangle>(&t)) summands.push_back(*r);
                else summands = std::get<MontesinosTangle>(t).summands;
                svg = render_sum_closure_svg(summands);
            }
            write_output(render_out, svg);
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
