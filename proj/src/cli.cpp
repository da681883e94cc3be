#include "skm/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cctype>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "skm/enumerate.hpp"
#include "skm/extremal.hpp"
#include "skm/matching.hpp"
#include "skm/spectral.hpp"
#include "skm/verify.hpp"

namespace skm {

using nlohmann::json;

namespace {

// ---- build-expression parser ------------------------------------------

struct ExprParser {
    const std::string& text;
    std::size_t pos = 0;

    explicit ExprParser(const std::string& t) : text(t) {}

    [[noreturn]] void fail(const std::string& why) const {
        throw std::invalid_argument("build expression, position " +
                                    std::to_string(pos) + ": " + why);
    }
    void skip() {
        while (pos < text.size() && std::isspace((unsigned char)text[pos])) ++pos;
    }
    bool eat(char c) {
        skip();
        if (pos < text.size() && text[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    char peek() {
        skip();
        return pos < text.size() ? text[pos] : '\0';
    }
    int number() {
        skip();
        if (pos >= text.size() || !std::isdigit((unsigned char)text[pos]))
            fail("expected a number");
        long v = 0;
        while (pos < text.size() && std::isdigit((unsigned char)text[pos])) {
            v = v * 10 + (text[pos++] - '0');
            if (v > Graph::kMaxOrder) fail("order exceeds " +
                                           std::to_string(Graph::kMaxOrder));
        }
        return int(v);
    }

    // atom := 'K' INT | '(' expr ')'
    Graph atom() {
        if (eat('(')) {
            Graph g = expr();
            if (!eat(')')) fail("expected ')'");
            return g;
        }
        if (eat('K')) return complete(number());
        fail("expected 'K<m>' or '('");
    }
    // factor := INT? atom
    Graph factor() {
        char c = peek();
        if (std::isdigit((unsigned char)c)) {
            int count = number();
            if (count < 1) fail("copy count must be >= 1");
            return copies(count, atom());
        }
        return atom();
    }
    // term := factor ('u' factor)*
    Graph term() {
        Graph g = factor();
        while (eat('u')) g = disjoint_union(g, factor());
        return g;
    }
    // expr := term ('v' term)*  -- join binds loosest
    Graph expr() {
        Graph g = term();
        while (eat('v')) g = join(g, term());
        return g;
    }
    Graph parse() {
        Graph g = expr();
        skip();
        if (pos != text.size()) fail("trailing input");
        return g;
    }
};

// ---- shared plumbing --------------------------------------------------

struct GraphInput {
    std::string graph6;
    std::string edges_path;
    std::string build;

    void attach(CLI::App* cmd) {
        auto* a = cmd->add_option("--graph6", graph6, "graph6 string");
        auto* b = cmd->add_option("--edges", edges_path,
                                  "edge-list file: vertex count, then 'u v' lines");
        auto* c = cmd->add_option("--build", build,
                                  "expression like \"K1 v (K5 u 2K1)\"");
        a->excludes(b)->excludes(c);
        b->excludes(c);
    }
    Graph resolve() const {
        int given = !graph6.empty() + !edges_path.empty() + !build.empty();
        if (given != 1)
            throw CLI::ValidationError(
                "graph input", "exactly one of --graph6/--edges/--build is required");
        if (!graph6.empty()) return parse_graph6(graph6);
        if (!build.empty()) return parse_build_expression(build);
        std::ifstream in(edges_path);
        if (!in) throw std::runtime_error("cannot open " + edges_path);
        std::ostringstream buf;
        buf << in.rdbuf();
        return parse_edge_list(buf.str());
    }
};

struct TolInput {
    Tolerance tol;
    void attach(CLI::App* cmd) {
        cmd->add_option("--tol", tol.cmp_tol, "comparison tolerance");
        cmd->add_option("--eig-tol", tol.eig_tol, "eigenvalue convergence tolerance");
        cmd->add_option("--max-iter", tol.max_iter, "power-iteration cap");
    }
};

std::string set_str(const VertexSet& s) {
    if (s.empty()) return "∅";
    std::string out = "{";
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(s[i]);
    }
    return out + "}";
}

std::string fmt(double x) {
    std::ostringstream out;
    out << std::setprecision(15) << x;
    return out.str();
}

void emit(std::ostream& out, bool as_json, const json& j,
          const std::string& text) {
    if (as_json)
        out << j.dump(2) << "\n";
    else
        out << text;
}

// ---- subcommand bodies ------------------------------------------------

int cmd_radius(const GraphInput& gi, const TolInput& ti, bool as_json,
               std::ostream& out) {
    Graph g = gi.resolve();
    double rho = spectral_radius(g, ti.tol);
    emit(out, as_json,
         json{{"schema", 1}, {"op", "radius"}, {"n", g.order()}, {"rho", rho}},
         "rho = " + fmt(rho) + "\n");
    return 0;
}

Partition parse_partition(const std::string& text) {
    Partition p;
    std::istringstream blocks(text);
    std::string block;
    while (std::getline(blocks, block, '/')) {
        std::vector<int> cell;
        std::istringstream items(block);
        std::string item;
        while (std::getline(items, item, ','))
            if (!item.empty()) cell.push_back(std::stoi(item));
        if (!cell.empty()) p.push_back(std::move(cell));
    }
    return p;
}

int cmd_quotient(const GraphInput& gi, const std::string& partition_text,
                 const TolInput& ti, bool as_json, std::ostream& out) {
    Graph g = gi.resolve();
    Partition p = parse_partition(partition_text);
    QuotientMatrix q = quotient_matrix(g, p);
    json j{{"schema", 1},
           {"op", "quotient"},
           {"n", g.order()},
           {"entries", q.entries},
           {"block_sizes", q.block_sizes},
           {"equitable", q.equitable}};
    std::ostringstream text;
    for (const auto& row : q.entries) {
        text << " ";
        for (double x : row) text << " " << fmt(x);
        text << "\n";
    }
    text << "equitable: " << (q.equitable ? "yes" : "no") << "\n";
    if (q.equitable) {
        Polynomial cp = char_poly(q);
        double root = largest_real_root(cp, 0.0, ti.tol);
        j["char_poly"] = cp.coeffs;
        j["largest_root"] = root;
        text << "char poly: " << cp.str() << "\n"
             << "largest root = " << fmt(root) << "\n";
    }
    emit(out, as_json, j, text.str());
    return 0;
}

int cmd_kmatch(const GraphInput& gi, int k, bool want_witness, bool as_json,
               std::ostream& out) {
    Graph g = gi.resolve();
    KMatchingDecision d = has_perfect_k_matching(g, k);
    json j{{"schema", 1}, {"op", "kmatch"}, {"n", g.order()}, {"k", k},
           {"exists", d.exists}};
    std::ostringstream text;
    if (d.exists) {
        text << "perfect " << k << "-matching exists";
        if (want_witness) {
            auto w = find_k_matching_witness(g, k);
            if (!w) throw std::runtime_error("oracle says yes but witness search failed");
            json edges = json::array();
            text << ":";
            for (const auto& [e, wt] : w->weights)
                if (wt > 0) {
                    edges.push_back({e.first, e.second, wt});
                    text << " " << e.first << "-" << e.second << ":" << wt;
                }
            j["witness"] = edges;
        }
        text << "\n";
    } else {
        const auto& c = *d.certificate;
        j["certificate"] = json::parse(c.to_json());
        text << "no perfect " << k << "-matching; certificate S=" << set_str(c.S)
             << ", slack " << c.slack << "\n";
    }
    emit(out, as_json, j, text.str());
    return d.exists ? 0 : 1;
}

int cmd_fpm(const GraphInput& gi, bool want_witness, bool as_json,
            std::ostream& out) {
    Graph g = gi.resolve();
    bool exists = has_fractional_pm_fast(g);
    json j{{"schema", 1}, {"op", "fpm"}, {"n", g.order()}, {"exists", exists}};
    std::ostringstream text;
    if (exists) {
        text << "fractional perfect matching exists";
        if (want_witness) {
            FractionalWitness w = find_fractional_pm_witness(g);
            json edges = json::array();
            text << ":";
            for (const auto& [e, wt] : w.weights) {
                edges.push_back({e.first, e.second, wt});
                text << " " << e.first << "-" << e.second << ":"
                     << (wt == 1.0 ? "1" : "1/2");
            }
            j["witness"] = edges;
        }
        text << "\n";
    } else {
        FpmDecision d = has_fractional_pm_oracle(g);
        text << "no fractional perfect matching";
        if (d.violating_set) {
            j["violating_set"] = *d.violating_set;
            text << "; violating set S=" << set_str(*d.violating_set);
        }
        text << "\n";
    }
    emit(out, as_json, j, text.str());
    return exists ? 0 : 1;
}

Graph family_graph(const std::string& theorem, int n, int t) {
    if (theorem == "11i") return build_extremal_thm12(6, 2);
    if (theorem == "12") return build_extremal_thm12(n, t);
    if (theorem == "14") return build_extremal_thm14(n, t);
    throw CLI::ValidationError("--theorem", "must be one of 11i, 12, 14");
}

int cmd_extremal(const std::string& theorem, int n, int t, bool as_json,
                 std::ostream& out) {
    Graph g = family_graph(theorem, n, t);
    json j{{"schema", 1},        {"op", "extremal"},
           {"theorem", theorem}, {"n", g.order()},
           {"edges", g.edge_count()},  {"graph6", to_graph6(g)},
           {"connectivity", vertex_connectivity(g)}};
    std::ostringstream text;
    text << to_graph6(g) << "\n"
         << "order " << g.order() << ", " << g.edge_count()
         << " edges, connectivity " << vertex_connectivity(g) << "\n";
    emit(out, as_json, j, text.str());
    return 0;
}

int cmd_threshold(const std::string& theorem, int n, int t, const TolInput& ti,
                  bool as_json, std::ostream& out) {
    ThresholdResult r;
    if (theorem == "12")
        r = threshold_thm12(n, t, ti.tol);
    else if (theorem == "14")
        r = threshold_thm14(n, t, ti.tol);
    else
        throw CLI::ValidationError("--theorem", "must be 12 or 14");
    emit(out, as_json,
         json{{"schema", 1},
              {"op", "threshold"},
              {"theorem", theorem},
              {"n", n},
              {"t", t},
              {"rho_star", r.rho_star},
              {"polynomial", r.poly.coeffs},
              {"rho_direct", r.rho_direct},
              {"agreement_gap", r.agreement_gap}},
         "rho_star = " + fmt(r.rho_star) + "\npolynomial: " + r.poly.str() +
             "\nagreement gap = " + fmt(r.agreement_gap) + "\n");
    return 0;
}

int cmd_sweep(int t_max, int n_max, double step, double span, bool as_json,
              std::ostream& out) {
    long checked = 0;
    std::vector<std::string> violations;
    auto scan = [&](double x0, int n, int s, int t, bool quartic) {
        for (double x = x0; x <= x0 + span + 1e-9; x += step) {
            double v = quartic ? psi_eval(x, n, s, t) : g_eval(x, n, s, t);
            ++checked;
            if (v <= 0)
                violations.push_back(std::string(quartic ? "psi" : "g") + "(" +
                                     fmt(x) + ";n=" + std::to_string(n) + ",s=" +
                                     std::to_string(s) + ",t=" + std::to_string(t) +
                                     ") = " + fmt(v));
        }
    };
    for (int t = 1; t <= t_max; ++t) {
        int n0 = 5 * t + 3;
        for (int n = n0 + n0 % 2; n <= n_max; n += 2) {
            for (int s = t + 1; s <= (n - 2) / 2; ++s) scan(n - t - 2, n, s, t, false);
            if (n >= 5 * t + 7)
                for (int s = t + 1; s <= (n - 6) / 2; ++s) scan(n - t - 4, n, s, t, true);
        }
    }
    for (int t = 1; t <= 50; ++t) {
        ++checked;
        double got = t_eval(5 * t + 7, t);
        double want = 36.0 * t * t + 5.0 * t + 5.0;
        if (got != want)
            violations.push_back("T(5t+7) at t=" + std::to_string(t) + ": " +
                                 fmt(got) + " != " + fmt(want));
    }
    for (int t = 1; t <= t_max; ++t) {
        int n0 = 5 * t + 3;
        for (int n = n0 + n0 % 2; n <= n_max; n += 2) {
            ++checked;
            double rho = threshold_thm12(n, t).rho_star;
            if (rho <= double(n - t - 2))
                violations.push_back("rho_star(n=" + std::to_string(n) + ",t=" +
                                     std::to_string(t) + ") = " + fmt(rho) +
                                     " <= n-t-2");
        }
    }
    json j{{"schema", 1}, {"op", "sweep"}, {"checked", checked},
           {"violations", violations}};
    std::ostringstream text;
    text << checked << " inequalities checked, " << violations.size()
         << " violations\n";
    for (const auto& v : violations) text << "  " << v << "\n";
    emit(out, as_json, j, text.str());
    return violations.empty() ? 0 : 1;
}

int cmd_enumerate(int n, bool connected, bool count_only, bool as_json,
                  std::ostream& out) {
    std::vector<Graph> graphs =
        connected ? enumerate_connected(n) : enumerate_all(n);
    if (as_json) {
        json j{{"schema", 1}, {"op", "enumerate"}, {"n", n},
               {"connected", connected}, {"count", graphs.size()}};
        if (!count_only) {
            json list = json::array();
            for (const Graph& g : graphs) list.push_back(to_graph6(g));
            j["graphs"] = list;
        }
        out << j.dump(2) << "\n";
    } else if (count_only) {
        out << graphs.size() << "\n";
    } else {
        for (const Graph& g : graphs) out << to_graph6(g) << "\n";
    }
    return 0;
}

struct VerifyArgs {
    std::string theorem = "12";
    int n = 8, t = 1, k = 1;
    std::string corpus_file;
    int sample_near = 0, sample_uniform_n = 0, radius = 1;
    double p = 0.5;
    std::uint64_t seed = 0;
    int workers = 1;
    bool exact = false;
    double offset = 0.0;
    std::string checkpoint, report_path;
};

int cmd_verify(const VerifyArgs& a, const TolInput& ti, bool as_json,
               std::ostream& out) {
    TheoremRunConfig cfg;
    if (a.theorem == "11i") {
        cfg.theorem = Theorem::T11i;
        cfg.n = 6;
        cfg.t = 1;
    } else if (a.theorem == "12") {
        cfg.theorem = Theorem::T12;
        cfg.n = a.n;
        cfg.t = a.t;
    } else if (a.theorem == "14") {
        cfg.theorem = Theorem::T14;
        cfg.n = a.n;
        cfg.t = a.t;
    } else {
        throw CLI::ValidationError("--theorem", "must be one of 11i, 12, 14");
    }
    cfg.k = a.k;
    cfg.tolerance = ti.tol;
    cfg.seed = a.seed;
    cfg.workers = a.workers;
    cfg.exact_connectivity = a.exact;
    cfg.threshold_offset = a.offset;
    cfg.checkpoint_path = a.checkpoint;
    if (!a.corpus_file.empty()) {
        cfg.corpus.kind = CorpusSpec::Kind::file;
        cfg.corpus.path = a.corpus_file;
    } else if (a.sample_near > 0) {
        cfg.corpus.kind = CorpusSpec::Kind::sample;
        cfg.corpus.sample.model = SampleSpec::Model::near_extremal;
        cfg.corpus.sample.count = a.sample_near;
        cfg.corpus.sample.radius = a.radius;
    } else if (a.sample_uniform_n > 0) {
        cfg.corpus.kind = CorpusSpec::Kind::sample;
        cfg.corpus.sample.model = SampleSpec::Model::uniform;
        cfg.corpus.sample.count = a.sample_uniform_n;
        cfg.corpus.sample.edge_probability = a.p;
    }
    RunReport r = verify_theorem(cfg);
    if (!a.report_path.empty()) write_report(r, a.report_path);
    if (as_json) {
        out << report_to_json(r) << "\n";
    } else {
        out << "theorem " << to_string(cfg.theorem) << " n=" << cfg.n
            << " t=" << cfg.t << " k=" << cfg.k << " corpus="
            << cfg.corpus.describe() << " seed=" << cfg.seed << " workers="
            << cfg.workers << (cfg.exact_connectivity ? " exact-connectivity" : "")
            << (cfg.threshold_offset != 0.0
                    ? " offset=" + fmt(cfg.threshold_offset)
                    : "")
            << "\n";
        out << "threshold = " << fmt(r.threshold) << "\n";
        out << r.total << " graphs\n";
        for (const auto& [name, count] : r.counts)
            out << "  " << name << " " << count << "\n";
        for (const auto& v : r.exceptions)
            out << "exception " << v.graph6 << " rho=" << fmt(v.rho) << "\n";
        for (const auto& v : r.ties)
            out << "tie " << v.graph6 << " rho=" << fmt(v.rho)
                << " isomorphic=" << (v.isomorphic_to_extremal ? "yes" : "no")
                << "\n";
        for (const auto& v : r.counterexamples)
            out << "COUNTEREXAMPLE " << v.graph6 << " rho=" << fmt(v.rho) << "\n";
    }
    return r.counterexamples.empty() ? 0 : 1;
}

}  // namespace

Graph parse_build_expression(const std::string& text) {
    ExprParser p(text);
    return p.parse();
}

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
    CLI::App app{"spectral thresholds and perfect k-matchings in small graphs"};
    app.require_subcommand(1);
    bool as_json = false;
    app.add_flag("--json", as_json, "machine-readable output");

    GraphInput gi;
    TolInput ti;

    auto* radius = app.add_subcommand("radius", "spectral radius of a graph");
    gi.attach(radius);
    ti.attach(radius);

    auto* quotient =
        app.add_subcommand("quotient", "quotient matrix of a vertex partition");
    std::string partition_text;
    gi.attach(quotient);
    ti.attach(quotient);
    quotient->add_option("--partition", partition_text,
                         "blocks like \"0,1/2,3,4/5\"")
        ->required();

    auto* kmatch = app.add_subcommand("kmatch", "perfect k-matching decision");
    int k = 1;
    bool want_witness = false;
    gi.attach(kmatch);
    kmatch->add_option("--k", k, "odd matching multiplicity")->required();
    kmatch->add_flag("--witness", want_witness, "print explicit edge weights");

    auto* fpm =
        app.add_subcommand("fpm", "fractional perfect matching decision");
    gi.attach(fpm);
    fpm->add_flag("--witness", want_witness, "print half-integral weights");

    auto* extremal = app.add_subcommand("extremal", "build an extremal family graph");
    std::string theorem = "12";
    int n = 8, t = 1;
    extremal->add_option("--theorem", theorem, "11i, 12 or 14");
    extremal->add_option("--n", n, "order (even)");
    extremal->add_option("--t", t, "connectivity parameter");

    auto* threshold =
        app.add_subcommand("threshold", "spectral threshold, both computation paths");
    threshold->add_option("--theorem", theorem, "12 or 14");
    threshold->add_option("--n", n, "order (even)")->required();
    threshold->add_option("--t", t, "connectivity parameter")->required();
    ti.attach(threshold);

    auto* sweep = app.add_subcommand(
        "sweep", "polynomial positivity and threshold inequality sweeps");
    int t_max = 4, n_max = 40;
    double step = 0.25, span = 20.0;
    sweep->add_option("--t-max", t_max, "largest connectivity parameter");
    sweep->add_option("--n-max", n_max, "largest order");
    sweep->add_option("--step", step, "grid step");
    sweep->add_option("--span", span, "grid span above the lower bound");

    auto* verify = app.add_subcommand("verify", "corpus verification run");
    VerifyArgs va;
    verify->add_option("--theorem", va.theorem, "11i, 12 or 14");
    verify->add_option("--n", va.n, "order (ignored for 11i)");
    verify->add_option("--t", va.t, "connectivity parameter (ignored for 11i)");
    verify->add_option("--k", va.k, "odd matching multiplicity")->required();
    verify->add_option("--corpus", va.corpus_file, "graph6 file, one per line");
    verify->add_option("--sample-near", va.sample_near,
                       "near-extremal sample count instead of a full corpus");
    verify->add_option("--radius", va.radius, "edge flips per near-extremal sample");
    verify->add_option("--sample-uniform", va.sample_uniform_n,
                       "G(n,p) sample count instead of a full corpus");
    verify->add_option("--p", va.p, "edge probability for uniform samples");
    verify->add_option("--seed", va.seed, "sampler seed");
    verify->add_option("--workers", va.workers, "worker threads")
        ->envname("SKMATCH_WORKERS");
    verify->add_flag("--exact-connectivity", va.exact,
                     "filter kappa == t instead of kappa >= t");
    verify->add_option("--offset", va.offset,
                       "threshold offset (negative-control runs)");
    verify->add_option("--checkpoint", va.checkpoint, "progress file path");
    verify->add_option("--report", va.report_path, "write the JSON report here");
    ti.attach(verify);

    auto* enumerate = app.add_subcommand("enumerate", "graph6 corpus to stdout");
    int enum_n = 6;
    bool connected = false, count_only = false;
    enumerate->add_option("--n", enum_n, "order (1..8)")->required();
    enumerate->add_flag("--connected", connected, "connected graphs only");
    enumerate->add_flag("--count", count_only, "print only the class count");

    for (CLI::App* sub : app.get_subcommands({})) sub->fallthrough();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {  // --help
            out << app.help();
            return 0;
        }
        err << e.what() << "\n";
        CLI::App* sub =
            app.get_subcommands().empty() ? &app : app.get_subcommands()[0];
        err << sub->help();
        return 2;
    }

    try {
        if (radius->parsed()) return cmd_radius(gi, ti, as_json, out);
        if (quotient->parsed())
            return cmd_quotient(gi, partition_text, ti, as_json, out);
        if (kmatch->parsed()) return cmd_kmatch(gi, k, want_witness, as_json, out);
        if (fpm->parsed()) return cmd_fpm(gi, want_witness, as_json, out);
        if (extremal->parsed()) return cmd_extremal(theorem, n, t, as_json, out);
        if (threshold->parsed())
            return cmd_threshold(theorem, n, t, ti, as_json, out);
        if (sweep->parsed())
            return cmd_sweep(t_max, n_max, step, span, as_json, out);
        if (verify->parsed()) return cmd_verify(va, ti, as_json, out);
        if (enumerate->parsed())
            return cmd_enumerate(enum_n, connected, count_only, as_json, out);
    } catch (const CLI::ValidationError& e) {
        err << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        err << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << e.what() << "\n";
        return 2;
    }
    return 2;
}

}  // namespace skm
