#include "skm/verify.hpp"

#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <fstream>
#include <mutex>
#include <random>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "skm/enumerate.hpp"

namespace skm {

using nlohmann::json;

std::string to_string(Theorem t) {
    switch (t) {
        case Theorem::T11i: return "T11i";
        case Theorem::T12: return "T12";
        case Theorem::T14: return "T14";
    }
    return "?";
}

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::skipped_not_t_connected: return "skipped-not-t-connected";
        case Verdict::skipped_no_fpm: return "skipped-no-fpm";
        case Verdict::below_threshold: return "below-threshold";
        case Verdict::extremal_exception: return "extremal-exception";
        case Verdict::satisfies_theorem: return "satisfies-theorem";
        case Verdict::tie: return "tie";
        case Verdict::counterexample: return "COUNTEREXAMPLE";
        case Verdict::unsupported: return "unsupported";
    }
    return "?";
}

namespace {

Theorem theorem_from_string(const std::string& s) {
    if (s == "T11i") return Theorem::T11i;
    if (s == "T12") return Theorem::T12;
    if (s == "T14") return Theorem::T14;
    throw std::runtime_error("unknown theorem tag: " + s);
}

void validate_config(const TheoremRunConfig& cfg) {
    if (cfg.k < 1 || cfg.k % 2 == 0)
        throw std::invalid_argument("verification requires odd k >= 1");
    switch (cfg.theorem) {
        case Theorem::T11i:
            if (cfg.n != 6 || cfg.t != 1)
                throw std::invalid_argument("T11i is the n=6, t=1 statement");
            if (cfg.k < 3)
                throw std::invalid_argument("T11i requires odd k >= 3");
            break;
        case Theorem::T12:
            if (cfg.n % 2 != 0 || cfg.n < 5 * cfg.t + 3)
                throw std::invalid_argument("T12 requires even n >= 5t+3");
            break;
        case Theorem::T14:
            if (cfg.n % 2 != 0 || cfg.n < 5 * cfg.t + 7)
                throw std::invalid_argument("T14 requires even n >= 5t+7");
            break;
    }
}

}  // namespace

std::string CorpusSpec::describe() const {
    switch (kind) {
        case Kind::internal: return "internal";
        case Kind::file: return "file:" + path;
        case Kind::sample: {
            std::ostringstream out;
            if (sample.model == SampleSpec::Model::uniform)
                out << "sample:uniform,p=" << sample.edge_probability;
            else
                out << "sample:near-extremal,r=" << sample.radius;
            out << ",count=" << sample.count;
            return out.str();
        }
    }
    return "?";
}

Graph extremal_graph_for(const TheoremRunConfig& cfg) {
    switch (cfg.theorem) {
        case Theorem::T11i: return build_extremal_thm12(6, 2);  // K_2 v 4K_1
        case Theorem::T12: return build_extremal_thm12(cfg.n, cfg.t);
        case Theorem::T14: return build_extremal_thm14(cfg.n, cfg.t);
    }
    throw std::logic_error("unreachable");
}

double run_threshold(const TheoremRunConfig& cfg) {
    validate_config(cfg);
    return spectral_radius(extremal_graph_for(cfg), cfg.tolerance) +
           cfg.threshold_offset;
}

GraphVerdict classify_graph(const Graph& g, const TheoremRunConfig& cfg,
                            double threshold) {
    if (g.order() != cfg.n)
        throw std::invalid_argument("corpus graph order " +
                                    std::to_string(g.order()) +
                                    " does not match configured n=" +
                                    std::to_string(cfg.n));
    GraphVerdict out;
    out.graph6 = to_graph6(g);

    int kappa = g.order() >= 2 ? vertex_connectivity(g) : 0;
    bool connected_ok =
        cfg.exact_connectivity ? kappa == cfg.t : kappa >= cfg.t;
    if (!connected_ok) {
        out.verdict = Verdict::skipped_not_t_connected;
        return out;
    }
    if (cfg.theorem == Theorem::T14 && !has_fractional_pm_fast(g)) {
        out.verdict = Verdict::skipped_no_fpm;
        return out;
    }

    out.rho = spectral_radius(g, cfg.tolerance);
    Compare cmp = compare_with_tie(out.rho, threshold, cfg.tolerance.cmp_tol);
    if (cmp == Compare::less) {
        out.verdict = Verdict::below_threshold;
        return out;
    }
    out.isomorphic_to_extremal = are_isomorphic(g, extremal_graph_for(cfg));
    if (cmp == Compare::tie && !out.isomorphic_to_extremal) {
        // never decided numerically: listed for review with the
        // isomorphism result attached
        out.verdict = Verdict::tie;
        return out;
    }
    // above the band, or the exception graph itself: the oracle decides
    // and furnishes the deficiency certificate
    KMatchingDecision d;
    try {
        d = has_perfect_k_matching(g, cfg.k);
    } catch (const std::runtime_error&) {
        out.verdict = out.isomorphic_to_extremal ? Verdict::extremal_exception
                                                 : Verdict::unsupported;
        return out;
    }
    if (d.exists) {
        out.verdict = out.isomorphic_to_extremal ? Verdict::extremal_exception
                                                 : Verdict::satisfies_theorem;
        return out;
    }
    out.certificate = d.certificate;
    out.verdict = out.isomorphic_to_extremal ? Verdict::extremal_exception
                                             : Verdict::counterexample;
    return out;
}

std::vector<Graph> sample_uniform(int n, double p, int count, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    auto coin = [&]() {
        return double(rng() >> 11) * 0x1.0p-53 < p;  // uniform in [0,1)
    };
    std::vector<Graph> out;
    out.reserve(count);
    for (int i = 0; i < count; ++i) {
        Graph g(n);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (coin()) g.add_edge(u, v);
        out.push_back(std::move(g));
    }
    return out;
}

std::vector<Graph> sample_near_extremal(const Graph& base, int join_block,
                                        int radius, int count, std::uint64_t seed) {
    if (join_block < 0 || join_block >= base.order())
        throw std::invalid_argument("join block size out of range");
    std::mt19937_64 rng(seed);
    int n = base.order();
    int free_verts = n - join_block;
    std::vector<Graph> out;
    out.reserve(count);
    for (int i = 0; i < count; ++i) {
        Graph g = base;
        for (int f = 0; f < radius; ++f) {
            int u, v;
            do {
                u = join_block + int(rng() % free_verts);
                v = join_block + int(rng() % free_verts);
            } while (u == v);
            if (g.has_edge(u, v)) {
                Graph h(n);  // rebuild without the edge
                for (auto [a, b] : g.edges())
                    if (!(std::min(a, b) == std::min(u, v) &&
                          std::max(a, b) == std::max(u, v)))
                        h.add_edge(a, b);
                g = h;
            } else {
                g.add_edge(u, v);
            }
        }
        out.push_back(std::move(g));
    }
    return out;
}

namespace {

std::vector<Graph> load_corpus(const TheoremRunConfig& cfg) {
    switch (cfg.corpus.kind) {
        case CorpusSpec::Kind::internal:
            return enumerate_connected(cfg.n);
        case CorpusSpec::Kind::file: {
            std::ifstream in(cfg.corpus.path);
            if (!in)
                throw std::runtime_error("cannot open corpus file " + cfg.corpus.path);
            std::vector<Graph> out;
            std::string line;
            std::size_t lineno = 0;
            while (std::getline(in, line)) {
                ++lineno;
                if (line.empty()) continue;
                try {
                    out.push_back(parse_graph6(line));
                } catch (const std::exception& e) {
                    throw std::runtime_error(cfg.corpus.path + ":" +
                                             std::to_string(lineno) + ": " + e.what());
                }
            }
            return out;
        }
        case CorpusSpec::Kind::sample: {
            const SampleSpec& sp = cfg.corpus.sample;
            if (sp.model == SampleSpec::Model::uniform)
                return sample_uniform(cfg.n, sp.edge_probability, sp.count, cfg.seed);
            return sample_near_extremal(extremal_graph_for(cfg), cfg.t, sp.radius,
                                        sp.count, cfg.seed);
        }
    }
    throw std::logic_error("unreachable");
}

json verdict_to_json(const GraphVerdict& v) {
    json j{{"graph6", v.graph6},
           {"rho", v.rho},
           {"verdict", to_string(v.verdict)},
           {"isomorphic_to_extremal", v.isomorphic_to_extremal}};
    if (v.certificate)
        j["certificate"] = json::parse(v.certificate->to_json());
    else
        j["certificate"] = nullptr;
    return j;
}

GraphVerdict verdict_from_json(const json& j) {
    GraphVerdict v;
    v.graph6 = j.at("graph6");
    v.rho = j.at("rho");
    v.isomorphic_to_extremal = j.at("isomorphic_to_extremal");
    std::string tag = j.at("verdict");
    for (Verdict w : {Verdict::skipped_not_t_connected, Verdict::skipped_no_fpm,
                      Verdict::below_threshold, Verdict::extremal_exception,
                      Verdict::satisfies_theorem, Verdict::tie,
                      Verdict::counterexample, Verdict::unsupported})
        if (to_string(w) == tag) v.verdict = w;
    if (!j.at("certificate").is_null()) {
        const json& c = j.at("certificate");
        DeficiencyCertificate cert;
        cert.S = c.at("S").get<std::vector<int>>();
        cert.s = c.at("s");
        cert.i = c.at("i");
        cert.q = c.at("q");
        cert.k = c.at("k");
        cert.slack = c.at("slack");
        v.certificate = cert;
    }
    return v;
}

constexpr long kCheckpointEvery = 10000;

}  // namespace

RunReport verify_theorem(const TheoremRunConfig& cfg) {
    validate_config(cfg);
    auto t0 = std::chrono::steady_clock::now();
    std::vector<Graph> corpus = load_corpus(cfg);
    double threshold = run_threshold(cfg);

    std::vector<GraphVerdict> verdicts(corpus.size());
    std::atomic<long> processed{0};
    std::mutex checkpoint_mu;
    auto checkpoint = [&](long done) {
        if (cfg.checkpoint_path.empty()) return;
        std::lock_guard<std::mutex> lock(checkpoint_mu);
        std::ofstream out(cfg.checkpoint_path);
        out << json{{"schema", 1}, {"processed", done}, {"total", corpus.size()}}
            << "\n";
    };

    int workers = std::max(1, cfg.workers);
    auto work = [&](int w) {
        for (std::size_t i = w; i < corpus.size(); i += workers) {
            verdicts[i] = classify_graph(corpus[i], cfg, threshold);
            long done = ++processed;
            if (done % kCheckpointEvery == 0) checkpoint(done);
        }
    };
    if (workers == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        for (int w = 0; w < workers; ++w) pool.emplace_back(work, w);
        for (auto& th : pool) th.join();
    }

    RunReport r;
    r.config = cfg;
    r.threshold = threshold;
    r.total = long(corpus.size());
    for (const auto& v : verdicts) {
        ++r.counts[to_string(v.verdict)];
        switch (v.verdict) {
            case Verdict::extremal_exception: r.exceptions.push_back(v); break;
            case Verdict::counterexample: r.counterexamples.push_back(v); break;
            case Verdict::tie: r.ties.push_back(v); break;
            default: break;
        }
    }
    auto by_key = [](const GraphVerdict& a, const GraphVerdict& b) {
        return a.graph6 < b.graph6;
    };
    std::stable_sort(r.exceptions.begin(), r.exceptions.end(), by_key);
    std::stable_sort(r.counterexamples.begin(), r.counterexamples.end(), by_key);
    std::stable_sort(r.ties.begin(), r.ties.end(), by_key);
    r.wall_ms = std::chrono::duration<double, std::milli>(
                    std::chrono::steady_clock::now() - t0)
                    .count();
    checkpoint(long(corpus.size()));
    return r;
}

std::string report_to_json(const RunReport& r, bool include_exec) {
    const auto& cfg = r.config;
    json corpus{{"kind", cfg.corpus.kind == CorpusSpec::Kind::internal ? "internal"
                         : cfg.corpus.kind == CorpusSpec::Kind::file  ? "file"
                                                                      : "sample"}};
    if (cfg.corpus.kind == CorpusSpec::Kind::file) corpus["path"] = cfg.corpus.path;
    if (cfg.corpus.kind == CorpusSpec::Kind::sample) {
        corpus["model"] = cfg.corpus.sample.model == SampleSpec::Model::uniform
                              ? "uniform"
                              : "near-extremal";
        corpus["count"] = cfg.corpus.sample.count;
        corpus["p"] = cfg.corpus.sample.edge_probability;
        corpus["radius"] = cfg.corpus.sample.radius;
    }
    json j{{"schema", r.schema},
           {"theorem", to_string(cfg.theorem)},
           {"n", cfg.n},
           {"t", cfg.t},
           {"k", cfg.k},
           {"corpus", corpus},
           {"seed", cfg.seed},
           {"exact_connectivity", cfg.exact_connectivity},
           {"threshold_offset", cfg.threshold_offset},
           {"threshold", r.threshold},
           {"total", r.total},
           {"counts", r.counts}};
    json lists[3] = {json::array(), json::array(), json::array()};
    for (const auto& v : r.exceptions) lists[0].push_back(verdict_to_json(v));
    for (const auto& v : r.counterexamples) lists[1].push_back(verdict_to_json(v));
    for (const auto& v : r.ties) lists[2].push_back(verdict_to_json(v));
    j["exceptions"] = lists[0];
    j["counterexamples"] = lists[1];
    j["ties"] = lists[2];
    if (include_exec) j["exec"] = json{{"wall_ms", r.wall_ms}, {"workers", cfg.workers}};
    return j.dump(2);
}

void write_report(const RunReport& r, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write report to " + path);
    out << report_to_json(r) << "\n";
}

RunReport read_report(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot read report from " + path);
    json j = json::parse(in);
    int schema = j.at("schema");
    if (schema != 1)
        throw std::runtime_error("report schema version " + std::to_string(schema) +
                                 " not supported (expected 1)");
    RunReport r;
    r.schema = schema;
    r.config.theorem = theorem_from_string(j.at("theorem"));
    r.config.n = j.at("n");
    r.config.t = j.at("t");
    r.config.k = j.at("k");
    r.config.seed = j.at("seed");
    r.config.exact_connectivity = j.at("exact_connectivity");
    r.config.threshold_offset = j.at("threshold_offset");
    const json& corpus = j.at("corpus");
    std::string kind = corpus.at("kind");
    if (kind == "internal") {
        r.config.corpus.kind = CorpusSpec::Kind::internal;
    } else if (kind == "file") {
        r.config.corpus.kind = CorpusSpec::Kind::file;
        r.config.corpus.path = corpus.at("path");
    } else {
        r.config.corpus.kind = CorpusSpec::Kind::sample;
        r.config.corpus.sample.model = corpus.at("model") == "uniform"
                                           ? SampleSpec::Model::uniform
                                           : SampleSpec::Model::near_extremal;
        r.config.corpus.sample.count = corpus.at("count");
        r.config.corpus.sample.edge_probability = corpus.at("p");
        r.config.corpus.sample.radius = corpus.at("radius");
    }
    r.threshold = j.at("threshold");
    r.total = j.at("total");
    for (auto& [key, val] : j.at("counts").items()) r.counts[key] = val;
    for (const auto& v : j.at("exceptions")) r.exceptions.push_back(verdict_from_json(v));
    for (const auto& v : j.at("counterexamples"))
        r.counterexamples.push_back(verdict_from_json(v));
    for (const auto& v : j.at("ties")) r.ties.push_back(verdict_from_json(v));
    if (j.contains("exec")) {
        r.wall_ms = j["exec"].value("wall_ms", 0.0);
        r.config.workers = j["exec"].value("workers", 1);
    }
    return r;
}

}  // namespace skm
