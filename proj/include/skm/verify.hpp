#ifndef SKM_VERIFY_HPP
#define SKM_VERIFY_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "skm/extremal.hpp"
#include "skm/graph.hpp"
#include "skm/matching.hpp"
#include "skm/spectral.hpp"

namespace skm {

enum class Theorem { T11i, T12, T14 };

enum class Verdict {
    skipped_not_t_connected,
    skipped_no_fpm,  // T14 only
    below_threshold,
    extremal_exception,
    satisfies_theorem,
    tie,
    counterexample,
    unsupported,  // oracle size limits exceeded; never fails the run
};

std::string to_string(Theorem t);
std::string to_string(Verdict v);

struct SampleSpec {
    enum class Model { uniform, near_extremal };
    Model model = Model::near_extremal;
    int count = 0;
    double edge_probability = 0.5;  // uniform model
    int radius = 1;                 // near-extremal model: edge flips per sample
};

struct CorpusSpec {
    enum class Kind { internal, file, sample };
    Kind kind = Kind::internal;
    std::string path;   // graph6 lines, one per graph
    SampleSpec sample;

    std::string describe() const;
};

struct TheoremRunConfig {
    Theorem theorem = Theorem::T12;
    int n = 8;
    int t = 1;
    int k = 1;
    CorpusSpec corpus;
    Tolerance tolerance;
    std::uint64_t seed = 0;
    int workers = 1;
    bool exact_connectivity = false;  // kappa == t instead of kappa >= t
    double threshold_offset = 0.0;    // negative-control runs
    std::string checkpoint_path;      // empty: no checkpointing
};

struct GraphVerdict {
    std::string graph6;
    double rho = 0.0;
    Verdict verdict = Verdict::below_threshold;
    std::optional<DeficiencyCertificate> certificate;
    bool isomorphic_to_extremal = false;
};

struct RunReport {
    int schema = 1;
    TheoremRunConfig config;
    double threshold = 0.0;
    long total = 0;
    std::map<std::string, long> counts;  // verdict name -> count
    std::vector<GraphVerdict> exceptions;
    std::vector<GraphVerdict> counterexamples;
    std::vector<GraphVerdict> ties;
    double wall_ms = 0.0;
};

/// The exception graph of the configured theorem instance.
Graph extremal_graph_for(const TheoremRunConfig& cfg);

/// rho(extremal) + threshold_offset.
double run_threshold(const TheoremRunConfig& cfg);

/// Hypothesis filters, spectral comparison with a tie band, then the
/// matching oracle; first applicable verdict wins.
GraphVerdict classify_graph(const Graph& g, const TheoremRunConfig& cfg,
                            double threshold);

/// Classifies the whole corpus (worker pool; deterministic aggregation).
RunReport verify_theorem(const TheoremRunConfig& cfg);

/// G(n,p) samples, deterministic in the seed.
std::vector<Graph> sample_uniform(int n, double p, int count, std::uint64_t seed);

/// radius random edge flips per sample on pairs outside the join block
/// 0..join_block-1, so t-connectedness survives. radius 0 yields the
/// base graph itself.
std::vector<Graph> sample_near_extremal(const Graph& base, int join_block,
                                        int radius, int count, std::uint64_t seed);

/// Timing fields (wall_ms, workers) live in an "exec" block so that the
/// comparable payload is byte-identical across parallelism levels.
std::string report_to_json(const RunReport& r, bool include_exec = true);
void write_report(const RunReport& r, const std::string& path);
RunReport read_report(const std::string& path);

}  // namespace skm

#endif
