#ifndef SKM_MATCHING_HPP
#define SKM_MATCHING_HPP

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "skm/graph.hpp"

namespace skm {

/// A vertex set S violating odd(G-S) + k*i(G-S) <= k|S|, witnessing that
/// no perfect k-matching exists.
struct DeficiencyCertificate {
    VertexSet S;
    int s = 0;      // |S|
    int i = 0;      // isolated vertices of G-S
    int q = 0;      // odd components of order >= 3 in G-S
    int k = 1;
    int slack = 0;  // q + k*i - k*s, >= 1 for a valid certificate

    std::string to_json() const;
};

/// Perfect k-matching as explicit edge weights in {0..k} whose incident
/// sums equal k at every vertex.
struct KMatchingWitness {
    int k = 1;
    std::map<std::pair<int, int>, int> weights;  // keys normalized u < v

    std::string to_json() const;
};

/// Half-integral fractional perfect matching: weight-1 edges plus
/// weight-1/2 odd cycles.
struct FractionalWitness {
    std::map<std::pair<int, int>, double> weights;
};

/// q + k*i - k*|s| for the deletion G-S; positive means the Lemma-type
/// condition is violated at S. k must be odd and >= 1.
int deficiency(const Graph& g, const VertexSet& s, int k);

struct KMatchingDecision {
    bool exists = true;
    std::optional<DeficiencyCertificate> certificate;
};

/// Tutte-type oracle over all subsets S (n <= 24). When the answer is
/// "no", the certificate has maximal slack (ties: smallest |S|, then
/// lexicographic). want_certificate=false early-exits on the first
/// violation instead of scanning everything.
KMatchingDecision has_perfect_k_matching(const Graph& g, int k,
                                         bool want_certificate = true);

/// Exhaustive weight search, independent of the subset oracle.
/// n <= 12, k <= 5.
std::optional<KMatchingWitness> find_k_matching_witness(const Graph& g, int k);

bool verify_witness(const Graph& g, const KMatchingWitness& w);

struct FpmDecision {
    bool exists = true;
    std::optional<VertexSet> violating_set;  // maximizes i(G-S) - |S|
};

/// i(G-S) <= |S| scan over all subsets; n <= 24.
FpmDecision has_fractional_pm_oracle(const Graph& g);

/// Scalable decider: perfect matching in the bipartite double cover.
bool has_fractional_pm_fast(const Graph& g);

/// Constructive companion: decomposes a double-cover perfect matching
/// into weight-1 edges and weight-1/2 odd cycles. Requires
/// has_fractional_pm_fast(g); throws otherwise.
FractionalWitness find_fractional_pm_witness(const Graph& g);

bool verify_fractional_witness(const Graph& g, const FractionalWitness& w);

}  // namespace skm

#endif
