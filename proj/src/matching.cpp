#include "skm/matching.hpp"

#include <json.hpp>

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace skm {

namespace {

constexpr int kOracleLimit = 24;

void require_odd_k(int k) {
    if (k < 1 || k % 2 == 0)
        throw std::invalid_argument("k must be an odd positive integer, got " +
                                    std::to_string(k) +
                                    " (the deficiency criterion needs odd k)");
}

std::uint64_t full_mask(int n) {
    return n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
}

VertexSet mask_to_set(std::uint64_t mask) {
    VertexSet s;
    while (mask) {
        s.push_back(std::countr_zero(mask));
        mask &= mask - 1;
    }
    return s;
}

DeficiencyCertificate make_certificate(const Graph& g, std::uint64_t mask, int k) {
    auto [q, i] = component_counts_on(g, full_mask(g.order()) & ~mask);
    DeficiencyCertificate c;
    c.S = mask_to_set(mask);
    c.s = std::popcount(mask);
    c.i = i;
    c.q = q;
    c.k = k;
    c.slack = q + k * i - k * c.s;
    return c;
}

}  // namespace

std::string DeficiencyCertificate::to_json() const {
    nlohmann::json j{{"S", S}, {"s", s}, {"i", i}, {"q", q}, {"k", k}, {"slack", slack}};
    return j.dump();
}

std::string KMatchingWitness::to_json() const {
    nlohmann::json ws = nlohmann::json::array();
    for (const auto& [e, w] : weights) ws.push_back({e.first, e.second, w});
    return nlohmann::json{{"k", k}, {"weights", ws}}.dump();
}

int deficiency(const Graph& g, const VertexSet& s, int k) {
    require_odd_k(k);
    std::uint64_t removed = vertex_mask(g, s);
    auto [q, i] = component_counts_on(g, full_mask(g.order()) & ~removed);
    return q + k * i - k * int(s.size());
}

KMatchingDecision has_perfect_k_matching(const Graph& g, int k, bool want_certificate) {
    require_odd_k(k);
    int n = g.order();
    if (n > kOracleLimit)
        throw std::runtime_error("perfect k-matching oracle limited to n <= " +
                                 std::to_string(kOracleLimit) +
                                 " (exhaustive subset scan)");
    std::uint64_t all = full_mask(n);

    if (!want_certificate) {
        // by increasing |S|, first violation wins
        for (int size = 0; size <= n; ++size) {
            std::uint64_t mask = (std::uint64_t{1} << size) - 1;
            std::uint64_t last = mask << (n - size);
            while (true) {
                auto [q, i] = component_counts_on(g, all & ~mask);
                if (q + k * i - k * size >= 1)
                    return {false, make_certificate(g, mask, k)};
                if (mask == last || size == 0) break;
                // Gosper's hack: next subset of the same size
                std::uint64_t c = mask & (~mask + 1);
                std::uint64_t r = mask + c;
                mask = (((r ^ mask) >> 2) / c) | r;
            }
        }
        return {true, std::nullopt};
    }

    bool found = false;
    int best_slack = 0, best_size = 0;
    std::uint64_t best_mask = 0;
    for (std::uint64_t mask = 0; mask <= all; ++mask) {
        int size = std::popcount(mask);
        auto [q, i] = component_counts_on(g, all & ~mask);
        int slack = q + k * i - k * size;
        if (slack < 1) continue;
        if (!found || slack > best_slack ||
            (slack == best_slack &&
             (size < best_size || (size == best_size && mask < best_mask)))) {
            found = true;
            best_slack = slack;
            best_size = size;
            best_mask = mask;
        }
        if (mask == all) break;
    }
    if (!found) return {true, std::nullopt};
    return {false, make_certificate(g, best_mask, k)};
}

namespace {

struct WitnessSearch {
    const Graph* g;
    int k;
    std::vector<std::pair<int, int>> edges;
    std::vector<int> residual;
    std::vector<std::vector<int>> inc_after;  // inc_after[e][v]: incident edges with index > e
    std::vector<int> assigned;

    bool dfs(std::size_t e) {
        if (e == edges.size()) {
            for (int r : residual)
                if (r != 0) return false;
            return true;
        }
        auto [u, v] = edges[e];
        int cap = std::min(residual[u], residual[v]);
        for (int w = 0; w <= cap; ++w) {
            residual[u] -= w;
            residual[v] -= w;
            if (residual[u] <= k * inc_after[e][u] && residual[v] <= k * inc_after[e][v]) {
                assigned[e] = w;
                if (dfs(e + 1)) return true;
            }
            residual[u] += w;
            residual[v] += w;
        }
        return false;
    }
};

}  // namespace

std::optional<KMatchingWitness> find_k_matching_witness(const Graph& g, int k) {
    if (k < 1) throw std::invalid_argument("k must be positive");
    if (g.order() > 12 || k > 5)
        throw std::runtime_error(
            "witness search limited to n <= 12 and k <= 5 (exhaustive backtracking)");
    int n = g.order();
    // total incident weight is nk/2, so odd n*k is infeasible outright
    if ((long(n) * k) % 2 != 0) return std::nullopt;
    for (int v = 0; v < n; ++v)
        if (g.degree(v) == 0) return std::nullopt;

    WitnessSearch ws;
    ws.g = &g;
    ws.k = k;
    ws.edges = g.edges();
    ws.residual.assign(n, k);
    ws.assigned.assign(ws.edges.size(), 0);
    ws.inc_after.assign(ws.edges.size(), std::vector<int>(n, 0));
    std::vector<int> counts(n, 0);
    for (std::size_t e = ws.edges.size(); e-- > 0;) {
        ws.inc_after[e] = counts;
        ++counts[ws.edges[e].first];
        ++counts[ws.edges[e].second];
    }
    if (ws.edges.empty()) {
        if (n == 0) return KMatchingWitness{k, {}};
        return std::nullopt;
    }
    if (!ws.dfs(0)) return std::nullopt;
    KMatchingWitness w;
    w.k = k;
    for (std::size_t e = 0; e < ws.edges.size(); ++e)
        if (ws.assigned[e] > 0) w.weights[ws.edges[e]] = ws.assigned[e];
    return w;
}

bool verify_witness(const Graph& g, const KMatchingWitness& w) {
    std::vector<long> sums(g.order(), 0);
    for (const auto& [e, weight] : w.weights) {
        if (!g.has_edge(e.first, e.second))
            throw std::invalid_argument("witness places weight on non-edge (" +
                                        std::to_string(e.first) + "," +
                                        std::to_string(e.second) + ")");
        if (weight < 0 || weight > w.k) return false;
        sums[e.first] += weight;
        sums[e.second] += weight;
    }
    for (long s : sums)
        if (s != w.k) return false;
    return true;
}

FpmDecision has_fractional_pm_oracle(const Graph& g) {
    int n = g.order();
    if (n > kOracleLimit)
        throw std::runtime_error("fractional-matching oracle limited to n <= " +
                                 std::to_string(kOracleLimit));
    std::uint64_t all = full_mask(n);
    bool found = false;
    int best_violation = 0, best_size = 0;
    std::uint64_t best_mask = 0;
    for (std::uint64_t mask = 0;; ++mask) {
        auto [q, i] = component_counts_on(g, all & ~mask);
        (void)q;
        int size = std::popcount(mask);
        int violation = i - size;
        if (violation >= 1) {
            if (!found || violation > best_violation ||
                (violation == best_violation &&
                 (size < best_size || (size == best_size && mask < best_mask)))) {
                found = true;
                best_violation = violation;
                best_size = size;
                best_mask = mask;
            }
        }
        if (mask == all) break;
    }
    if (!found) return {true, std::nullopt};
    return {false, mask_to_set(best_mask)};
}

namespace {

// Kuhn's augmenting-path matching on the bipartite double cover;
// match_right[r] = matched left vertex of r'' or -1.
std::vector<int> double_cover_matching(const Graph& g) {
    int n = g.order();
    std::vector<int> match_right(n, -1), match_left(n, -1);
    std::vector<bool> visited(n);
    auto augment = [&](auto&& self, int left) -> bool {
        std::uint64_t m = g.neighbor_mask(left);
        while (m) {
            int r = std::countr_zero(m);
            m &= m - 1;
            if (visited[r]) continue;
            visited[r] = true;
            if (match_right[r] < 0 || self(self, match_right[r])) {
                match_right[r] = left;
                match_left[left] = r;
                return true;
            }
        }
        return false;
    };
    for (int v = 0; v < n; ++v) {
        std::fill(visited.begin(), visited.end(), false);
        augment(augment, v);
    }
    return match_left;
}

}  // namespace

bool has_fractional_pm_fast(const Graph& g) {
    for (int v : double_cover_matching(g))
        if (v < 0) return false;
    return true;
}

FractionalWitness find_fractional_pm_witness(const Graph& g) {
    std::vector<int> next = double_cover_matching(g);
    for (int v : next)
        if (v < 0)
            throw std::logic_error(
                "find_fractional_pm_witness called on a graph without a "
                "fractional perfect matching");
    // next is a fixed-point-free permutation whose cycles are disjoint
    // simple cycles of g; 2-cycles are single edges.
    FractionalWitness w;
    std::vector<bool> done(g.order(), false);
    for (int v = 0; v < g.order(); ++v) {
        if (done[v]) continue;
        std::vector<int> cyc;
        for (int u = v; !done[u]; u = next[u]) {
            done[u] = true;
            cyc.push_back(u);
        }
        auto edge_key = [](int a, int b) {
            return std::pair<int, int>(std::min(a, b), std::max(a, b));
        };
        if (cyc.size() == 2) {
            w.weights[edge_key(cyc[0], cyc[1])] = 1.0;
        } else if (cyc.size() % 2 == 0) {
            for (std::size_t i = 0; i < cyc.size(); i += 2)
                w.weights[edge_key(cyc[i], cyc[i + 1])] = 1.0;
        } else {
            for (std::size_t i = 0; i < cyc.size(); ++i)
                w.weights[edge_key(cyc[i], cyc[(i + 1) % cyc.size()])] = 0.5;
        }
    }
    return w;
}

bool verify_fractional_witness(const Graph& g, const FractionalWitness& w) {
    std::vector<double> sums(g.order(), 0.0);
    for (const auto& [e, weight] : w.weights) {
        if (!g.has_edge(e.first, e.second)) return false;
        if (weight != 0.0 && weight != 0.5 && weight != 1.0) return false;
        sums[e.first] += weight;
        sums[e.second] += weight;
    }
    for (double s : sums)
        if (s != 1.0) return false;
    return true;
}

}  // namespace skm
