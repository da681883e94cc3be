#include "skm/enumerate.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>
#include <unordered_set>

namespace skm {

namespace {

struct U128Hash {
    std::size_t operator()(unsigned __int128 x) const {
        std::uint64_t lo = std::uint64_t(x), hi = std::uint64_t(x >> 64);
        lo ^= hi * 0x9e3779b97f4a7c15ULL;
        lo ^= lo >> 33;
        lo *= 0xff51afd7ed558ccdULL;
        lo ^= lo >> 33;
        return std::size_t(lo);
    }
};

// Every class of order n arises by attaching a new vertex to some class
// of order n-1 (delete any vertex of a representative). Extend, dedup by
// canonical code, sort.
std::vector<Graph> build_order(const std::vector<Graph>& prev, int n) {
    std::unordered_set<unsigned __int128, U128Hash> seen;
    for (const Graph& base : prev) {
        int m = n - 1;
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
            Graph g = disjoint_union(base, Graph(1));
            for (int v = 0; v < m; ++v)
                if ((mask >> v) & 1u) g.add_edge(m, v);
            seen.insert(canonical_code(g));
        }
    }
    std::vector<unsigned __int128> codes(seen.begin(), seen.end());
    std::sort(codes.begin(), codes.end());
    std::vector<Graph> out;
    out.reserve(codes.size());
    for (auto c : codes) out.push_back(graph_from_code(c, n));
    return out;
}

}  // namespace

const std::vector<Graph>& enumerate_all(int n) {
    if (n < 1 || n > 8)
        throw std::invalid_argument(
            "internal enumeration supports 1 <= n <= 8; ingest a graph6 corpus "
            "for larger orders");
    static std::mutex mu;
    static std::map<int, std::vector<Graph>> memo;
    std::lock_guard<std::mutex> lock(mu);
    for (int m = 1; m <= n; ++m) {
        if (memo.count(m)) continue;
        if (m == 1)
            memo[1] = {Graph(1)};
        else
            memo[m] = build_order(memo[m - 1], m);
    }
    return memo[n];
}

std::vector<Graph> enumerate_connected(int n) {
    std::vector<Graph> out;
    for (const Graph& g : enumerate_all(n))
        if (is_connected(g)) out.push_back(g);
    return out;
}

}  // namespace skm
