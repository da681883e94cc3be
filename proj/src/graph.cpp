#include "skm/graph.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <stdexcept>

namespace skm {

Graph::Graph(int n) : n_(n), rows_(n, 0) {
    if (n < 0 || n > kMaxOrder)
        throw std::invalid_argument("graph order must be in [0, 64], got " +
                                    std::to_string(n));
}

void Graph::check_vertex(int v) const {
    if (v < 0 || v >= n_)
        throw std::invalid_argument("vertex " + std::to_string(v) +
                                    " out of range [0, " + std::to_string(n_) + ")");
}

std::size_t Graph::edge_count() const {
    std::size_t twice = 0;
    for (auto row : rows_) twice += std::popcount(row);
    return twice / 2;
}

bool Graph::has_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    return (rows_[u] >> v) & 1u;
}

void Graph::add_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
    rows_[u] |= std::uint64_t{1} << v;
    rows_[v] |= std::uint64_t{1} << u;
}

int Graph::degree(int v) const {
    check_vertex(v);
    return std::popcount(rows_[v]);
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < n_; ++u) {
        std::uint64_t m = rows_[u] >> (u + 1) << (u + 1);
        while (m) {
            int v = std::countr_zero(m);
            out.emplace_back(u, v);
            m &= m - 1;
        }
    }
    return out;
}

std::uint64_t vertex_mask(const Graph& g, const VertexSet& s) {
    std::uint64_t mask = 0;
    for (int v : s) {
        if (v < 0 || v >= g.order())
            throw std::invalid_argument("vertex set member " + std::to_string(v) +
                                        " out of range for order " +
                                        std::to_string(g.order()));
        std::uint64_t bit = std::uint64_t{1} << v;
        if (mask & bit)
            throw std::invalid_argument("duplicate vertex " + std::to_string(v) +
                                        " in vertex set");
        mask |= bit;
    }
    return mask;
}

Graph complete(int m) {
    if (m < 0) throw std::invalid_argument("complete graph order must be >= 0");
    Graph g(m);
    for (int u = 0; u < m; ++u)
        for (int v = u + 1; v < m; ++v) g.add_edge(u, v);
    return g;
}

Graph disjoint_union(const Graph& g1, const Graph& g2) {
    Graph g(g1.order() + g2.order());
    for (auto [u, v] : g1.edges()) g.add_edge(u, v);
    int off = g1.order();
    for (auto [u, v] : g2.edges()) g.add_edge(u + off, v + off);
    return g;
}

Graph copies(int m, const Graph& g) {
    if (m < 0) throw std::invalid_argument("copy count must be >= 0");
    Graph out(0);
    for (int i = 0; i < m; ++i) out = disjoint_union(out, g);
    return out;
}

Graph join(const Graph& g1, const Graph& g2) {
    Graph g = disjoint_union(g1, g2);
    for (int u = 0; u < g1.order(); ++u)
        for (int v = 0; v < g2.order(); ++v) g.add_edge(u, g1.order() + v);
    return g;
}

Graph delete_vertices(const Graph& g, const VertexSet& s) {
    std::uint64_t removed = vertex_mask(g, s);
    std::vector<int> relabel(g.order(), -1);
    int next = 0;
    for (int v = 0; v < g.order(); ++v)
        if (!((removed >> v) & 1u)) relabel[v] = next++;
    Graph out(next);
    for (auto [u, v] : g.edges())
        if (relabel[u] >= 0 && relabel[v] >= 0) out.add_edge(relabel[u], relabel[v]);
    return out;
}

namespace {

// Expands the component containing the lowest set bit of todo, within keep.
std::uint64_t grow_component(const Graph& g, std::uint64_t keep, std::uint64_t seed) {
    std::uint64_t comp = seed;
    std::uint64_t frontier = seed;
    while (frontier) {
        std::uint64_t next = 0;
        while (frontier) {
            int v = std::countr_zero(frontier);
            frontier &= frontier - 1;
            next |= g.neighbor_mask(v);
        }
        next &= keep & ~comp;
        comp |= next;
        frontier = next;
    }
    return comp;
}

}  // namespace

std::pair<int, int> component_counts_on(const Graph& g, std::uint64_t keep_mask) {
    int odd_big = 0, isolated = 0;
    std::uint64_t todo = keep_mask;
    while (todo) {
        std::uint64_t seed = todo & (~todo + 1);
        std::uint64_t comp = grow_component(g, keep_mask, seed);
        int size = std::popcount(comp);
        if (size == 1)
            ++isolated;
        else if (size % 2 == 1)
            ++odd_big;
        todo &= ~comp;
    }
    return {odd_big, isolated};
}

ComponentSummary component_summary(const Graph& g) {
    ComponentSummary cs;
    std::uint64_t all = g.order() == 64 ? ~std::uint64_t{0}
                                        : (std::uint64_t{1} << g.order()) - 1;
    std::uint64_t todo = all;
    while (todo) {
        std::uint64_t seed = todo & (~todo + 1);
        std::uint64_t comp = grow_component(g, all, seed);
        cs.orders.push_back(std::popcount(comp));
        todo &= ~comp;
    }
    std::sort(cs.orders.begin(), cs.orders.end());
    for (int c : cs.orders) {
        if (c == 1)
            ++cs.isolated;
        else if (c % 2 == 1)
            ++cs.odd_big;
    }
    return cs;
}

bool is_connected(const Graph& g) {
    if (g.order() == 0) throw std::invalid_argument("is_connected: empty graph");
    return component_summary(g).orders.size() == 1;
}

namespace {

// Unit-capacity max flow on the vertex-split digraph; equals the local
// vertex connectivity kappa(s,t) for non-adjacent s,t.
int local_connectivity(const Graph& g, int s, int t) {
    int n = g.order();
    int nn = 2 * n;  // in(v)=2v, out(v)=2v+1
    std::vector<std::vector<int>> cap(nn, std::vector<int>(nn, 0));
    for (int v = 0; v < n; ++v) cap[2 * v][2 * v + 1] = (v == s || v == t) ? n : 1;
    for (auto [u, v] : g.edges()) {
        cap[2 * u + 1][2 * v] = 1;
        cap[2 * v + 1][2 * u] = 1;
    }
    int source = 2 * s + 1, sink = 2 * t;
    int flow = 0;
    while (true) {
        std::vector<int> prev(nn, -1);
        std::vector<int> queue{source};
        prev[source] = source;
        for (std::size_t qi = 0; qi < queue.size() && prev[sink] < 0; ++qi) {
            int u = queue[qi];
            for (int v = 0; v < nn; ++v)
                if (cap[u][v] > 0 && prev[v] < 0) {
                    prev[v] = u;
                    queue.push_back(v);
                }
        }
        if (prev[sink] < 0) break;
        for (int v = sink; v != source; v = prev[v]) {
            --cap[prev[v]][v];
            ++cap[v][prev[v]];
        }
        ++flow;
    }
    return flow;
}

}  // namespace

int vertex_connectivity(const Graph& g) {
    int n = g.order();
    if (n < 2) throw std::invalid_argument("vertex_connectivity requires n >= 2");
    if (g.edge_count() == std::size_t(n) * (n - 1) / 2) return n - 1;
    int best = n - 1;
    for (int s = 0; s < n; ++s)
        for (int t = s + 1; t < n; ++t)
            if (!g.has_edge(s, t)) best = std::min(best, local_connectivity(g, s, t));
    return best;
}

namespace {

std::uint64_t hash_combine(std::uint64_t h, std::uint64_t v) {
    h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
}

// Iterated degree refinement; identical across isomorphic graphs.
std::vector<std::uint64_t> vertex_invariants(const Graph& g) {
    int n = g.order();
    std::vector<std::uint64_t> inv(n);
    for (int v = 0; v < n; ++v) inv[v] = std::uint64_t(g.degree(v));
    for (int round = 0; round < 3; ++round) {
        std::vector<std::uint64_t> next(n);
        for (int v = 0; v < n; ++v) {
            std::vector<std::uint64_t> nb;
            std::uint64_t m = g.neighbor_mask(v);
            while (m) {
                nb.push_back(inv[std::countr_zero(m)]);
                m &= m - 1;
            }
            std::sort(nb.begin(), nb.end());
            std::uint64_t h = hash_combine(0xabcdef12345ULL, inv[v]);
            for (auto x : nb) h = hash_combine(h, x);
            next[v] = h;
        }
        inv = std::move(next);
    }
    return inv;
}

struct CodeSearch {
    const Graph* g;
    int n;
    int total_bits;
    std::vector<std::vector<int>> cells;  // vertices grouped, canonical cell order
    std::vector<int> order;
    unsigned __int128 best = 0;
    bool have_leaf = false;

    void run() {
        order.clear();
        dfs(0, 0, 0, false);
    }

    void dfs(std::size_t cell_idx, int pos, unsigned __int128 partial, bool ahead) {
        if (pos == n) {
            if (!have_leaf || partial > best) {
                best = partial;
                have_leaf = true;
            }
            return;
        }
        std::size_t ci = cell_idx;
        // advance to the cell that still has unplaced vertices
        while (std::count_if(cells[ci].begin(), cells[ci].end(), [&](int v) {
                   return std::find(order.begin(), order.end(), v) == order.end();
               }) == 0)
            ++ci;
        for (int v : cells[ci]) {
            if (std::find(order.begin(), order.end(), v) != order.end()) continue;
            unsigned __int128 bits = 0;
            for (int p = 0; p < pos; ++p)
                bits = (bits << 1) | unsigned(g->has_edge(v, order[p]));
            unsigned __int128 next = (partial << pos) | bits;
            bool next_ahead = ahead;
            if (have_leaf && !ahead) {
                int len = pos * (pos + 1) / 2;
                unsigned __int128 prefix = best >> (total_bits - len);
                if (next < prefix) continue;
                if (next > prefix) next_ahead = true;
            }
            order.push_back(v);
            dfs(ci, pos + 1, next, next_ahead);
            order.pop_back();
        }
    }
};

}  // namespace

unsigned __int128 canonical_code(const Graph& g) {
    int n = g.order();
    if (n > 16) throw std::invalid_argument("canonical_code supports n <= 16");
    if (n <= 1) return 0;
    auto inv = vertex_invariants(g);
    std::vector<std::uint64_t> keys(inv.begin(), inv.end());
    std::sort(keys.begin(), keys.end());
    keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
    CodeSearch cs;
    cs.g = &g;
    cs.n = n;
    cs.total_bits = n * (n - 1) / 2;
    for (auto k : keys) {
        std::vector<int> cell;
        for (int v = 0; v < n; ++v)
            if (inv[v] == k) cell.push_back(v);
        cs.cells.push_back(std::move(cell));
    }
    cs.run();
    return cs.best;
}

Graph graph_from_code(unsigned __int128 code, int n) {
    Graph g(n);
    int total = n * (n - 1) / 2;
    int consumed = 0;
    for (int m = 1; m < n; ++m) {
        consumed += m;
        unsigned __int128 bits =
            (code >> (total - consumed)) & (((unsigned __int128)1 << m) - 1);
        for (int p = 0; p < m; ++p)
            if ((bits >> (m - 1 - p)) & 1) g.add_edge(m, p);
    }
    return g;
}

bool are_isomorphic(const Graph& g1, const Graph& g2) {
    int n = g1.order();
    if (n != g2.order() || g1.edge_count() != g2.edge_count()) return false;
    if (n == 0) return true;
    auto inv1 = vertex_invariants(g1), inv2 = vertex_invariants(g2);
    {
        auto s1 = inv1, s2 = inv2;
        std::sort(s1.begin(), s1.end());
        std::sort(s2.begin(), s2.end());
        if (s1 != s2) return false;
    }
    // map vertices of g1 in decreasing-degree order
    std::vector<int> verts(n);
    for (int i = 0; i < n; ++i) verts[i] = i;
    std::sort(verts.begin(), verts.end(),
              [&](int a, int b) { return g1.degree(a) > g1.degree(b); });
    std::vector<int> map1(n, -1);
    std::vector<bool> used(n, false);
    auto backtrack = [&](auto&& self, std::size_t idx) -> bool {
        if (idx == verts.size()) return true;
        int v = verts[idx];
        for (int u = 0; u < n; ++u) {
            if (used[u] || inv2[u] != inv1[v]) continue;
            bool ok = true;
            for (std::size_t j = 0; j < idx && ok; ++j) {
                int w = verts[j];
                if (g1.has_edge(v, w) != g2.has_edge(u, map1[w])) ok = false;
            }
            if (!ok) continue;
            map1[v] = u;
            used[u] = true;
            if (self(self, idx + 1)) return true;
            used[u] = false;
            map1[v] = -1;
        }
        return false;
    };
    return backtrack(backtrack, 0);
}

namespace {

[[noreturn]] void g6_fail(const std::string& why, std::size_t offset) {
    throw std::runtime_error("graph6 parse error at byte " + std::to_string(offset) +
                             ": " + why);
}

}  // namespace

Graph parse_graph6(const std::string& text) {
    std::string s = text;
    while (!s.empty() && (s.back() == '\n' || s.back() == '\r' || s.back() == ' '))
        s.pop_back();
    if (s.empty()) g6_fail("empty input", 0);
    unsigned char h = s[0];
    if (h == 126) g6_fail("multi-byte order header (n > 62) not supported", 0);
    if (h < 63 || h > 125) g6_fail("header byte out of range", 0);
    int n = h - 63;
    int bits = n * (n - 1) / 2;
    std::size_t need = (bits + 5) / 6;
    if (s.size() < 1 + need) g6_fail("truncated bit stream", s.size());
    if (s.size() > 1 + need) g6_fail("trailing bytes", 1 + need);
    Graph g(n);
    int bit_idx = 0;
    for (int col = 1; col < n; ++col)
        for (int row = 0; row < col; ++row, ++bit_idx) {
            std::size_t byte = 1 + bit_idx / 6;
            unsigned char c = s[byte];
            if (c < 63 || c > 126) g6_fail("data byte out of range", byte);
            if ((c - 63) >> (5 - bit_idx % 6) & 1) g.add_edge(row, col);
        }
    return g;
}

std::string to_graph6(const Graph& g) {
    int n = g.order();
    if (n > 62) throw std::invalid_argument("graph6 output limited to n <= 62");
    std::string out;
    out.push_back(char(n + 63));
    int acc = 0, nbits = 0;
    for (int col = 1; col < n; ++col)
        for (int row = 0; row < col; ++row) {
            acc = (acc << 1) | int(g.has_edge(row, col));
            if (++nbits == 6) {
                out.push_back(char(acc + 63));
                acc = nbits = 0;
            }
        }
    if (nbits > 0) out.push_back(char((acc << (6 - nbits)) + 63));
    return out;
}

Graph parse_edge_list(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    int n = -1;
    Graph g(0);
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        if (n < 0) {
            if (!(ls >> n) || n < 0)
                throw std::runtime_error("edge list line 1: expected vertex count");
            g = Graph(n);
            continue;
        }
        int u, v;
        if (!(ls >> u)) continue;  // blank line
        if (!(ls >> v))
            throw std::runtime_error("edge list line " + std::to_string(lineno) +
                                     ": expected \"u v\"");
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw std::runtime_error("edge list line " + std::to_string(lineno) +
                                     ": vertex label out of range");
        if (u == v)
            throw std::runtime_error("edge list line " + std::to_string(lineno) +
                                     ": self-loop rejected");
        if (!g.has_edge(u, v)) g.add_edge(u, v);  // duplicates ignored
    }
    if (n < 0) throw std::runtime_error("edge list line 1: expected vertex count");
    return g;
}

}  // namespace skm
