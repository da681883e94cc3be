// Graph core: constructors, deletion, components, connectivity,
// isomorphism, graph6 and edge-list round trips.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "skm/enumerate.hpp"
#include "skm/graph.hpp"

using namespace skm;

namespace {

Graph cycle(int n) {
    Graph g(n);
    for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
    return g;
}

Graph path(int n) {
    Graph g(n);
    for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    return g;
}

// Relabel by a random permutation; isomorphism oracle for tests.
Graph shuffled(const Graph& g, std::mt19937_64& rng) {
    std::vector<int> perm(g.order());
    for (int i = 0; i < g.order(); ++i) perm[i] = i;
    std::shuffle(perm.begin(), perm.end(), rng);
    Graph h(g.order());
    for (auto [u, v] : g.edges()) h.add_edge(perm[u], perm[v]);
    return h;
}

// Brute-force vertex connectivity: smallest subset whose removal
// disconnects the graph or empties it to a single vertex.
int kappa_brute(const Graph& g) {
    int n = g.order();
    for (int k = 0; k < n - 1; ++k) {
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
            if (std::popcount(mask) != k) continue;
            VertexSet s;
            for (int v = 0; v < n; ++v)
                if ((mask >> v) & 1u) s.push_back(v);
            Graph h = delete_vertices(g, s);
            if (h.order() >= 2 && !is_connected(h)) return k;
        }
    }
    return n - 1;
}

}  // namespace

TEST_CASE("complete graphs") {
    CHECK(complete(0).order() == 0);
    CHECK(complete(1).order() == 1);
    CHECK(complete(1).edge_count() == 0);
    CHECK(complete(4).order() == 4);
    CHECK(complete(4).edge_count() == 6);
}

TEST_CASE("disjoint union and copies") {
    Graph two = disjoint_union(complete(1), complete(1));
    CHECK(two.order() == 2);
    CHECK(two.edge_count() == 0);

    Graph g = disjoint_union(complete(3), complete(3));
    CHECK(g.order() == 6);
    CHECK(g.edge_count() == 6);
    CHECK(component_summary(g).orders.size() == 2);

    CHECK(disjoint_union(complete(0), complete(4)) == complete(4));
    CHECK(copies(3, complete(1)).order() == 3);
    CHECK(copies(1, complete(3)) == complete(3));
    CHECK(copies(2, complete(3)) == g);
}

TEST_CASE("join") {
    Graph p3 = join(complete(1), copies(2, complete(1)));
    CHECK(p3.order() == 3);
    CHECK(p3.edge_count() == 2);
    CHECK(are_isomorphic(p3, path(3)));

    Graph g = join(complete(2), copies(4, complete(1)));
    CHECK(g.order() == 6);
    CHECK(g.edge_count() == 9);

    CHECK(are_isomorphic(join(complete(1), complete(5)), complete(6)));
}

TEST_CASE("delete_vertices") {
    CHECK(are_isomorphic(delete_vertices(complete(4), {0}), complete(3)));

    Graph g = join(complete(1), disjoint_union(complete(5), copies(2, complete(1))));
    Graph rest = delete_vertices(g, {0});
    CHECK(are_isomorphic(rest, disjoint_union(complete(5), copies(2, complete(1)))));

    CHECK(delete_vertices(g, {}) == g);
    CHECK_THROWS(delete_vertices(complete(3), {5}));
    CHECK_THROWS(delete_vertices(complete(3), {0, 0}));
}

TEST_CASE("component_summary") {
    auto cs = component_summary(disjoint_union(complete(5), copies(2, complete(1))));
    CHECK(cs.orders == std::vector<int>{1, 1, 5});
    CHECK(cs.odd_big == 1);
    CHECK(cs.isolated == 2);

    auto cs2 = component_summary(
        disjoint_union(disjoint_union(complete(7), complete(3)), complete(1)));
    CHECK(cs2.orders == std::vector<int>{1, 3, 7});
    CHECK(cs2.odd_big == 2);
    CHECK(cs2.isolated == 1);

    auto cs3 = component_summary(complete(2));
    CHECK(cs3.orders == std::vector<int>{2});
    CHECK(cs3.odd_big == 0);
    CHECK(cs3.isolated == 0);
}

TEST_CASE("is_connected") {
    CHECK(is_connected(complete(4)));
    CHECK_FALSE(is_connected(copies(2, complete(1))));
    CHECK(is_connected(cycle(5)));
    CHECK_THROWS(is_connected(Graph(0)));
}

TEST_CASE("vertex_connectivity basics") {
    CHECK(vertex_connectivity(complete(5)) == 4);
    CHECK(vertex_connectivity(cycle(6)) == 2);
    Graph g = join(complete(1), disjoint_union(complete(5), copies(2, complete(1))));
    CHECK(vertex_connectivity(g) == 1);
    CHECK_THROWS(vertex_connectivity(Graph(1)));
}

TEST_CASE("vertex_connectivity vs brute force, n <= 6") {
    for (int n = 2; n <= 6; ++n)
        for (const Graph& g : enumerate_all(n))
            CHECK(vertex_connectivity(g) == kappa_brute(g));
}

TEST_CASE("kappa(K_n) = n-1 for 2..8") {
    for (int n = 2; n <= 8; ++n) CHECK(vertex_connectivity(complete(n)) == n - 1);
}

TEST_CASE("isomorphism") {
    CHECK_FALSE(are_isomorphic(path(4), join(complete(1), copies(3, complete(1)))));
    std::mt19937_64 rng(7);
    Graph g = join(complete(1), disjoint_union(complete(5), copies(2, complete(1))));
    for (int rep = 0; rep < 20; ++rep) CHECK(are_isomorphic(g, shuffled(g, rng)));

    // same family built with the union order permuted
    Graph h = join(complete(1), disjoint_union(copies(2, complete(1)), complete(5)));
    CHECK(are_isomorphic(g, h));
}

TEST_CASE("isomorphism is an equivalence on a sample") {
    std::mt19937_64 rng(11);
    std::vector<Graph> sample = {cycle(6), path(6), complete(6),
                                 join(complete(2), copies(4, complete(1)))};
    for (auto& a : sample) CHECK(are_isomorphic(a, a));
    for (auto& a : sample)
        for (auto& b : sample)
            CHECK(are_isomorphic(a, b) == are_isomorphic(b, a));
}

TEST_CASE("graph6 hand-encoded values") {
    CHECK(are_isomorphic(parse_graph6("Bw"), complete(3)));
    CHECK(are_isomorphic(parse_graph6("A_"), complete(2)));
    CHECK(to_graph6(complete(3)) == "Bw");
    CHECK(to_graph6(complete(2)) == "A_");
}

TEST_CASE("graph6 round trip over the enumerator") {
    for (int n = 1; n <= 6; ++n)
        for (const Graph& g : enumerate_all(n))
            CHECK(parse_graph6(to_graph6(g)) == g);
}

TEST_CASE("graph6 errors") {
    CHECK_THROWS(parse_graph6(""));
    CHECK_THROWS(parse_graph6("~??"));         // multi-byte header
    CHECK_THROWS(parse_graph6("D"));           // truncated
    CHECK_THROWS(parse_graph6("Bw!"));         // trailing bytes
    CHECK_THROWS(parse_graph6(std::string("B") + char(30)));  // bad data byte
}

TEST_CASE("edge list format") {
    CHECK(are_isomorphic(parse_edge_list("3\n0 1\n1 2\n0 2"), complete(3)));
    Graph g = parse_edge_list("2\n");
    CHECK(g.order() == 2);
    CHECK(g.edge_count() == 0);
    Graph dup = parse_edge_list("3\n0 1\n0 1");
    CHECK(dup.edge_count() == 1);
    CHECK_THROWS(parse_edge_list("3\n0 3"));
    CHECK_THROWS(parse_edge_list("3\n1 1"));
    CHECK_THROWS(parse_edge_list(""));
}

TEST_CASE("deletion order/edge invariants over random sets") {
    std::mt19937_64 rng(3);
    for (int rep = 0; rep < 50; ++rep) {
        const auto& all = enumerate_all(6);
        const Graph& g = all[rng() % all.size()];
        VertexSet s;
        for (int v = 0; v < g.order(); ++v)
            if (rng() & 1) s.push_back(v);
        Graph h = delete_vertices(g, s);
        CHECK(h.order() == g.order() - int(s.size()));
        CHECK(h.edge_count() <= g.edge_count());
        auto cs = component_summary(h);
        int total = 0;
        for (int c : cs.orders) total += c;
        CHECK(total == h.order());
        CHECK(cs.odd_big + cs.isolated <= int(cs.orders.size()));
    }
}
