// Extremal families: builders, dual-path thresholds, lemma
// certificates, majorization sweeps, and the section-1 comparison.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "skm/extremal.hpp"

using namespace skm;

TEST_CASE("build_extremal_thm12") {
    Graph g = build_extremal_thm12(8, 1);
    CHECK(g.order() == 8);
    CHECK(g.edge_count() == 17);  // |E(K_5)| + 7 join edges
    CHECK(vertex_connectivity(g) == 1);

    Graph h = build_extremal_thm12(6, 2);  // K_2 v (K_1 u 3K_1) = K_2 v 4K_1
    CHECK(h.order() == 6);
    CHECK(are_isomorphic(h, join(complete(2), copies(4, complete(1)))));

    CHECK_THROWS(build_extremal_thm12(7, 1));
    CHECK_THROWS(build_extremal_thm12(4, 2));
    CHECK_THROWS(build_extremal_thm12(8, 0));
}

TEST_CASE("build_extremal_thm14") {
    Graph g = build_extremal_thm14(12, 1);
    CHECK(g.order() == 12);
    CHECK(are_isomorphic(
        g, join(complete(1), disjoint_union(disjoint_union(complete(7), complete(3)),
                                            complete(1)))));
    CHECK(has_fractional_pm_fast(g));

    Graph b = build_extremal_thm14(2 * 2 + 6, 2);  // boundary: K_2 v (K_3 u K_3 u 2K_1)
    CHECK(b.order() == 10);
    CHECK_THROWS(build_extremal_thm14(6, 1));   // below 2t+6
    CHECK_THROWS(build_extremal_thm14(11, 1));  // odd order
}

TEST_CASE("connectivity of the families") {
    for (int t = 1; t <= 3; ++t)
        for (int n = 2 * t + 4; n <= 14; n += 2)
            CHECK(vertex_connectivity(build_extremal_thm12(n, t)) == t);
    for (int t = 1; t <= 2; ++t)
        for (int n = 2 * t + 6; n <= 14; n += 2)
            CHECK(vertex_connectivity(build_extremal_thm14(n, t)) == t);
}

TEST_CASE("canonical partitions are equitable and match the published quotient matrices") {
    Graph g = build_extremal_thm12(8, 1);
    Partition p = canonical_partition_thm12(8, 1);
    CHECK(is_equitable(g, p));
    QuotientMatrix q = quotient_matrix(g, p);
    CHECK(q.entries ==
          std::vector<std::vector<double>>{{0, 2, 5}, {1, 0, 0}, {1, 0, 4}});
    CHECK(char_poly(q).coeffs == f_bstar_thm12(8, 1).coeffs);

    Graph h = build_extremal_thm14(12, 1);
    Partition p4 = canonical_partition_thm14(12, 1);
    CHECK(is_equitable(h, p4));
    QuotientMatrix q4 = quotient_matrix(h, p4);
    // rows (t-1,3,t,n-2t-3 ; t,2,0,0 ; t,0,0,0 ; t,0,0,n-2t-4) at t=1,n=12
    CHECK(q4.entries == std::vector<std::vector<double>>{
                            {0, 3, 1, 7}, {1, 2, 0, 0}, {1, 0, 0, 0}, {1, 0, 0, 6}});
    CHECK(char_poly(q4).coeffs == phi_bstar_thm14(12, 1).coeffs);
}

TEST_CASE("printed-polynomial identity across a grid") {
    for (int t = 1; t <= 4; ++t)
        for (int n = 2 * t + 2; n <= 30; n += 2) {
            Graph g = build_extremal_thm12(n, t);
            auto q = quotient_matrix(g, canonical_partition_thm12(n, t));
            CHECK(q.equitable);
            CHECK(char_poly(q).coeffs == f_bstar_thm12(n, t).coeffs);
        }
    for (int t = 1; t <= 4; ++t)
        for (int n = 2 * t + 6; n <= 30; n += 2) {
            Graph g = build_extremal_thm14(n, t);
            auto q = quotient_matrix(g, canonical_partition_thm14(n, t));
            CHECK(q.equitable);
            CHECK(char_poly(q).coeffs == phi_bstar_thm14(n, t).coeffs);
        }
}

TEST_CASE("thresholds agree across both computation paths") {
    auto r12 = threshold_thm12(8, 1);
    CHECK(r12.rho_star > 5.0);
    CHECK(r12.rho_star < 5.1);
    CHECK(r12.agreement_gap <= 1e-8);
    CHECK(r12.poly.str() == "x^3 - 4x^2 - 7x + 8");

    auto r14 = threshold_thm14(12, 1);
    CHECK(r14.rho_star > 7.0);
    CHECK(r14.rho_star < 7.1);
    CHECK(r14.agreement_gap <= 1e-8);

    CHECK_THROWS(threshold_thm12(6, 1));   // below 5t+3
    CHECK_THROWS(threshold_thm14(10, 1));  // below 5t+7
}

TEST_CASE("threshold exceeds n-t-2 and the families order as expected") {
    for (int t = 1; t <= 3; ++t)
        for (int n = 5 * t + 3 + (5 * t + 3) % 2; n <= 24; n += 2) {
            auto r = threshold_thm12(n, t);
            CHECK(r.rho_star > double(n - t - 2));
            if (n >= 5 * t + 7) {
                auto r14 = threshold_thm14(n, t);
                if (r14.rho_star >= r.rho_star)
                    MESSAGE("threshold ordering violated at n=", n, " t=", t,
                            ": thm14=", r14.rho_star, " thm12=", r.rho_star);
            }
        }
}

TEST_CASE("lemma 2.5 certificates") {
    auto c = check_lemma25(8, 1, 1);
    CHECK(c.slack == 2);
    CHECK(c.S == VertexSet{0});
    CHECK(c.q == 1);
    CHECK(c.i == 2);

    for (int t = 1; t <= 3; ++t)
        for (int k : {1, 3, 5}) CHECK(check_lemma25(2 * t + 2, t, k).slack == 2 * k);
    for (int t = 1; t <= 3; ++t)
        for (int n = 2 * t + 4; n <= 14; n += 2)
            for (int k : {1, 3, 5}) CHECK(check_lemma25(n, t, k).slack == k + 1);

    CHECK_FALSE(has_perfect_k_matching(build_extremal_thm12(8, 1), 3, false).exists);
}

TEST_CASE("lemma 2.7 certificates") {
    CHECK(check_lemma27(12, 1, 1).slack == 2);
    CHECK(check_lemma27(12, 1, 3).slack == 2);
    for (int t = 1; t <= 3; ++t)
        for (int n = 2 * t + 6; n <= 14; n += 2)
            for (int k : {1, 3, 5}) CHECK(check_lemma27(n, t, k).slack == 2);

    for (int n = 12; n <= 14; n += 2)
        CHECK_FALSE(has_perfect_k_matching(build_extremal_thm14(n, 1), 1, false).exists);
}

TEST_CASE("FPM dichotomy between the families") {
    for (int t = 1; t <= 2; ++t)
        for (int n = 2 * t + 6; n <= 14; n += 2) {
            CHECK_FALSE(has_fractional_pm_fast(build_extremal_thm12(n, t)));
            CHECK(has_fractional_pm_fast(build_extremal_thm14(n, t)));
        }
}

TEST_CASE("majorization lemma 2.4") {
    CHECK(check_majorization_24(1, 1, {3, 3}));
    CHECK(check_majorization_24(1, 1, {5, 1}));  // already extremal: equality
    CHECK_THROWS(check_majorization_24(1, 2, {3, 1}));  // part below p

    std::mt19937_64 rng(31);
    for (int rep = 0; rep < 50; ++rep) {
        int s = 1 + int(rng() % 3);
        int t = 2 + int(rng() % 3);
        std::vector<int> parts(t);
        int budget = 0;
        for (int& x : parts) {
            x = 1 + int(rng() % 4);
            budget += x;
        }
        if (budget + s > 20) continue;
        std::sort(parts.rbegin(), parts.rend());
        CHECK(check_majorization_24(s, 1, parts));
    }
}

TEST_CASE("majorization lemma 2.6") {
    CHECK(check_majorization_26(1, {3, 3}));
    CHECK(check_majorization_26(1, {5, 3, 1}));  // already extremal: equality
    CHECK_THROWS(check_majorization_26(1, {4, 2}));  // n_2 < 3

    std::mt19937_64 rng(37);
    for (int rep = 0; rep < 50; ++rep) {
        int s = 1 + int(rng() % 3);
        int t = 2 + int(rng() % 2);
        std::vector<int> parts(t);
        parts[0] = 3 + int(rng() % 4);
        parts[1] = 3;
        for (int i = 2; i < t; ++i) parts[i] = 1 + int(rng() % 3);
        std::sort(parts.rbegin(), parts.rend());
        if (parts[1] < 3) continue;
        int n = s;
        for (int x : parts) n += x;
        if (n > 20) continue;
        CHECK(check_majorization_26(s, parts));
    }
}

TEST_CASE("section 1 comparison claim") {
    CHECK(compare_section1_claim(10, 2) == Compare::greater);
    CHECK(compare_section1_claim(8, 2) == Compare::greater);
    for (int t : {2, 3, 4})
        for (int n = std::max(8, 2 * t + 2) + (2 * t) % 2; n <= 30; n += 2)
            CHECK(compare_section1_claim(n, t) == Compare::greater);
    CHECK_THROWS(compare_section1_claim(8, 1));
}
