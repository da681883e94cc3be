#include "skm/extremal.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace skm {

namespace {

void require_params(int n, int t, int min_n, const char* what) {
    if (t < 1) throw std::invalid_argument(std::string(what) + ": t must be >= 1");
    if (n % 2 != 0) throw std::invalid_argument(std::string(what) + ": n must be even");
    if (n < min_n)
        throw std::invalid_argument(std::string(what) + ": n must be >= " +
                                    std::to_string(min_n));
}

std::vector<int> block_range(int lo, int len) {
    std::vector<int> v(len);
    std::iota(v.begin(), v.end(), lo);
    return v;
}

}  // namespace

Graph build_extremal_thm12(int n, int t) {
    require_params(n, t, 2 * t + 2, "build_extremal_thm12");
    return join(complete(t), disjoint_union(complete(n - 2 * t - 1),
                                            copies(t + 1, complete(1))));
}

Graph build_extremal_thm14(int n, int t) {
    require_params(n, t, 2 * t + 6, "build_extremal_thm14");
    Graph rest = disjoint_union(disjoint_union(complete(n - 2 * t - 3), complete(3)),
                                copies(t, complete(1)));
    return join(complete(t), rest);
}

Partition canonical_partition_thm12(int n, int t) {
    require_params(n, t, 2 * t + 2, "canonical_partition_thm12");
    int clique = n - 2 * t - 1;
    return {block_range(0, t), block_range(t + clique, t + 1), block_range(t, clique)};
}

Partition canonical_partition_thm14(int n, int t) {
    require_params(n, t, 2 * t + 6, "canonical_partition_thm14");
    int clique = n - 2 * t - 3;
    return {block_range(0, t), block_range(t + clique, 3),
            block_range(t + clique + 3, t), block_range(t, clique)};
}

namespace {

ThresholdResult make_threshold(const Graph& g, Polynomial poly, double hint,
                               const Tolerance& tol, const char* what) {
    ThresholdResult r;
    r.poly = std::move(poly);
    r.rho_star = largest_real_root(r.poly, hint, tol);
    r.rho_direct = spectral_radius(g, tol);
    r.agreement_gap = std::abs(r.rho_star - r.rho_direct);
    if (r.agreement_gap > tol.cmp_tol)
        throw std::runtime_error(std::string(what) +
                                 ": quotient root and direct spectral radius "
                                 "disagree by " +
                                 std::to_string(r.agreement_gap));
    return r;
}

}  // namespace

ThresholdResult threshold_thm12(int n, int t, const Tolerance& tol) {
    require_params(n, t, 5 * t + 3, "threshold_thm12");
    return make_threshold(build_extremal_thm12(n, t), f_bstar_thm12(n, t),
                          double(n - t - 2) - 1.0, tol, "threshold_thm12");
}

ThresholdResult threshold_thm14(int n, int t, const Tolerance& tol) {
    require_params(n, t, 5 * t + 7, "threshold_thm14");
    return make_threshold(build_extremal_thm14(n, t), phi_bstar_thm14(n, t),
                          double(n - t - 4) - 1.0, tol, "threshold_thm14");
}

DeficiencyCertificate check_lemma25(int n, int t, int k) {
    Graph g = build_extremal_thm12(n, t);
    VertexSet joiners = block_range(0, t);
    int slack = deficiency(g, joiners, k);
    int expected = (n == 2 * t + 2) ? 2 * k : k + 1;
    if (slack != expected)
        throw std::runtime_error("check_lemma25(" + std::to_string(n) + "," +
                                 std::to_string(t) + "," + std::to_string(k) +
                                 "): slack " + std::to_string(slack) +
                                 " does not match the proof formula " +
                                 std::to_string(expected));
    auto cs = component_summary(delete_vertices(g, joiners));
    return DeficiencyCertificate{joiners, t, cs.isolated, cs.odd_big, k, slack};
}

DeficiencyCertificate check_lemma27(int n, int t, int k) {
    Graph g = build_extremal_thm14(n, t);
    VertexSet joiners = block_range(0, t);
    int slack = deficiency(g, joiners, k);
    if (slack != 2)
        throw std::runtime_error("check_lemma27(" + std::to_string(n) + "," +
                                 std::to_string(t) + "," + std::to_string(k) +
                                 "): slack " + std::to_string(slack) +
                                 " does not match the proof formula 2");
    auto cs = component_summary(delete_vertices(g, joiners));
    return DeficiencyCertificate{joiners, t, cs.isolated, cs.odd_big, k, slack};
}

namespace {

Graph clique_union_join(int s, const std::vector<int>& parts) {
    Graph rest(0);
    for (int p : parts) rest = disjoint_union(rest, complete(p));
    return join(complete(s), rest);
}

}  // namespace

bool check_majorization_24(int s, int p, const std::vector<int>& parts,
                           const Tolerance& tol) {
    if (s < 1 || p < 1) throw std::invalid_argument("check_majorization_24: s,p >= 1");
    if (!std::is_sorted(parts.rbegin(), parts.rend()))
        throw std::invalid_argument("parts must be sorted descending");
    for (int x : parts)
        if (x < p) throw std::invalid_argument("all parts must be >= p");
    int t = int(parts.size());
    int n = s + std::accumulate(parts.begin(), parts.end(), 0);
    std::vector<int> extremal_parts{n - s - p * (t - 1)};
    extremal_parts.insert(extremal_parts.end(), t - 1, p);
    double lhs = spectral_radius(clique_union_join(s, parts), tol);
    double rhs = spectral_radius(clique_union_join(s, extremal_parts), tol);
    if (parts == extremal_parts) return std::abs(lhs - rhs) <= tol.cmp_tol;
    return compare_with_tie(lhs, rhs, tol.cmp_tol) == Compare::less;
}

bool check_majorization_26(int s, const std::vector<int>& parts,
                           const Tolerance& tol) {
    if (s < 1) throw std::invalid_argument("check_majorization_26: s >= 1");
    if (parts.size() < 2 || parts[1] < 3)
        throw std::invalid_argument("check_majorization_26 needs n_2 >= 3");
    if (!std::is_sorted(parts.rbegin(), parts.rend()))
        throw std::invalid_argument("parts must be sorted descending");
    int t = int(parts.size());
    int n = s + std::accumulate(parts.begin(), parts.end(), 0);
    std::vector<int> extremal_parts{n - s - t - 1, 3};
    extremal_parts.insert(extremal_parts.end(), t - 2, 1);
    double lhs = spectral_radius(clique_union_join(s, parts), tol);
    double rhs = spectral_radius(clique_union_join(s, extremal_parts), tol);
    if (parts == extremal_parts) return std::abs(lhs - rhs) <= tol.cmp_tol;
    return compare_with_tie(lhs, rhs, tol.cmp_tol) == Compare::less;
}

Compare compare_section1_claim(int n, int t, const Tolerance& tol) {
    if (t < 2) throw std::invalid_argument("compare_section1_claim: t >= 2");
    if (n < 8 || n < 2 * t + 2)
        throw std::invalid_argument("compare_section1_claim: n >= max(8, 2t+2)");
    Graph lhs = join(complete(1),
                     disjoint_union(complete(n - 3), copies(2, complete(1))));
    double a = spectral_radius(lhs, tol);
    double b = spectral_radius(build_extremal_thm12(n, t), tol);
    return compare_with_tie(a, b, tol.cmp_tol);
}

}  // namespace skm
