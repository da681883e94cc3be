#ifndef SKM_EXTREMAL_HPP
#define SKM_EXTREMAL_HPP

#include <vector>

#include "skm/graph.hpp"
#include "skm/matching.hpp"
#include "skm/spectral.hpp"

namespace skm {

// The two extremal families. Vertex layout is fixed: join block first,
// then the large clique, then K_3 where present, then the isolated
// block, so partitions and quotient matrices are reproducible.

/// K_t v (K_{n-2t-1} u (t+1)K_1); n even, n >= 2t+2, t >= 1.
Graph build_extremal_thm12(int n, int t);

/// K_t v (K_{n-2t-3} u K_3 u tK_1); n even, n >= 2t+6, t >= 1.
Graph build_extremal_thm14(int n, int t);

/// Equitable partition matching the published quotient matrices:
/// (join, isolated, clique) for the cubic family, (join, K_3, isolated,
/// clique) for the quartic one.
Partition canonical_partition_thm12(int n, int t);
Partition canonical_partition_thm14(int n, int t);

/// Spectral threshold computed two independent ways: largest root of
/// the closed-form quotient polynomial, and power iteration on the
/// built graph. Disagreement past cmp_tol is an internal error.
struct ThresholdResult {
    double rho_star = 0;
    Polynomial poly;
    double rho_direct = 0;
    double agreement_gap = 0;
};

/// Requires the theorem range n >= 5t+3 (resp. 5t+7).
ThresholdResult threshold_thm12(int n, int t, const Tolerance& tol = {});
ThresholdResult threshold_thm14(int n, int t, const Tolerance& tol = {});

/// Certificates at S = the join block; slack follows the proof formulas
/// (2k at n = 2t+2, else k+1 for the cubic family; always 2 for the
/// quartic family). Mismatch throws.
DeficiencyCertificate check_lemma25(int n, int t, int k);
DeficiencyCertificate check_lemma27(int n, int t, int k);

/// rho(K_s v (K_{n_1} u ... u K_{n_t})) <= rho(K_s v (K_{n-s-p(t-1)} u
/// (t-1)K_p)), strict unless parts are already extremal.
bool check_majorization_24(int s, int p, const std::vector<int>& parts,
                           const Tolerance& tol = {});

/// Same with target K_s v (K_{n-s-t-1} u K_3 u (t-2)K_1); needs
/// parts[1] >= 3.
bool check_majorization_26(int s, const std::vector<int>& parts,
                           const Tolerance& tol = {});

/// rho(K_1 v (K_{n-3} u 2K_1)) > rho(K_t v (K_{n-2t-1} u (t+1)K_1)) for
/// n >= 8, t >= 2; ties are escalated, never decided.
Compare compare_section1_claim(int n, int t, const Tolerance& tol = {});

}  // namespace skm

#endif
