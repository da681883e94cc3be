#ifndef SKM_SPECTRAL_HPP
#define SKM_SPECTRAL_HPP

#include <string>
#include <vector>

#include "skm/graph.hpp"

namespace skm {

/// Numeric knobs shared by the spectral routines.
struct Tolerance {
    double eig_tol = 1e-12;   // relative convergence threshold
    double cmp_tol = 1e-8;    // comparison threshold
    long max_iter = 1000000;  // iteration cap
};

/// Three-valued strict comparison: anything inside the cmp_tol band is a
/// tie and is escalated to the caller, never silently resolved.
enum class Compare { less, greater, tie };
Compare compare_with_tie(double a, double b, double cmp_tol);

std::vector<std::vector<int>> adjacency_matrix(const Graph& g);

/// Largest adjacency eigenvalue via power iteration on A + I (the shift
/// keeps bipartite spectra from stalling the iteration), all-ones start,
/// Rayleigh-quotient convergence test. Disconnected graphs give the max
/// over components; edgeless graphs give 0.
double spectral_radius(const Graph& g, const Tolerance& tol = {});

/// Ordered vertex partition: disjoint nonempty blocks covering 0..n-1.
using Partition = std::vector<std::vector<int>>;

void validate_partition(const Graph& g, const Partition& p);

/// Equitable: every vertex of block i has the same number of neighbors
/// in block j, for all i,j.
bool is_equitable(const Graph& g, const Partition& p);

struct QuotientMatrix {
    std::vector<std::vector<double>> entries;  // average row sums
    std::vector<int> block_sizes;
    bool equitable = false;
};

QuotientMatrix quotient_matrix(const Graph& g, const Partition& p);

/// Monic polynomial with integer coefficients, highest degree first.
struct Polynomial {
    std::vector<long long> coeffs;

    int degree() const { return int(coeffs.size()) - 1; }
    double eval(double x) const;
    double eval_derivative(double x) const;
    /// "x^3 - 4x^2 - 7x + 8" style rendering for reports.
    std::string str() const;
};

/// det(xI - M) by the Faddeev-LeVerrier trace recursion, exact in integer
/// arithmetic. Matrix must be square with integer entries, size <= 16.
Polynomial char_poly(const std::vector<std::vector<long long>>& m);
Polynomial char_poly(const QuotientMatrix& m);

/// Largest real root: scan down from the Cauchy bound 1 + max|coeff| to
/// the first sign change at or above lower_hint, bisect, Newton-polish.
double largest_real_root(const Polynomial& p, double lower_hint,
                         const Tolerance& tol = {});

// The paper-family quotient polynomials and scalar evaluators.

/// Cubic x^3+(t+3-n)x^2+(2-n-t^2)x-2t^3+(n-4)t^2+(n-2)t; requires
/// n even, n >= 2t+2, t >= 1.
Polynomial f_bstar_thm12(int n, int t);

/// Quartic x^4+(t+3-n)x^3+(n-t^2-4t-6)x^2
/// +(t^2 n+3tn+2n-2t^3-8t^2-14t-8)x-2t^2 n+4t^3+8t^2; requires
/// n even, n >= 2t+6, t >= 1.
Polynomial phi_bstar_thm14(int n, int t);

double g_eval(double x, int n, int s, int t);
double psi_eval(double x, int n, int s, int t);
double t_eval(int n, int t);

}  // namespace skm

#endif
