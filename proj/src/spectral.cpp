#include "skm/spectral.hpp"

#include <bit>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace skm {

Compare compare_with_tie(double a, double b, double cmp_tol) {
    if (std::abs(a - b) <= cmp_tol) return Compare::tie;
    return a < b ? Compare::less : Compare::greater;
}

std::vector<std::vector<int>> adjacency_matrix(const Graph& g) {
    int n = g.order();
    std::vector<std::vector<int>> a(n, std::vector<int>(n, 0));
    for (auto [u, v] : g.edges()) a[u][v] = a[v][u] = 1;
    return a;
}

double spectral_radius(const Graph& g, const Tolerance& tol) {
    int n = g.order();
    if (n < 1) throw std::invalid_argument("spectral_radius requires n >= 1");
    if (g.edge_count() == 0) return 0.0;

    std::vector<double> x(n, 1.0), y(n);
    double lambda = 0.0;
    for (long it = 0; it < tol.max_iter; ++it) {
        // y = (A + I) x
        for (int v = 0; v < n; ++v) {
            double acc = x[v];
            std::uint64_t m = g.neighbor_mask(v);
            while (m) {
                acc += x[std::countr_zero(m)];
                m &= m - 1;
            }
            y[v] = acc;
        }
        double xx = 0, xy = 0;
        for (int v = 0; v < n; ++v) {
            xx += x[v] * x[v];
            xy += x[v] * y[v];
        }
        double next = xy / xx;
        double resid = 0;
        for (int v = 0; v < n; ++v) {
            double r = y[v] - next * x[v];
            resid += r * r;
        }
        resid = std::sqrt(resid / xx);
        bool settled = std::abs(next - lambda) <= tol.eig_tol * std::max(1.0, next);
        lambda = next;
        if (settled && resid <= 1e-9 * std::max(1.0, next)) return lambda - 1.0;
        double norm = 0;
        for (int v = 0; v < n; ++v) norm += y[v] * y[v];
        norm = std::sqrt(norm);
        for (int v = 0; v < n; ++v) x[v] = y[v] / norm;
    }
    throw std::runtime_error("power iteration did not converge within " +
                             std::to_string(tol.max_iter) +
                             " iterations; last Rayleigh quotient " +
                             std::to_string(lambda - 1.0));
}

void validate_partition(const Graph& g, const Partition& p) {
    std::vector<bool> seen(g.order(), false);
    std::size_t total = 0;
    for (const auto& block : p) {
        if (block.empty()) throw std::invalid_argument("partition has an empty block");
        for (int v : block) {
            if (v < 0 || v >= g.order())
                throw std::invalid_argument("partition member out of range");
            if (seen[v]) throw std::invalid_argument("partition blocks overlap");
            seen[v] = true;
            ++total;
        }
    }
    if (total != std::size_t(g.order()))
        throw std::invalid_argument("partition does not cover all vertices");
}

bool is_equitable(const Graph& g, const Partition& p) {
    validate_partition(g, p);
    std::vector<std::uint64_t> block_mask(p.size(), 0);
    for (std::size_t i = 0; i < p.size(); ++i)
        for (int v : p[i]) block_mask[i] |= std::uint64_t{1} << v;
    for (std::size_t j = 0; j < p.size(); ++j)
        for (const auto& block : p) {
            int first = std::popcount(g.neighbor_mask(block[0]) & block_mask[j]);
            for (int v : block)
                if (std::popcount(g.neighbor_mask(v) & block_mask[j]) != first)
                    return false;
        }
    return true;
}

QuotientMatrix quotient_matrix(const Graph& g, const Partition& p) {
    validate_partition(g, p);
    std::size_t t = p.size();
    std::vector<std::uint64_t> block_mask(t, 0);
    QuotientMatrix q;
    q.block_sizes.reserve(t);
    for (std::size_t i = 0; i < t; ++i) {
        for (int v : p[i]) block_mask[i] |= std::uint64_t{1} << v;
        q.block_sizes.push_back(int(p[i].size()));
    }
    q.entries.assign(t, std::vector<double>(t, 0.0));
    for (std::size_t i = 0; i < t; ++i)
        for (std::size_t j = 0; j < t; ++j) {
            long sum = 0;
            for (int v : p[i]) sum += std::popcount(g.neighbor_mask(v) & block_mask[j]);
            q.entries[i][j] = double(sum) / double(p[i].size());
        }
    q.equitable = is_equitable(g, p);
    return q;
}

double Polynomial::eval(double x) const {
    double acc = 0;
    for (long long c : coeffs) acc = acc * x + double(c);
    return acc;
}

double Polynomial::eval_derivative(double x) const {
    double acc = 0;
    int d = degree();
    for (int i = 0; i < d; ++i) acc = acc * x + double(coeffs[i]) * (d - i);
    return acc;
}

std::string Polynomial::str() const {
    std::ostringstream out;
    int d = degree();
    bool first = true;
    for (int i = 0; i <= d; ++i) {
        long long c = coeffs[i];
        if (c == 0 && !(d == 0 && i == 0)) continue;
        int power = d - i;
        if (first) {
            if (c < 0) out << "-";
            first = false;
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        long long a = std::llabs(c);
        if (a != 1 || power == 0) out << a;
        if (power >= 1) out << "x";
        if (power >= 2) out << "^" << power;
    }
    if (first) out << "0";
    return out.str();
}

Polynomial char_poly(const std::vector<std::vector<long long>>& m) {
    std::size_t n = m.size();
    if (n == 0 || n > 16)
        throw std::invalid_argument("char_poly supports 1 <= size <= 16");
    for (const auto& row : m)
        if (row.size() != n) throw std::invalid_argument("char_poly: matrix not square");

    using Wide = __int128;
    std::vector<std::vector<Wide>> a(n, std::vector<Wide>(n)), mk = a, tmp = a;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a[i][j] = m[i][j];

    Polynomial p;
    p.coeffs.assign(n + 1, 0);
    p.coeffs[0] = 1;
    // M_1 = A, c_k = -tr(M_k)/k, M_{k+1} = A (M_k + c_k I)
    mk = a;
    Wide ck = 0;
    for (std::size_t k = 1; k <= n; ++k) {
        Wide tr = 0;
        for (std::size_t i = 0; i < n; ++i) tr += mk[i][i];
        ck = -tr / Wide(k);
        if (ck < std::numeric_limits<long long>::min() ||
            ck > std::numeric_limits<long long>::max())
            throw std::overflow_error("char_poly coefficient overflow");
        p.coeffs[k] = (long long)ck;
        if (k == n) break;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                tmp[i][j] = mk[i][j] + (i == j ? ck : 0);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                Wide acc = 0;
                for (std::size_t l = 0; l < n; ++l) acc += a[i][l] * tmp[l][j];
                mk[i][j] = acc;
            }
    }
    return p;
}

Polynomial char_poly(const QuotientMatrix& q) {
    std::size_t t = q.entries.size();
    if (t > 8) throw std::invalid_argument("char_poly(quotient) supports t <= 8");
    std::vector<std::vector<long long>> m(t, std::vector<long long>(t));
    for (std::size_t i = 0; i < t; ++i)
        for (std::size_t j = 0; j < t; ++j) {
            double e = q.entries[i][j];
            long long r = llround(e);
            if (std::abs(e - double(r)) > 1e-9)
                throw std::invalid_argument(
                    "char_poly requires integer quotient entries (non-equitable "
                    "partition?)");
            m[i][j] = r;
        }
    return char_poly(m);
}

double largest_real_root(const Polynomial& p, double lower_hint,
                         const Tolerance& tol) {
    if (p.degree() < 1) throw std::invalid_argument("constant polynomial has no root");
    long long maxc = 0;
    for (long long c : p.coeffs) maxc = std::max(maxc, std::llabs(c));
    double hi = 1.0 + double(maxc);
    if (hi <= lower_hint)
        throw std::runtime_error("largest_real_root: hint above Cauchy bound");

    // p -> +inf above its largest root (monic); walk down to the first
    // sign change.
    double step = std::min(0.1, (hi - lower_hint) / 4096.0);
    double a = std::numeric_limits<double>::quiet_NaN(), b = hi;
    for (double x = hi - step; x >= lower_hint - step / 2; x -= step) {
        double xc = std::max(x, lower_hint);
        if (p.eval(xc) < 0) {
            a = xc;
            break;
        }
        b = xc;
        if (xc == lower_hint) break;
    }
    if (std::isnan(a))
        throw std::runtime_error("largest_real_root: no sign change in [" +
                                 std::to_string(lower_hint) + ", " +
                                 std::to_string(hi) + "]");
    for (int it = 0; it < 200 && b - a > tol.cmp_tol * 1e-4; ++it) {
        double mid = 0.5 * (a + b);
        (p.eval(mid) < 0 ? a : b) = mid;
    }
    double x = 0.5 * (a + b);
    for (int it = 0; it < 50; ++it) {
        double d = p.eval_derivative(x);
        if (d == 0) break;
        double nx = x - p.eval(x) / d;
        if (nx < a || nx > b) break;
        if (std::abs(nx - x) <= 1e-15 * std::max(1.0, std::abs(nx))) {
            x = nx;
            break;
        }
        x = nx;
    }
    return x;
}

namespace {

void require_family_params(int n, int t, int min_n, const char* what) {
    if (t < 1) throw std::invalid_argument(std::string(what) + ": t must be >= 1");
    if (n % 2 != 0) throw std::invalid_argument(std::string(what) + ": n must be even");
    if (n < min_n)
        throw std::invalid_argument(std::string(what) + ": n must be >= " +
                                    std::to_string(min_n));
}

}  // namespace

Polynomial f_bstar_thm12(int n, int t) {
    require_family_params(n, t, 2 * t + 2, "f_bstar_thm12");
    long long N = n, T = t;
    return Polynomial{{1, T + 3 - N, 2 - N - T * T,
                       -2 * T * T * T + (N - 4) * T * T + (N - 2) * T}};
}

Polynomial phi_bstar_thm14(int n, int t) {
    require_family_params(n, t, 2 * t + 6, "phi_bstar_thm14");
    long long N = n, T = t;
    return Polynomial{{1, T + 3 - N, N - T * T - 4 * T - 6,
                       T * T * N + 3 * T * N + 2 * N - 2 * T * T * T - 8 * T * T -
                           14 * T - 8,
                       -2 * T * T * N + 4 * T * T * T + 8 * T * T}};
}

double g_eval(double x, int n, int s, int t) {
    double S = s, T = t, N = n;
    return x * x - (S + T) * x - 2 * S * S + (N - 2 * T - 4) * S - 2 * T * T +
           (N - 4) * T + N - 2;
}

double psi_eval(double x, int n, int s, int t) {
    double S = s, T = t, N = n;
    return x * x * x - (S + T + 4) * x * x +
           (S * N + T * N + 3 * N - 2 * S * S - (2 * T + 8) * S - 2 * T * T -
            8 * T - 14) *
               x +
           4 * S * S + (4 * T + 8 - 2 * N) * S - 2 * T * N + 4 * T * T + 8 * T;
}

double t_eval(int n, int t) {
    double N = n, T = t;
    return N * N * N - (6 * T + 14) * N * N + (5 * T * T + 52 * T + 60) * N -
           14 * T * T - 120 * T - 72;
}

}  // namespace skm
