#include "evencycle/snorm.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <stdexcept>

#include "evencycle/rng.hpp"

namespace evencycle {

namespace {

constexpr double kRelTol = 1e-9;
constexpr double kAbsFloor = 1e-12;

bool leq_tol(double lhs, double rhs) {
    return lhs <= rhs + kRelTol * std::abs(rhs) + kAbsFloor;
}

bool close_rel(double a, double b, double rel) {
    return std::abs(a - b) <= rel * std::max(std::abs(a), std::abs(b)) + kAbsFloor;
}

std::vector<double> sorted_abs_desc(const std::vector<double>& v) {
    std::vector<double> a(v.size());
    for (size_t i = 0; i < v.size(); ++i) {
        if (!std::isfinite(v[i])) throw std::invalid_argument("non-finite vector entry");
        a[i] = std::abs(v[i]);
    }
    std::sort(a.begin(), a.end(), std::greater<double>());
    return a;
}

double fill_slack(SlackCheck& c) {
    if (c.lhs == 0.0)
        c.slack = c.rhs == 0.0 ? 1.0 : std::numeric_limits<double>::infinity();
    else
        c.slack = c.rhs / c.lhs;
    return c.slack;
}

}  // namespace

double snorm(const std::vector<double>& v) {
    auto a = sorted_abs_desc(v);
    double sum = 0.0;
    for (size_t j = 1; j <= a.size(); ++j) {
        double dj = static_cast<double>(j);
        double coef = 1.0 / (std::sqrt(dj) + std::sqrt(dj - 1.0));  // sqrt(j)-sqrt(j-1)
        sum += coef * a[j - 1];
    }
    return sum;
}

double snorm_alt(const std::vector<double>& v) {
    auto a = sorted_abs_desc(v);
    double sum = 0.0;
    for (size_t j = 1; j <= a.size(); ++j) {
        double next = j < a.size() ? a[j] : 0.0;
        sum += std::sqrt(static_cast<double>(j)) * (a[j - 1] - next);
    }
    return sum;
}

double snorm_by_integration(const std::vector<double>& v, int grid_points) {
    if (grid_points < 1) throw std::invalid_argument("grid_points must be positive");
    auto desc = sorted_abs_desc(v);
    if (desc.empty() || desc.front() == 0.0) return 0.0;
    double hi = desc.front();
    std::vector<double> asc(desc.rbegin(), desc.rend());

    std::vector<double> cuts;
    cuts.reserve(static_cast<size_t>(grid_points) + asc.size() + 2);
    for (int j = 0; j <= grid_points; ++j)
        cuts.push_back(hi * static_cast<double>(j) / grid_points);
    for (double b : asc) cuts.push_back(b);
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

    double integral = 0.0;
    for (size_t c = 0; c + 1 < cuts.size(); ++c) {
        double lo_x = cuts[c], hi_x = cuts[c + 1];
        double mid = 0.5 * (lo_x + hi_x);
        // #{i : |v_i| >= mid} via the ascending sorted values
        auto it = std::lower_bound(asc.begin(), asc.end(), mid);
        auto count = static_cast<double>(asc.end() - it);
        integral += (hi_x - lo_x) * std::sqrt(count);
    }
    return integral;
}

bool check_snorm_axioms(const std::vector<double>& u, const std::vector<double>& v,
                        double c) {
    if (u.size() != v.size()) throw std::invalid_argument("length mismatch");
    std::vector<double> sum_uv(u.size()), cu(u.size());
    for (size_t i = 0; i < u.size(); ++i) {
        sum_uv[i] = u[i] + v[i];
        cu[i] = c * u[i];
    }
    double nu = snorm(u), nv = snorm(v);

    bool triangle = leq_tol(snorm(sum_uv), nu + nv);
    bool homogeneous = close_rel(snorm(cu), std::abs(c) * nu, kRelTol);

    // the closed form is a nonnegative combination with positive weights, so
    // exact-zero comparison is sound
    bool u_is_zero = std::all_of(u.begin(), u.end(), [](double x) { return x == 0.0; });
    bool definite = (nu == 0.0) == u_is_zero;

    return triangle && homogeneous && definite;
}

SlackCheck check_kwalks_set(const Graph& g, const std::vector<int>& S, int k) {
    if (k < 0) throw std::invalid_argument("k must be nonnegative");
    std::vector<char> seen(g.n, 0);
    for (int v : S) {
        if (v < 0 || v >= g.n) throw std::invalid_argument("set member out of range");
        if (seen[v]) throw std::invalid_argument("duplicate set member");
        seen[v] = 1;
    }
    SlackCheck out;
    WalkCount walks = oracle_count_k_walks(g, S, k);
    bool loss_lhs = false;
    out.lhs = to_double_checked(walks, loss_lhs);

    auto counts = walk_count_vector(g, k);
    std::vector<double> entries(counts.size());
    bool loss_rhs = false;
    for (size_t i = 0; i < counts.size(); ++i) {
        bool loss = false;
        entries[i] = to_double_checked(counts[i], loss);
        loss_rhs = loss_rhs || loss;
    }
    out.rhs = std::sqrt(static_cast<double>(S.size())) * snorm(entries);
    out.precision_loss = loss_lhs || loss_rhs;
    out.holds = leq_tol(out.lhs, out.rhs);
    fill_slack(out);
    return out;
}

ZeroOneMatrix adjacency_matrix(const Graph& g) {
    ZeroOneMatrix a(g.n, std::vector<int>(g.n, 0));
    for (auto [u, v] : g.edges) {
        a[u][v] = 1;
        a[v][u] = 1;
    }
    return a;
}

namespace {

std::vector<double> sample_vector(Rng& rng, int n, int family) {
    std::vector<double> v(n, 0.0);
    bool nonzero = false;
    for (int i = 0; i < n; ++i) {
        switch (family) {
            case 0:  // mixed sign
                v[i] = rng.gaussian();
                break;
            case 1: {  // heavy tail, random sign
                double u = rng.uniform();
                while (u == 0.0) u = rng.uniform();
                v[i] = (rng.below(2) ? 1.0 : -1.0) * std::pow(u, -1.5);
                break;
            }
            default:  // sparse
                if (rng.uniform() < 0.3) v[i] = rng.gaussian();
                break;
        }
        nonzero = nonzero || v[i] != 0.0;
    }
    if (!nonzero) v[rng.below_int(n)] = 1.0;
    return v;
}

}  // namespace

ZeroOneNormReport check_zero_one_norm_bound(const ZeroOneMatrix& a, int samples,
                                            uint64_t seed) {
    const int n = static_cast<int>(a.size());
    if (n < 1) throw std::invalid_argument("matrix must be nonempty");
    if (n > 20) throw std::invalid_argument("exhaustive 0/1 sup needs n <= 20");
    for (const auto& row : a) {
        if (static_cast<int>(row.size()) != n)
            throw std::invalid_argument("matrix must be square");
        for (int x : row)
            if (x != 0 && x != 1) throw std::invalid_argument("entries must be 0/1");
    }

    std::vector<uint32_t> row_mask(n, 0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (a[i][j]) row_mask[i] |= 1u << j;

    ZeroOneNormReport report;
    std::vector<double> image(n);
    for (uint32_t mask = 1; mask < (1u << n); ++mask) {
        for (int i = 0; i < n; ++i)
            image[i] = static_cast<double>(__builtin_popcount(row_mask[i] & mask));
        double ratio = snorm(image) / std::sqrt(static_cast<double>(__builtin_popcount(mask)));
        report.c_zero_one = std::max(report.c_zero_one, ratio);
    }

    Rng base(seed);
    for (int t = 0; t < samples; ++t) {
        Rng rng = base.split(static_cast<uint64_t>(t));
        auto v = sample_vector(rng, n, t % 3);
        std::vector<double> av(n, 0.0);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (a[i][j]) av[i] += v[j];
        double nv = snorm(v);
        double ratio = snorm(av) / nv;
        report.max_sampled_ratio = std::max(report.max_sampled_ratio, ratio);
        if (!leq_tol(snorm(av), 16.0 * report.c_zero_one * nv)) report.holds = false;
        ++report.samples_run;
    }
    return report;
}

SlackCheck check_modified_bs(const Graph& g, const std::vector<int>& A,
                             const std::vector<int>& B, int k) {
    if (k < 2) throw std::invalid_argument("k must be at least 2");
    std::vector<char> in_a(g.n, 0), in_b(g.n, 0);
    for (int v : A) {
        if (v < 0 || v >= g.n) throw std::invalid_argument("A member out of range");
        if (in_a[v]) throw std::invalid_argument("duplicate A member");
        in_a[v] = 1;
    }
    for (int v : B) {
        if (v < 0 || v >= g.n) throw std::invalid_argument("B member out of range");
        if (in_b[v]) throw std::invalid_argument("duplicate B member");
        in_b[v] = 1;
    }
    long long crossing = 0;
    for (auto [u, v] : g.edges)
        if ((in_a[u] && in_b[v]) || (in_a[v] && in_b[u])) ++crossing;

    SlackCheck out;
    out.lhs = static_cast<double>(crossing);
    double sa = static_cast<double>(A.size());
    double sb = static_cast<double>(B.size());
    double geo = std::pow(std::sqrt(sa * sb), 1.0 + 1.0 / k);
    out.rhs = 100.0 * k * (geo + sa + sb);
    out.holds = leq_tol(out.lhs, out.rhs);
    fill_slack(out);
    return out;
}

MatrixSnormDiagnostic estimate_matrix_snorm_diagnostic(const Graph& g, int k,
                                                       int samples, uint64_t seed) {
    if (k < 2) throw std::invalid_argument("k must be at least 2");
    MatrixSnormDiagnostic report;
    if (g.n == 0 || g.m == 0) return report;
    double scale = std::pow(static_cast<double>(g.m), 1.0 / (k + 1));
    Rng base(seed);
    std::vector<char> in_set(g.n);
    std::vector<double> image(g.n);
    for (int t = 0; t < samples; ++t) {
        Rng rng = base.split(static_cast<uint64_t>(t));
        int size = 0;
        for (int v = 0; v < g.n; ++v) {
            in_set[v] = rng.below(2) ? 1 : 0;
            size += in_set[v];
        }
        if (size == 0) {
            in_set[rng.below_int(g.n)] = 1;
            size = 1;
        }
        for (int v = 0; v < g.n; ++v) {
            int hits = 0;
            for (int w : g.adj[v]) hits += in_set[w];
            image[v] = static_cast<double>(hits);
        }
        double ratio = snorm(image) / (std::sqrt(static_cast<double>(size)) * scale);
        report.max_ratio = std::max(report.max_ratio, ratio);
        ++report.samples_run;
    }
    return report;
}

}  // namespace evencycle
