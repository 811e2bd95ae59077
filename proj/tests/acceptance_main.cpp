// Acceptance gate: one criterion per number, one PASS/FAIL line each.
// Run with no arguments for the full battery, or pass criterion numbers.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "evencycle/bench.hpp"
#include "evencycle/capped_walks.hpp"
#include "evencycle/detector.hpp"
#include "evencycle/finder.hpp"
#include "evencycle/gadget.hpp"
#include "evencycle/generators.hpp"
#include "evencycle/graph.hpp"
#include "evencycle/oracle.hpp"
#include "evencycle/rng.hpp"
#include "evencycle/snorm.hpp"

using namespace evencycle;

namespace {

DetectorConfig exhaustive_cfg(int k) {
    DetectorConfig cfg;
    cfg.k = k;
    cfg.mode = DetectorMode::exhaustive;
    return cfg;
}

Graph petersen() {
    return Graph::from_edges(10, {{0, 1},
                                  {1, 2},
                                  {2, 3},
                                  {3, 4},
                                  {0, 4},
                                  {5, 7},
                                  {7, 9},
                                  {6, 9},
                                  {6, 8},
                                  {5, 8},
                                  {0, 5},
                                  {1, 6},
                                  {2, 7},
                                  {3, 8},
                                  {4, 9}});
}

long long max_edges(int n) { return static_cast<long long>(n) * (n - 1) / 2; }

// Shared corpus for the walk-count criteria: random, polarity, high-girth,
// gadgets, plus a few fixed shapes.
std::vector<Graph> walk_corpus() {
    std::vector<Graph> corpus;
    for (uint64_t s = 0; s < 10; ++s) {
        int n = 10 + static_cast<int>(s % 5);
        long long m = std::min<long long>(2 + static_cast<long long>(s) * 3, max_edges(n));
        corpus.push_back(gen_random(n, m, mix_seed(300, s)));
    }
    for (int q : {2, 3, 5, 7}) corpus.push_back(gen_c4_free_polarity(q));
    corpus.push_back(gen_high_girth(40, 8, 1));
    corpus.push_back(gen_high_girth(60, 8, 2));
    corpus.push_back(build_gadget(Graph::from_edges(3, {{0, 1}, {1, 2}, {0, 2}}), 3).graph);
    corpus.push_back(build_gadget(Graph::from_edges(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}}), 3).graph);
    corpus.push_back(build_gadget(gen_random(4, 6, 4), 5).graph);
    corpus.push_back(petersen());
    corpus.push_back(Graph::from_edges(2, {{0, 1}}));
    corpus.push_back(Graph::from_edges(6, {}));
    return corpus;
}

// ---- criterion 1 -----------------------------------------------------------
bool crit_oracle_equivalence(std::string& detail) {
    const double tiers[3] = {1.2, 2.0, 3.5};
    int runs = 0;
    for (int k = 2; k <= 3; ++k) {
        for (int t = 0; t < 3; ++t) {
            for (uint64_t s = 0; s < 200; ++s) {
                int n = 8 + static_cast<int>(s % 7);
                long long m = std::min<long long>(
                    static_cast<long long>(std::lround(tiers[t] * n)), max_edges(n));
                Graph g = gen_random(n, m, mix_seed(100 + 10 * k + t, s));
                FinderReport r = find_even_cycle(g, k, exhaustive_cfg(k));
                bool oracle = oracle_has_cycle(g, 2 * k).has_value();
                if (r.result.has_value() != oracle) {
                    detail = "finder/oracle mismatch at k=" + std::to_string(k) +
                             " tier=" + std::to_string(tiers[t]) + " seed=" + std::to_string(s);
                    return false;
                }
                if (r.result && !validate_cycle(g, *r.result, 2 * k)) {
                    detail = "invalid witness at k=" + std::to_string(k) +
                             " seed=" + std::to_string(s);
                    return false;
                }
                ++runs;
            }
        }
    }
    detail = std::to_string(runs) + " finder/oracle decisions agree, all witnesses valid";
    return true;
}

// ---- criterion 2 -----------------------------------------------------------
bool crit_detector_completeness(std::string& detail) {
    int hits = 0;
    for (uint64_t s = 0; s < 500; ++s) {
        PlantedInstance inst = gen_planted_cycle(20, 40, 3, mix_seed(200, s));
        DetectorConfig cfg;
        cfg.k = 3;
        cfg.delta = 1e-6;
        cfg.rng_seed = mix_seed(201, s);
        int u = inst.cycle.vertices[0];
        auto c = detect_cycle_through(inst.graph, u, cfg);
        if (!c || !validate_cycle(inst.graph, *c, 6)) {
            detail = "randomized detector missed planted C_6 at seed " + std::to_string(s);
            return false;
        }
        ++hits;
    }
    detail = "500/500 planted C_6 instances detected (delta=1e-6)";
    return true;
}

// ---- criterion 3 -----------------------------------------------------------
bool crit_walk_lower_bound(std::string& detail) {
    std::vector<Graph> corpus = walk_corpus();
    int checks = 0;
    for (size_t gi = 0; gi < corpus.size(); ++gi) {
        const Graph& g = corpus[gi];
        if (g.n == 0) continue;
        DegreeOrder orders[3] = {degree_order(g), id_order(g),
                                 random_order(g, mix_seed(310, gi))};
        for (const DegreeOrder& ord : orders) {
            for (int k = 2; k <= 4; ++k) {
                CappedWalkCensus census = count_capped_walks(g, ord, k);
                LowerBoundCheck lb = check_lower_bound(g, census);
                if (!lb.holds) {
                    detail = "lower bound failed on corpus graph " + std::to_string(gi) +
                             " k=" + std::to_string(k);
                    return false;
                }
                ++checks;
            }
        }
    }
    detail = std::to_string(checks) + " exact census lower bounds hold (3 orderings, k=2..4)";
    return true;
}

// ---- criterion 4 -----------------------------------------------------------
bool crit_walk_set_bound(std::string& detail) {
    std::vector<Graph> corpus = walk_corpus();
    int checks = 0;
    for (size_t gi = 0; gi < corpus.size(); ++gi) {
        const Graph& g = corpus[gi];
        if (g.n == 0) continue;
        Rng rng(mix_seed(400, gi));
        for (int rep = 0; rep < 200; ++rep) {
            std::vector<int> S;
            for (int v = 0; v < g.n; ++v)
                if (rng.below(2)) S.push_back(v);
            int k = 1 + rep % 3;
            SlackCheck c = check_kwalks_set(g, S, k);
            if (!c.holds) {
                detail = "set bound failed on corpus graph " + std::to_string(gi) +
                         " rep=" + std::to_string(rep) + " k=" + std::to_string(k);
                return false;
            }
            ++checks;
        }
    }
    detail = std::to_string(checks) + " seeded set bounds hold (k in 1..3)";
    return true;
}

// ---- criterion 5 -----------------------------------------------------------
bool crit_norm_axioms(std::string& detail) {
    Rng rng(500);
    int trials = 10000;
    for (int t = 0; t < trials; ++t) {
        int n = 1 + rng.below_int(48);
        std::vector<double> u(n), v(n);
        int family = t % 3;
        for (int i = 0; i < n; ++i) {
            switch (family) {
                case 0:
                    u[i] = rng.gaussian();
                    v[i] = rng.gaussian();
                    break;
                case 1: {  // heavy-tailed
                    double a = rng.uniform() + 1e-3, b = rng.uniform() + 1e-3;
                    u[i] = (rng.below(2) ? 1 : -1) * std::pow(a, -1.5);
                    v[i] = (rng.below(2) ? 1 : -1) * std::pow(b, -1.5);
                    break;
                }
                default:  // sparse
                    u[i] = rng.uniform() < 0.25 ? rng.gaussian() : 0.0;
                    v[i] = rng.uniform() < 0.25 ? rng.gaussian() : 0.0;
            }
        }
        double c = rng.uniform(-4.0, 4.0);
        if (!check_snorm_axioms(u, v, c)) {
            detail = "axiom violation at trial " + std::to_string(t);
            return false;
        }

        // indicator identity on a random subset
        std::vector<double> ind(n, 0.0);
        int a = 0;
        for (int i = 0; i < n; ++i)
            if (rng.below(2)) {
                ind[i] = 1.0;
                ++a;
            }
        double want = std::sqrt(static_cast<double>(a));
        double got = snorm(ind);
        if (std::abs(got - want) > 1e-9 * std::max(1.0, want)) {
            detail = "indicator identity violated at trial " + std::to_string(t);
            return false;
        }
    }
    detail = std::to_string(trials) + " axiom + indicator trials within 1e-9";
    return true;
}

// ---- criterion 6 -----------------------------------------------------------
bool crit_zero_one_matrix_norm(std::string& detail) {
    double worst = 0.0;
    for (uint64_t s = 0; s < 50; ++s) {
        int n = 2 + static_cast<int>(s % 9);
        double p = (s % 3 == 0) ? 0.3 : (s % 3 == 1 ? 0.5 : 0.8);
        Rng rng(mix_seed(600, s));
        ZeroOneMatrix a(n, std::vector<int>(n, 0));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) a[i][j] = rng.uniform() < p ? 1 : 0;
        ZeroOneNormReport r = check_zero_one_norm_bound(a, 10000, mix_seed(601, s));
        if (!r.holds) {
            detail = "sampled ratio exceeded 16C at seed " + std::to_string(s);
            return false;
        }
        if (r.c_zero_one > 0.0)
            worst = std::max(worst, r.max_sampled_ratio / r.c_zero_one);
    }
    std::ostringstream os;
    os << "50 matrices x 10000 samples within 16C (worst ratio/C = " << worst << ")";
    detail = os.str();
    return true;
}

// ---- criterion 7 -----------------------------------------------------------
bool crit_edge_density_bound(std::string& detail) {
    struct Entry {
        Graph g;
        bool girth8;
    };
    std::vector<Entry> corpus;
    for (int q : {2, 3, 5, 7, 11, 13}) corpus.push_back({gen_c4_free_polarity(q), false});
    corpus.push_back({petersen(), false});
    corpus.push_back({gen_high_girth(50, 8, 7), true});
    corpus.push_back({gen_high_girth(80, 8, 8), true});

    int checks = 0;
    for (size_t gi = 0; gi < corpus.size(); ++gi) {
        const Graph& g = corpus[gi].g;
        // the C_{2k}-freeness precondition is verified, not assumed
        if (oracle_has_cycle(g, 4).has_value()) {
            detail = "corpus graph " + std::to_string(gi) + " is not C_4-free";
            return false;
        }
        std::vector<int> ks = {2};
        if (corpus[gi].girth8) {
            if (oracle_has_cycle(g, 6).has_value()) {
                detail = "girth-8 corpus graph " + std::to_string(gi) + " has a C_6";
                return false;
            }
            ks.push_back(3);
        }
        std::vector<int> all(g.n);
        for (int v = 0; v < g.n; ++v) all[v] = v;
        Rng rng(mix_seed(700, gi));
        for (int k : ks) {
            SlackCheck whole = check_modified_bs(g, all, all, k);
            if (!whole.holds) {
                detail = "A=B=V bound failed on graph " + std::to_string(gi) +
                         " k=" + std::to_string(k);
                return false;
            }
            ++checks;
            for (int rep = 0; rep < 200; ++rep) {
                std::vector<int> A, B;
                for (int v = 0; v < g.n; ++v) {
                    if (rng.below(2)) A.push_back(v);
                    if (rng.below(2)) B.push_back(v);
                }
                SlackCheck c = check_modified_bs(g, A, B, k);
                if (!c.holds) {
                    detail = "pair bound failed on graph " + std::to_string(gi) +
                             " rep=" + std::to_string(rep) + " k=" + std::to_string(k);
                    return false;
                }
                ++checks;
            }
        }
    }
    detail = std::to_string(checks) +
             " crossing-edge bounds hold on oracle-verified C_4-free corpus";
    return true;
}

// ---- criterion 8 -----------------------------------------------------------
bool crit_gadget_reduction(std::string& detail) {
    int verified = 0, mapped = 0;
    for (uint64_t s = 0; s < 100; ++s) {
        int n = 4 + static_cast<int>(s % 5);
        long long m = static_cast<long long>(s * 5 % (max_edges(n) + 1));
        Graph g = gen_random(n, m, mix_seed(800, s));
        for (int k : {3, 5}) {
            if (!verify_reduction(g, k)) {
                detail = "reduction iff failed at seed " + std::to_string(s) +
                         " k=" + std::to_string(k);
                return false;
            }
            ++verified;

            GadgetGraph gg = build_gadget(g, k);
            long long x = gg.x, chain = gg.chain;
            long long want_n = 3LL * n + n * (chain - 1) + 6LL * m * (x - 1);
            long long want_m = 6LL * m * x + n * (chain - 1);
            if (gg.graph.n != want_n || gg.graph.m != want_m) {
                detail = "size formula mismatch at seed " + std::to_string(s) +
                         " k=" + std::to_string(k);
                return false;
            }

            if (find_triangle(g)) {
                auto c = oracle_has_cycle(gg.graph, 2 * k);
                if (!c) {
                    detail = "gadget lost a triangle at seed " + std::to_string(s);
                    return false;
                }
                auto tri = map_witness_to_triangle(gg, *c);
                if (!g.has_edge(tri[0], tri[1]) || !g.has_edge(tri[1], tri[2]) ||
                    !g.has_edge(tri[0], tri[2])) {
                    detail = "witness back-map is not a triangle at seed " +
                             std::to_string(s);
                    return false;
                }
                ++mapped;
            }
        }
    }
    detail = std::to_string(verified) + " reductions verified, " + std::to_string(mapped) +
             " witnesses back-mapped, size formulas exact";
    return true;
}

// ---- criterion 9 -----------------------------------------------------------
double family_slope(const std::vector<Graph>& family, int k) {
    std::vector<double> xs, ys;
    for (const Graph& g : family) {
        FinderReport r = find_even_cycle(g, k, exhaustive_cfg(k));
        if (g.m > 0 && r.edges_touched > 0) {
            xs.push_back(std::log(static_cast<double>(g.m)));
            ys.push_back(std::log(static_cast<double>(r.edges_touched)));
        }
    }
    return fit_log_slope(xs, ys);
}

bool crit_work_scaling(std::string& detail) {
    std::vector<Graph> polarity;
    for (int q : {7, 11, 13, 17, 19, 23}) polarity.push_back(gen_c4_free_polarity(q));
    double slope2 = family_slope(polarity, 2);
    double cap2 = 4.0 / 3.0 + 0.25;

    std::vector<Graph> girth8;
    int idx = 0;
    for (int n : {60, 90, 130, 190, 280})
        girth8.push_back(gen_high_girth(n, 8, mix_seed(900, idx++)));
    double slope3 = family_slope(girth8, 3);
    double cap3 = 3.0 / 2.0 + 0.25;

    std::ostringstream os;
    os << "polarity k=2 slope " << slope2 << " (cap " << cap2 << "), girth-8 k=3 slope "
       << slope3 << " (cap " << cap3 << ")";
    detail = os.str();
    return slope2 <= cap2 && slope3 <= cap3;
}

// ---- criterion 10 ----------------------------------------------------------
bool crit_walk_upper_diagnostic(std::string& detail) {
    auto normalized = [](const Graph& g, int k) {
        CappedWalkCensus census = count_capped_walks(g, degree_order(g), k);
        return check_upper_bound_diagnostic(g, census, k).normalized;
    };

    // two largest members of each C_{2k}-free family
    double p1 = normalized(gen_c4_free_polarity(19), 2);
    double p2 = normalized(gen_c4_free_polarity(23), 2);
    double h1 = normalized(gen_high_girth(190, 8, mix_seed(900, 3)), 3);
    double h2 = normalized(gen_high_girth(280, 8, mix_seed(900, 4)), 3);

    std::ostringstream os;
    os << "polarity k=2: " << p1 << " -> " << p2 << "; girth-8 k=3: " << h1 << " -> "
       << h2;
    detail = os.str();
    return p2 <= 2.0 * p1 + 1e-12 && h2 <= 2.0 * h1 + 1e-12;
}

// ---- criterion 11 ----------------------------------------------------------
bool crit_dense_random_hits(std::string& detail) {
    const int n = 500;
    const long long m = static_cast<long long>(
        std::ceil(4.0 * std::pow(static_cast<double>(n), 1.5)));
    for (uint64_t s = 0; s < 50; ++s) {
        Graph g = gen_random(n, m, mix_seed(1100, s));
        FinderReport r = find_even_cycle(g, 2, exhaustive_cfg(2));
        if (!r.result || !validate_cycle(g, *r.result, 4)) {
            detail = "missed a C_4 in dense random graph, seed " + std::to_string(s);
            return false;
        }
    }
    detail = "50/50 dense instances (n=500, m=" + std::to_string(m) + ") yield a C_4";
    return true;
}

struct Criterion {
    int num;
    const char* name;
    bool (*fn)(std::string&);
};

const Criterion kCriteria[] = {
    {1, "oracle_equivalence", crit_oracle_equivalence},
    {2, "detector_completeness", crit_detector_completeness},
    {3, "walk_lower_bound", crit_walk_lower_bound},
    {4, "walk_set_bound", crit_walk_set_bound},
    {5, "norm_axioms", crit_norm_axioms},
    {6, "zero_one_matrix_norm", crit_zero_one_matrix_norm},
    {7, "edge_density_bound", crit_edge_density_bound},
    {8, "gadget_reduction", crit_gadget_reduction},
    {9, "work_scaling", crit_work_scaling},
    {10, "walk_upper_diagnostic", crit_walk_upper_diagnostic},
    {11, "dense_random_hits", crit_dense_random_hits},
};

}  // namespace

int main(int argc, char** argv) {
    std::vector<int> selected;
    for (int i = 1; i < argc; ++i) {
        try {
            selected.push_back(std::stoi(argv[i]));
        } catch (const std::exception&) {
            std::cerr << "usage: acceptance [criterion numbers]\n";
            return 2;
        }
    }
    if (selected.empty())
        for (const auto& c : kCriteria) selected.push_back(c.num);

    bool all_ok = true;
    for (int num : selected) {
        const Criterion* crit = nullptr;
        for (const auto& c : kCriteria)
            if (c.num == num) crit = &c;
        if (!crit) {
            std::cerr << "unknown criterion " << num << "\n";
            return 2;
        }
        std::string detail;
        bool ok = false;
        try {
            ok = crit->fn(detail);
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        std::cout << (ok ? "PASS" : "FAIL") << " " << crit->num << " " << crit->name
                  << ": " << detail << "\n";
        all_ok = all_ok && ok;
    }
    return all_ok ? 0 : 1;
}
