#include "strongcolor/concentration.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <thread>

#include "strongcolor/rng.hpp"

namespace strongcolor {

namespace {

// Splits [0, total) into contiguous chunks, one worker thread per chunk.
// fn(lo, hi) must only touch per-index state so chunk boundaries never
// change results, only wall time.
template <typename Fn>
void run_chunked(long long total, int threads, const Fn& fn) {
    if (total <= 0) return;
    long long use = std::max(1, threads);
    use = std::min(use, total);
    if (use == 1) {
        fn(0, total);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(use));
    long long base = total / use;
    long long rem = total % use;
    long long begin = 0;
    for (long long i = 0; i < use; ++i) {
        long long end = begin + base + (i < rem ? 1 : 0);
        pool.emplace_back([&fn, begin, end] { fn(begin, end); });
        begin = end;
    }
    for (auto& th : pool) th.join();
}

void check_colors(int colors, const char* who) {
    if (colors < 1)
        throw std::invalid_argument(std::string(who) + ": palette size must be positive");
}

void check_vertex(const Graph& g, Vertex v, const char* who) {
    if (v < 0 || v >= g.vertex_count())
        throw std::invalid_argument(std::string(who) + ": vertex out of range");
}

void check_trials(long long trials, const char* who) {
    if (trials < 1)
        throw std::invalid_argument(std::string(who) + ": need at least one trial");
}

struct MeanVar {
    double mean = 0;
    double var = 0;
};

// Two-pass sample moments, n-1 divisor; summation order is fixed by index.
template <typename T>
MeanVar sample_moments(const std::vector<T>& xs) {
    MeanVar mv;
    if (xs.empty()) return mv;
    long double sum = 0;
    for (const T& x : xs) sum += static_cast<long double>(x);
    mv.mean = static_cast<double>(sum / static_cast<long double>(xs.size()));
    if (xs.size() < 2) return mv;
    long double acc = 0;
    for (const T& x : xs) {
        long double d = static_cast<long double>(x) - static_cast<long double>(mv.mean);
        acc += d * d;
    }
    mv.var = static_cast<double>(acc / static_cast<long double>(xs.size() - 1));
    return mv;
}

} // namespace

double pair_retention_prob(int colors, int r, int k) {
    check_colors(colors, "pair_retention_prob");
    if (r < 0 || k < 0 || k > r)
        throw std::invalid_argument("pair_retention_prob: need 0 <= k <= r");
    double c = static_cast<double>(colors);
    return (1.0 / c) * std::pow(1.0 - 1.0 / (2.0 * c), 2.0 * (r - k)) *
           std::pow(1.0 - 3.0 / (4.0 * c), static_cast<double>(k));
}

double triple_retention_prob(int colors, long long k1, long long k2, long long k3) {
    check_colors(colors, "triple_retention_prob");
    if (k1 < 0 || k2 < 0 || k3 < 0)
        throw std::invalid_argument("triple_retention_prob: negative overlap count");
    double c = static_cast<double>(colors);
    return (1.0 / (c * c)) * std::pow(1.0 - 1.0 / (2.0 * c), static_cast<double>(k1)) *
           std::pow(1.0 - 3.0 / (4.0 * c), static_cast<double>(k2)) *
           std::pow(1.0 - 7.0 / (8.0 * c), static_cast<double>(k3));
}

namespace {

void check_gamma_delta(double gamma, double delta, const char* who) {
    if (!(gamma >= 0.0) || !(gamma < 1.0))
        throw std::invalid_argument(std::string(who) + ": gamma must lie in [0, 1)");
    if (!(delta > 0.0) || !(delta <= 1.0))
        throw std::invalid_argument(std::string(who) + ": delta must lie in (0, 1]");
}

} // namespace

PtBounds analytic_pt_bounds(double delta, double gamma, double r) {
    check_gamma_delta(gamma, delta, "analytic_pt_bounds");
    if (!(r > 0)) throw std::invalid_argument("analytic_pt_bounds: r must be positive");
    double one = 1.0 - gamma;
    PtBounds b;
    b.pu_lower = delta * r / (2.0 * one) * std::exp(-1.0 / one);
    b.tu_upper = std::pow(delta, 1.5) * r / (6.0 * one * one) * std::exp(-7.0 / (8.0 * one));
    return b;
}

double gamma_condition_rhs(double gamma, double delta) {
    check_gamma_delta(gamma, delta, "gamma_condition_rhs");
    PtBounds b = analytic_pt_bounds(delta, gamma, 1.0);
    return b.pu_lower - b.tu_upper;
}

bool gamma_condition_holds(double gamma, double delta) {
    return gamma < gamma_condition_rhs(gamma, delta);
}

double max_gamma(double delta) {
    if (!(delta > 0.0) || !(delta <= 1.0))
        throw std::invalid_argument("max_gamma: delta must lie in (0, 1]");
    auto margin = [delta](double gamma) { return gamma_condition_rhs(gamma, delta) - gamma; };
    double lo = 0.0;
    double hi = 1.0 - 1e-12;
    if (!(margin(lo) > 0.0))
        throw std::runtime_error("max_gamma: condition already fails at gamma = 0");
    // margin(hi) < 0 since the rhs decays to zero while gamma stays near 1.
    while (hi - lo > 1e-9) {
        double mid = 0.5 * (lo + hi);
        if (margin(mid) > 0.0)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

double approx_gamma(double delta) {
    if (!(delta > 0.0) || !(delta <= 1.0))
        throw std::invalid_argument("approx_gamma: delta must lie in (0, 1]");
    return 0.1827 * delta - 0.0778 * std::pow(delta, 1.5);
}

bool lll_check(double p, double d) {
    if (!(p >= 0.0) || !(p <= 1.0))
        throw std::invalid_argument("lll_check: probability out of range");
    if (!(d >= 0.0)) throw std::invalid_argument("lll_check: dependency degree must be >= 0");
    return 4.0 * p * d <= 1.0;
}

TailBound talagrand_tail_bound(double t, double c, double s, double p_xi) {
    if (!(t >= 0.0)) throw std::invalid_argument("talagrand_tail_bound: t must be >= 0");
    if (!(c >= 1.0)) throw std::invalid_argument("talagrand_tail_bound: c must be >= 1");
    if (!(s >= 1.0)) throw std::invalid_argument("talagrand_tail_bound: s must be >= 1");
    if (!(p_xi >= 0.0) || !(p_xi <= 1.0))
        throw std::invalid_argument("talagrand_tail_bound: p_xi out of range");
    TailBound tb;
    tb.bound = std::min(1.0, 4.0 * std::exp(-t * t / (16.0 * c * c * s)) + 4.0 * p_xi);
    tb.regime_ok = t > 50.0 * c * std::sqrt(s);
    return tb;
}

BoundInputs standard_inputs(double r, double m_vertices, double t) {
    if (!(r > 1.0)) throw std::invalid_argument("standard_inputs: r must exceed 1");
    if (!(m_vertices > 1.0))
        throw std::invalid_argument("standard_inputs: m_vertices must exceed 1");
    BoundInputs in;
    in.r = r;
    in.t = t;
    in.s = 3.0 * r;
    double lr = std::log(r);
    in.c = lr * lr;
    in.m_vertices = m_vertices;
    in.p_xi = 1.0 / (m_vertices * m_vertices);
    return in;
}

TailBound talagrand_tail_bound(const BoundInputs& in) {
    return talagrand_tail_bound(in.t, in.c, in.s, in.p_xi);
}

TrialReport run_trials(const Graph& g, Vertex u, int colors, long long trials,
                       std::uint64_t master_seed, double r_for_xi, int threads) {
    check_vertex(g, u, "run_trials");
    check_colors(colors, "run_trials");
    check_trials(trials, "run_trials");
    if (!(r_for_xi > 0)) throw std::invalid_argument("run_trials: r_for_xi must be positive");

    std::vector<long long> pu(static_cast<std::size_t>(trials));
    std::vector<long long> tu(static_cast<std::size_t>(trials));
    std::vector<int> saved(static_cast<std::size_t>(trials));
    std::vector<std::uint8_t> exceptional(static_cast<std::size_t>(trials));
    const double xi_cap = std::log(r_for_xi);
    const auto& nu = g.neighbors(u);

    run_chunked(trials, threads, [&](long long lo, long long hi) {
        std::vector<int> color_count(static_cast<std::size_t>(colors) + 1, 0);
        for (long long i = lo; i < hi; ++i) {
            Rng rng(derive_seed(master_seed, static_cast<std::uint64_t>(i)));
            ColoringState st = assign_random(g, colors, rng);
            bool exc = false;
            for (Vertex v : nu) ++color_count[static_cast<std::size_t>(st.colors[v])];
            for (Vertex v : nu) {
                int& cnt = color_count[static_cast<std::size_t>(st.colors[v])];
                if (cnt > xi_cap) exc = true;
                cnt = 0;
            }
            resolve_conflicts(st);
            SavedReport rep = saved_report(st, u);
            pu[static_cast<std::size_t>(i)] = rep.pu;
            tu[static_cast<std::size_t>(i)] = rep.tu;
            saved[static_cast<std::size_t>(i)] = rep.saved;
            exceptional[static_cast<std::size_t>(i)] = exc ? 1 : 0;
        }
    });

    TrialReport report;
    report.trials = trials;
    MeanVar mp = sample_moments(pu);
    MeanVar mt = sample_moments(tu);
    MeanVar ms = sample_moments(saved);
    report.mean_pu = mp.mean;
    report.var_pu = mp.var;
    report.mean_tu = mt.mean;
    report.var_tu = mt.var;
    report.mean_saved = ms.mean;

    long long exc_total = 0;
    for (std::uint8_t e : exceptional) exc_total += e;
    report.exceptional_freq =
        static_cast<double>(exc_total) / static_cast<double>(trials);

    std::vector<double> thresholds = {0, 1, 2, 4, 8, 16, 32, 64};
    double lr = std::log(r_for_xi);
    thresholds.push_back(std::sqrt(r_for_xi) * lr * lr * lr);
    std::sort(thresholds.begin(), thresholds.end());
    thresholds.erase(std::unique(thresholds.begin(), thresholds.end()), thresholds.end());
    for (double t : thresholds) {
        long long cnt = 0;
        for (long long x : pu)
            if (std::abs(static_cast<double>(x) - report.mean_pu) >= t) ++cnt;
        report.tail_freq.emplace_back(t, static_cast<double>(cnt) / static_cast<double>(trials));
    }
    return report;
}

long long count_triangles(const Graph& g) {
    long long total = 0;
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        auto [a, b] = g.edge(e);
        const auto& na = g.neighbors(a);
        const auto& nb = g.neighbors(b);
        std::size_t i = 0, j = 0;
        while (i < na.size() && j < nb.size()) {
            if (na[i] < nb[j]) {
                ++i;
            } else if (na[i] > nb[j]) {
                ++j;
            } else {
                if (na[i] > b) ++total; // count each triangle at its lowest edge only
                ++i;
                ++j;
            }
        }
    }
    return total;
}

TriangleExperiment triangle_experiment(int n, double p, int trials,
                                       std::uint64_t master_seed, int threads) {
    if (n < 0) throw std::invalid_argument("triangle_experiment: negative vertex count");
    if (!(p >= 0.0) || !(p <= 1.0))
        throw std::invalid_argument("triangle_experiment: p out of range");
    check_trials(trials, "triangle_experiment");

    std::vector<long long> counts(static_cast<std::size_t>(trials));
    run_chunked(trials, threads, [&](long long lo, long long hi) {
        for (long long i = lo; i < hi; ++i) {
            Graph g = make_gnp(n, p, derive_seed(master_seed, static_cast<std::uint64_t>(i)));
            counts[static_cast<std::size_t>(i)] = count_triangles(g);
        }
    });

    TriangleExperiment ex;
    MeanVar mv = sample_moments(counts);
    ex.mean = mv.mean;
    ex.variance = mv.var;
    double nn = static_cast<double>(n);
    ex.expected = nn * (nn - 1.0) * (nn - 2.0) / 6.0 * p * p * p;
    return ex;
}

double median_of_samples(std::vector<double> samples) {
    if (samples.empty()) throw std::invalid_argument("median_of_samples: empty sample");
    std::sort(samples.begin(), samples.end());
    return samples[samples.size() / 2];
}

PairGadget pair_gadget(int r, int k) {
    if (r < 0 || k < 0 || k > r) throw std::invalid_argument("pair_gadget: need 0 <= k <= r");
    if (k > 0 && r < 2)
        throw std::invalid_argument("pair_gadget: a common neighbor needs degree >= 2");

    const Vertex v = 0;
    const Vertex w = 1;
    std::vector<std::pair<Vertex, Vertex>> edges;
    std::vector<std::pair<long long, Vertex>> residual; // (remaining degree, vertex)
    int next = 2;
    for (int i = 0; i < k; ++i) {
        edges.emplace_back(v, next);
        edges.emplace_back(w, next);
        residual.emplace_back(r - 2, next);
        ++next;
    }
    for (int i = 0; i < r - k; ++i) {
        edges.emplace_back(v, next);
        residual.emplace_back(r - 1, next);
        ++next;
    }
    for (int i = 0; i < r - k; ++i) {
        edges.emplace_back(w, next);
        residual.emplace_back(r - 1, next);
        ++next;
    }
    if ((static_cast<long long>(k) * r) % 2 != 0) {
        residual.emplace_back(r, next);
        ++next;
    }

    // Havel-Hakimi on the residual degrees. Each round wires the largest
    // remaining degree to that many of the next-largest, so a vertex is a
    // round head at most once and no edge repeats. If the sequence is not
    // realizable, widen the pool with two fresh degree-r helpers and retry.
    for (int attempt = 0;; ++attempt) {
        auto pool = residual;
        auto attempt_edges = edges;
        bool ok = true;
        while (true) {
            std::sort(pool.begin(), pool.end(), [](const auto& a, const auto& b) {
                if (a.first != b.first) return a.first > b.first;
                return a.second < b.second;
            });
            if (pool.empty() || pool.front().first == 0) break;
            long long need = pool.front().first;
            Vertex head = pool.front().second;
            if (need >= static_cast<long long>(pool.size())) {
                ok = false;
                break;
            }
            for (long long i = 1; i <= need; ++i) {
                if (pool[static_cast<std::size_t>(i)].first <= 0) {
                    ok = false;
                    break;
                }
                attempt_edges.emplace_back(head, pool[static_cast<std::size_t>(i)].second);
                --pool[static_cast<std::size_t>(i)].first;
            }
            if (!ok) break;
            pool.front().first = 0;
        }
        if (ok) {
            edges = std::move(attempt_edges);
            break;
        }
        if (attempt >= 4) throw std::runtime_error("pair_gadget: residual degrees not realizable");
        residual.emplace_back(r, next);
        ++next;
        residual.emplace_back(r, next);
        ++next;
    }

    PairGadget out{Graph(next, edges), v, w};
    auto reg = out.graph.regular_degree();
    if (!reg || *reg != r) throw std::logic_error("pair_gadget: host is not r-regular");
    if (out.graph.has_edge(v, w)) throw std::logic_error("pair_gadget: v and w ended up adjacent");
    const auto& nv = out.graph.neighbors(v);
    const auto& nw = out.graph.neighbors(w);
    std::vector<Vertex> commons;
    std::set_intersection(nv.begin(), nv.end(), nw.begin(), nw.end(),
                          std::back_inserter(commons));
    if (static_cast<int>(commons.size()) != k)
        throw std::logic_error("pair_gadget: wrong common neighbor count");
    return out;
}

double pair_retention_frequency(const Graph& host, Vertex v, Vertex w, int colors,
                                long long trials, std::uint64_t master_seed, int threads) {
    check_vertex(host, v, "pair_retention_frequency");
    check_vertex(host, w, "pair_retention_frequency");
    if (v == w) throw std::invalid_argument("pair_retention_frequency: vertices coincide");
    check_colors(colors, "pair_retention_frequency");
    check_trials(trials, "pair_retention_frequency");

    std::vector<std::uint8_t> hit(static_cast<std::size_t>(trials));
    run_chunked(trials, threads, [&](long long lo, long long hi) {
        for (long long i = lo; i < hi; ++i) {
            Rng rng(derive_seed(master_seed, static_cast<std::uint64_t>(i)));
            ColoringState st = run_trial(host, colors, rng);
            hit[static_cast<std::size_t>(i)] =
                (st.colors[v] != 0 && st.colors[v] == st.colors[w]) ? 1 : 0;
        }
    });
    long long total = 0;
    for (std::uint8_t h : hit) total += h;
    return static_cast<double>(total) / static_cast<double>(trials);
}

std::array<long long, 3> triple_common_profile(const Graph& g, Vertex a, Vertex b, Vertex c) {
    check_vertex(g, a, "triple_common_profile");
    check_vertex(g, b, "triple_common_profile");
    check_vertex(g, c, "triple_common_profile");
    if (a == b || a == c || b == c)
        throw std::invalid_argument("triple_common_profile: vertices coincide");
    std::array<long long, 3> k{0, 0, 0};
    for (Vertex z = 0; z < g.vertex_count(); ++z) {
        if (z == a || z == b || z == c) continue;
        int seen = 0;
        if (g.has_edge(z, a)) ++seen;
        if (g.has_edge(z, b)) ++seen;
        if (g.has_edge(z, c)) ++seen;
        if (seen > 0) ++k[static_cast<std::size_t>(seen - 1)];
    }
    return k;
}

double triple_retention_frequency(const Graph& host, Vertex a, Vertex b, Vertex c,
                                  int colors, long long trials,
                                  std::uint64_t master_seed, int threads) {
    check_vertex(host, a, "triple_retention_frequency");
    check_vertex(host, b, "triple_retention_frequency");
    check_vertex(host, c, "triple_retention_frequency");
    if (a == b || a == c || b == c)
        throw std::invalid_argument("triple_retention_frequency: vertices coincide");
    check_colors(colors, "triple_retention_frequency");
    check_trials(trials, "triple_retention_frequency");

    std::vector<std::uint8_t> hit(static_cast<std::size_t>(trials));
    run_chunked(trials, threads, [&](long long lo, long long hi) {
        for (long long i = lo; i < hi; ++i) {
            Rng rng(derive_seed(master_seed, static_cast<std::uint64_t>(i)));
            ColoringState st = run_trial(host, colors, rng);
            hit[static_cast<std::size_t>(i)] =
                (st.colors[a] != 0 && st.colors[a] == st.colors[b] &&
                 st.colors[b] == st.colors[c])
                    ? 1
                    : 0;
        }
    });
    long long total = 0;
    for (std::uint8_t h : hit) total += h;
    return static_cast<double>(total) / static_cast<double>(trials);
}

} // namespace strongcolor
