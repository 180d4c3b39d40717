#pragma once

#include <array>
#include <cstdint>
#include <utility>
#include <vector>

#include "strongcolor/coloring.hpp"
#include "strongcolor/graph.hpp"

namespace strongcolor {

// Probability that two non-adjacent vertices of degree r with k common
// neighbors keep the same color through a trial:
//   (1/C) (1 - 1/(2C))^(2r-2k) (1 - 3/(4C))^k.
// Requires C >= 1 and 0 <= k <= r.
double pair_retention_prob(int colors, int r, int k);

// Probability that three pairwise non-adjacent vertices keep one shared
// color, where k_i outside vertices see exactly i of the triple:
//   (1/C^2) (1 - 1/(2C))^k1 (1 - 3/(4C))^k2 (1 - 7/(8C))^k3.
// Any non-negative k_i are accepted.
double triple_retention_prob(int colors, long long k1, long long k2, long long k3);

struct PtBounds {
    double pu_lower = 0; // delta*r / (2(1-gamma)) * exp(-1/(1-gamma))
    double tu_upper = 0; // delta^1.5*r / (6(1-gamma)^2) * exp(-7/(8(1-gamma)))
};

PtBounds analytic_pt_bounds(double delta, double gamma, double r);

// Right side of the palette-shaving condition at r = 1; the condition is
// gamma < gamma_condition_rhs(gamma, delta), strictly.
double gamma_condition_rhs(double gamma, double delta);
bool gamma_condition_holds(double gamma, double delta);

// Largest gamma satisfying the condition, by bisection to 1e-9.
double max_gamma(double delta);

// Closed-form approximation 0.1827*delta - 0.0778*delta^1.5.
double approx_gamma(double delta);

// Symmetric local lemma threshold: true iff 4*p*d <= 1.
bool lll_check(double p, double d);

struct TailBound {
    double bound = 1.0;
    bool regime_ok = false; // the bound is only meaningful for t > 50*c*sqrt(s)
};

// min(1, 4*exp(-t^2/(16*c^2*s)) + 4*p_xi). Never asserts the regime, only
// flags it; desk-scale instances sit far below the threshold.
TailBound talagrand_tail_bound(double t, double c, double s, double p_xi);

// One concentration setting bundled up. standard_inputs applies the
// conventions s = 3r, c = ln(r)^2, p_xi = 1/M^2.
struct BoundInputs {
    double r = 0;
    double colors = 0;
    double gamma = 0;
    double delta = 0;
    double s = 0;
    double c = 0;
    double t = 0;
    double p_xi = 0;
    double m_vertices = 0;
};

BoundInputs standard_inputs(double r, double m_vertices, double t);
TailBound talagrand_tail_bound(const BoundInputs& in);

struct TrialReport {
    long long trials = 0;
    double mean_pu = 0;
    double var_pu = 0; // sample variance, n-1 divisor
    double mean_tu = 0;
    double var_tu = 0;
    double mean_saved = 0;
    // freq of |pu - mean_pu| >= t for t in {0,1,2,4,8,16,32,64} plus
    // sqrt(r)*ln(r)^3 at r = r_for_xi; ascending by t.
    std::vector<std::pair<double, double>> tail_freq;
    // freq of trials whose step-1 coloring put some color on more than
    // ln(r_for_xi) neighbors of u.
    double exceptional_freq = 0;
};

// Monte Carlo over independent trials with seeds derived from master_seed;
// per-trial work may run on several threads, aggregation is sequential, so
// results depend only on (graph, u, colors, trials, master_seed, r_for_xi).
TrialReport run_trials(const Graph& g, Vertex u, int colors, long long trials,
                       std::uint64_t master_seed, double r_for_xi, int threads = 1);

long long count_triangles(const Graph& g);

struct TriangleExperiment {
    double mean = 0;
    double variance = 0; // sample variance, n-1 divisor
    double expected = 0; // C(n,3) p^3
};

TriangleExperiment triangle_experiment(int n, double p, int trials,
                                       std::uint64_t master_seed, int threads = 1);

// Upper median: sup of t with P[X <= t] <= 1/2, which is the sorted
// sample's element at index floor(size/2). Throws on an empty sample.
double median_of_samples(std::vector<double> samples);

// r-regular host containing two non-adjacent vertices v, w with exactly k
// common neighbors; the fixed part is completed by Havel-Hakimi on the
// residual degrees. Degrees and the common-neighbor count are re-checked
// before returning.
struct PairGadget {
    Graph graph;
    Vertex v = 0;
    Vertex w = 1;
};

PairGadget pair_gadget(int r, int k);

// Empirical frequency of colors[v] == colors[w] != 0 after a trial.
double pair_retention_frequency(const Graph& host, Vertex v, Vertex w, int colors,
                                long long trials, std::uint64_t master_seed,
                                int threads = 1);

// (k1, k2, k3): how many outside vertices see exactly 1, 2, 3 of {a,b,c}.
std::array<long long, 3> triple_common_profile(const Graph& g, Vertex a, Vertex b, Vertex c);

double triple_retention_frequency(const Graph& host, Vertex a, Vertex b, Vertex c,
                                  int colors, long long trials,
                                  std::uint64_t master_seed, int threads = 1);

} // namespace strongcolor
