#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "strongcolor/graph.hpp"

namespace strongcolor {

// Per-edge neighborhood census around e = uv. Raw counts are integers;
// alpha/beta/beta_x/gamma_e are the same counts normalized by powers of the
// maximum degree. X is N(u) u N(v) minus {u,v}; Y is N(X) minus (X u {u,v}).
struct StrongStats {
    EdgeId edge = -1;
    Vertex u = -1, v = -1;
    int delta = 0;          // max degree of the host graph
    long long ds = 0;       // edges at distance <= 1 from e
    long long me = 0;       // pairs of those that are themselves at distance <= 1
    long long common = 0;   // |N(u) & N(v)|, i.e. triangles containing e
    long long beta_count = 0; // 4-cycles through e plus one-endvertex triangles
    long long ex_count = 0;   // edges with both endpoints in X
    long long gamma_num = 0;  // sum over y in Y of d_X(y) * (delta - d_X(y))
    long long mxy = 0;        // edges between X and Y
    long long c4xy = 0;       // 4-cycles with one side in X, the other in Y
    int x_size = 0;
    int y_size = 0;
    double alpha = 0.0;   // common / delta
    double beta = 0.0;    // beta_count / delta^2
    double beta_x = 0.0;  // ex_count / delta^2
    double gamma_e = 0.0; // gamma_num / delta^3
};

struct BoundCheck {
    bool ds_ok = false;      // ds <= 2*delta^2 - common*delta - ex_count - 2*delta
    bool me_ok = false;      // 2*me <= 3*delta^4 + 10*delta^3
    bool ds_equality = false;
    bool regular = false;
    long long ds_bound = 0;
};

// True when e and f share an endpoint or some edge joins them.
bool edge_distance_le1(const Graph& g, EdgeId e, EdgeId f);

// Edge ids at distance <= 1 from e, ascending. e itself is excluded.
std::vector<EdgeId> strong_neighborhood(const Graph& g, EdgeId e);

// Graph on the edge set of g: vertex i is edge i of g, adjacency is
// distance <= 1. A strong edge coloring of g is a proper coloring of this.
Graph square_linegraph(const Graph& g);

StrongStats strong_stats(const Graph& g, EdgeId e);

// Integer-exact sparsity verdicts. The degree bound uses the edges-inside-X
// count; that form holds for every graph and is tight exactly on regular
// ones. The beta_count form over-counts shared configurations and is kept
// for reporting only.
BoundCheck check_bounds(const StrongStats& s, bool regular);
BoundCheck verify_bounds(const Graph& g, EdgeId e);

// Value m_{X,Y} must take when the host graph is regular:
// 2*delta^2 - common*delta - 2*ex_count - 4*delta + 2.
long long regular_mxy_closed_form(const StrongStats& s);

// CSV table of per-edge stats with a fixed header, one row per edge.
std::string stats_csv(const Graph& g);

struct CliqueResult {
    int size = 0;
    std::vector<EdgeId> witness; // edges of g, pairwise at distance <= 1
    bool optimal = false;        // false when the node budget ran out
    std::uint64_t nodes = 0;
};

// Maximum clique in square_linegraph(g): the largest edge set that is
// pairwise at distance <= 1. Branch and bound with greedy-coloring upper
// bounds, vertices pre-ordered by decreasing degree. Deterministic. When
// the search exceeds node_budget the best clique found so far is returned
// with optimal = false.
CliqueResult strong_clique_exact(const Graph& g, std::uint64_t node_budget = 50'000'000);

// 3/(2*delta^2) + sqrt(3 + 10/delta + 9/(4*delta^4)); decreasing in delta
// with limit sqrt(3). Below 1.74 from delta = 400 on. Requires delta >= 1.
double clique_bound_value(double delta);

} // namespace strongcolor
