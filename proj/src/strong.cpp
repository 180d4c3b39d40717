#include "strongcolor/strong.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace strongcolor {

namespace {

// Flat bit matrix for O(1) adjacency probes during pair loops.
struct AdjMatrix {
    int n = 0;
    std::size_t words_per_row = 0;
    std::vector<std::uint64_t> bits;

    explicit AdjMatrix(const Graph& g)
        : n(g.vertex_count()),
          words_per_row((static_cast<std::size_t>(n) + 63) / 64),
          bits(words_per_row * static_cast<std::size_t>(n), 0) {
        for (auto [u, v] : g.edges()) {
            set(u, v);
            set(v, u);
        }
    }

    void set(int u, int v) {
        bits[static_cast<std::size_t>(u) * words_per_row + v / 64] |= 1ull << (v % 64);
    }
    bool test(int u, int v) const {
        return bits[static_cast<std::size_t>(u) * words_per_row + v / 64] >> (v % 64) & 1;
    }
};

void check_edge_id(const Graph& g, EdgeId e) {
    if (e < 0 || e >= g.edge_count()) {
        throw std::invalid_argument("edge id out of range");
    }
}

// Edge ids within distance <= 1 of e, via the incidence lists of e's
// endpoints and their neighbors. stamp/stamped implement a visited set that
// is reusable across calls without clearing.
void collect_neighborhood(const Graph& g, EdgeId e, std::vector<int>& stamp, int marker,
                          std::vector<EdgeId>& out) {
    out.clear();
    auto [a, b] = g.edge(e);
    auto visit = [&](Vertex w) {
        for (EdgeId f : g.incident(w)) {
            if (f != e && stamp[f] != marker) {
                stamp[f] = marker;
                out.push_back(f);
            }
        }
    };
    visit(a);
    visit(b);
    for (Vertex x : g.neighbors(a)) {
        visit(x);
    }
    for (Vertex x : g.neighbors(b)) {
        visit(x);
    }
    std::sort(out.begin(), out.end());
}

long long count_pairs(long long c) { return c * (c - 1) / 2; }

StrongStats stats_impl(const Graph& g, const AdjMatrix& adj, EdgeId e,
                       std::vector<int>& stamp, int marker) {
    StrongStats s;
    s.edge = e;
    auto [a, b] = g.edge(e);
    s.u = a;
    s.v = b;
    const int delta = g.max_degree();
    s.delta = delta;

    const auto& na = g.neighbors(a);
    const auto& nb = g.neighbors(b);

    for (Vertex x : na) {
        if (x != b && adj.test(b, x)) {
            ++s.common;
        }
    }

    // X = N(a) u N(b) minus the endpoints themselves.
    std::vector<Vertex> X;
    X.reserve(na.size() + nb.size());
    std::merge(na.begin(), na.end(), nb.begin(), nb.end(), std::back_inserter(X));
    X.erase(std::unique(X.begin(), X.end()), X.end());
    std::erase(X, a);
    std::erase(X, b);
    s.x_size = static_cast<int>(X.size());

    std::vector<char> in_x(g.vertex_count(), 0);
    for (Vertex x : X) {
        in_x[x] = 1;
    }
    for (Vertex x : X) {
        for (Vertex y : g.neighbors(x)) {
            if (y > x && in_x[y]) {
                ++s.ex_count;
            }
        }
    }

    // Literal configuration counts behind the prose bound: ordered 4-cycles
    // a-y...x-b through e, and triangles hanging off exactly one endpoint.
    for (Vertex y : na) {
        if (y == b) {
            continue;
        }
        for (Vertex x : nb) {
            if (x != a && x != y && adj.test(x, y)) {
                ++s.beta_count;
            }
        }
    }
    auto triangles_at = [&](const std::vector<Vertex>& nbrs, Vertex skip) {
        long long t = 0;
        for (std::size_t i = 0; i < nbrs.size(); ++i) {
            if (nbrs[i] == skip) {
                continue;
            }
            for (std::size_t j = i + 1; j < nbrs.size(); ++j) {
                if (nbrs[j] != skip && adj.test(nbrs[i], nbrs[j])) {
                    ++t;
                }
            }
        }
        return t;
    };
    s.beta_count += triangles_at(na, b) + triangles_at(nb, a);

    // Second shell Y and the X-Y census.
    std::vector<Vertex> Y;
    std::vector<char> in_y(g.vertex_count(), 0);
    for (Vertex x : X) {
        for (Vertex y : g.neighbors(x)) {
            if (!in_x[y] && y != a && y != b && !in_y[y]) {
                in_y[y] = 1;
                Y.push_back(y);
            }
        }
    }
    std::sort(Y.begin(), Y.end());
    s.y_size = static_cast<int>(Y.size());

    std::vector<int> x_index(g.vertex_count(), -1);
    for (int i = 0; i < s.x_size; ++i) {
        x_index[X[i]] = i;
    }
    std::vector<long long> pair_common;
    if (s.x_size > 1) {
        pair_common.assign(static_cast<std::size_t>(s.x_size) * s.x_size, 0);
    }
    std::vector<int> hits;
    for (Vertex y : Y) {
        hits.clear();
        for (Vertex x : g.neighbors(y)) {
            if (in_x[x]) {
                hits.push_back(x_index[x]);
            }
        }
        long long dx = static_cast<long long>(hits.size());
        s.mxy += dx;
        s.gamma_num += dx * (delta - dx);
        for (std::size_t i = 0; i < hits.size(); ++i) {
            for (std::size_t j = i + 1; j < hits.size(); ++j) {
                int lo = std::min(hits[i], hits[j]);
                int hi = std::max(hits[i], hits[j]);
                ++pair_common[static_cast<std::size_t>(lo) * s.x_size + hi];
            }
        }
    }
    for (long long c : pair_common) {
        s.c4xy += count_pairs(c);
    }

    std::vector<EdgeId> ns;
    collect_neighborhood(g, e, stamp, marker, ns);
    s.ds = static_cast<long long>(ns.size());

    // Pairwise distance <= 1 inside the strong neighborhood.
    std::vector<Vertex> ea(ns.size()), eb(ns.size());
    for (std::size_t i = 0; i < ns.size(); ++i) {
        ea[i] = g.edge(ns[i]).first;
        eb[i] = g.edge(ns[i]).second;
    }
    for (std::size_t i = 0; i < ns.size(); ++i) {
        Vertex p = ea[i], q = eb[i];
        for (std::size_t j = i + 1; j < ns.size(); ++j) {
            Vertex x = ea[j], y = eb[j];
            if (p == x || p == y || q == x || q == y || adj.test(p, x) ||
                adj.test(p, y) || adj.test(q, x) || adj.test(q, y)) {
                ++s.me;
            }
        }
    }

    const double d = static_cast<double>(delta);
    s.alpha = static_cast<double>(s.common) / d;
    s.beta = static_cast<double>(s.beta_count) / (d * d);
    s.beta_x = static_cast<double>(s.ex_count) / (d * d);
    s.gamma_e = static_cast<double>(s.gamma_num) / (d * d * d);
    return s;
}

} // namespace

bool edge_distance_le1(const Graph& g, EdgeId e, EdgeId f) {
    check_edge_id(g, e);
    check_edge_id(g, f);
    if (e == f) {
        return true;
    }
    auto [a, b] = g.edge(e);
    auto [c, d] = g.edge(f);
    if (a == c || a == d || b == c || b == d) {
        return true;
    }
    return g.has_edge(a, c) || g.has_edge(a, d) || g.has_edge(b, c) || g.has_edge(b, d);
}

std::vector<EdgeId> strong_neighborhood(const Graph& g, EdgeId e) {
    check_edge_id(g, e);
    std::vector<int> stamp(g.edge_count(), -1);
    std::vector<EdgeId> out;
    collect_neighborhood(g, e, stamp, 0, out);
    return out;
}

Graph square_linegraph(const Graph& g) {
    const int m = g.edge_count();
    std::vector<int> stamp(m, -1);
    std::vector<EdgeId> ns;
    std::vector<std::pair<Vertex, Vertex>> pairs;
    for (EdgeId e = 0; e < m; ++e) {
        collect_neighborhood(g, e, stamp, e, ns);
        for (EdgeId f : ns) {
            if (f > e) {
                pairs.push_back({e, f});
            }
        }
    }
    return Graph(m, std::move(pairs));
}

StrongStats strong_stats(const Graph& g, EdgeId e) {
    check_edge_id(g, e);
    AdjMatrix adj(g);
    std::vector<int> stamp(g.edge_count(), -1);
    return stats_impl(g, adj, e, stamp, 0);
}

BoundCheck check_bounds(const StrongStats& s, bool regular) {
    BoundCheck c;
    const long long d = s.delta;
    c.ds_bound = 2 * d * d - s.common * d - s.ex_count - 2 * d;
    c.ds_ok = s.ds <= c.ds_bound;
    c.me_ok = 2 * s.me <= 3 * d * d * d * d + 10 * d * d * d;
    c.ds_equality = s.ds == c.ds_bound;
    c.regular = regular;
    return c;
}

BoundCheck verify_bounds(const Graph& g, EdgeId e) {
    return check_bounds(strong_stats(g, e), g.regular_degree().has_value());
}

long long regular_mxy_closed_form(const StrongStats& s) {
    const long long d = s.delta;
    return 2 * d * d - s.common * d - 2 * s.ex_count - 4 * d + 2;
}

std::string stats_csv(const Graph& g) {
    std::string out = "edge,u,v,delta,ds,me,alpha,beta,beta_x,gamma,mxy,c4xy,"
                      "bound_ds_ok,bound_me_ok\n";
    AdjMatrix adj(g);
    std::vector<int> stamp(g.edge_count(), -1);
    const bool regular = g.regular_degree().has_value();
    char buf[400];
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        StrongStats s = stats_impl(g, adj, e, stamp, e);
        BoundCheck c = check_bounds(s, regular);
        std::snprintf(buf, sizeof(buf),
                      "%d,%d,%d,%d,%lld,%lld,%.10g,%.10g,%.10g,%.10g,%lld,%lld,%d,%d\n",
                      s.edge, s.u, s.v, s.delta, s.ds, s.me, s.alpha, s.beta, s.beta_x,
                      s.gamma_e, s.mxy, s.c4xy, c.ds_ok ? 1 : 0, c.me_ok ? 1 : 0);
        out += buf;
    }
    return out;
}

namespace {

// Tomita-style maximum clique on an explicit adjacency-bitset graph.
// Candidates at each node are greedily colored; a vertex whose color class
// index cannot beat the incumbent prunes the rest of the list.
class CliqueSearch {
public:
    CliqueSearch(int n, std::vector<std::vector<std::uint64_t>> adj, std::uint64_t budget)
        : n_(n), adj_(std::move(adj)), budget_(budget) {}

    void run(const std::vector<int>& initial) {
        // Greedy incumbent: keeps the result non-empty and the witness valid
        // even when the node budget stops the search early, and tightens the
        // pruning threshold from the start.
        for (int v : initial) {
            bool ok = true;
            for (int u : best) {
                if (!adjacent(u, v)) {
                    ok = false;
                    break;
                }
            }
            if (ok) {
                best.push_back(v);
            }
        }
        expand(initial);
    }

    std::vector<int> best;
    std::uint64_t nodes = 0;
    bool budget_hit = false;

private:
    bool adjacent(int u, int v) const { return adj_[u][v / 64] >> (v % 64) & 1; }

    void expand(const std::vector<int>& candidates) {
        if (budget_hit) {
            return;
        }
        if (++nodes > budget_) {
            budget_hit = true;
            return;
        }
        // Greedy coloring in list order; classes come out sorted.
        std::vector<std::vector<int>> classes;
        for (int v : candidates) {
            bool placed = false;
            for (auto& cls : classes) {
                bool clash = false;
                for (int u : cls) {
                    if (adjacent(u, v)) {
                        clash = true;
                        break;
                    }
                }
                if (!clash) {
                    cls.push_back(v);
                    placed = true;
                    break;
                }
            }
            if (!placed) {
                classes.push_back({v});
            }
        }
        std::vector<int> order;
        std::vector<int> color;
        for (std::size_t c = 0; c < classes.size(); ++c) {
            for (int v : classes[c]) {
                order.push_back(v);
                color.push_back(static_cast<int>(c) + 1);
            }
        }

        for (int i = static_cast<int>(order.size()) - 1; i >= 0; --i) {
            if (budget_hit) {
                return;
            }
            int v = order[i];
            if (static_cast<int>(cur_.size()) + color[i] <= static_cast<int>(best.size())) {
                return;
            }
            std::vector<int> next;
            for (int j = 0; j < i; ++j) {
                if (adjacent(v, order[j])) {
                    next.push_back(order[j]);
                }
            }
            cur_.push_back(v);
            if (cur_.size() > best.size()) {
                best = cur_;
            }
            if (!next.empty()) {
                expand(next);
            }
            cur_.pop_back();
        }
    }

    int n_;
    std::vector<std::vector<std::uint64_t>> adj_;
    std::uint64_t budget_;
    std::vector<int> cur_;
};

} // namespace

CliqueResult strong_clique_exact(const Graph& g, std::uint64_t node_budget) {
    CliqueResult result;
    const int m = g.edge_count();
    if (m == 0) {
        result.optimal = true;
        return result;
    }
    Graph sq = square_linegraph(g);
    const std::size_t words = (static_cast<std::size_t>(m) + 63) / 64;
    std::vector<std::vector<std::uint64_t>> adj(m, std::vector<std::uint64_t>(words, 0));
    for (auto [u, v] : sq.edges()) {
        adj[u][v / 64] |= 1ull << (v % 64);
        adj[v][u / 64] |= 1ull << (u % 64);
    }
    std::vector<int> order(m);
    for (int i = 0; i < m; ++i) {
        order[i] = i;
    }
    std::stable_sort(order.begin(), order.end(), [&](int x, int y) {
        return sq.degree(x) > sq.degree(y);
    });

    CliqueSearch search(m, std::move(adj), node_budget);
    search.run(order);
    result.size = static_cast<int>(search.best.size());
    result.witness = search.best;
    std::sort(result.witness.begin(), result.witness.end());
    result.optimal = !search.budget_hit;
    result.nodes = search.nodes;
    return result;
}

double clique_bound_value(double delta) {
    if (!(delta >= 1.0)) {
        throw std::invalid_argument("delta must be at least 1");
    }
    const double d2 = delta * delta;
    return 3.0 / (2.0 * d2) + std::sqrt(3.0 + 10.0 / delta + 9.0 / (4.0 * d2 * d2));
}

} // namespace strongcolor
