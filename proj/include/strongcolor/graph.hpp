#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace strongcolor {

using Vertex = int;
using EdgeId = int;

// Simple undirected graph on vertices 0..n-1. Edges are stored as (u,v)
// pairs with u < v, in the order they were supplied; that order is stable
// and EdgeId is an index into it. Self loops and parallel edges are
// rejected at construction. Instances are immutable once built.
class Graph {
public:
    Graph() = default;
    Graph(int n, std::vector<std::pair<Vertex, Vertex>> edges);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    const std::vector<std::pair<Vertex, Vertex>>& edges() const { return edges_; }
    std::pair<Vertex, Vertex> edge(EdgeId e) const { return edges_[e]; }

    // Neighbors in increasing order.
    const std::vector<Vertex>& neighbors(Vertex v) const { return adj_[v]; }
    int degree(Vertex v) const { return static_cast<int>(adj_[v].size()); }
    int max_degree() const { return max_degree_; }
    std::optional<int> regular_degree() const;

    bool has_edge(Vertex u, Vertex v) const;
    // EdgeId of {u,v}, or -1 when the pair is not an edge.
    EdgeId edge_id(Vertex u, Vertex v) const;
    // Edge ids incident to v, aligned with neighbors(v).
    const std::vector<EdgeId>& incident(Vertex v) const { return inc_[v]; }

    bool operator==(const Graph& other) const {
        return n_ == other.n_ && edges_ == other.edges_;
    }

private:
    int n_ = 0;
    int max_degree_ = 0;
    std::vector<std::pair<Vertex, Vertex>> edges_;
    std::vector<std::vector<Vertex>> adj_;
    std::vector<std::vector<EdgeId>> inc_;
};

// Failure modes of parse_graph, each reported with the 1-based line number.
class ParseError : public std::runtime_error {
public:
    enum class Kind { MalformedLine, VertexOutOfRange, SelfLoop, DuplicateEdge };

    ParseError(Kind kind, int line, const std::string& what)
        : std::runtime_error(what), kind_(kind), line_(line) {}

    Kind kind() const { return kind_; }
    int line() const { return line_; }

private:
    Kind kind_;
    int line_;
};

// Text format: first line "n m", then m lines "u v" with 0 <= u,v < n.
// Lines starting with '#' are comments and are skipped, which lets tools
// stash a seed header in front of generated files.
Graph parse_graph(const std::string& text);

// Inverse of parse_graph up to edge orientation within a line. Every line
// ends with '\n'; the empty graph serializes as "0 0\n".
std::string write_graph(const Graph& g);

// Generators. All are deterministic; the two randomized ones take a seed.
Graph make_cycle(int n);                          // n >= 3
Graph make_complete(int n);
Graph make_complete_bipartite(int a, int b);
Graph make_star(int leaves);                      // center is vertex 0
Graph make_petersen();
// C5 with every vertex replaced by a stable set of size k and every edge by
// a complete bipartite join. 5k vertices, 5k^2 edges, 2k-regular.
Graph make_blowup_c5(int k);
// Pairing model, resampled from scratch until simple; throws after 10^4
// failed rounds. Requires n > r >= 0 and n*r even.
Graph make_random_regular(int n, int r, std::uint64_t seed);
Graph make_gnp(int n, double p, std::uint64_t seed);

// Embeds g into an r-regular supergraph: repeatedly take two disjoint
// copies and join every still-deficient vertex to its own copy. Each round
// raises every deficient degree by exactly one, so r - min_degree rounds
// suffice. g stays the induced subgraph on vertices 0..n-1. Requires
// r >= max_degree(g).
Graph embed_regular(const Graph& g, int r);

struct LocalDensity {
    long long inside_edges; // edges of g with both endpoints in N(v)
    double delta;           // 1 - inside_edges / C(r,2), and 1 when r < 2
};

// Sparseness of the neighborhood of v measured against a degree budget r.
// Requires r >= degree(v).
LocalDensity local_density(const Graph& g, Vertex v, int r);

} // namespace strongcolor
