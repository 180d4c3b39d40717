#pragma once

#include <cstdint>
#include <vector>

#include "strongcolor/graph.hpp"
#include "strongcolor/rng.hpp"

namespace strongcolor {

// A partial vertex coloring together with the edge orientations drawn for
// conflict resolution. colors[v] is 1..palette, or 0 for uncolored.
// orientation[e] is true when edge e points toward its lower-indexed
// endpoint; the pointed-to endpoint is the one that loses its color if the
// edge is monochromatic.
struct ColoringState {
    const Graph* graph = nullptr;
    int palette = 0;
    std::vector<int> colors;
    std::vector<std::uint8_t> orientation;
};

// Step 1 and 2 of a trial: every vertex gets a uniform color from
// {1..palette}, every edge a uniform orientation. Draw order is vertices
// 0..n-1 then edges 0..m-1, one draw each, which pins reproducibility.
ColoringState assign_random(const Graph& g, int palette, Rng& rng);

// Step 3: single simultaneous pass over the original colors. For every
// monochromatic edge the pointed-to endpoint is uncolored. No cascade: a
// vertex is only uncolored due to conflicts present before the pass.
void resolve_conflicts(ColoringState& st);

// assign_random followed by resolve_conflicts. The result is a proper
// partial coloring.
ColoringState run_trial(const Graph& g, int palette, Rng& rng);

// Census of the still-colored neighborhood of u after resolution.
// pu counts same-colored non-adjacent pairs, tu same-colored pairwise
// non-adjacent triples, saved = colored neighbors minus distinct colors
// seen on them. Because resolution leaves color classes independent, pu
// and tu coincide with sums of C(class,2) and C(class,3).
struct SavedReport {
    Vertex u = -1;
    long long pu = 0;
    long long tu = 0;
    int colored_in_n = 0;
    int distinct_colors_in_n = 0;
    int saved = 0;
};

SavedReport saved_report(const ColoringState& st, Vertex u);

enum class CompletionOrder { IndexAscending, DegreeDescending };

std::vector<Vertex> completion_order(const Graph& g, CompletionOrder order);

struct GreedyResult {
    bool success = false;
    Vertex blocking_vertex = -1; // first vertex whose neighborhood used every color
};

// Colors the still-uncolored vertices in the given order with the smallest
// palette color absent from each one's colored neighborhood. On failure the
// state keeps the partial progress made up to the blocking vertex.
GreedyResult greedy_complete(ColoringState& st, const std::vector<Vertex>& order);

struct ColorRun {
    bool success = false;
    int attempts = 0;
    ColoringState state;            // full coloring on success, best partial otherwise
    int best_colored_after_trial = 0; // most vertices still colored post-resolution
};

// Repeats trial + greedy completion with per-attempt seeds derived from
// master_seed until a full proper coloring appears or max_retries attempts
// are spent. On exhaustion the returned state is the best (most colored)
// post-resolution partial seen.
ColorRun color_until_success(const Graph& g, int palette, int max_retries,
                             std::uint64_t master_seed,
                             CompletionOrder order = CompletionOrder::IndexAscending);

struct StrongColorResult {
    bool success = false;
    int attempts = 0;
    std::vector<int> colors; // per EdgeId of the original graph
};

// Strong edge coloring of g = vertex coloring of square_linegraph(g) via
// color_until_success.
StrongColorResult strong_edge_color(const Graph& g, int palette, int max_retries,
                                    std::uint64_t master_seed);

struct GreedyStrongColoring {
    std::vector<int> colors; // per EdgeId, always complete
    int palette_used = 0;
};

// Deterministic baseline: edges in input order, smallest color not used in
// the strong neighborhood. Uses at most 2*maxdeg^2 - 2*maxdeg + 1 colors.
GreedyStrongColoring greedy_strong_color(const Graph& g);

struct StrongValidation {
    bool ok = false;
    EdgeId first = -1, second = -1; // lexicographically first offending pair
};

// Checks that equal-colored edges are pairwise at distance >= 2. Expects a
// complete coloring (every edge >= 1).
StrongValidation validate_strong_coloring(const Graph& g, const std::vector<int>& colors);

} // namespace strongcolor
