#include "strongcolor/coloring.hpp"

#include <algorithm>
#include <stdexcept>

#include "strongcolor/strong.hpp"

namespace strongcolor {

ColoringState assign_random(const Graph& g, int palette, Rng& rng) {
    if (palette < 1) {
        throw std::invalid_argument("palette must have at least one color");
    }
    ColoringState st;
    st.graph = &g;
    st.palette = palette;
    st.colors.resize(g.vertex_count());
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        st.colors[v] = 1 + static_cast<int>(rng.below(palette));
    }
    st.orientation.resize(g.edge_count());
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        st.orientation[e] = rng.coin() ? 1 : 0;
    }
    return st;
}

void resolve_conflicts(ColoringState& st) {
    const Graph& g = *st.graph;
    std::vector<std::uint8_t> victim(g.vertex_count(), 0);
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        auto [u, v] = g.edge(e); // u < v by construction
        if (st.colors[u] != 0 && st.colors[u] == st.colors[v]) {
            victim[st.orientation[e] ? u : v] = 1;
        }
    }
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        if (victim[v]) {
            st.colors[v] = 0;
        }
    }
}

ColoringState run_trial(const Graph& g, int palette, Rng& rng) {
    ColoringState st = assign_random(g, palette, rng);
    resolve_conflicts(st);
    return st;
}

SavedReport saved_report(const ColoringState& st, Vertex u) {
    const Graph& g = *st.graph;
    if (u < 0 || u >= g.vertex_count()) {
        throw std::invalid_argument("vertex out of range");
    }
    SavedReport rep;
    rep.u = u;
    std::vector<Vertex> colored;
    for (Vertex w : g.neighbors(u)) {
        if (st.colors[w] != 0) {
            colored.push_back(w);
        }
    }
    rep.colored_in_n = static_cast<int>(colored.size());
    std::vector<int> seen;
    for (Vertex w : colored) {
        seen.push_back(st.colors[w]);
    }
    std::sort(seen.begin(), seen.end());
    rep.distinct_colors_in_n =
        static_cast<int>(std::unique(seen.begin(), seen.end()) - seen.begin());
    rep.saved = rep.colored_in_n - rep.distinct_colors_in_n;

    // Definitional pair/triple scans, adjacency filtered. Post-resolution
    // classes are independent sets, so the filters never actually drop a
    // same-colored pair; they stay in place to keep the census honest.
    const std::size_t c = colored.size();
    for (std::size_t i = 0; i < c; ++i) {
        for (std::size_t j = i + 1; j < c; ++j) {
            if (st.colors[colored[i]] != st.colors[colored[j]]) {
                continue;
            }
            if (g.has_edge(colored[i], colored[j])) {
                continue;
            }
            ++rep.pu;
            for (std::size_t l = j + 1; l < c; ++l) {
                if (st.colors[colored[l]] != st.colors[colored[i]]) {
                    continue;
                }
                if (g.has_edge(colored[i], colored[l]) || g.has_edge(colored[j], colored[l])) {
                    continue;
                }
                ++rep.tu;
            }
        }
    }
    return rep;
}

std::vector<Vertex> completion_order(const Graph& g, CompletionOrder order) {
    std::vector<Vertex> vs(g.vertex_count());
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        vs[v] = v;
    }
    if (order == CompletionOrder::DegreeDescending) {
        std::stable_sort(vs.begin(), vs.end(),
                         [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
    }
    return vs;
}

GreedyResult greedy_complete(ColoringState& st, const std::vector<Vertex>& order) {
    const Graph& g = *st.graph;
    std::vector<std::uint8_t> used(st.palette + 1, 0);
    for (Vertex v : order) {
        if (st.colors[v] != 0) {
            continue;
        }
        std::fill(used.begin(), used.end(), 0);
        for (Vertex w : g.neighbors(v)) {
            const int c = st.colors[w];
            if (c != 0) {
                used[c] = 1;
            }
        }
        int pick = 0;
        for (int c = 1; c <= st.palette; ++c) {
            if (!used[c]) {
                pick = c;
                break;
            }
        }
        if (pick == 0) {
            return {false, v};
        }
        st.colors[v] = pick;
    }
    return {true, -1};
}

ColorRun color_until_success(const Graph& g, int palette, int max_retries,
                             std::uint64_t master_seed, CompletionOrder order) {
    if (max_retries < 1) {
        throw std::invalid_argument("need at least one attempt");
    }
    const std::vector<Vertex> vs = completion_order(g, order);
    ColorRun run;
    for (int attempt = 0; attempt < max_retries; ++attempt) {
        Rng rng(derive_seed(master_seed, static_cast<std::uint64_t>(attempt)));
        ColoringState st = run_trial(g, palette, rng);
        const int colored = static_cast<int>(
            std::count_if(st.colors.begin(), st.colors.end(), [](int c) { return c != 0; }));
        if (colored >= run.best_colored_after_trial) {
            run.best_colored_after_trial = colored;
            run.state = st;
        }
        GreedyResult res = greedy_complete(st, vs);
        run.attempts = attempt + 1;
        if (res.success) {
            run.success = true;
            run.state = std::move(st);
            return run;
        }
    }
    run.success = false;
    return run;
}

StrongColorResult strong_edge_color(const Graph& g, int palette, int max_retries,
                                    std::uint64_t master_seed) {
    Graph sq = square_linegraph(g);
    ColorRun run = color_until_success(sq, palette, max_retries, master_seed);
    StrongColorResult out;
    out.success = run.success;
    out.attempts = run.attempts;
    out.colors = run.state.colors;
    return out;
}

GreedyStrongColoring greedy_strong_color(const Graph& g) {
    GreedyStrongColoring out;
    out.colors.assign(g.edge_count(), 0);
    // color -> last edge that saw it used nearby; avoids per-edge clears
    std::vector<int> stamp(g.edge_count() + 2, -1);
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        const std::vector<EdgeId> ns = strong_neighborhood(g, e);
        for (EdgeId f : ns) {
            if (f < e && out.colors[f] != 0) {
                stamp[out.colors[f]] = e;
            }
        }
        int pick = 1;
        while (stamp[pick] == e) {
            ++pick;
        }
        out.colors[e] = pick;
        out.palette_used = std::max(out.palette_used, pick);
    }
    return out;
}

StrongValidation validate_strong_coloring(const Graph& g, const std::vector<int>& colors) {
    if (static_cast<int>(colors.size()) != g.edge_count()) {
        throw std::invalid_argument("coloring size mismatch");
    }
    for (int c : colors) {
        if (c < 1) {
            throw std::invalid_argument("coloring is not complete");
        }
    }
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        for (EdgeId f = e + 1; f < g.edge_count(); ++f) {
            if (colors[e] == colors[f] && edge_distance_le1(g, e, f)) {
                return {false, e, f};
            }
        }
    }
    return {true, -1, -1};
}

} // namespace strongcolor
