#include "strongcolor/hadamard.hpp"

#include <algorithm>
#include <stdexcept>

#include "strongcolor/strong.hpp"

namespace strongcolor {

std::vector<std::vector<int>> sylvester_matrix(int k) {
    if (k < 0 || k > 12) {
        throw std::invalid_argument("sylvester order out of range (0..12)");
    }
    std::vector<std::vector<int>> h{{1}};
    for (int step = 0; step < k; ++step) {
        const int n = static_cast<int>(h.size());
        std::vector<std::vector<int>> next(2 * n, std::vector<int>(2 * n));
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) {
                next[i][j] = h[i][j];
                next[i][j + n] = h[i][j];
                next[i + n][j] = h[i][j];
                next[i + n][j + n] = -h[i][j];
            }
        }
        h = std::move(next);
    }
    return h;
}

HadamardFamily hadamard_family(int k) {
    if (k < 2 || k > 12) {
        throw std::invalid_argument("family order out of range (2..12)");
    }
    auto h = sylvester_matrix(k);
    const int n = static_cast<int>(h.size());
    HadamardFamily fam;
    fam.k = k;
    fam.n = n;
    // Row 0 is all ones and its complement all zeros; both are dropped, so
    // the family is rows 1..n-1 followed by their complements.
    for (int pass = 0; pass < 2; ++pass) {
        for (int i = 1; i < n; ++i) {
            std::vector<int> set;
            set.reserve(n / 2);
            for (int j = 0; j < n; ++j) {
                const bool one = h[i][j] > 0;
                if (one == (pass == 0)) {
                    set.push_back(j);
                }
            }
            fam.sets.push_back(std::move(set));
        }
    }
    return fam;
}

FamilyCheck check_family(const HadamardFamily& fam) {
    FamilyCheck c;
    const int n = fam.n;
    c.sizes_ok = std::all_of(fam.sets.begin(), fam.sets.end(), [&](const auto& s) {
        return static_cast<int>(s.size()) == n / 2;
    });
    std::vector<int> freq(n, 0);
    for (const auto& s : fam.sets) {
        for (int x : s) {
            ++freq[x];
        }
    }
    c.frequency_ok = std::all_of(freq.begin(), freq.end(), [&](int f) { return f == n - 1; });
    c.intersections_ok = true;
    for (std::size_t i = 0; i < fam.sets.size() && c.intersections_ok; ++i) {
        for (std::size_t j = i + 1; j < fam.sets.size(); ++j) {
            std::vector<int> meet;
            std::set_intersection(fam.sets[i].begin(), fam.sets[i].end(),
                                  fam.sets[j].begin(), fam.sets[j].end(),
                                  std::back_inserter(meet));
            const int sz = static_cast<int>(meet.size());
            if (sz != 0 && sz != n / 4) {
                c.intersections_ok = false;
                break;
            }
        }
    }
    return c;
}

Graph build_extremal_graph(int k) {
    HadamardFamily fam = hadamard_family(k);
    const int n = fam.n;
    std::vector<std::pair<Vertex, Vertex>> edges;
    edges.reserve(1 + 2 * n + (2 * n - 2) * static_cast<long long>(n));
    edges.push_back({0, 1}); // uv first, so it is edge id 0
    for (int i = 0; i < n; ++i) {
        edges.push_back({0, 2 + i});
    }
    for (int i = 0; i < n; ++i) {
        edges.push_back({1, 2 + n + i});
    }
    for (std::size_t j = 0; j < fam.sets.size(); ++j) {
        const Vertex y = 2 + 2 * n + static_cast<int>(j);
        for (int i : fam.sets[j]) {
            edges.push_back({2 + i, y});
        }
        for (int i : fam.sets[j]) {
            edges.push_back({2 + n + i, y});
        }
    }
    return Graph(4 * n, std::move(edges));
}

ExtremalReport extremal_report(int k) {
    Graph g = build_extremal_graph(k);
    const long long m = g.edge_count();
    // The census is a pair loop over ~m^2/2 edge pairs.
    if (m * (m - 1) / 2 > 600'000'000LL) {
        throw std::invalid_argument("extremal report past pair-loop budget; use k <= 7");
    }
    StrongStats s = strong_stats(g, 0);
    ExtremalReport r;
    r.k = k;
    r.delta = g.max_degree();
    r.m_uv = s.me;
    const double d = static_cast<double>(r.delta);
    r.ratio = static_cast<double>(r.m_uv) / (d * d * d * d);
    r.xy_edges = s.mxy;
    return r;
}

} // namespace strongcolor
