#include "strongcolor/graph.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <set>
#include <sstream>

#include "strongcolor/rng.hpp"

namespace strongcolor {

Graph::Graph(int n, std::vector<std::pair<Vertex, Vertex>> edges) : n_(n) {
    if (n < 0) {
        throw std::invalid_argument("negative vertex count");
    }
    edges_.reserve(edges.size());
    std::set<std::pair<Vertex, Vertex>> seen;
    for (auto [u, v] : edges) {
        if (u > v) {
            std::swap(u, v);
        }
        if (u < 0 || v >= n) {
            throw std::invalid_argument("edge endpoint out of range");
        }
        if (u == v) {
            throw std::invalid_argument("self loop");
        }
        if (!seen.insert({u, v}).second) {
            throw std::invalid_argument("duplicate edge");
        }
        edges_.push_back({u, v});
    }

    std::vector<std::vector<std::pair<Vertex, EdgeId>>> by_vertex(n);
    for (EdgeId e = 0; e < static_cast<EdgeId>(edges_.size()); ++e) {
        auto [u, v] = edges_[e];
        by_vertex[u].push_back({v, e});
        by_vertex[v].push_back({u, e});
    }
    adj_.resize(n);
    inc_.resize(n);
    for (Vertex v = 0; v < n; ++v) {
        std::sort(by_vertex[v].begin(), by_vertex[v].end());
        adj_[v].reserve(by_vertex[v].size());
        inc_[v].reserve(by_vertex[v].size());
        for (auto [w, e] : by_vertex[v]) {
            adj_[v].push_back(w);
            inc_[v].push_back(e);
        }
        max_degree_ = std::max(max_degree_, static_cast<int>(adj_[v].size()));
    }
}

std::optional<int> Graph::regular_degree() const {
    if (n_ == 0) {
        return 0;
    }
    int d = degree(0);
    for (Vertex v = 1; v < n_; ++v) {
        if (degree(v) != d) {
            return std::nullopt;
        }
    }
    return d;
}

bool Graph::has_edge(Vertex u, Vertex v) const {
    if (u < 0 || v < 0 || u >= n_ || v >= n_ || u == v) {
        return false;
    }
    const auto& a = adj_[u];
    return std::binary_search(a.begin(), a.end(), v);
}

EdgeId Graph::edge_id(Vertex u, Vertex v) const {
    if (u < 0 || v < 0 || u >= n_ || v >= n_ || u == v) {
        return -1;
    }
    const auto& a = adj_[u];
    auto it = std::lower_bound(a.begin(), a.end(), v);
    if (it == a.end() || *it != v) {
        return -1;
    }
    return inc_[u][it - a.begin()];
}

namespace {

// Strict "one or more unsigned ints separated by single spaces" token scan.
bool parse_ints(const std::string& line, std::vector<long long>& out) {
    out.clear();
    const char* p = line.data();
    const char* end = p + line.size();
    while (p < end) {
        while (p < end && (*p == ' ' || *p == '\t')) {
            ++p;
        }
        if (p == end) {
            break;
        }
        long long value = 0;
        auto [next, ec] = std::from_chars(p, end, value);
        if (ec != std::errc() || next == p) {
            return false;
        }
        out.push_back(value);
        p = next;
    }
    return true;
}

} // namespace

Graph parse_graph(const std::string& text) {
    std::vector<std::pair<std::string, int>> lines; // content line, line number
    {
        std::string cur;
        int lineno = 0;
        std::istringstream in(text);
        while (std::getline(in, cur)) {
            ++lineno;
            if (!cur.empty() && cur.back() == '\r') {
                cur.pop_back();
            }
            if (cur.empty() || cur[0] == '#') {
                continue;
            }
            lines.push_back({cur, lineno});
        }
    }
    if (lines.empty()) {
        throw ParseError(ParseError::Kind::MalformedLine, 0, "missing header line");
    }

    std::vector<long long> nums;
    if (!parse_ints(lines[0].first, nums) || nums.size() != 2 || nums[0] < 0 || nums[1] < 0) {
        throw ParseError(ParseError::Kind::MalformedLine, lines[0].second,
                         "header must be \"n m\"");
    }
    const long long n = nums[0];
    const long long m = nums[1];
    if (static_cast<long long>(lines.size()) - 1 != m) {
        throw ParseError(ParseError::Kind::MalformedLine,
                         lines.back().second,
                         "edge line count does not match header");
    }

    std::vector<std::pair<Vertex, Vertex>> edges;
    std::set<std::pair<Vertex, Vertex>> seen;
    edges.reserve(m);
    for (long long i = 1; i <= m; ++i) {
        const auto& [line, lineno] = lines[i];
        if (!parse_ints(line, nums) || nums.size() != 2) {
            throw ParseError(ParseError::Kind::MalformedLine, lineno,
                             "edge line must be \"u v\"");
        }
        long long u = nums[0];
        long long v = nums[1];
        if (u < 0 || v < 0 || u >= n || v >= n) {
            throw ParseError(ParseError::Kind::VertexOutOfRange, lineno,
                             "vertex id out of range");
        }
        if (u == v) {
            throw ParseError(ParseError::Kind::SelfLoop, lineno, "self loop");
        }
        auto uu = static_cast<Vertex>(std::min(u, v));
        auto vv = static_cast<Vertex>(std::max(u, v));
        if (!seen.insert({uu, vv}).second) {
            throw ParseError(ParseError::Kind::DuplicateEdge, lineno, "duplicate edge");
        }
        edges.push_back({uu, vv});
    }
    return Graph(static_cast<int>(n), std::move(edges));
}

std::string write_graph(const Graph& g) {
    std::string out;
    out += std::to_string(g.vertex_count());
    out += ' ';
    out += std::to_string(g.edge_count());
    out += '\n';
    for (auto [u, v] : g.edges()) {
        out += std::to_string(u);
        out += ' ';
        out += std::to_string(v);
        out += '\n';
    }
    return out;
}

Graph make_cycle(int n) {
    if (n < 3) {
        throw std::invalid_argument("cycle needs at least 3 vertices");
    }
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (int i = 0; i + 1 < n; ++i) {
        edges.push_back({i, i + 1});
    }
    edges.push_back({0, n - 1});
    return Graph(n, std::move(edges));
}

Graph make_complete(int n) {
    if (n < 0) {
        throw std::invalid_argument("negative vertex count");
    }
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            edges.push_back({u, v});
        }
    }
    return Graph(n, std::move(edges));
}

Graph make_complete_bipartite(int a, int b) {
    if (a < 0 || b < 0) {
        throw std::invalid_argument("negative side size");
    }
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (int u = 0; u < a; ++u) {
        for (int v = 0; v < b; ++v) {
            edges.push_back({u, a + v});
        }
    }
    return Graph(a + b, std::move(edges));
}

Graph make_star(int leaves) {
    if (leaves < 0) {
        throw std::invalid_argument("negative leaf count");
    }
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (int i = 1; i <= leaves; ++i) {
        edges.push_back({0, i});
    }
    return Graph(leaves + 1, std::move(edges));
}

Graph make_petersen() {
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (int i = 0; i < 5; ++i) {
        edges.push_back({std::min(i, (i + 1) % 5), std::max(i, (i + 1) % 5)});
    }
    for (int i = 0; i < 5; ++i) {
        edges.push_back({i, i + 5});
    }
    for (int i = 0; i < 5; ++i) {
        int a = 5 + i;
        int b = 5 + (i + 2) % 5;
        edges.push_back({std::min(a, b), std::max(a, b)});
    }
    return Graph(10, std::move(edges));
}

Graph make_blowup_c5(int k) {
    if (k < 1) {
        throw std::invalid_argument("blowup factor must be positive");
    }
    std::vector<std::pair<Vertex, Vertex>> edges;
    edges.reserve(5LL * k * k);
    for (int part = 0; part < 5; ++part) {
        int next = (part + 1) % 5;
        for (int a = 0; a < k; ++a) {
            for (int b = 0; b < k; ++b) {
                Vertex u = part * k + a;
                Vertex v = next * k + b;
                edges.push_back({std::min(u, v), std::max(u, v)});
            }
        }
    }
    return Graph(5 * k, std::move(edges));
}

Graph make_random_regular(int n, int r, std::uint64_t seed) {
    if (r < 0 || n <= r) {
        throw std::invalid_argument("need n > r >= 0");
    }
    if ((static_cast<long long>(n) * r) % 2 != 0) {
        throw std::invalid_argument("n*r must be even");
    }
    if (r == 0) {
        return Graph(n, {});
    }

    // Incremental pairing: draw two random stubs, connect them when that
    // makes neither a loop nor a repeat, otherwise redraw. Whole-graph
    // restarts only happen when the leftover stubs admit no legal pair at
    // all, which keeps the procedure practical far beyond the plain
    // shuffle-and-check model.
    const int restarts = 10000;
    Rng rng(seed);
    for (int round = 0; round < restarts; ++round) {
        std::vector<Vertex> stubs(static_cast<std::size_t>(n) * r);
        for (int i = 0; i < n; ++i) {
            std::fill(stubs.begin() + static_cast<std::size_t>(i) * r,
                      stubs.begin() + static_cast<std::size_t>(i + 1) * r, i);
        }
        std::set<std::pair<Vertex, Vertex>> seen;
        std::vector<std::pair<Vertex, Vertex>> edges;
        edges.reserve(stubs.size() / 2);
        auto take = [&](std::size_t i, std::size_t j) {
            auto key = std::minmax(stubs[i], stubs[j]);
            seen.insert({key.first, key.second});
            edges.push_back({key.first, key.second});
            if (i < j) {
                std::swap(i, j);
            }
            stubs[i] = stubs.back();
            stubs.pop_back();
            stubs[j] = stubs.back();
            stubs.pop_back();
        };
        auto legal = [&](std::size_t i, std::size_t j) {
            if (stubs[i] == stubs[j]) {
                return false;
            }
            auto key = std::minmax(stubs[i], stubs[j]);
            return seen.find({key.first, key.second}) == seen.end();
        };
        bool stuck = false;
        while (!stubs.empty()) {
            bool placed = false;
            for (int tries = 0; tries < 100 && !placed; ++tries) {
                std::size_t i = rng.below(stubs.size());
                std::size_t j = rng.below(stubs.size() - 1);
                if (j >= i) {
                    ++j;
                }
                if (legal(i, j)) {
                    take(i, j);
                    placed = true;
                }
            }
            if (!placed) {
                // Random draws keep missing, so the legal pairs are rare or
                // gone; enumerate them and pick uniformly, restart if none.
                std::vector<std::pair<std::size_t, std::size_t>> options;
                for (std::size_t i = 0; i < stubs.size(); ++i) {
                    for (std::size_t j = i + 1; j < stubs.size(); ++j) {
                        if (legal(i, j)) {
                            options.push_back({i, j});
                        }
                    }
                }
                if (options.empty()) {
                    stuck = true;
                    break;
                }
                auto [i, j] = options[rng.below(options.size())];
                take(i, j);
            }
        }
        if (!stuck) {
            return Graph(n, std::move(edges));
        }
    }
    throw std::runtime_error("random regular pairing: restart budget exhausted");
}

Graph make_gnp(int n, double p, std::uint64_t seed) {
    if (n < 0) {
        throw std::invalid_argument("negative vertex count");
    }
    if (!(p >= 0.0 && p <= 1.0)) {
        throw std::invalid_argument("p must lie in [0,1]");
    }
    Rng rng(seed);
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            if (rng.bernoulli(p)) {
                edges.push_back({u, v});
            }
        }
    }
    return Graph(n, std::move(edges));
}

Graph embed_regular(const Graph& g, int r) {
    if (r < g.max_degree()) {
        throw std::invalid_argument("target degree below max degree");
    }
    int n = g.vertex_count();
    std::vector<std::pair<Vertex, Vertex>> edges = g.edges();
    std::vector<int> deg(n);
    for (Vertex v = 0; v < n; ++v) {
        deg[v] = g.degree(v);
    }
    while (true) {
        bool deficient = false;
        for (int d : deg) {
            if (d < r) {
                deficient = true;
                break;
            }
        }
        if (!deficient) {
            break;
        }
        int half = n;
        std::vector<std::pair<Vertex, Vertex>> doubled = edges;
        for (auto [u, v] : edges) {
            doubled.push_back({u + half, v + half});
        }
        edges = std::move(doubled);
        deg.resize(2 * static_cast<std::size_t>(half));
        std::copy(deg.begin(), deg.begin() + half, deg.begin() + half);
        for (Vertex v = 0; v < half; ++v) {
            if (deg[v] < r) {
                edges.push_back({v, v + half});
                ++deg[v];
                ++deg[v + half];
            }
        }
        n = 2 * half;
    }
    return Graph(n, std::move(edges));
}

LocalDensity local_density(const Graph& g, Vertex v, int r) {
    if (v < 0 || v >= g.vertex_count()) {
        throw std::invalid_argument("vertex out of range");
    }
    if (r < g.degree(v)) {
        throw std::invalid_argument("degree budget below actual degree");
    }
    const auto& nb = g.neighbors(v);
    long long inside = 0;
    for (std::size_t i = 0; i < nb.size(); ++i) {
        for (std::size_t j = i + 1; j < nb.size(); ++j) {
            if (g.has_edge(nb[i], nb[j])) {
                ++inside;
            }
        }
    }
    double delta = 1.0;
    if (r >= 2) {
        double cap = static_cast<double>(r) * (r - 1) / 2.0;
        delta = 1.0 - static_cast<double>(inside) / cap;
    }
    return {inside, delta};
}

} // namespace strongcolor
