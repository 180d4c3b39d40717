#pragma once

#include <vector>

#include "strongcolor/graph.hpp"

namespace strongcolor {

// Sylvester-type Hadamard matrix of order 2^k with +1/-1 entries:
// H_0 = [1], H_{k+1} = [[H, H], [H, -H]]. Guarded at k <= 12.
std::vector<std::vector<int>> sylvester_matrix(int k);

// Set system over {0..n-1}, n = 2^k, read off the rows of the Sylvester
// matrix as 0/1 words (+1 -> 1) closed under complement, with the all-ones
// and all-zeros words dropped. The 2(n-1) surviving sets each have size
// n/2, cover every point exactly n-1 times, and intersect pairwise in
// either 0 or n/4 points. Order: matrix rows 1..n-1, then their
// complements. Requires 2 <= k <= 12.
struct HadamardFamily {
    int k = 0;
    int n = 0;                          // 2^k
    std::vector<std::vector<int>> sets; // each sorted ascending
};

HadamardFamily hadamard_family(int k);

struct FamilyCheck {
    bool sizes_ok = false;         // every set has n/2 elements
    bool frequency_ok = false;     // every point lies in n-1 sets
    bool intersections_ok = false; // pairwise meets are 0 or n/4
    bool all() const { return sizes_ok && frequency_ok && intersections_ok; }
};

FamilyCheck check_family(const HadamardFamily& fam);

// Density witness built on the family: vertices u, v, two indexed copies
// x_i / x'_i of {0..n-1}, and one vertex y_j per set S_j joined to S_j in
// both copies. Layout: u=0, v=1, x_i=2+i, x'_i=2+n+i, y_j=2+2n+j. The graph
// is (n+1)-regular except on the y side, has 4n vertices and
// 1 + 2n + (2n-2)n edges, and edge uv has edge id 0.
Graph build_extremal_graph(int k);

struct ExtremalReport {
    int k = 0;
    int delta = 0;       // n + 1
    long long m_uv = 0;  // edge pairs at distance <= 1 inside N^s(uv)
    double ratio = 0.0;  // m_uv / delta^4, increasing in k toward 1.5
    long long xy_edges = 0; // (2n-2) * n
};

// Census of the uv edge of the witness graph. The m_uv computation is a
// quadratic pair loop over all edges, so the report is guarded by an edge
// pair budget (k <= 7 passes, larger k throws).
ExtremalReport extremal_report(int k);

} // namespace strongcolor
