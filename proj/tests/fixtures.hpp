#pragma once

#include "eglocal/graph.hpp"

namespace fixtures {

using eglocal::Graph;

inline Graph paw() { return Graph(4, {{0, 1}, {0, 2}, {1, 2}, {0, 3}}); }
inline Graph chain33() { return Graph(6, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {3, 4}, {3, 5}, {4, 5}}); }
inline Graph diamond() { return Graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}}); }
inline Graph star3() { return Graph(4, {{0, 1}, {0, 2}, {0, 3}}); }
inline Graph c4() { return Graph(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}}); }
inline Graph p4() { return Graph(4, {{0, 1}, {1, 2}, {2, 3}}); }
inline Graph k(int n) {
    std::vector<eglocal::Edge> edges;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) edges.push_back({a, b});
    return Graph(n, edges);
}
inline Graph k3k3() { return Graph(6, {{0, 1}, {0, 2}, {1, 2}, {3, 4}, {3, 5}, {4, 5}}); }

}  // namespace fixtures
