#pragma once

#include "birkhoff/designs.hpp"

#include "generators.hpp"

#include <vector>

namespace gen {

/// A random 3-edge path x1 x2 x3 x4 in g starting on a random side.
inline birkhoff::designs::BipartitePath random_path(const birkhoff::designs::BipartiteGraph& g, Source& src) {
    const int n = g.order();
    const bool left_first = src.integer(0, 1) == 0;
    auto adjacent = [&](int v, bool v_left, int avoid) {
        std::vector<int> out;
        for (int u = 0; u < n; ++u) {
            if (u != avoid && (v_left ? g.has_edge(v, u) : g.has_edge(u, v))) {
                out.push_back(u);
            }
        }
        return out[static_cast<std::size_t>(src.integer(0, static_cast<long>(out.size()) - 1))];
    };
    birkhoff::designs::BipartitePath p;
    p.first_side = left_first ? birkhoff::designs::Side::Left : birkhoff::designs::Side::Right;
    p.vertices[0] = static_cast<int>(src.integer(0, n - 1));
    p.vertices[1] = adjacent(p.vertices[0], left_first, -1);
    p.vertices[2] = adjacent(p.vertices[1], !left_first, p.vertices[0]);
    p.vertices[3] = adjacent(p.vertices[2], left_first, p.vertices[1]);
    return p;
}

inline bool contains_path(const birkhoff::designs::BipartiteGraph& f, const birkhoff::designs::BipartitePath& p) {
    for (const auto& [l, r] : p.edges()) {
        if (!f.has_edge(l, r)) {
            return false;
        }
    }
    return true;
}

}  // namespace gen
