#include "birkhoff/support_graph.hpp"

#include <algorithm>
#include <deque>

namespace birkhoff::certify {

SupportGraph SupportGraph::build(const Array3& a, AdjacencyMode mode) {
    SupportGraph g;
    g.mode_ = mode;
    std::vector<std::size_t> local(a.size(), a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (sgn(a[i]) > 0 && a[i] < 1) {
            local[i] = g.cells_.size();
            g.cells_.push_back(i);
        }
    }
    g.adjacency_.resize(g.cells_.size());
    const auto sets = mode == AdjacencyMode::Line ? line_index_sets(a.n(), a.d())
                                                  : hyperplane_index_sets(a.n(), a.d());
    std::vector<std::size_t> present;
    for (const auto& set : sets) {
        present.clear();
        for (auto idx : set) {
            if (local[idx] != a.size()) {
                present.push_back(local[idx]);
            }
        }
        for (std::size_t x = 0; x < present.size(); ++x) {
            for (std::size_t y = x + 1; y < present.size(); ++y) {
                g.adjacency_[present[x]].push_back(present[y]);
                g.adjacency_[present[y]].push_back(present[x]);
            }
        }
    }
    for (auto& nb : g.adjacency_) {
        std::sort(nb.begin(), nb.end());
        nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
    }
    g.colour_components();
    return g;
}

std::size_t SupportGraph::edge_count() const {
    std::size_t twice = 0;
    for (const auto& nb : adjacency_) {
        twice += nb.size();
    }
    return twice / 2;
}

bool SupportGraph::is_bipartite() const {
    return std::all_of(components_.begin(), components_.end(), [](const Component& c) { return c.bipartite; });
}

bool SupportGraph::has_bipartite_component() const {
    return std::any_of(components_.begin(), components_.end(), [](const Component& c) { return c.bipartite; });
}

bool SupportGraph::is_regular(std::size_t degree) const {
    return std::all_of(adjacency_.begin(), adjacency_.end(),
                       [degree](const auto& nb) { return nb.size() == degree; });
}

void SupportGraph::colour_components() {
    const std::size_t none = cells_.size();
    colour_.assign(cells_.size(), -1);
    component_id_.assign(cells_.size(), none);
    std::vector<std::size_t> parent(cells_.size(), none);
    for (std::size_t root = 0; root < cells_.size(); ++root) {
        if (colour_[root] != -1) {
            continue;
        }
        Component comp;
        const std::size_t id = components_.size();
        std::deque<std::size_t> queue{root};
        colour_[root] = 0;
        component_id_[root] = id;
        while (!queue.empty()) {
            const std::size_t u = queue.front();
            queue.pop_front();
            comp.members.push_back(u);
            for (auto v : adjacency_[u]) {
                if (colour_[v] == -1) {
                    colour_[v] = 1 - colour_[u];
                    component_id_[v] = id;
                    parent[v] = u;
                    queue.push_back(v);
                } else if (colour_[v] == colour_[u] && comp.bipartite) {
                    comp.bipartite = false;
                    // Odd cycle: tree paths from u and v up to their common ancestor, plus edge uv.
                    std::vector<std::size_t> up_u{u};
                    std::vector<std::size_t> up_v{v};
                    while (up_u.back() != up_v.back()) {
                        // BFS tree depths of u and v are equal (same colour, adjacent in BFS order).
                        up_u.push_back(parent[up_u.back()]);
                        up_v.push_back(parent[up_v.back()]);
                    }
                    comp.odd_cycle = up_u;
                    for (std::size_t t = up_v.size() - 1; t-- > 0;) {
                        comp.odd_cycle.push_back(up_v[t]);
                    }
                }
            }
        }
        std::sort(comp.members.begin(), comp.members.end());
        components_.push_back(std::move(comp));
    }
}

}  // namespace birkhoff::certify
