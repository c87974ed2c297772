#pragma once

#include "birkhoff/array.hpp"

#include <cstddef>
#include <vector>

namespace birkhoff::certify {

enum class AdjacencyMode {
    Line,        ///< G(A): cells adjacent when they share a line
    Hyperplane,  ///< Ḡ(A): cells adjacent when they share a coordinate hyperplane
};

struct Component {
    std::vector<std::size_t> members;     ///< local vertex ids
    bool bipartite = true;
    std::vector<std::size_t> odd_cycle;   ///< first odd cycle found (local ids), empty if bipartite
};

/**
 * Graph on the fractional support of an array (entries strictly between 0
 * and 1). Unit entries are omitted: every other cell of their lines or
 * hyperplanes is zero, so they would only add isolated vertices that no
 * perturbation can move.
 *
 * Components are 2-coloured by BFS on construction.
 */
class SupportGraph {
public:
    static SupportGraph build(const Array3& a, AdjacencyMode mode);

    AdjacencyMode mode() const { return mode_; }
    std::size_t vertex_count() const { return cells_.size(); }
    std::size_t edge_count() const;

    /// Linear array index of local vertex v.
    std::size_t cell_index(std::size_t v) const { return cells_[v]; }
    const std::vector<std::size_t>& cell_indices() const { return cells_; }
    const std::vector<std::size_t>& neighbours(std::size_t v) const { return adjacency_[v]; }

    const std::vector<Component>& components() const { return components_; }
    std::size_t component_of(std::size_t v) const { return component_id_[v]; }
    /// BFS parity; a proper 2-colouring on bipartite components.
    int colour(std::size_t v) const { return colour_[v]; }

    bool is_connected() const { return components_.size() <= 1; }
    bool is_bipartite() const;
    bool has_bipartite_component() const;
    /// True iff every vertex has exactly `degree` neighbours.
    bool is_regular(std::size_t degree) const;

private:
    void colour_components();

    AdjacencyMode mode_ = AdjacencyMode::Line;
    std::vector<std::size_t> cells_;
    std::vector<std::vector<std::size_t>> adjacency_;
    std::vector<Component> components_;
    std::vector<std::size_t> component_id_;
    std::vector<int> colour_;
};

}  // namespace birkhoff::certify
