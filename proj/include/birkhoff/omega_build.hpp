#pragma once

#include "birkhoff/array.hpp"
#include "birkhoff/certify.hpp"
#include "birkhoff/designs.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace birkhoff::omega {

using GridCell = std::pair<int, int>;  ///< (row, column)

/**
 * A tristochastic array under construction, filled layer by layer with ½
 * entries. Layers are 0-based: with m = n/2, layers 0..m-1 come from the
 * double Latin square, layer m joins their cycles, layer m+1 plants an odd
 * cycle, and layers m+2..n-1 are 2-factors of the remaining shaft graph.
 */
struct PartialArray {
    Array3 array;
    std::vector<char> decided;   ///< per layer
    std::vector<GridCell> planted;  ///< x', w, y' of the odd-cycle layer, once planted

    int n() const { return array.n(); }
    /// Number of ½ entries in the shaft A(i, j, .).
    int shaft_count(int i, int j) const;
    /// K: edge (i, j) iff the shaft A(i, j, .) holds exactly one ½ entry.
    designs::BipartiteGraph single_shafts() const;
    void set_layer(int layer, const designs::BipartiteGraph& cells);
};

/// Layers 0..n/2-1 with A(i, j, k) = ½ iff X(i, j) = k. Throws PreconditionError
/// unless X is Hamiltonian.
PartialArray build_top_half(const designs::DoubleLatinSquare& x);

/// One cell per symbol l (X = l), no two sharing a row or column. Greedy in
/// symbol order with seeded tie-breaking; always succeeds.
std::vector<GridCell> select_rainbow_transversal(const designs::DoubleLatinSquare& x, std::uint64_t seed);

/// A permutation τ with τ(row) = col for every input cell; the free rows are
/// matched to the free columns at random. Throws PreconditionError if two
/// cells share a row or column.
designs::Permutation extend_to_permutation(const std::vector<GridCell>& cells, int n, std::uint64_t seed);

/**
 * σ with σ(i) != τ(i) everywhere and P_τ + P_σ a single 2n-cycle. Built from
 * a random cyclic order r_0, ..., r_{n-1} of the rows as σ(r_a) = τ(r_{a+1}),
 * so each of the (n-1)! cyclic orders gives a distinct valid σ.
 */
designs::Permutation choose_single_cycle_partner(const designs::Permutation& tau, std::uint64_t seed);

/// Sets layer n/2 to ½(P_τ + P_σ).
void place_connecting_layer(PartialArray& partial, const designs::Permutation& tau, const designs::Permutation& sigma);

/**
 * Decides layer n/2+1. Picks x = (x1,x2,k), y = (y1,y2,k) at odd distance >= 3
 * on a top-layer cycle whose shafts avoid layer n/2, and w = (x1,y2) or
 * (y1,x2) also avoiding it; the path x', w, y' closes an odd cycle through x
 * and y. The layer is completed to two ½ per row and column by a 2-factor of
 * K containing that path.
 *
 * Throws PreconditionError for n < 6 or undecided earlier layers, and
 * ConstructionError when no admissible pair exists.
 */
PartialArray plant_odd_cycle(PartialArray partial, std::uint64_t seed);

/// Decides layers n/2+2..n-1 as 2-factors of K, which must be (n-4)-regular.
Array3 fill_remaining_layers(PartialArray partial, std::uint64_t seed);

struct ConstructedVertex {
    Array3 array;
    certify::VertexCertificate graph_certificate;
    certify::VertexCertificate rank_certificate;
};

/// Runs every stage for any even n >= 6 without certifying the result.
/// Small n may fail with ConstructionError; the output is never invalid.
Array3 run_pipeline(int n, std::uint64_t seed);

/// A certified non-Latin vertex of Ω⁽²⁾ₙ; n even and >= 10.
ConstructedVertex construct_vertex(int n, std::uint64_t seed);

/// Two ½ entries per line without a planted odd cycle: the top half of a random
/// Hamiltonian double Latin square and random 2-factors below. Even n >= 4.
Array3 random_two_half_array(int n, std::uint64_t seed);

struct VertexRate {
    std::size_t samples = 0;
    std::size_t vertices = 0;
};

/// How many random_two_half_array samples (seeds seed, seed+1, ...) are vertices.
/// Measured only; nothing is expected of the ratio.
VertexRate empirical_vertex_rate(int n, std::size_t samples, std::uint64_t seed);

}  // namespace birkhoff::omega
