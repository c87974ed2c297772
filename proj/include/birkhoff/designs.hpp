#pragma once

#include "birkhoff/array.hpp"
#include "birkhoff/json_io.hpp"
#include "birkhoff/rng.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace birkhoff::designs {

/// A permutation of {0, ..., n-1} in one-line notation: p[i] is the image of i.
using Permutation = std::vector<int>;

bool is_permutation(const Permutation& p);
/// True iff p consists of a single cycle through all of its points.
bool is_single_cycle(const Permutation& p);

// ---------------------------------------------------------------- Latin squares

/// Random order-t Latin square, filled row by row with randomized backtracking
/// and restarts. Deterministic in (t, seed); not uniformly distributed.
LatinSquare random_latin(int t, std::uint64_t seed);
LatinSquare random_latin(int t, Rng& rng);

/// Number of order-t Latin squares by exhaustive backtracking (t <= 5).
std::uint64_t count_latin(int t);

Json latin_to_json(const LatinSquare& latin);

// ---------------------------------------------------------------- H-cycles

/**
 * The cell set {(i1,j1), (i2,j1), (i2,j2), ..., (in,jn), (i1,jn)} of two
 * permutations I and J, i.e. a Hamiltonian cycle of K_{n,n} read as an
 * alternating row/column walk.
 *
 * Stored in canonical form: the lexicographically least (I, J) among the 2n
 * rotations and reversals describing the same cycle, so equal cell sets give
 * equal objects.
 */
class HCycle {
public:
    HCycle(std::vector<int> rows, std::vector<int> cols);

    int order() const { return static_cast<int>(rows_.size()); }
    const std::vector<int>& rows() const { return rows_; }
    const std::vector<int>& cols() const { return cols_; }

    /// The 2n cells in walk order: (i1,j1), (i2,j1), (i2,j2), (i3,j2), ..., (i1,jn).
    std::vector<std::pair<int, int>> cells() const;

    friend bool operator==(const HCycle&, const HCycle&) = default;
    friend auto operator<=>(const HCycle&, const HCycle&) = default;

private:
    std::vector<int> rows_;
    std::vector<int> cols_;
};

HCycle random_h_cycle(int n, Rng& rng);

/// n! (n-1)! / 2, the number of distinct H-cycles on [n]^2.
Integer count_h_cycles(int n);

/// Every H-cycle of order n (n <= 5), sorted.
std::vector<HCycle> enumerate_h_cycles(int n);

// ---------------------------------------------------------------- double Latin squares

/// Even order n, symbols 0..n/2-1, each exactly twice in every row and column.
class DoubleLatinSquare {
public:
    DoubleLatinSquare(int order, std::vector<int> grid);

    int order() const { return order_; }
    int symbols() const { return order_ / 2; }
    int operator()(int row, int col) const { return grid_[static_cast<std::size_t>(row * order_ + col)]; }
    const std::vector<int>& grid() const { return grid_; }

    /// Cells holding `symbol` in walk order if they form an H-cycle, else empty.
    std::vector<std::pair<int, int>> symbol_cycle(int symbol) const;

    friend bool operator==(const DoubleLatinSquare&, const DoubleLatinSquare&) = default;

private:
    int order_;
    std::vector<int> grid_;
};

bool is_double_latin(int order, const std::vector<int>& grid);

/// Block matrix [[A, B], [σ(A), B]] where row σ(r) of σ(A) is row r of A.
/// Throws PreconditionError unless A, B share an order and σ is one cycle on it.
DoubleLatinSquare double_latin_from(const LatinSquare& a, const LatinSquare& b, const Permutation& sigma);

/// True iff the cells of every symbol form a single H-cycle.
bool is_hamiltonian(const DoubleLatinSquare& x);

/// double_latin_from with random Latin squares and a random cyclic σ.
DoubleLatinSquare random_hamiltonian_double_latin(int n, std::uint64_t seed);

Json double_latin_to_json(const DoubleLatinSquare& x);

// ---------------------------------------------------------------- bipartite graphs

/// Bipartite graph with n left (rows) and n right (columns) vertices.
class BipartiteGraph {
public:
    explicit BipartiteGraph(int n = 0) : n_(n), adj_(static_cast<std::size_t>(n * n), 0) {}

    int order() const { return n_; }
    bool has_edge(int left, int right) const { return adj_[index(left, right)] != 0; }
    void set_edge(int left, int right, bool present = true) { adj_[index(left, right)] = present ? 1 : 0; }

    int left_degree(int left) const;
    int right_degree(int right) const;
    std::size_t edge_count() const;
    /// Common degree of every vertex, or nullopt if irregular.
    std::optional<int> regular_degree() const;

    friend bool operator==(const BipartiteGraph&, const BipartiteGraph&) = default;

private:
    std::size_t index(int left, int right) const { return static_cast<std::size_t>(left * n_ + right); }

    int n_;
    std::vector<char> adj_;
};

/// match[left] = right. Perfect matchings only: nullopt when none exists.
using Matching = std::vector<int>;

/**
 * Perfect matching by augmenting paths. With an Rng the vertex and
 * neighbour orders are shuffled, otherwise they are ascending.
 */
std::optional<Matching> perfect_matching(const BipartiteGraph& g, Rng* rng = nullptr);

/// Same, restricted to the vertices with allowed flags set (equal counts per side).
std::optional<std::vector<std::pair<int, int>>> perfect_matching_on(const BipartiteGraph& g,
                                                                     const std::vector<char>& left_allowed,
                                                                     const std::vector<char>& right_allowed,
                                                                     Rng* rng = nullptr);

enum class Side { Left, Right };

/// Path x1 x2 x3 x4 alternating sides, x1 on `first_side`.
struct BipartitePath {
    Side first_side = Side::Left;
    std::array<int, 4> vertices{};

    /// The three edges as (left, right) pairs.
    std::array<std::pair<int, int>, 3> edges() const;
};

/// True iff every vertex has degree exactly 2 in f and f is a subgraph of g.
bool is_two_factor_of(const BipartiteGraph& f, const BipartiteGraph& g);

/**
 * A 2-factor of an (n-2)-regular bipartite g (n >= 6) containing the three
 * edges of `path`: Φ ∪ Ψ ∪ path with Φ a perfect matching avoiding the path
 * vertices and Ψ one avoiding x2, x3 and Φ. Retries Φ under the seed and, if
 * no Ψ is found, completes the path by a degree-constrained flow instead.
 */
BipartiteGraph two_factor_containing_path(const BipartiteGraph& g, const BipartitePath& path, std::uint64_t seed);

/// Union of two edge-disjoint perfect matchings of a k-regular g, k even >= 2.
BipartiteGraph extract_two_factor(const BipartiteGraph& g, Rng* rng = nullptr);

/// Random k-regular bipartite graph: the cells of k symbols of a random Latin square.
BipartiteGraph random_regular_bipartite(int n, int k, Rng& rng);

}  // namespace birkhoff::designs
