#pragma once

#include "birkhoff/array.hpp"
#include "birkhoff/certify.hpp"
#include "birkhoff/designs.hpp"

#include <cstdint>
#include <vector>

namespace birkhoff::sigma {

/**
 * n x n grid over {0, 1, ..., n}: two nonzero entries in every row and
 * column, each symbol 1..n used exactly twice, and the nonzero cells forming
 * one H-cycle. M(i, j) = k > 0 encodes A(i, j, k) = ½ (k printed 1-based).
 */
class SymbolMatrix {
public:
    SymbolMatrix(int order, std::vector<int> grid);

    int order() const { return order_; }
    int operator()(int row, int col) const { return grid_[static_cast<std::size_t>(row * order_ + col)]; }
    const std::vector<int>& grid() const { return grid_; }

    friend bool operator==(const SymbolMatrix&, const SymbolMatrix&) = default;
    friend auto operator<=>(const SymbolMatrix&, const SymbolMatrix&) = default;

private:
    int order_;
    std::vector<int> grid_;
};

bool is_symbol_matrix(int order, const std::vector<int>& grid);

/// Number of distinct fillings of one H-cycle: (2n-3)! / 2^(n-2).
Integer filling_count(int n);

/**
 * Along the walk (i1,j1), (i2,j1), (i2,j2), ... of H: the first and third
 * cells get symbol 1 and the second gets 2, which plants the triangle
 * {(i1,j1,1), (i2,j2,1), (i2,j1,2)} in Ḡ. The other 2n-3 cells receive a
 * seeded shuffle of the multiset {2, 3, 3, ..., n, n}.
 */
SymbolMatrix build_symbol_matrix(const designs::HCycle& h, std::uint64_t seed);

/// Every distinct filling of H (n <= 5).
std::vector<SymbolMatrix> all_symbol_matrices(const designs::HCycle& h);

/// A(i, j, M(i, j)) = ½ for every nonzero cell of M.
Array3 symbol_matrix_to_array(const SymbolMatrix& m);

struct ConstructedVertex {
    Array3 array;
    certify::VertexCertificate graph_certificate;
    certify::VertexCertificate rank_certificate;
};

/// Random H-cycle, random filling, certified vertex of Σ⁽²⁾ₙ outside T⁽²⁾ₙ.
ConstructedVertex construct_sigma_vertex(int n, std::uint64_t seed);

/// A(i, σ_1(i), ..., σ_d(i)) = 1: the bijection from S_n^d onto T⁽ᵈ⁾ₙ.
Array3 tuple_to_t_array(const std::vector<designs::Permutation>& permutations);

/// True iff A is a 0/1 array with a single one in every coordinate hyperplane.
bool is_t_array(const Array3& a);

}  // namespace birkhoff::sigma
