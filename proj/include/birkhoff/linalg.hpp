#pragma once

#include "birkhoff/rational.hpp"

#include <cstddef>
#include <vector>

namespace birkhoff::linalg {

/// Dense row-major matrix of arbitrary-precision integers.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Integer& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Integer& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    IntMatrix transposed() const;
    void swap_rows(std::size_t a, std::size_t b);

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Integer> data_;
};

/// Result of fraction-free (Bareiss) forward elimination.
struct Echelon {
    IntMatrix reduced;                 ///< upper echelon form, pivot rows first
    std::vector<std::size_t> pivots;   ///< pivot column of each leading row
    std::size_t rank() const { return pivots.size(); }
};

/// Bareiss elimination with row pivoting; every division is exact.
Echelon bareiss_echelon(IntMatrix m);

inline std::size_t exact_rank(const IntMatrix& m) { return bareiss_echelon(m).rank(); }

/// Rank over GF(2^61 - 1). Never exceeds the rational rank, so a full column
/// rank result here proves full column rank over Q.
std::size_t rank_mod_prime(const IntMatrix& m);

/// Primitive integer basis of {x : m x = 0}, one vector per free column.
std::vector<std::vector<Integer>> kernel_basis(const IntMatrix& m);

/// Indices of a maximal linearly independent subset of rows (earliest first).
std::vector<std::size_t> independent_rows(const IntMatrix& m);

/// Divides a nonzero integer vector by the gcd of its entries.
void make_primitive(std::vector<Integer>& v);

}  // namespace birkhoff::linalg
