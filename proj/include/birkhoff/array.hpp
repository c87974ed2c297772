#pragma once

#include "birkhoff/rational.hpp"

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace birkhoff {

enum class PolytopeKind {
    Omega,  ///< every line sums to one
    Sigma,  ///< every coordinate hyperplane sums to one
};

std::string to_string(PolytopeKind kind);
PolytopeKind parse_kind(std::string_view text);

struct PolytopeSpec {
    PolytopeKind kind = PolytopeKind::Omega;
    int n = 0;
    int d = 0;

    friend bool operator==(const PolytopeSpec&, const PolytopeSpec&) = default;
};

/// A position in an [n]^(d+1) array, 0-based.
struct Cell {
    std::vector<int> coords;

    friend auto operator<=>(const Cell&, const Cell&) = default;
    friend bool operator==(const Cell&, const Cell&) = default;
};

/**
 * Dense (d+1)-way array of exact rationals with side length n.
 *
 * Cells are stored row-major: axis 0 varies slowest. For d = 2 the array is
 * n x n x n, a cell is (i, j, k) and the layer A_k is the slice A(., ., k).
 */
class Array3 {
public:
    Array3() = default;
    Array3(int n, int d);

    int n() const { return n_; }
    int d() const { return d_; }
    int axes() const { return d_ + 1; }
    std::size_t size() const { return entries_.size(); }

    /// Distance in linear index between neighbours along `axis`.
    std::size_t stride(int axis) const;

    std::size_t index_of(std::span<const int> coords) const;
    std::size_t index_of(std::initializer_list<int> coords) const {
        return index_of(std::span(coords.begin(), coords.size()));
    }
    Cell cell_of(std::size_t index) const;
    int coord(std::size_t index, int axis) const;

    const Rational& operator[](std::size_t index) const { return entries_[index]; }
    Rational& operator[](std::size_t index) { return entries_[index]; }

    const Rational& at(std::initializer_list<int> coords) const { return entries_[index_of(coords)]; }
    Rational& at(std::initializer_list<int> coords) { return entries_[index_of(coords)]; }
    const Rational& at(const Cell& c) const { return entries_[index_of(c.coords)]; }
    Rational& at(const Cell& c) { return entries_[index_of(c.coords)]; }

    /// The n entries obtained by fixing every coordinate except `axis`.
    /// `fixed` lists the other d coordinates in axis order.
    std::vector<Rational> line(int axis, std::span<const int> fixed) const;
    /// The n^d entries whose `axis` coordinate equals k.
    std::vector<Rational> hyperplane(int axis, int k) const;

    std::span<const Rational> entries() const { return entries_; }

    friend bool operator==(const Array3&, const Array3&) = default;

private:
    int n_ = 0;
    int d_ = 0;
    std::vector<Rational> entries_;
};

/// Linear indices of every line, grouped by varying axis: (d+1)*n^d lines of n cells.
std::vector<std::vector<std::size_t>> line_index_sets(int n, int d);
/// Linear indices of every coordinate hyperplane: (d+1)*n hyperplanes of n^d cells.
std::vector<std::vector<std::size_t>> hyperplane_index_sets(int n, int d);
/// The equality-constraint supports of the polytope (lines or hyperplanes).
std::vector<std::vector<std::size_t>> constraint_sets(const PolytopeSpec& spec);

/// True iff A is nonnegative and every constraint set sums to exactly 1.
/// Throws std::invalid_argument when A's shape differs from the spec.
bool is_member(const Array3& a, const PolytopeSpec& spec);

std::vector<Cell> support(const Array3& a);
std::vector<std::size_t> support_indices(const Array3& a);

/// (n-1)^(d+1). Only defined for Omega; Sigma's dimension comes from the
/// constraint rank (see certify::constraint_rank).
long long affine_dimension(const PolytopeSpec& spec);

/// Order-t Latin square over symbols 0..t-1 (printed as 1..t).
class LatinSquare {
public:
    LatinSquare() = default;
    /// Validates the grid; throws std::invalid_argument if not Latin.
    LatinSquare(int order, std::vector<int> grid);

    /// Builds from 1-based rows, e.g. {{1,2},{2,1}}.
    static LatinSquare from_rows(const std::vector<std::vector<int>>& rows);

    int order() const { return order_; }
    int operator()(int row, int col) const { return grid_[static_cast<std::size_t>(row * order_ + col)]; }
    const std::vector<int>& grid() const { return grid_; }

    friend bool operator==(const LatinSquare&, const LatinSquare&) = default;
    friend auto operator<=>(const LatinSquare&, const LatinSquare&) = default;

private:
    int order_ = 0;
    std::vector<int> grid_;
};

bool is_latin(int order, const std::vector<int>& grid);

/// A(i, j, k) = 1 iff L(i, j) = k.
Array3 latin_to_array(const LatinSquare& latin);
/// Inverse of latin_to_array; throws if A is not a 0/1 array with one 1 per line.
LatinSquare array_to_latin(const Array3& a);

}  // namespace birkhoff
