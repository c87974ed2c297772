#pragma once

#include "birkhoff/json_io.hpp"
#include "birkhoff/rational.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <optional>
#include <vector>

namespace birkhoff::bounds {

/// At least 60 significant decimal digits.
using BigReal = boost::multiprecision::number<boost::multiprecision::cpp_bin_float<60>>;

class SquareMatrix {
public:
    explicit SquareMatrix(int n = 0) : n_(n), entries_(static_cast<std::size_t>(n * n), Rational(0)) {}
    static SquareMatrix from_rows(const std::vector<std::vector<Rational>>& rows);

    int order() const { return n_; }
    Rational& operator()(int r, int c) { return entries_[static_cast<std::size_t>(r * n_ + c)]; }
    const Rational& operator()(int r, int c) const { return entries_[static_cast<std::size_t>(r * n_ + c)]; }

    bool is_zero_one() const;
    bool is_doubly_stochastic() const;
    int row_ones(int r) const;

private:
    int n_;
    std::vector<Rational> entries_;
};

inline constexpr int kMaxPermanentOrder = 20;

/// Exact permanent by Ryser's formula with Gray-code subset order (n <= 20).
Rational permanent(const SquareMatrix& m);

/// n! / n^n, the minimum permanent over n x n doubly stochastic matrices.
Rational vdw_lower_bound(int n);

/// Π (r_i!)^(1/r_i) over the rows of a 0/1 matrix, rounded upward; 0 if a row is empty.
BigReal bregman_upper_bound(const SquareMatrix& m);

/// Exact test of per <= Π (r_i!)^(1/r_i), comparing per^L with Π (r_i!)^(L/r_i)
/// for L the lcm of the row counts.
bool within_bregman_bound(const SquareMatrix& m, const Rational& per);

/// ln of (n/e^2)^(n^2), the leading-order scale of the number of Latin squares.
double latin_asymptotic_log(int n);

/// ln of (k(k-1)/(e^2 √2))^n, the leading-order 2-factor count of a k-regular (n,n) bipartite graph.
double two_factor_lower_bound_log(int k, int n);

/// Latin squares counted layer by layer: choices for each layer are perfect
/// matchings of the cells still free, and the last free layer pair is counted
/// by a permanent. n <= 5.
Integer count_latin_by_layers(int n);

/// Known-exact L_t from exhaustive counting (t <= 5), else nullopt.
std::optional<Integer> exact_latin_count(int t);

struct ConstructionCountReport {
    int n = 0;
    /// ln((n/2 - 1)! L_{n/2}^2): Hamiltonian double Latin squares from block matrices.
    double log_top_half = 0;
    bool top_half_exact = false;        ///< L_{n/2} known exactly
    std::optional<Integer> top_half_count;
    /// Sum over even k in [2, n-4] of ln of the 2-factor bound for k-regular K.
    double log_bottom_half = 0;
    double log_total = 0;
    double log_latin_reference = 0;      ///< n^2 ln(n/e^2)
    double log_three_halves_reference = 0;
};

ConstructionCountReport construction_count_report(int n);

Json report_to_json(const ConstructionCountReport& report);

SquareMatrix matrix_from_json(const Json& doc);

}  // namespace birkhoff::bounds
