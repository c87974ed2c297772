#include "birkhoff/bounds.hpp"
#include "birkhoff/designs.hpp"
#include "birkhoff/errors.hpp"

#include "generators.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

using namespace birkhoff;
using namespace birkhoff::bounds;

namespace {

SquareMatrix constant_matrix(int n, const Rational& v) {
    return SquareMatrix::from_rows(std::vector<std::vector<Rational>>(static_cast<std::size_t>(n), std::vector<Rational>(static_cast<std::size_t>(n), v)));
}

SquareMatrix identity(int n) {
    SquareMatrix m(n);
    for (int i = 0; i < n; ++i) {
        m(i, i) = 1;
    }
    return m;
}

BigReal to_big(const Rational& q) { return BigReal(q.get_num().get_str()) / BigReal(q.get_den().get_str()); }

}  // namespace

TEST(Permanent, SmallExamples) {
    EXPECT_EQ(permanent(identity(3)), 1);
    EXPECT_EQ(permanent(constant_matrix(3, 1)), 6);
    EXPECT_EQ(permanent(constant_matrix(3, Rational(1, 3))), Rational(2, 9));
    EXPECT_EQ(permanent(constant_matrix(4, 1)), 24);
    EXPECT_EQ(permanent(SquareMatrix(0)), 1);
}

TEST(Permanent, RyserMatchesDefinition) {
    gen::Source src(1);
    for (int trial = 0; trial < 300; ++trial) {
        const int n = static_cast<int>(src.integer(1, 5));
        std::vector<std::vector<Rational>> rows(static_cast<std::size_t>(n), std::vector<Rational>(static_cast<std::size_t>(n)));
        for (auto& row : rows) {
            for (auto& v : row) {
                v = src.rational(9, 7);
            }
        }
        EXPECT_EQ(permanent(SquareMatrix::from_rows(rows)), oracle::naive_permanent(rows));
    }
}

TEST(Permanent, RejectsLargeOrders) {
    EXPECT_THROW(permanent(SquareMatrix(kMaxPermanentOrder + 1)), PreconditionError);
}

TEST(VanDerWaerden, FormulaAndInequality) {
    EXPECT_EQ(vdw_lower_bound(3), Rational(2, 9));
    EXPECT_EQ(vdw_lower_bound(1), 1);
    gen::Source src(2);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = static_cast<int>(src.integer(1, 7));
        const auto m = SquareMatrix::from_rows(src.doubly_stochastic(n, static_cast<int>(src.integer(1, 6))));
        ASSERT_TRUE(m.is_doubly_stochastic());
        EXPECT_GE(permanent(m), vdw_lower_bound(n));
    }
}

TEST(Bregman, ExamplesAndEquality) {
    const auto j3 = constant_matrix(3, 1);
    const BigReal b = bregman_upper_bound(j3);
    EXPECT_GE(b, BigReal(6));
    EXPECT_LT(b - 6, BigReal("1e-40"));
    EXPECT_TRUE(within_bregman_bound(j3, 6));
    EXPECT_FALSE(within_bregman_bound(j3, 7));
    EXPECT_LT(abs(bregman_upper_bound(identity(5)) - 1), BigReal("1e-40"));
    SquareMatrix empty_row = identity(3);
    empty_row(1, 1) = 0;
    EXPECT_EQ(bregman_upper_bound(empty_row), BigReal(0));
    EXPECT_TRUE(within_bregman_bound(empty_row, 0));
}

TEST(Bregman, HoldsOnRandomZeroOneMatrices) {
    gen::Source src(3);
    for (int trial = 0; trial < 500; ++trial) {
        const int n = static_cast<int>(src.integer(1, 8));
        const auto m = SquareMatrix::from_rows(src.zero_one(n, static_cast<int>(src.integer(20, 95))));
        const Rational per = permanent(m);
        EXPECT_TRUE(within_bregman_bound(m, per));
        EXPECT_LE(to_big(per), bregman_upper_bound(m));
    }
}

TEST(Bregman, SandwichOnRegularMatrices) {
    Rng rng(4);
    for (int trial = 0; trial < 60; ++trial) {
        const int n = 2 + static_cast<int>(rng.below(7));
        const int k = 1 + static_cast<int>(rng.below(static_cast<std::size_t>(n)));
        const auto g = designs::random_regular_bipartite(n, k, rng);
        SquareMatrix m(n), scaled(n);
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) {
                m(i, j) = g.has_edge(i, j) ? 1 : 0;
                scaled(i, j) = g.has_edge(i, j) ? Rational(1, k) : Rational(0);
            }
        }
        const Rational per = permanent(m);
        EXPECT_TRUE(within_bregman_bound(m, per));
        EXPECT_GE(permanent(scaled), vdw_lower_bound(n));
    }
}

TEST(LatinAsymptotic, Formula) {
    EXPECT_NEAR(latin_asymptotic_log(3), 9 * (std::log(3.0) - 2), 1e-12);
    EXPECT_NEAR(latin_asymptotic_log(3), -8.1124, 1e-4);
    EXPECT_NEAR(latin_asymptotic_log(4), 16 * (std::log(4.0) - 2), 1e-12);
    EXPECT_NEAR(latin_asymptotic_log(1), -2.0, 1e-12);
}

TEST(TwoFactorBound, FormulaAndExhaustiveCount) {
    const double e2 = std::exp(2.0);
    EXPECT_NEAR(two_factor_lower_bound_log(2, 1), std::log(2 / (e2 * std::numbers::sqrt2)), 1e-12);
    std::vector<std::pair<int, int>> k33;
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            k33.emplace_back(i, j);
        }
    }
    const auto exact = oracle::count_two_factors(3, k33);
    EXPECT_EQ(exact, 6u);
    EXPECT_GE(std::log(static_cast<double>(exact)), two_factor_lower_bound_log(3, 3));
    for (int k = 2; k < 12; ++k) {
        EXPECT_LT(two_factor_lower_bound_log(k, 5), two_factor_lower_bound_log(k + 1, 5));
    }
}

TEST(LayerCounting, ReproducesExhaustiveCounts) {
    for (int n = 1; n <= 5; ++n) {
        EXPECT_EQ(count_latin_by_layers(n), Integer(static_cast<unsigned long>(oracle::count_latin_cells(n))));
    }
    EXPECT_EQ(exact_latin_count(4), Integer(576));
    EXPECT_FALSE(exact_latin_count(6).has_value());
}

TEST(CountReport, ComponentsAddUp) {
    const auto r = construction_count_report(10);
    EXPECT_TRUE(std::isfinite(r.log_top_half));
    EXPECT_TRUE(std::isfinite(r.log_bottom_half));
    EXPECT_TRUE(std::isfinite(r.log_latin_reference));
    EXPECT_TRUE(std::isfinite(r.log_three_halves_reference));
    EXPECT_NEAR(r.log_total, r.log_top_half + r.log_bottom_half, 1e-9);
    EXPECT_NEAR(r.log_three_halves_reference, 1.5 * r.log_latin_reference, 1e-9);
}

TEST(CountReport, OrderFourTopHalf) {
    const auto r = construction_count_report(4);
    ASSERT_TRUE(r.top_half_count.has_value());
    EXPECT_EQ(*r.top_half_count, 4);
    EXPECT_NEAR(r.log_top_half, std::log(4.0), 1e-12);
    EXPECT_THROW(construction_count_report(7), PreconditionError);
}

TEST(MatrixJson, AcceptsBothShapes) {
    const auto a = matrix_from_json(Json::parse(R"([[1, "1/2"], [0, 1]])"));
    EXPECT_EQ(a(0, 1), Rational(1, 2));
    const auto b = matrix_from_json(Json::parse(R"({"entries": [[1, 0], [0, 1]]})"));
    EXPECT_EQ(permanent(b), 1);
    EXPECT_THROW(matrix_from_json(Json::parse(R"([[1, 0], [0]])")), std::invalid_argument);
}
