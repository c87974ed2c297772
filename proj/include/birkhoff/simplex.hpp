#pragma once

#include "birkhoff/rational.hpp"

#include <cstddef>
#include <vector>

namespace birkhoff::lp {

/// maximize c·x subject to A x = b, x >= 0, with b >= 0 and A dense.
struct StandardFormLp {
    std::vector<std::vector<Rational>> a;
    std::vector<Rational> b;
    std::vector<Rational> c;
};

struct LpSolution {
    std::vector<Rational> x;
    Rational value;
    std::vector<std::size_t> basis;  ///< basic column of each retained row
    std::size_t pivots = 0;
};

/**
 * Two-phase tableau simplex in exact arithmetic. Columns enter by most
 * negative reduced cost until a run of degenerate pivots, then by Bland's
 * rule (lowest-indexed improving column, ratio ties leave by lowest basic
 * index) until the objective moves again. Bland's rule cannot cycle, so the
 * method terminates.
 *
 * Phase 1 starts from an all-artificial basis; artificials left basic at zero
 * are pivoted out, and rows where that is impossible are dropped as
 * redundant. Throws std::domain_error when infeasible or unbounded.
 */
LpSolution solve(const StandardFormLp& lp);

}  // namespace birkhoff::lp
