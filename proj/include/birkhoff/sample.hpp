#pragma once

#include "birkhoff/array.hpp"
#include "birkhoff/certify.hpp"
#include "birkhoff/json_io.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace birkhoff::sample {

/// One coefficient per cell, in linear cell order.
struct Objective {
    PolytopeSpec spec;
    std::uint64_t seed = 0;
    std::vector<Rational> coefficients;
};

/// Standard normal draws (Box-Muller over mt19937_64) rounded to multiples of 2^-32.
Objective gaussian_objective(const PolytopeSpec& spec, std::uint64_t seed);

/// c·A, exactly.
Rational objective_value(const Objective& c, const Array3& a);

struct Optimum {
    Array3 point;
    Rational value;
    certify::VertexCertificate certificate;  ///< from the rank test
    std::size_t pivots = 0;
};

/**
 * Maximizes c over the polytope with the exact simplex. Redundant equality
 * rows are dropped before Phase 1. Throws AssertionFailure if the optimum
 * fails membership, the rank test, or beats no uniform array.
 */
Optimum maximize(const PolytopeSpec& spec, const Objective& c);

/// n^(d+1) - (n-1)^(d+1). Omega only.
long long support_bound(const PolytopeSpec& spec);

struct Trial {
    std::size_t index = 0;
    std::uint64_t seed = 0;
    std::size_t support = 0;
    double alpha = 0;  ///< support / n^2
    Rational value;
    bool rank_vertex = false;
    bool permutation = false;  ///< meaningful for d = 1
};

struct SampleReport {
    PolytopeSpec spec;
    std::uint64_t seed = 0;
    std::vector<Trial> trials;
    long long bound = 0;
    double mean_alpha = 0;
    double min_alpha = 0;
    double max_alpha = 0;
    std::size_t bound_violations = 0;
    std::string caveat;
};

/// Trial t uses seed + t. Throws PreconditionError for trials == 0 and
/// AssertionFailure if any support exceeds the bound.
SampleReport run_experiment(const PolytopeSpec& spec, std::size_t trials, std::uint64_t seed);

Json report_to_json(const SampleReport& report);

/// Natural logs of the three upper bounds on the number of Omega vertices.
struct VertexCountBound {
    double log_binomial = 0;      ///< ln C(n^(d+1), min((d+1)n^d, n^(d+1)))
    double log_relaxation = 0;    ///< (d+1)n^d ln(ne/(d+1))
    double log_power = 0;         ///< (d+1)n^d ln n
};

VertexCountBound vertex_count_upper_bound(int n, int d);

}  // namespace birkhoff::sample
