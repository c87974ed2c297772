#include "birkhoff/sample.hpp"

#include "birkhoff/errors.hpp"
#include "birkhoff/rng.hpp"
#include "birkhoff/simplex.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>

namespace birkhoff::sample {

namespace {

constexpr double kScale = 4294967296.0;  // 2^32

const char* const kCaveat =
    "optima of random Gaussian objectives are not uniformly distributed over the vertices; "
    "alpha statistics describe this sampling distribution only";

long long ipow(long long base, int exp) {
    long long r = 1;
    for (int i = 0; i < exp; ++i) {
        r *= base;
    }
    return r;
}

Rational rationalize(double z) {
    Rational q(Integer(static_cast<long>(std::llround(z * kScale))), Integer(1) << 32);
    q.canonicalize();
    return q;
}

/// Independent constraint rows per spec, computed once.
const std::vector<std::vector<std::size_t>>& reduced_constraints(const PolytopeSpec& spec) {
    static std::map<std::tuple<int, int, int>, std::vector<std::vector<std::size_t>>> cache;
    const auto key = std::tuple(static_cast<int>(spec.kind), spec.n, spec.d);
    auto it = cache.find(key);
    if (it != cache.end()) {
        return it->second;
    }
    const auto sets = constraint_sets(spec);
    const auto rows = linalg::independent_rows(certify::constraint_matrix(spec));
    ensure(rows.size() == certify::constraint_rank(spec), "retained constraint rows lost rank");
    std::vector<std::vector<std::size_t>> kept;
    for (std::size_t r : rows) {
        kept.push_back(sets[r]);
    }
    return cache.emplace(key, std::move(kept)).first->second;
}

bool is_permutation_array(const Array3& a) {
    for (const auto& v : a.entries()) {
        if (v != 0 && v != 1) {
            return false;
        }
    }
    return true;
}

}  // namespace

Objective gaussian_objective(const PolytopeSpec& spec, std::uint64_t seed) {
    if (spec.n < 1 || spec.d < 1) {
        throw PreconditionError("objective needs n >= 1 and d >= 1");
    }
    const auto cells = static_cast<std::size_t>(ipow(spec.n, spec.d + 1));
    Objective obj{spec, seed, {}};
    obj.coefficients.reserve(cells);
    Rng rng(seed);
    while (obj.coefficients.size() < cells) {
        const double r = std::sqrt(-2.0 * std::log(rng.unit_open_closed()));
        const double theta = 2.0 * std::numbers::pi * rng.unit_open_closed();
        obj.coefficients.push_back(rationalize(r * std::cos(theta)));
        if (obj.coefficients.size() < cells) {
            obj.coefficients.push_back(rationalize(r * std::sin(theta)));
        }
    }
    return obj;
}

Rational objective_value(const Objective& c, const Array3& a) {
    if (c.coefficients.size() != a.size()) {
        throw std::invalid_argument("objective and array sizes differ");
    }
    Rational total = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (sgn(a[i]) != 0) {
            total += c.coefficients[i] * a[i];
        }
    }
    return total;
}

Optimum maximize(const PolytopeSpec& spec, const Objective& c) {
    Array3 uniform(spec.n, spec.d);
    if (c.coefficients.size() != uniform.size()) {
        throw PreconditionError("objective does not match the spec");
    }
    const auto& rows = reduced_constraints(spec);
    lp::StandardFormLp program;
    program.c = c.coefficients;
    for (const auto& set : rows) {
        std::vector<Rational> row(uniform.size(), Rational(0));
        for (std::size_t idx : set) {
            row[idx] = 1;
        }
        program.a.push_back(std::move(row));
        program.b.emplace_back(1);
    }
    const auto solution = lp::solve(program);

    Optimum out;
    out.point = Array3(spec.n, spec.d);
    for (std::size_t i = 0; i < out.point.size(); ++i) {
        out.point[i] = solution.x[i];
    }
    out.value = solution.value;
    out.pivots = solution.pivots;
    ensure(is_member(out.point, spec), "simplex optimum is not in the polytope");
    ensure(out.value == objective_value(c, out.point), "simplex value disagrees with c·A");

    // the uniform point of Omega is 1/n everywhere; Sigma's is 1/n^d
    const Rational u(1, static_cast<long>(spec.kind == PolytopeKind::Omega ? spec.n : ipow(spec.n, spec.d)));
    for (std::size_t i = 0; i < uniform.size(); ++i) {
        uniform[i] = u;
    }
    ensure(out.value >= objective_value(c, uniform), "simplex optimum is below the uniform array");

    out.certificate = certify::is_vertex_rank(out.point, spec);
    ensure(out.certificate.is_vertex, "simplex optimum failed the rank test");
    return out;
}

long long support_bound(const PolytopeSpec& spec) {
    if (spec.kind != PolytopeKind::Omega) {
        throw PreconditionError("support_bound is stated for Omega only");
    }
    return ipow(spec.n, spec.d + 1) - ipow(spec.n - 1, spec.d + 1);
}

SampleReport run_experiment(const PolytopeSpec& spec, std::size_t trials, std::uint64_t seed) {
    if (trials == 0) {
        throw PreconditionError("run_experiment needs at least one trial");
    }
    SampleReport report;
    report.spec = spec;
    report.seed = seed;
    report.caveat = kCaveat;
    report.bound = spec.kind == PolytopeKind::Omega ? support_bound(spec)
                                                    : static_cast<long long>(certify::constraint_rank(spec));
    const double n2 = static_cast<double>(spec.n) * spec.n;
    double sum = 0;
    for (std::size_t t = 0; t < trials; ++t) {
        Trial trial;
        trial.index = t;
        trial.seed = seed + t;
        const auto opt = maximize(spec, gaussian_objective(spec, trial.seed));
        trial.support = support_indices(opt.point).size();
        trial.alpha = static_cast<double>(trial.support) / n2;
        trial.value = opt.value;
        trial.rank_vertex = opt.certificate.is_vertex;
        trial.permutation = is_permutation_array(opt.point);
        if (static_cast<long long>(trial.support) > report.bound) {
            ++report.bound_violations;
        }
        sum += trial.alpha;
        report.trials.push_back(std::move(trial));
    }
    const auto [lo, hi] = std::minmax_element(report.trials.begin(), report.trials.end(),
                                              [](const Trial& a, const Trial& b) { return a.alpha < b.alpha; });
    report.min_alpha = lo->alpha;
    report.max_alpha = hi->alpha;
    report.mean_alpha = sum / static_cast<double>(trials);
    ensure(report.bound_violations == 0, "a sampled vertex exceeded the support bound");
    return report;
}

Json report_to_json(const SampleReport& report) {
    Json spec{{"kind", to_string(report.spec.kind)}, {"n", report.spec.n}, {"d", report.spec.d}};
    Json per_trial = Json::array();
    for (const auto& t : report.trials) {
        per_trial.push_back({{"trial", t.index},
                             {"seed", t.seed},
                             {"support", t.support},
                             {"alpha", t.alpha},
                             {"value", to_string(t.value)},
                             {"rank_vertex", t.rank_vertex},
                             {"permutation", t.permutation}});
    }
    return Json{{"spec", spec},
                {"trials", report.trials.size()},
                {"support_bound", report.bound},
                {"per_trial", per_trial},
                {"aggregate", {{"mean_alpha", report.mean_alpha}, {"min", report.min_alpha}, {"max", report.max_alpha}}},
                {"bound_violations", report.bound_violations},
                {"caveat", report.caveat}};
}

VertexCountBound vertex_count_upper_bound(int n, int d) {
    if (n < 2 || d < 1) {
        throw PreconditionError("vertex_count_upper_bound needs n >= 2 and d >= 1");
    }
    const long long cells = ipow(n, d + 1);
    const long long k = (d + 1) * ipow(n, d);
    Integer binom;
    mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(cells), static_cast<unsigned long>(std::min(k, cells)));
    long exp = 0;
    const double mant = mpz_get_d_2exp(&exp, binom.get_mpz_t());
    VertexCountBound out;
    out.log_binomial = std::log(mant) + static_cast<double>(exp) * std::numbers::ln2;
    out.log_relaxation = static_cast<double>(k) * std::log(n * std::numbers::e / (d + 1));
    out.log_power = static_cast<double>(k) * std::log(static_cast<double>(n));
    return out;
}

}  // namespace birkhoff::sample
