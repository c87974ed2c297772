#include "birkhoff/bounds.hpp"

#include "birkhoff/designs.hpp"
#include "birkhoff/errors.hpp"

#include <bit>
#include <cmath>
#include <numeric>

namespace birkhoff::bounds {

SquareMatrix SquareMatrix::from_rows(const std::vector<std::vector<Rational>>& rows) {
    SquareMatrix m(static_cast<int>(rows.size()));
    for (int r = 0; r < m.order(); ++r) {
        if (static_cast<int>(rows[static_cast<std::size_t>(r)].size()) != m.order()) {
            throw std::invalid_argument("matrix must be square");
        }
        for (int c = 0; c < m.order(); ++c) {
            m(r, c) = rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
        }
    }
    return m;
}

bool SquareMatrix::is_zero_one() const {
    for (const auto& q : entries_) {
        if (q != 0 && q != 1) {
            return false;
        }
    }
    return true;
}

bool SquareMatrix::is_doubly_stochastic() const {
    for (int i = 0; i < n_; ++i) {
        Rational row = 0;
        Rational col = 0;
        for (int j = 0; j < n_; ++j) {
            if (sgn((*this)(i, j)) < 0) {
                return false;
            }
            row += (*this)(i, j);
            col += (*this)(j, i);
        }
        if (row != 1 || col != 1) {
            return false;
        }
    }
    return true;
}

int SquareMatrix::row_ones(int r) const {
    int count = 0;
    for (int c = 0; c < n_; ++c) {
        count += (*this)(r, c) == 1 ? 1 : 0;
    }
    return count;
}

Rational permanent(const SquareMatrix& m) {
    const int n = m.order();
    if (n > kMaxPermanentOrder) {
        throw PreconditionError("permanent is limited to n <= 20");
    }
    if (n == 0) {
        return 1;
    }
    // Clear denominators row by row: per(D A) = det(D) per(A).
    std::vector<std::vector<Integer>> a(static_cast<std::size_t>(n), std::vector<Integer>(static_cast<std::size_t>(n)));
    Integer scale = 1;
    for (int r = 0; r < n; ++r) {
        Integer lcm = 1;
        for (int c = 0; c < n; ++c) {
            mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), m(r, c).get_den_mpz_t());
        }
        for (int c = 0; c < n; ++c) {
            a[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = m(r, c).get_num() * (lcm / m(r, c).get_den());
        }
        scale *= lcm;
    }
    // per(A) = (-1)^n Σ_S (-1)^|S| Π_i Σ_{j∈S} a_ij, walking subsets in Gray-code order.
    std::vector<Integer> row_sum(static_cast<std::size_t>(n), 0);
    Integer total = 0;
    Integer prod;
    std::uint32_t subset = 0;
    for (std::uint32_t k = 1; k < (std::uint32_t{1} << n); ++k) {
        const int j = std::countr_zero(k);
        const std::uint32_t bit = std::uint32_t{1} << j;
        const bool adding = !(subset & bit);
        subset ^= bit;
        for (int r = 0; r < n; ++r) {
            if (adding) {
                row_sum[static_cast<std::size_t>(r)] += a[static_cast<std::size_t>(r)][static_cast<std::size_t>(j)];
            } else {
                row_sum[static_cast<std::size_t>(r)] -= a[static_cast<std::size_t>(r)][static_cast<std::size_t>(j)];
            }
        }
        prod = 1;
        for (int r = 0; r < n && prod != 0; ++r) {
            prod *= row_sum[static_cast<std::size_t>(r)];
        }
        if (std::popcount(subset) % 2 == 0) {
            total += prod;
        } else {
            total -= prod;
        }
    }
    if (n % 2 == 1) {
        total = -total;
    }
    Rational out(total, scale);
    out.canonicalize();
    return out;
}

Rational vdw_lower_bound(int n) {
    if (n < 1) {
        throw PreconditionError("vdw bound needs n >= 1");
    }
    Integer f, p;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
    mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(n));
    Rational q(f, p);
    q.canonicalize();
    return q;
}

BigReal bregman_upper_bound(const SquareMatrix& m) {
    if (!m.is_zero_one()) {
        throw PreconditionError("Brègman's bound applies to 0/1 matrices");
    }
    BigReal log_sum = 0;
    for (int r = 0; r < m.order(); ++r) {
        const int ones = m.row_ones(r);
        if (ones == 0) {
            return 0;
        }
        BigReal factorial = 1;
        for (int t = 2; t <= ones; ++t) {
            factorial *= t;
        }
        log_sum += log(factorial) / ones;
    }
    BigReal bound = exp(log_sum);
    // Round up past the working precision so the bound is never understated.
    return bound * (1 + BigReal("1e-55"));
}

bool within_bregman_bound(const SquareMatrix& m, const Rational& per) {
    if (!m.is_zero_one()) {
        throw PreconditionError("Brègman's bound applies to 0/1 matrices");
    }
    unsigned long lcm = 1;
    std::vector<int> ones(static_cast<std::size_t>(m.order()));
    for (int r = 0; r < m.order(); ++r) {
        ones[static_cast<std::size_t>(r)] = m.row_ones(r);
        if (ones[static_cast<std::size_t>(r)] == 0) {
            return per <= 0;
        }
        lcm = std::lcm(lcm, static_cast<unsigned long>(ones[static_cast<std::size_t>(r)]));
    }
    if (per.get_den() != 1) {
        return false;
    }
    Integer lhs, rhs = 1, f, power;
    mpz_pow_ui(lhs.get_mpz_t(), per.get_num_mpz_t(), lcm);
    for (int r : ones) {
        mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(r));
        mpz_pow_ui(power.get_mpz_t(), f.get_mpz_t(), lcm / static_cast<unsigned long>(r));
        rhs *= power;
    }
    return lhs <= rhs;
}

double latin_asymptotic_log(int n) {
    if (n < 1) {
        throw PreconditionError("latin_asymptotic needs n >= 1");
    }
    return static_cast<double>(n) * n * (std::log(static_cast<double>(n)) - 2.0);
}

double two_factor_lower_bound_log(int k, int n) {
    if (k < 2) {
        throw PreconditionError("two_factor_lower_bound needs k >= 2");
    }
    const double base = static_cast<double>(k) * (k - 1) / (std::exp(2.0) * std::sqrt(2.0));
    return n * std::log(base);
}

namespace {

Integer layer_completions(int layer, int n, designs::BipartiteGraph& free_cells) {
    if (layer == n - 2) {
        // The two remaining layers are a perfect matching of the free cells and its complement.
        SquareMatrix b(n);
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) {
                b(i, j) = free_cells.has_edge(i, j) ? 1 : 0;
            }
        }
        return permanent(b).get_num();
    }
    Integer total = 0;
    designs::Permutation p(static_cast<std::size_t>(n));
    std::iota(p.begin(), p.end(), 0);
    do {
        bool fits = true;
        for (int i = 0; i < n && fits; ++i) {
            fits = free_cells.has_edge(i, p[static_cast<std::size_t>(i)]);
        }
        if (!fits) {
            continue;
        }
        for (int i = 0; i < n; ++i) {
            free_cells.set_edge(i, p[static_cast<std::size_t>(i)], false);
        }
        total += layer_completions(layer + 1, n, free_cells);
        for (int i = 0; i < n; ++i) {
            free_cells.set_edge(i, p[static_cast<std::size_t>(i)], true);
        }
    } while (std::next_permutation(p.begin(), p.end()));
    return total;
}

}  // namespace

Integer count_latin_by_layers(int n) {
    if (n < 1 || n > 5) {
        throw PreconditionError("layer counting is limited to 1 <= n <= 5");
    }
    if (n == 1) {
        return 1;
    }
    designs::BipartiteGraph free_cells(n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            free_cells.set_edge(i, j);
        }
    }
    return layer_completions(0, n, free_cells);
}

std::optional<Integer> exact_latin_count(int t) {
    if (t < 1 || t > 5) {
        return std::nullopt;
    }
    return Integer(std::to_string(designs::count_latin(t)));
}

ConstructionCountReport construction_count_report(int n) {
    if (n < 2 || n % 2 != 0) {
        throw PreconditionError("construction count report needs even n >= 2");
    }
    ConstructionCountReport report;
    report.n = n;
    const int m = n / 2;
    const double log_factorial = std::lgamma(static_cast<double>(m));  // ln (m-1)!
    if (const auto latin = exact_latin_count(m)) {
        report.top_half_exact = true;
        Integer f;
        mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(m - 1));
        report.top_half_count = f * *latin * *latin;
        report.log_top_half = log_factorial + 2.0 * std::log(latin->get_d());
    } else {
        report.log_top_half = log_factorial + 2.0 * latin_asymptotic_log(m);
    }
    for (int k = 2; k <= n - 4; k += 2) {
        report.log_bottom_half += two_factor_lower_bound_log(k, n);
    }
    report.log_total = report.log_top_half + report.log_bottom_half;
    report.log_latin_reference = latin_asymptotic_log(n);
    report.log_three_halves_reference = 1.5 * report.log_latin_reference;
    return report;
}

Json report_to_json(const ConstructionCountReport& report) {
    Json out;
    out["n"] = report.n;
    out["log_top_half"] = report.log_top_half;
    out["top_half_exact"] = report.top_half_exact;
    if (report.top_half_count) {
        out["top_half_count"] = report.top_half_count->get_str();
    }
    out["log_bottom_half"] = report.log_bottom_half;
    out["log_total"] = report.log_total;
    out["log_latin_reference"] = report.log_latin_reference;
    out["log_three_halves_reference"] = report.log_three_halves_reference;
    out["note"] = "log-scale lower-bound terms with o(1) factors dropped; juxtaposed, not asserted";
    return out;
}

SquareMatrix matrix_from_json(const Json& doc) {
    const Json& rows = doc.is_object() ? doc.at("entries") : doc;
    if (!rows.is_array()) {
        throw std::invalid_argument("matrix must be a nested array or {\"entries\": [...]}");
    }
    std::vector<std::vector<Rational>> values;
    for (const auto& row : rows) {
        if (!row.is_array()) {
            throw std::invalid_argument("matrix rows must be arrays");
        }
        std::vector<Rational> r;
        for (const auto& v : row) {
            r.push_back(rational_from_json(v));
        }
        values.push_back(std::move(r));
    }
    return SquareMatrix::from_rows(values);
}

}  // namespace birkhoff::bounds
