#include "birkhoff/designs.hpp"

#include "birkhoff/errors.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace birkhoff::designs {

HCycle::HCycle(std::vector<int> rows, std::vector<int> cols) {
    const std::size_t n = rows.size();
    if (n < 2 || cols.size() != n || !is_permutation(rows) || !is_permutation(cols)) {
        throw PreconditionError("an H-cycle needs two permutations of the same order n >= 2");
    }
    rows_ = rows;
    cols_ = cols;
    // Rotations of (I, J) and of the reversed walk (i1, in, ..., i2), (jn, ..., j1).
    std::vector<int> rev_rows(n), rev_cols(n);
    for (std::size_t t = 0; t < n; ++t) {
        rev_rows[t] = rows[(n - t) % n];
        rev_cols[t] = cols[n - 1 - t];
    }
    std::vector<int> r(n), c(n);
    for (const auto* base : {&rows, &rev_rows}) {
        const auto& base_cols = base == &rows ? cols : rev_cols;
        for (std::size_t shift = 0; shift < n; ++shift) {
            for (std::size_t t = 0; t < n; ++t) {
                r[t] = (*base)[(t + shift) % n];
                c[t] = base_cols[(t + shift) % n];
            }
            if (std::tie(r, c) < std::tie(rows_, cols_)) {
                rows_ = r;
                cols_ = c;
            }
        }
    }
}

std::vector<std::pair<int, int>> HCycle::cells() const {
    const std::size_t n = rows_.size();
    std::vector<std::pair<int, int>> out;
    out.reserve(2 * n);
    for (std::size_t v = 0; v < n; ++v) {
        out.emplace_back(rows_[v], cols_[v]);
        out.emplace_back(rows_[(v + 1) % n], cols_[v]);
    }
    return out;
}

HCycle random_h_cycle(int n, Rng& rng) {
    std::vector<int> rows(static_cast<std::size_t>(n)), cols(static_cast<std::size_t>(n));
    std::iota(rows.begin(), rows.end(), 0);
    std::iota(cols.begin(), cols.end(), 0);
    rng.shuffle(rows);
    rng.shuffle(cols);
    return HCycle(std::move(rows), std::move(cols));
}

Integer count_h_cycles(int n) {
    if (n < 2) {
        throw PreconditionError("H-cycles need n >= 2");
    }
    Integer f, g;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
    mpz_fac_ui(g.get_mpz_t(), static_cast<unsigned long>(n - 1));
    return f * g / 2;
}

std::vector<HCycle> enumerate_h_cycles(int n) {
    if (n < 2 || n > 5) {
        throw PreconditionError("H-cycle enumeration is limited to 2 <= n <= 5");
    }
    std::set<HCycle> seen;
    std::vector<int> rows(static_cast<std::size_t>(n));
    std::iota(rows.begin(), rows.end(), 0);
    do {
        std::vector<int> cols(static_cast<std::size_t>(n));
        std::iota(cols.begin(), cols.end(), 0);
        do {
            seen.emplace(rows, cols);
        } while (std::next_permutation(cols.begin(), cols.end()));
    } while (std::next_permutation(rows.begin(), rows.end()));
    return {seen.begin(), seen.end()};
}

}  // namespace birkhoff::designs
