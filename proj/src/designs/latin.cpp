#include "birkhoff/designs.hpp"

#include "birkhoff/errors.hpp"

#include <numeric>

namespace birkhoff::designs {

bool is_permutation(const Permutation& p) {
    std::vector<char> seen(p.size(), 0);
    for (int v : p) {
        if (v < 0 || static_cast<std::size_t>(v) >= p.size() || seen[static_cast<std::size_t>(v)]) {
            return false;
        }
        seen[static_cast<std::size_t>(v)] = 1;
    }
    return true;
}

bool is_single_cycle(const Permutation& p) {
    if (p.empty() || !is_permutation(p)) {
        return false;
    }
    std::size_t length = 0;
    int x = 0;
    do {
        x = p[static_cast<std::size_t>(x)];
        ++length;
    } while (x != 0);
    return length == p.size();
}

namespace {

/// Fills one row of a Latin rectangle by backtracking over its cells, trying
/// symbols in a shuffled order. Gives up after `budget` placements.
class RowFiller {
public:
    RowFiller(int t, const std::vector<std::uint64_t>& column_used, Rng& rng, std::size_t budget)
        : t_(t), column_used_(column_used), budget_(budget) {
        order_.resize(static_cast<std::size_t>(t));
        for (auto& o : order_) {
            o.resize(static_cast<std::size_t>(t));
            std::iota(o.begin(), o.end(), 0);
            rng.shuffle(o);
        }
        row_.assign(static_cast<std::size_t>(t), -1);
    }

    bool fill() { return place(0, 0); }
    const std::vector<int>& row() const { return row_; }

private:
    bool place(int col, std::uint64_t row_used) {
        if (col == t_) {
            return true;
        }
        for (int s : order_[static_cast<std::size_t>(col)]) {
            const std::uint64_t bit = std::uint64_t{1} << s;
            if ((row_used & bit) || (column_used_[static_cast<std::size_t>(col)] & bit)) {
                continue;
            }
            if (spent_++ >= budget_) {
                return false;
            }
            row_[static_cast<std::size_t>(col)] = s;
            if (place(col + 1, row_used | bit)) {
                return true;
            }
        }
        return false;
    }

    int t_;
    const std::vector<std::uint64_t>& column_used_;
    std::size_t budget_;
    std::size_t spent_ = 0;
    std::vector<std::vector<int>> order_;
    std::vector<int> row_;
};

}  // namespace

LatinSquare random_latin(int t, Rng& rng) {
    if (t < 1 || t > 64) {
        throw PreconditionError("random_latin supports orders 1..64");
    }
    const auto n = static_cast<std::size_t>(t);
    std::vector<int> grid;
    grid.reserve(n * n);
    std::vector<std::uint64_t> column_used(n, 0);
    constexpr int kRestarts = 8;
    for (int r = 0; r < t; ++r) {
        std::vector<int> row;
        for (int attempt = 0; attempt < kRestarts && row.empty(); ++attempt) {
            RowFiller filler(t, column_used, rng, 64 * n * n);
            if (filler.fill()) {
                row = filler.row();
            }
        }
        if (row.empty()) {
            // A Latin rectangle always extends by a row (Hall's theorem), so a
            // perfect matching of columns to unused symbols exists.
            BipartiteGraph allowed(t);
            for (int c = 0; c < t; ++c) {
                for (int s = 0; s < t; ++s) {
                    if (!(column_used[static_cast<std::size_t>(c)] & (std::uint64_t{1} << s))) {
                        allowed.set_edge(c, s);
                    }
                }
            }
            const auto m = perfect_matching(allowed, &rng);
            ensure(m.has_value(), "Latin rectangle must extend");
            row = *m;
        }
        for (int c = 0; c < t; ++c) {
            column_used[static_cast<std::size_t>(c)] |= std::uint64_t{1} << row[static_cast<std::size_t>(c)];
            grid.push_back(row[static_cast<std::size_t>(c)]);
        }
    }
    return LatinSquare(t, std::move(grid));
}

LatinSquare random_latin(int t, std::uint64_t seed) {
    Rng rng(seed);
    return random_latin(t, rng);
}

namespace {

std::uint64_t count_completions(int t, int cell, std::vector<unsigned>& row_used, std::vector<unsigned>& col_used) {
    if (cell == t * t) {
        return 1;
    }
    const int r = cell / t;
    const int c = cell % t;
    std::uint64_t total = 0;
    for (int s = 0; s < t; ++s) {
        const unsigned bit = 1u << s;
        if ((row_used[static_cast<std::size_t>(r)] & bit) || (col_used[static_cast<std::size_t>(c)] & bit)) {
            continue;
        }
        row_used[static_cast<std::size_t>(r)] |= bit;
        col_used[static_cast<std::size_t>(c)] |= bit;
        total += count_completions(t, cell + 1, row_used, col_used);
        row_used[static_cast<std::size_t>(r)] &= ~bit;
        col_used[static_cast<std::size_t>(c)] &= ~bit;
    }
    return total;
}

}  // namespace

std::uint64_t count_latin(int t) {
    if (t < 1 || t > 5) {
        throw PreconditionError("count_latin is exhaustive and limited to t <= 5");
    }
    std::vector<unsigned> row_used(static_cast<std::size_t>(t), 0);
    std::vector<unsigned> col_used(static_cast<std::size_t>(t), 0);
    return count_completions(t, 0, row_used, col_used);
}

Json latin_to_json(const LatinSquare& latin) {
    Json rows = Json::array();
    for (int r = 0; r < latin.order(); ++r) {
        Json row = Json::array();
        for (int c = 0; c < latin.order(); ++c) {
            row.push_back(latin(r, c) + 1);
        }
        rows.push_back(std::move(row));
    }
    return Json{{"type", "latin"}, {"order", latin.order()}, {"grid", std::move(rows)}};
}

}  // namespace birkhoff::designs
