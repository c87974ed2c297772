#include "birkhoff/designs.hpp"

#include "birkhoff/errors.hpp"

#include <numeric>

namespace birkhoff::designs {

bool is_double_latin(int order, const std::vector<int>& grid) {
    if (order < 2 || order % 2 != 0 || grid.size() != static_cast<std::size_t>(order * order)) {
        return false;
    }
    const int symbols = order / 2;
    for (int line = 0; line < order; ++line) {
        std::vector<int> row_count(static_cast<std::size_t>(symbols), 0);
        std::vector<int> col_count(static_cast<std::size_t>(symbols), 0);
        for (int t = 0; t < order; ++t) {
            const int a = grid[static_cast<std::size_t>(line * order + t)];
            const int b = grid[static_cast<std::size_t>(t * order + line)];
            if (a < 0 || a >= symbols || b < 0 || b >= symbols) {
                return false;
            }
            ++row_count[static_cast<std::size_t>(a)];
            ++col_count[static_cast<std::size_t>(b)];
        }
        for (int s = 0; s < symbols; ++s) {
            if (row_count[static_cast<std::size_t>(s)] != 2 || col_count[static_cast<std::size_t>(s)] != 2) {
                return false;
            }
        }
    }
    return true;
}

DoubleLatinSquare::DoubleLatinSquare(int order, std::vector<int> grid) : order_(order), grid_(std::move(grid)) {
    if (!is_double_latin(order_, grid_)) {
        throw PreconditionError("grid is not a double Latin square");
    }
}

std::vector<std::pair<int, int>> DoubleLatinSquare::symbol_cycle(int symbol) const {
    const int n = order_;
    auto other_in_row = [&](int r, int c) {
        for (int t = 0; t < n; ++t) {
            if (t != c && (*this)(r, t) == symbol) {
                return t;
            }
        }
        return -1;
    };
    auto other_in_col = [&](int r, int c) {
        for (int t = 0; t < n; ++t) {
            if (t != r && (*this)(t, c) == symbol) {
                return t;
            }
        }
        return -1;
    };
    int r = 0;
    int c = 0;
    while ((*this)(r, c) != symbol) {
        ++c;
    }
    std::vector<std::pair<int, int>> walk;
    const int start_r = r;
    const int start_c = c;
    do {
        walk.emplace_back(r, c);
        r = other_in_col(r, c);
        walk.emplace_back(r, c);
        c = other_in_row(r, c);
    } while (!(r == start_r && c == start_c) && walk.size() <= static_cast<std::size_t>(2 * n));
    if (walk.size() != static_cast<std::size_t>(2 * n)) {
        return {};
    }
    return walk;
}

bool is_hamiltonian(const DoubleLatinSquare& x) {
    for (int s = 0; s < x.symbols(); ++s) {
        if (x.symbol_cycle(s).empty()) {
            return false;
        }
    }
    return true;
}

DoubleLatinSquare double_latin_from(const LatinSquare& a, const LatinSquare& b, const Permutation& sigma) {
    const int m = a.order();
    if (b.order() != m || static_cast<int>(sigma.size()) != m) {
        throw PreconditionError("double_latin_from needs A, B and σ of the same order");
    }
    if (!is_single_cycle(sigma)) {
        throw PreconditionError("σ must be a single cycle");
    }
    const int n = 2 * m;
    std::vector<int> grid(static_cast<std::size_t>(n * n));
    auto put = [&](int r, int c, int s) { grid[static_cast<std::size_t>(r * n + c)] = s; };
    for (int r = 0; r < m; ++r) {
        for (int c = 0; c < m; ++c) {
            put(r, c, a(r, c));
            put(r, m + c, b(r, c));
            put(m + sigma[static_cast<std::size_t>(r)], c, a(r, c));
            put(m + r, m + c, b(r, c));
        }
    }
    return DoubleLatinSquare(n, std::move(grid));
}

DoubleLatinSquare random_hamiltonian_double_latin(int n, std::uint64_t seed) {
    if (n < 2 || n % 2 != 0) {
        throw PreconditionError("double Latin squares have even order");
    }
    const int m = n / 2;
    Rng rng(seed);
    const auto a = random_latin(m, rng);
    const auto b = random_latin(m, rng);
    std::vector<int> cycle(static_cast<std::size_t>(m));
    std::iota(cycle.begin(), cycle.end(), 0);
    rng.shuffle(cycle);
    Permutation sigma(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) {
        sigma[static_cast<std::size_t>(cycle[static_cast<std::size_t>(i)])] = cycle[static_cast<std::size_t>((i + 1) % m)];
    }
    return double_latin_from(a, b, sigma);
}

Json double_latin_to_json(const DoubleLatinSquare& x) {
    Json rows = Json::array();
    for (int r = 0; r < x.order(); ++r) {
        Json row = Json::array();
        for (int c = 0; c < x.order(); ++c) {
            row.push_back(x(r, c) + 1);
        }
        rows.push_back(std::move(row));
    }
    return Json{{"type", "double-latin"}, {"order", x.order()}, {"hamiltonian", is_hamiltonian(x)},
                {"grid", std::move(rows)}};
}

}  // namespace birkhoff::designs
