#include "birkhoff/sigma_build.hpp"

#include "birkhoff/errors.hpp"

#include <algorithm>
#include <set>

namespace birkhoff::sigma {

bool is_symbol_matrix(int n, const std::vector<int>& grid) {
    if (n < 2 || grid.size() != static_cast<std::size_t>(n * n)) {
        return false;
    }
    std::vector<int> symbol_count(static_cast<std::size_t>(n + 1), 0);
    std::vector<int> rows, cols;
    for (int line = 0; line < n; ++line) {
        int in_row = 0;
        int in_col = 0;
        for (int t = 0; t < n; ++t) {
            const int a = grid[static_cast<std::size_t>(line * n + t)];
            if (a < 0 || a > n) {
                return false;
            }
            if (a != 0) {
                ++in_row;
                ++symbol_count[static_cast<std::size_t>(a)];
                rows.push_back(line);
                cols.push_back(t);
            }
            in_col += grid[static_cast<std::size_t>(t * n + line)] != 0 ? 1 : 0;
        }
        if (in_row != 2 || in_col != 2) {
            return false;
        }
    }
    for (int s = 1; s <= n; ++s) {
        if (symbol_count[static_cast<std::size_t>(s)] != 2) {
            return false;
        }
    }
    // The 2n nonzero cells form a 2-regular row/column graph; require one cycle.
    std::vector<int> parent(static_cast<std::size_t>(2 * n));
    for (int v = 0; v < 2 * n; ++v) {
        parent[static_cast<std::size_t>(v)] = v;
    }
    auto find = [&](int v) {
        while (parent[static_cast<std::size_t>(v)] != v) {
            v = parent[static_cast<std::size_t>(v)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(v)])];
        }
        return v;
    };
    int components = 2 * n;
    for (std::size_t e = 0; e < rows.size(); ++e) {
        const int a = find(rows[e]);
        const int b = find(n + cols[e]);
        if (a != b) {
            parent[static_cast<std::size_t>(a)] = b;
            --components;
        }
    }
    return components == 1;
}

SymbolMatrix::SymbolMatrix(int order, std::vector<int> grid) : order_(order), grid_(std::move(grid)) {
    if (!is_symbol_matrix(order_, grid_)) {
        throw PreconditionError("grid is not a valid symbol matrix");
    }
}

Integer filling_count(int n) {
    if (n < 2) {
        throw PreconditionError("symbol matrices need n >= 2");
    }
    Integer f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(2 * n - 3));
    Integer p = 1;
    mpz_mul_2exp(p.get_mpz_t(), p.get_mpz_t(), static_cast<mp_bitcnt_t>(n - 2));
    return f / p;
}

namespace {

std::vector<int> free_multiset(int n) {
    std::vector<int> values{2};
    for (int s = 3; s <= n; ++s) {
        values.push_back(s);
        values.push_back(s);
    }
    return values;
}

SymbolMatrix assemble(const designs::HCycle& h, const std::vector<int>& rest) {
    const int n = h.order();
    const auto cells = h.cells();
    std::vector<int> grid(static_cast<std::size_t>(n * n), 0);
    auto put = [&](std::size_t idx, int symbol) {
        grid[static_cast<std::size_t>(cells[idx].first * n + cells[idx].second)] = symbol;
    };
    put(0, 1);
    put(1, 2);
    put(2, 1);
    for (std::size_t t = 0; t < rest.size(); ++t) {
        put(t + 3, rest[t]);
    }
    return SymbolMatrix(n, std::move(grid));
}

}  // namespace

SymbolMatrix build_symbol_matrix(const designs::HCycle& h, std::uint64_t seed) {
    auto rest = free_multiset(h.order());
    Rng rng(seed);
    rng.shuffle(rest);
    return assemble(h, rest);
}

std::vector<SymbolMatrix> all_symbol_matrices(const designs::HCycle& h) {
    if (h.order() > 5) {
        throw PreconditionError("exhaustive fillings are limited to n <= 5");
    }
    auto rest = free_multiset(h.order());
    std::sort(rest.begin(), rest.end());
    std::vector<SymbolMatrix> out;
    do {
        out.push_back(assemble(h, rest));
    } while (std::next_permutation(rest.begin(), rest.end()));
    return out;
}

Array3 symbol_matrix_to_array(const SymbolMatrix& m) {
    const int n = m.order();
    Array3 a(n, 2);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (m(i, j) != 0) {
                a.at({i, j, m(i, j) - 1}) = Rational(1, 2);
            }
        }
    }
    return a;
}

bool is_t_array(const Array3& a) {
    for (const auto& q : a.entries()) {
        if (q != 0 && q != 1) {
            return false;
        }
    }
    return is_member(a, {PolytopeKind::Sigma, a.n(), a.d()});
}

ConstructedVertex construct_sigma_vertex(int n, std::uint64_t seed) {
    if (n < 2) {
        throw PreconditionError("construct_sigma_vertex needs n >= 2");
    }
    Rng rng(seed);
    const auto h = designs::random_h_cycle(n, rng);
    const auto m = build_symbol_matrix(h, rng.next());
    ConstructedVertex out;
    out.array = symbol_matrix_to_array(m);
    const PolytopeSpec spec{PolytopeKind::Sigma, n, 2};
    ensure(is_member(out.array, spec), "symbol-matrix array must lie in Σ");

    const auto g = certify::SupportGraph::build(out.array, certify::AdjacencyMode::Hyperplane);
    ensure(g.is_connected() && !g.is_bipartite(), "Ḡ(A) must be connected and non-bipartite");
    out.graph_certificate = certify::is_vertex_half_integral(out.array, PolytopeKind::Sigma);
    out.rank_certificate = certify::is_vertex_rank(out.array, spec);
    ensure(out.graph_certificate.is_vertex && out.rank_certificate.is_vertex, "constructed array must be a vertex");
    ensure(!is_t_array(out.array), "constructed vertex must lie outside T");
    return out;
}

Array3 tuple_to_t_array(const std::vector<designs::Permutation>& permutations) {
    if (permutations.empty()) {
        throw PreconditionError("need d >= 1 permutations");
    }
    const int n = static_cast<int>(permutations.front().size());
    for (const auto& p : permutations) {
        if (static_cast<int>(p.size()) != n || !designs::is_permutation(p)) {
            throw PreconditionError("every tuple entry must be a permutation of [n]");
        }
    }
    Array3 a(n, static_cast<int>(permutations.size()));
    std::vector<int> coords(permutations.size() + 1);
    for (int i = 0; i < n; ++i) {
        coords[0] = i;
        for (std::size_t t = 0; t < permutations.size(); ++t) {
            coords[t + 1] = permutations[t][static_cast<std::size_t>(i)];
        }
        a[a.index_of(coords)] = 1;
    }
    return a;
}

}  // namespace birkhoff::sigma
