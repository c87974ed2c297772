#include "birkhoff/omega_build.hpp"

#include "birkhoff/errors.hpp"

#include <algorithm>
#include <numeric>

namespace birkhoff::omega {

namespace {

const Rational kHalf(1, 2);

bool is_half(const Array3& a, int i, int j, int k) { return a.at({i, j, k}) == kHalf; }

}  // namespace

int PartialArray::shaft_count(int i, int j) const {
    int count = 0;
    for (int k = 0; k < n(); ++k) {
        count += is_half(array, i, j, k) ? 1 : 0;
    }
    return count;
}

designs::BipartiteGraph PartialArray::single_shafts() const {
    designs::BipartiteGraph k(n());
    for (int i = 0; i < n(); ++i) {
        for (int j = 0; j < n(); ++j) {
            if (shaft_count(i, j) == 1) {
                k.set_edge(i, j);
            }
        }
    }
    return k;
}

void PartialArray::set_layer(int layer, const designs::BipartiteGraph& cells) {
    for (int i = 0; i < n(); ++i) {
        for (int j = 0; j < n(); ++j) {
            array.at({i, j, layer}) = cells.has_edge(i, j) ? kHalf : Rational(0);
        }
    }
    decided[static_cast<std::size_t>(layer)] = 1;
}

PartialArray build_top_half(const designs::DoubleLatinSquare& x) {
    if (!is_hamiltonian(x)) {
        throw PreconditionError("the top half needs a Hamiltonian double Latin square");
    }
    const int n = x.order();
    PartialArray partial{Array3(n, 2), std::vector<char>(static_cast<std::size_t>(n), 0), {}};
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            partial.array.at({i, j, x(i, j)}) = kHalf;
        }
    }
    for (int k = 0; k < x.symbols(); ++k) {
        partial.decided[static_cast<std::size_t>(k)] = 1;
    }
    const auto g = certify::SupportGraph::build(partial.array, certify::AdjacencyMode::Line);
    ensure(g.components().size() == static_cast<std::size_t>(x.symbols()) && g.is_regular(2),
           "top half must be n/2 disjoint cycles");
    for (const auto& comp : g.components()) {
        ensure(comp.members.size() == static_cast<std::size_t>(2 * n), "top-half cycles have length 2n");
    }
    return partial;
}

std::vector<GridCell> select_rainbow_transversal(const designs::DoubleLatinSquare& x, std::uint64_t seed) {
    const int n = x.order();
    Rng rng(seed);
    std::vector<char> row_used(static_cast<std::size_t>(n), 0), col_used(static_cast<std::size_t>(n), 0);
    std::vector<GridCell> chosen;
    for (int symbol = 0; symbol < x.symbols(); ++symbol) {
        std::vector<GridCell> options;
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) {
                if (x(i, j) == symbol && !row_used[static_cast<std::size_t>(i)] && !col_used[static_cast<std::size_t>(j)]) {
                    options.emplace_back(i, j);
                }
            }
        }
        // At most 4*symbol of the 2n cells holding `symbol` are blocked, and 2n > 4*symbol.
        ensure(!options.empty(), "greedy rainbow transversal cannot get stuck");
        const auto pick = options[rng.below(options.size())];
        row_used[static_cast<std::size_t>(pick.first)] = 1;
        col_used[static_cast<std::size_t>(pick.second)] = 1;
        chosen.push_back(pick);
    }
    return chosen;
}

designs::Permutation extend_to_permutation(const std::vector<GridCell>& cells, int n, std::uint64_t seed) {
    designs::Permutation tau(static_cast<std::size_t>(n), -1);
    std::vector<char> col_used(static_cast<std::size_t>(n), 0);
    for (auto [r, c] : cells) {
        if (r < 0 || r >= n || c < 0 || c >= n) {
            throw PreconditionError("cell out of range");
        }
        if (tau[static_cast<std::size_t>(r)] != -1 || col_used[static_cast<std::size_t>(c)]) {
            throw PreconditionError("cells must not share a row or a column");
        }
        tau[static_cast<std::size_t>(r)] = c;
        col_used[static_cast<std::size_t>(c)] = 1;
    }
    std::vector<int> free_cols;
    for (int c = 0; c < n; ++c) {
        if (!col_used[static_cast<std::size_t>(c)]) {
            free_cols.push_back(c);
        }
    }
    Rng rng(seed);
    rng.shuffle(free_cols);
    std::size_t next = 0;
    for (auto& image : tau) {
        if (image == -1) {
            image = free_cols[next++];
        }
    }
    return tau;
}

designs::Permutation choose_single_cycle_partner(const designs::Permutation& tau, std::uint64_t seed) {
    if (!designs::is_permutation(tau) || tau.size() < 2) {
        throw PreconditionError("τ must be a permutation of order >= 2");
    }
    const std::size_t n = tau.size();
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    Rng rng(seed);
    // Fixing order[0] makes distinct shuffles give distinct cyclic orders.
    rng.shuffle(std::span(order).subspan(1));
    designs::Permutation sigma(n);
    for (std::size_t a = 0; a < n; ++a) {
        sigma[static_cast<std::size_t>(order[a])] = tau[static_cast<std::size_t>(order[(a + 1) % n])];
    }
    return sigma;
}

void place_connecting_layer(PartialArray& partial, const designs::Permutation& tau, const designs::Permutation& sigma) {
    const int n = partial.n();
    const int layer = n / 2;
    designs::BipartiteGraph cells(n);
    for (int i = 0; i < n; ++i) {
        cells.set_edge(i, tau[static_cast<std::size_t>(i)]);
        cells.set_edge(i, sigma[static_cast<std::size_t>(i)]);
    }
    ensure(cells.regular_degree() == 2, "P + P' must have two entries per row and column");
    partial.set_layer(layer, cells);
}

PartialArray plant_odd_cycle(PartialArray partial, std::uint64_t seed) {
    const int n = partial.n();
    const int m = n / 2;
    if (n < 6 || n % 2 != 0) {
        throw PreconditionError("odd-cycle planting needs even n >= 6");
    }
    for (int k = 0; k <= m; ++k) {
        if (!partial.decided[static_cast<std::size_t>(k)]) {
            throw PreconditionError("layers 0..n/2 must be decided before planting");
        }
    }
    const int target = m + 1;
    auto free_shaft = [&](int i, int j) { return !is_half(partial.array, i, j, m); };

    // Walk order of every top-half cycle.
    std::vector<std::vector<GridCell>> cycles(static_cast<std::size_t>(m));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            for (int k = 0; k < m; ++k) {
                if (is_half(partial.array, i, j, k) && cycles[static_cast<std::size_t>(k)].empty()) {
                    // Trace the cycle of layer k from (i, j) alternating column and row moves.
                    auto& walk = cycles[static_cast<std::size_t>(k)];
                    int r = i, c = j;
                    do {
                        walk.emplace_back(r, c);
                        int r2 = -1;
                        for (int t = 0; t < n; ++t) {
                            if (t != r && is_half(partial.array, t, c, k)) {
                                r2 = t;
                            }
                        }
                        r = r2;
                        walk.emplace_back(r, c);
                        int c2 = -1;
                        for (int t = 0; t < n; ++t) {
                            if (t != c && is_half(partial.array, r, t, k)) {
                                c2 = t;
                            }
                        }
                        c = c2;
                    } while (!(r == i && c == j));
                }
            }
        }
    }

    struct Candidate {
        int layer;
        std::size_t p, q;
    };
    std::vector<Candidate> candidates;
    for (int k = 0; k < m; ++k) {
        const auto& walk = cycles[static_cast<std::size_t>(k)];
        const std::size_t len = walk.size();
        for (std::size_t p = 0; p < len; ++p) {
            for (std::size_t q = p + 3; q < len; q += 2) {
                if (len - (q - p) >= 3) {
                    candidates.push_back({k, p, q});
                }
            }
        }
    }
    Rng rng(seed);
    rng.shuffle(candidates);

    for (const auto& cand : candidates) {
        const auto& walk = cycles[static_cast<std::size_t>(cand.layer)];
        const auto [x1, x2] = walk[cand.p];
        const auto [y1, y2] = walk[cand.q];
        if (x1 == y1 || x2 == y2 || !free_shaft(x1, x2) || !free_shaft(y1, y2)) {
            continue;
        }
        designs::BipartitePath path;
        if (free_shaft(x1, y2)) {
            path = {designs::Side::Right, {x2, x1, y2, y1}};
            partial.planted = {{x1, x2}, {x1, y2}, {y1, y2}};
        } else if (free_shaft(y1, x2)) {
            path = {designs::Side::Left, {x1, x2, y1, y2}};
            partial.planted = {{x1, x2}, {y1, x2}, {y1, y2}};
        } else {
            continue;
        }
        const auto k_graph = partial.single_shafts();
        const auto layer = designs::two_factor_containing_path(k_graph, path, rng.next());
        partial.set_layer(target, layer);
        const auto g = certify::SupportGraph::build(partial.array, certify::AdjacencyMode::Line);
        ensure(!g.is_bipartite(), "planted layer must create an odd cycle");
        return partial;
    }
    throw ConstructionError("no admissible pair for the odd-cycle layer (n = " + std::to_string(n) + ")");
}

namespace {

/// Decides layers first..n-1 as 2-factors of K, which must be 2(n-first)-regular.
Array3 fill_layers_from(PartialArray partial, int first, std::uint64_t seed) {
    const int n = partial.n();
    auto k_graph = partial.single_shafts();
    Rng rng(seed);
    for (int layer = first; layer < n; ++layer) {
        const auto factor = designs::extract_two_factor(k_graph, &rng);
        partial.set_layer(layer, factor);
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) {
                if (factor.has_edge(i, j)) {
                    k_graph.set_edge(i, j, false);
                }
            }
        }
        ensure(k_graph.regular_degree() == 2 * (n - layer - 1), "each layer removes a 2-factor of K");
    }
    ensure(certify::has_half_integral_support(partial.array, PolytopeKind::Omega) &&
               support_indices(partial.array).size() == static_cast<std::size_t>(2 * n * n),
           "completed array must hold two ½ entries in every line");
    return partial.array;
}

}  // namespace

Array3 fill_remaining_layers(PartialArray partial, std::uint64_t seed) {
    const int n = partial.n();
    const auto degree = partial.single_shafts().regular_degree();
    if (!degree || *degree != n - 4) {
        throw PreconditionError("K must be (n-4)-regular before the remaining layers");
    }
    return fill_layers_from(std::move(partial), n / 2 + 2, seed);
}

Array3 random_two_half_array(int n, std::uint64_t seed) {
    if (n < 4 || n % 2 != 0) {
        throw PreconditionError("random_two_half_array needs even n >= 4");
    }
    Rng master(seed);
    auto partial = build_top_half(designs::random_hamiltonian_double_latin(n, master.next()));
    return fill_layers_from(std::move(partial), n / 2, master.next());
}

VertexRate empirical_vertex_rate(int n, std::size_t samples, std::uint64_t seed) {
    VertexRate rate{samples, 0};
    const PolytopeSpec spec{PolytopeKind::Omega, n, 2};
    for (std::size_t s = 0; s < samples; ++s) {
        const auto a = random_two_half_array(n, seed + s);
        const auto graph = certify::is_vertex_half_integral(a, PolytopeKind::Omega);
        ensure(graph.is_vertex == certify::is_vertex_rank(a, spec).is_vertex, "graph criterion and rank test disagree");
        rate.vertices += graph.is_vertex ? 1 : 0;
    }
    return rate;
}

Array3 run_pipeline(int n, std::uint64_t seed) {
    if (n < 6 || n % 2 != 0) {
        throw PreconditionError("the construction needs even n >= 6");
    }
    Rng master(seed);
    const auto x = designs::random_hamiltonian_double_latin(n, master.next());
    auto partial = build_top_half(x);
    const auto cells = select_rainbow_transversal(x, master.next());
    const auto tau = extend_to_permutation(cells, n, master.next());
    const auto sigma = choose_single_cycle_partner(tau, master.next());
    place_connecting_layer(partial, tau, sigma);
    ensure(certify::SupportGraph::build(partial.array, certify::AdjacencyMode::Line).is_connected(),
           "decided layers must be connected once layer n/2 is placed");
    partial = plant_odd_cycle(std::move(partial), master.next());
    return fill_remaining_layers(std::move(partial), master.next());
}

ConstructedVertex construct_vertex(int n, std::uint64_t seed) {
    if (n < 10 || n % 2 != 0) {
        throw PreconditionError("construct_vertex needs even n >= 10");
    }
    ConstructedVertex out;
    out.array = run_pipeline(n, seed);
    const PolytopeSpec spec{PolytopeKind::Omega, n, 2};
    out.graph_certificate = certify::is_vertex_half_integral(out.array, PolytopeKind::Omega);
    out.rank_certificate = certify::is_vertex_rank(out.array, spec);
    const auto g = certify::SupportGraph::build(out.array, certify::AdjacencyMode::Line);
    ensure(g.is_connected() && !g.is_bipartite(), "G(A) must be connected and non-bipartite");
    ensure(out.graph_certificate.is_vertex && out.rank_certificate.is_vertex, "constructed array must be a vertex");
    return out;
}

}  // namespace birkhoff::omega
