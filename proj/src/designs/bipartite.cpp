#include "birkhoff/designs.hpp"

#include "birkhoff/errors.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace birkhoff::designs {

int BipartiteGraph::left_degree(int left) const {
    int d = 0;
    for (int r = 0; r < n_; ++r) {
        d += has_edge(left, r);
    }
    return d;
}

int BipartiteGraph::right_degree(int right) const {
    int d = 0;
    for (int l = 0; l < n_; ++l) {
        d += has_edge(l, right);
    }
    return d;
}

std::size_t BipartiteGraph::edge_count() const {
    return static_cast<std::size_t>(std::count(adj_.begin(), adj_.end(), 1));
}

std::optional<int> BipartiteGraph::regular_degree() const {
    if (n_ == 0) {
        return 0;
    }
    const int k = left_degree(0);
    for (int v = 0; v < n_; ++v) {
        if (left_degree(v) != k || right_degree(v) != k) {
            return std::nullopt;
        }
    }
    return k;
}

std::optional<std::vector<std::pair<int, int>>> perfect_matching_on(const BipartiteGraph& g,
                                                                     const std::vector<char>& left_allowed,
                                                                     const std::vector<char>& right_allowed,
                                                                     Rng* rng) {
    const int n = g.order();
    std::vector<int> lefts;
    int rights = 0;
    for (int v = 0; v < n; ++v) {
        if (left_allowed[static_cast<std::size_t>(v)]) {
            lefts.push_back(v);
        }
        rights += right_allowed[static_cast<std::size_t>(v)] ? 1 : 0;
    }
    if (static_cast<int>(lefts.size()) != rights) {
        return std::nullopt;
    }
    std::vector<std::vector<int>> order(static_cast<std::size_t>(n));
    for (int u : lefts) {
        auto& o = order[static_cast<std::size_t>(u)];
        for (int v = 0; v < n; ++v) {
            if (right_allowed[static_cast<std::size_t>(v)] && g.has_edge(u, v)) {
                o.push_back(v);
            }
        }
        if (rng) {
            rng->shuffle(o);
        }
    }
    if (rng) {
        rng->shuffle(lefts);
    }
    std::vector<int> match_right(static_cast<std::size_t>(n), -1);
    std::vector<char> visited(static_cast<std::size_t>(n));
    std::function<bool(int)> augment = [&](int u) {
        for (int v : order[static_cast<std::size_t>(u)]) {
            if (visited[static_cast<std::size_t>(v)]) {
                continue;
            }
            visited[static_cast<std::size_t>(v)] = 1;
            if (match_right[static_cast<std::size_t>(v)] == -1 || augment(match_right[static_cast<std::size_t>(v)])) {
                match_right[static_cast<std::size_t>(v)] = u;
                return true;
            }
        }
        return false;
    };
    for (int u : lefts) {
        std::fill(visited.begin(), visited.end(), 0);
        if (!augment(u)) {
            return std::nullopt;
        }
    }
    std::vector<std::pair<int, int>> edges;
    for (int v = 0; v < n; ++v) {
        if (match_right[static_cast<std::size_t>(v)] != -1) {
            edges.emplace_back(match_right[static_cast<std::size_t>(v)], v);
        }
    }
    std::sort(edges.begin(), edges.end());
    return edges;
}

std::optional<Matching> perfect_matching(const BipartiteGraph& g, Rng* rng) {
    const std::vector<char> all(static_cast<std::size_t>(g.order()), 1);
    const auto edges = perfect_matching_on(g, all, all, rng);
    if (!edges) {
        return std::nullopt;
    }
    Matching m(static_cast<std::size_t>(g.order()), -1);
    for (auto [l, r] : *edges) {
        m[static_cast<std::size_t>(l)] = r;
    }
    return m;
}

std::array<std::pair<int, int>, 3> BipartitePath::edges() const {
    const auto& x = vertices;
    if (first_side == Side::Left) {
        return {{{x[0], x[1]}, {x[2], x[1]}, {x[2], x[3]}}};
    }
    return {{{x[1], x[0]}, {x[1], x[2]}, {x[3], x[2]}}};
}

bool is_two_factor_of(const BipartiteGraph& f, const BipartiteGraph& g) {
    if (f.order() != g.order()) {
        return false;
    }
    for (int l = 0; l < f.order(); ++l) {
        for (int r = 0; r < f.order(); ++r) {
            if (f.has_edge(l, r) && !g.has_edge(l, r)) {
                return false;
            }
        }
    }
    return f.regular_degree() == 2;
}

namespace {

/// Subgraph of g \ banned with the given degree at every vertex, via unit-capacity max flow.
std::optional<BipartiteGraph> degree_constrained_subgraph(const BipartiteGraph& g, const BipartiteGraph& banned,
                                                          const std::vector<int>& left_need,
                                                          const std::vector<int>& right_need) {
    const int n = g.order();
    const int source = 2 * n;
    const int sink = 2 * n + 1;
    const int nodes = 2 * n + 2;
    std::vector<int> cap(static_cast<std::size_t>(nodes * nodes), 0);
    auto at = [&](int a, int b) -> int& { return cap[static_cast<std::size_t>(a * nodes + b)]; };
    int demand = 0;
    for (int v = 0; v < n; ++v) {
        at(source, v) = left_need[static_cast<std::size_t>(v)];
        at(n + v, sink) = right_need[static_cast<std::size_t>(v)];
        demand += left_need[static_cast<std::size_t>(v)];
        for (int w = 0; w < n; ++w) {
            if (g.has_edge(v, w) && !banned.has_edge(v, w)) {
                at(v, n + w) = 1;
            }
        }
    }
    std::vector<char> seen(static_cast<std::size_t>(nodes));
    std::function<bool(int)> push = [&](int u) {
        if (u == sink) {
            return true;
        }
        seen[static_cast<std::size_t>(u)] = 1;
        for (int v = 0; v < nodes; ++v) {
            if (!seen[static_cast<std::size_t>(v)] && at(u, v) > 0 && push(v)) {
                --at(u, v);
                ++at(v, u);
                return true;
            }
        }
        return false;
    };
    int flow = 0;
    while (true) {
        std::fill(seen.begin(), seen.end(), 0);
        if (!push(source)) {
            break;
        }
        ++flow;
    }
    if (flow != demand) {
        return std::nullopt;
    }
    BipartiteGraph out(n);
    for (int v = 0; v < n; ++v) {
        for (int w = 0; w < n; ++w) {
            if (g.has_edge(v, w) && !banned.has_edge(v, w) && at(v, n + w) == 0) {
                out.set_edge(v, w);
            }
        }
    }
    return out;
}

}  // namespace

BipartiteGraph two_factor_containing_path(const BipartiteGraph& g, const BipartitePath& path, std::uint64_t seed) {
    const int n = g.order();
    if (n < 6) {
        throw PreconditionError("two_factor_containing_path needs n >= 6");
    }
    if (g.regular_degree() != n - 2) {
        throw PreconditionError("two_factor_containing_path needs an (n-2)-regular graph");
    }
    const auto& x = path.vertices;
    for (int v : x) {
        if (v < 0 || v >= n) {
            throw PreconditionError("path vertex out of range");
        }
    }
    if (x[0] == x[2] || x[1] == x[3]) {
        throw PreconditionError("path repeats a vertex");
    }
    const auto edges = path.edges();
    for (auto [l, r] : edges) {
        if (!g.has_edge(l, r)) {
            throw PreconditionError("path uses an edge not in the graph");
        }
    }

    // Side membership of x1..x4.
    std::vector<char> left_in_path(static_cast<std::size_t>(n), 0), right_in_path(static_cast<std::size_t>(n), 0);
    auto mark = [&](int idx, std::vector<char>& left, std::vector<char>& right) {
        const bool on_left = (idx % 2 == 0) == (path.first_side == Side::Left);
        (on_left ? left : right)[static_cast<std::size_t>(x[static_cast<std::size_t>(idx)])] = 1;
    };
    for (int i = 0; i < 4; ++i) {
        mark(i, left_in_path, right_in_path);
    }
    std::vector<char> left_inner(static_cast<std::size_t>(n), 0), right_inner(static_cast<std::size_t>(n), 0);
    mark(1, left_inner, right_inner);
    mark(2, left_inner, right_inner);

    BipartiteGraph result(n);
    Rng rng(seed);
    constexpr int kAttempts = 32;
    for (int attempt = 0; attempt < kAttempts; ++attempt) {
        std::vector<char> l_phi(static_cast<std::size_t>(n)), r_phi(static_cast<std::size_t>(n));
        for (int v = 0; v < n; ++v) {
            l_phi[static_cast<std::size_t>(v)] = !left_in_path[static_cast<std::size_t>(v)];
            r_phi[static_cast<std::size_t>(v)] = !right_in_path[static_cast<std::size_t>(v)];
        }
        const auto phi = perfect_matching_on(g, l_phi, r_phi, &rng);
        if (!phi) {
            continue;
        }
        BipartiteGraph rest = g;
        for (auto [l, r] : *phi) {
            rest.set_edge(l, r, false);
        }
        std::vector<char> l_psi(static_cast<std::size_t>(n)), r_psi(static_cast<std::size_t>(n));
        for (int v = 0; v < n; ++v) {
            l_psi[static_cast<std::size_t>(v)] = !left_inner[static_cast<std::size_t>(v)];
            r_psi[static_cast<std::size_t>(v)] = !right_inner[static_cast<std::size_t>(v)];
        }
        const auto psi = perfect_matching_on(rest, l_psi, r_psi, &rng);
        if (!psi) {
            continue;
        }
        for (auto [l, r] : *phi) {
            result.set_edge(l, r);
        }
        for (auto [l, r] : *psi) {
            result.set_edge(l, r);
        }
        for (auto [l, r] : edges) {
            result.set_edge(l, r);
        }
        ensure(is_two_factor_of(result, g), "Φ ∪ Ψ ∪ path must be a 2-factor");
        return result;
    }

    BipartiteGraph path_edges(n);
    for (auto [l, r] : edges) {
        path_edges.set_edge(l, r);
    }
    std::vector<int> left_need(static_cast<std::size_t>(n), 2), right_need(static_cast<std::size_t>(n), 2);
    for (auto [l, r] : edges) {
        --left_need[static_cast<std::size_t>(l)];
        --right_need[static_cast<std::size_t>(r)];
    }
    auto completion = degree_constrained_subgraph(g, path_edges, left_need, right_need);
    if (!completion) {
        throw ConstructionError("no 2-factor contains the given path");
    }
    for (auto [l, r] : edges) {
        completion->set_edge(l, r);
    }
    ensure(is_two_factor_of(*completion, g), "flow completion must be a 2-factor");
    return *completion;
}

BipartiteGraph extract_two_factor(const BipartiteGraph& g, Rng* rng) {
    const auto k = g.regular_degree();
    if (!k || *k < 2 || *k % 2 != 0) {
        throw PreconditionError("extract_two_factor needs a k-regular graph with k even and >= 2");
    }
    // A k-regular bipartite graph has a perfect matching, and removing it leaves a (k-1)-regular one.
    const auto first = perfect_matching(g, rng);
    ensure(first.has_value(), "regular bipartite graph must have a perfect matching");
    BipartiteGraph rest = g;
    for (int l = 0; l < g.order(); ++l) {
        rest.set_edge(l, (*first)[static_cast<std::size_t>(l)], false);
    }
    const auto second = perfect_matching(rest, rng);
    ensure(second.has_value(), "regular bipartite graph must have a perfect matching");
    BipartiteGraph factor(g.order());
    for (int l = 0; l < g.order(); ++l) {
        factor.set_edge(l, (*first)[static_cast<std::size_t>(l)]);
        factor.set_edge(l, (*second)[static_cast<std::size_t>(l)]);
    }
    return factor;
}

BipartiteGraph random_regular_bipartite(int n, int k, Rng& rng) {
    if (k < 0 || k > n) {
        throw PreconditionError("degree must lie in [0, n]");
    }
    const auto latin = random_latin(n, rng);
    std::vector<int> symbols(static_cast<std::size_t>(n));
    std::iota(symbols.begin(), symbols.end(), 0);
    rng.shuffle(symbols);
    std::vector<char> chosen(static_cast<std::size_t>(n), 0);
    for (int i = 0; i < k; ++i) {
        chosen[static_cast<std::size_t>(symbols[static_cast<std::size_t>(i)])] = 1;
    }
    BipartiteGraph g(n);
    for (int l = 0; l < n; ++l) {
        for (int r = 0; r < n; ++r) {
            if (chosen[static_cast<std::size_t>(latin(l, r))]) {
                g.set_edge(l, r);
            }
        }
    }
    return g;
}

}  // namespace birkhoff::designs
