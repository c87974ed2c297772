// Acceptance suite: one PASS/FAIL line per criterion, each with its own
// runtime limit. Exit status is nonzero if any criterion fails.

#include "birkhoff/bounds.hpp"
#include "birkhoff/certify.hpp"
#include "birkhoff/cli.hpp"
#include "birkhoff/designs.hpp"
#include "birkhoff/json_io.hpp"
#include "birkhoff/omega_build.hpp"
#include "birkhoff/sample.hpp"
#include "birkhoff/sigma_build.hpp"

#include "generators.hpp"
#include "oracles.hpp"
#include "paths.hpp"

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <map>
#include <queue>
#include <set>
#include <sstream>
#include <string>

using namespace birkhoff;

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;

    void require(bool condition, const std::string& what) {
        if (!condition && ok) {
            ok = false;
            detail = what;
        }
    }
};

std::string golden(const std::string& name) { return std::string(GOLDENS_DIR) + "/" + name; }

const Rational kHalf = make_rational(1, 2);

bool two_halves_per_line(const Array3& a) {
    for (const auto& line : line_index_sets(a.n(), a.d())) {
        int halves = 0;
        for (auto idx : line) {
            if (a[idx] == kHalf) {
                ++halves;
            } else if (a[idx] != 0) {
                return false;
            }
        }
        if (halves != 2) {
            return false;
        }
    }
    return true;
}

/// Connectivity and bipartiteness of the graph on the support where two cells
/// are adjacent iff they share a line.
std::pair<bool, bool> connected_and_bipartite(const Array3& a) {
    const auto cells = support_indices(a);
    std::map<std::size_t, std::size_t> position;
    for (std::size_t i = 0; i < cells.size(); ++i) {
        position[cells[i]] = i;
    }
    std::vector<std::vector<std::size_t>> adj(cells.size());
    for (const auto& line : line_index_sets(a.n(), a.d())) {
        std::vector<std::size_t> on;
        for (auto idx : line) {
            if (a[idx] != 0) {
                on.push_back(position.at(idx));
            }
        }
        for (std::size_t x = 0; x < on.size(); ++x) {
            for (std::size_t y = x + 1; y < on.size(); ++y) {
                adj[on[x]].push_back(on[y]);
                adj[on[y]].push_back(on[x]);
            }
        }
    }
    std::vector<int> colour(cells.size(), -1);
    std::queue<std::size_t> queue;
    colour[0] = 0;
    queue.push(0);
    std::size_t reached = 1;
    bool bipartite = true;
    while (!queue.empty()) {
        const auto v = queue.front();
        queue.pop();
        for (auto u : adj[v]) {
            if (colour[u] < 0) {
                colour[u] = 1 - colour[v];
                ++reached;
                queue.push(u);
            } else if (colour[u] == colour[v]) {
                bipartite = false;
            }
        }
    }
    return {reached == cells.size(), bipartite};
}

// ---------------------------------------------------------------- criteria

Outcome golden_example() {
    Outcome r;
    const auto doc = read_array_file(golden("example_3x3x3.json"));
    const PolytopeSpec spec{PolytopeKind::Omega, 3, 2};
    r.require(doc.spec == spec && is_member(doc.array, spec), "golden is not tristochastic");
    r.require(certify::is_vertex_half_integral(doc.array).is_vertex, "graph criterion rejects the golden");
    r.require(certify::is_vertex_rank(doc.array, spec).is_vertex, "rank test rejects the golden");

    const Array3 flat = gen::constant_array(2, 2, kHalf);
    const PolytopeSpec small{PolytopeKind::Omega, 2, 2};
    const auto graph = certify::is_vertex_half_integral(flat);
    const auto rank = certify::is_vertex_rank(flat, small);
    r.require(!graph.is_vertex && !rank.is_vertex, "all-1/2 array certified as a vertex");
    r.require(graph.witness && certify::witness_is_valid(graph, flat, small), "graph witness invalid");
    r.require(rank.witness && certify::witness_is_valid(rank, flat, small), "rank witness invalid");
    return r;
}

Outcome birkhoff_baseline() {
    Outcome r;
    for (int n : {2, 3}) {
        const auto vertices = certify::enumerate_vertices({PolytopeKind::Omega, n, 1});
        r.require(vertices.size() == (n == 2 ? 2u : 6u), "wrong vertex count for n=" + std::to_string(n));
        std::set<std::vector<Rational>> seen;
        for (const auto& v : vertices) {
            std::vector<int> p(static_cast<std::size_t>(n), -1);
            bool permutation = true;
            for (std::size_t idx = 0; idx < v.size(); ++idx) {
                if (v[idx] == 1) {
                    auto& slot = p[static_cast<std::size_t>(v.coord(idx, 0))];
                    permutation = permutation && slot < 0;
                    slot = v.coord(idx, 1);
                } else {
                    permutation = permutation && v[idx] == 0;
                }
            }
            const std::set<int> image(p.begin(), p.end());
            r.require(permutation && image.size() == static_cast<std::size_t>(n) && *image.begin() >= 0,
                      "vertex is not a permutation matrix");
            seen.insert({v.entries().begin(), v.entries().end()});
        }
        r.require(seen.size() == vertices.size(), "duplicate vertices");
    }
    return r;
}

Outcome construction_pipeline() {
    Outcome r;
    std::set<std::vector<Rational>> seen;
    const PolytopeSpec spec{PolytopeKind::Omega, 10, 2};
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        const auto v = omega::construct_vertex(10, seed);
        const std::string at = " (seed " + std::to_string(seed) + ")";
        r.require(is_member(v.array, spec), "not tristochastic" + at);
        r.require(two_halves_per_line(v.array), "a line lacks exactly two 1/2 entries" + at);
        const auto [connected, bipartite] = connected_and_bipartite(v.array);
        r.require(connected, "support graph disconnected" + at);
        r.require(!bipartite, "support graph bipartite" + at);
        r.require(certify::is_vertex_rank(v.array, spec).is_vertex, "rank test fails" + at);
        r.require(seen.insert({v.array.entries().begin(), v.array.entries().end()}).second, "repeated output" + at);
    }
    return r;
}

Outcome double_latin_hamiltonian() {
    Outcome r;
    for (int n : {4, 8, 12}) {
        const int m = n / 2;
        for (std::uint64_t seed = 0; seed < 50; ++seed) {
            gen::Source src(seed * 31 + static_cast<std::uint64_t>(n));
            Rng rng(seed);
            const auto a = designs::random_latin(m, rng);
            const auto b = designs::random_latin(m, rng);
            // A random cyclic permutation: successor along a shuffled cycle.
            const auto order = src.permutation(m);
            designs::Permutation sigma(static_cast<std::size_t>(m));
            for (int t = 0; t < m; ++t) {
                sigma[static_cast<std::size_t>(order[static_cast<std::size_t>(t)])] = order[static_cast<std::size_t>((t + 1) % m)];
            }
            const auto x = designs::double_latin_from(a, b, sigma);
            r.require(designs::is_double_latin(n, x.grid()), "not a double Latin square");
            r.require(designs::is_hamiltonian(x), "not Hamiltonian at n=" + std::to_string(n));
        }
    }
    return r;
}

Outcome two_factor_with_path() {
    Outcome r;
    for (int n : {6, 10}) {
        gen::Source src(static_cast<std::uint64_t>(100 + n));
        Rng rng(static_cast<std::uint64_t>(n));
        for (std::uint64_t seed = 0; seed < 100; ++seed) {
            const auto g = designs::random_regular_bipartite(n, n - 2, rng);
            r.require(g.regular_degree() == n - 2, "instance is not (n-2)-regular");
            const auto path = gen::random_path(g, src);
            const auto f = designs::two_factor_containing_path(g, path, seed);
            bool two_regular = true;
            for (int v = 0; v < n; ++v) {
                two_regular = two_regular && f.left_degree(v) == 2 && f.right_degree(v) == 2;
                for (int u = 0; u < n; ++u) {
                    two_regular = two_regular && (!f.has_edge(v, u) || g.has_edge(v, u));
                }
            }
            r.require(two_regular, "output is not a 2-factor of the instance");
            r.require(gen::contains_path(f, path), "output misses a path edge");
        }
    }
    return r;
}

Outcome sigma_construction() {
    Outcome r;
    const auto doc = read_array_file(golden("sigma_2x2x2.json"));
    const auto orbit = oracle::symmetry_orbit(doc.array);
    for (int n : {2, 4, 6}) {
        const PolytopeSpec spec{PolytopeKind::Sigma, n, 2};
        for (std::uint64_t seed = 0; seed < 100; ++seed) {
            const auto v = sigma::construct_sigma_vertex(n, seed);
            r.require(is_member(v.array, spec), "not in Sigma");
            r.require(certify::is_vertex_rank(v.array, spec).is_vertex, "rank test fails");
            bool integral = true;
            for (const auto& q : v.array.entries()) {
                integral = integral && q.get_den() == 1;
            }
            r.require(!integral && !sigma::is_t_array(v.array), "output lies in T");
            if (n == 2) {
                r.require(orbit.contains({v.array.entries().begin(), v.array.entries().end()}),
                          "n=2 output differs from the reference array up to symmetry");
            }
        }
    }
    return r;
}

Outcome counting_formulas() {
    Outcome r;
    const std::vector<long> h_expected{1, 6, 72};
    for (int n = 2; n <= 4; ++n) {
        const long want = h_expected[static_cast<std::size_t>(n - 2)];
        r.require(designs::count_h_cycles(n) == want, "count_h_cycles formula");
        r.require(oracle::distinct_h_cycle_cell_sets(n) == static_cast<std::size_t>(want), "exhaustive H-cycle count");
        r.require(designs::enumerate_h_cycles(n).size() == static_cast<std::size_t>(want), "enumerate_h_cycles size");
    }
    const std::vector<std::uint64_t> latin_expected{1, 2, 12, 576, 161280};
    for (int t = 1; t <= 5; ++t) {
        const auto want = latin_expected[static_cast<std::size_t>(t - 1)];
        r.require(designs::count_latin(t) == want, "count_latin(" + std::to_string(t) + ")");
        r.require(oracle::count_latin_cells(t) == want, "backtracking oracle (" + std::to_string(t) + ")");
    }
    return r;
}

Outcome permanent_bounds() {
    Outcome r;
    gen::Source src(8);
    for (int trial = 0; trial < 500; ++trial) {
        const int n = static_cast<int>(src.integer(1, 8));
        const auto m = bounds::SquareMatrix::from_rows(src.zero_one(n, static_cast<int>(src.integer(20, 100))));
        const Rational per = bounds::permanent(m);
        r.require(bounds::within_bregman_bound(m, per), "Bregman bound violated");
        r.require(bounds::BigReal(per.get_num().get_str()) <= bounds::bregman_upper_bound(m), "Bregman bound violated (real)");
    }
    for (int trial = 0; trial < 200; ++trial) {
        const int n = static_cast<int>(src.integer(1, 7));
        const auto m = bounds::SquareMatrix::from_rows(src.doubly_stochastic(n, static_cast<int>(src.integer(1, 6))));
        r.require(m.is_doubly_stochastic(), "generator produced a non doubly stochastic matrix");
        r.require(bounds::permanent(m) >= bounds::vdw_lower_bound(n), "van der Waerden bound violated");
    }
    for (int trial = 0; trial < 200; ++trial) {
        const int n = static_cast<int>(src.integer(1, 5));
        oracle::RationalMatrix rows(static_cast<std::size_t>(n));
        for (auto& row : rows) {
            for (int c = 0; c < n; ++c) {
                row.push_back(src.rational());
            }
        }
        r.require(bounds::permanent(bounds::SquareMatrix::from_rows(rows)) == oracle::naive_permanent(rows),
                  "Ryser disagrees with the naive permanent");
    }
    return r;
}

Outcome lp_experiment() {
    Outcome r;
    std::ostringstream alphas;
    for (int n : {3, 4, 5}) {
        const auto report = sample::run_experiment({PolytopeKind::Omega, n, 2}, 200, 0);
        const long long bound = static_cast<long long>(n) * n * n - static_cast<long long>(n - 1) * (n - 1) * (n - 1);
        r.require(report.trials.size() == 200, "wrong trial count");
        for (const auto& t : report.trials) {
            r.require(t.rank_vertex, "optimum fails the rank test");
            r.require(static_cast<long long>(t.support) <= bound, "support exceeds n^3-(n-1)^3");
        }
        alphas << " n=" << n << ":" << report.mean_alpha;
    }
    for (int n : {3, 4, 5}) {
        const auto report = sample::run_experiment({PolytopeKind::Omega, n, 1}, 200, 0);
        for (const auto& t : report.trials) {
            r.require(t.permutation && t.support == static_cast<std::size_t>(n), "d=1 optimum is not a permutation");
        }
    }
    if (r.ok) {
        r.detail = "mean alpha" + alphas.str();
    }
    return r;
}

Outcome cli_determinism() {
    Outcome r;
    auto invoke = [](const std::vector<std::string>& args, const char* env) {
        std::ostringstream out, err;
        const int code = cli::run(args, out, err, env);
        return std::make_pair(code, out.str());
    };
    const std::vector<std::vector<std::string>> commands{
        {"construct", "omega", "--n", "10", "--seed", "11"},
        {"construct", "sigma", "--n", "6", "--seed", "11", "--count", "3"},
        {"designs", "latin", "--order", "7", "--seed", "11"},
        {"designs", "double-latin", "--n", "12", "--seed", "11"},
        {"enumerate", "--kind", "sigma", "--n", "2", "--d", "2"},
        {"sample", "--kind", "omega", "--n", "4", "--d", "2", "--trials", "5", "--seed", "11"},
        {"bounds", "report", "--n", "12"},
        {"verify", golden("example_3x3x3.json")},
    };
    for (const auto& cmd : commands) {
        const auto a = invoke(cmd, nullptr), b = invoke(cmd, nullptr);
        r.require(a.first == 0, "command failed: " + cmd[0]);
        r.require(a.second == b.second, "output differs between runs: " + cmd[0]);
    }
    r.require(invoke({"construct", "omega", "--n", "10"}, "11").second ==
                  invoke({"construct", "omega", "--n", "10", "--seed", "11"}, nullptr).second,
              "SEED environment differs from --seed");
    std::ifstream in(golden("omega_n10_seed0.json"), std::ios::binary);
    std::stringstream pinned;
    pinned << in.rdbuf();
    r.require(invoke({"construct", "omega", "--n", "10", "--seed", "0"}, nullptr).second == pinned.str(),
              "pinned n=10 output changed");
    return r;
}

struct Criterion {
    int number;
    const char* name;
    double limit_seconds;
    std::function<Outcome()> check;
};

}  // namespace

int main() {
    const std::vector<Criterion> criteria{
        {1, "golden example", 1, golden_example},
        {2, "Birkhoff baseline", 10, birkhoff_baseline},
        {3, "construction pipeline n=10", 60, construction_pipeline},
        {4, "Hamiltonian double Latin squares", 10, double_latin_hamiltonian},
        {5, "2-factor containing a path", 10, two_factor_with_path},
        {6, "Sigma construction", 10, sigma_construction},
        {7, "counting formulas", 300, counting_formulas},
        {8, "permanent bounds", 120, permanent_bounds},
        {9, "LP experiment", 600, lp_experiment},
        {10, "CLI determinism", 60, cli_determinism},
    };
    int failures = 0;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome outcome;
        try {
            outcome = c.check();
        } catch (const std::exception& e) {
            outcome.ok = false;
            outcome.detail = std::string("exception: ") + e.what();
        }
        const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (outcome.ok && seconds > c.limit_seconds) {
            outcome.ok = false;
            outcome.detail = "over time limit";
        }
        failures += outcome.ok ? 0 : 1;
        std::printf("criterion %2d %s  %-34s %8.3f s (limit %g s)%s%s\n", c.number, outcome.ok ? "PASS" : "FAIL", c.name,
                    seconds, c.limit_seconds, outcome.detail.empty() ? "" : "  ", outcome.detail.c_str());
        std::fflush(stdout);
    }
    return failures == 0 ? 0 : 1;
}
