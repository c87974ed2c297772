#include "birkhoff/certify.hpp"
#include "birkhoff/cli.hpp"
#include "birkhoff/errors.hpp"
#include "birkhoff/json_io.hpp"
#include "birkhoff/omega_build.hpp"
#include "birkhoff/sample.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace birkhoff;
namespace fs = std::filesystem;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(const std::vector<std::string>& args, const char* seed_env = nullptr) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err, seed_env);
    return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

fs::path scratch(const std::string& name) {
    const fs::path dir = fs::temp_directory_path() / ("birkhoff_cli_" + name);
    fs::remove_all(dir);
    fs::create_directories(dir);
    return dir;
}

std::string golden(const std::string& name) { return std::string(GOLDENS_DIR) + "/" + name; }

}  // namespace

TEST(CliExitCodes, UnknownSubcommand) {
    EXPECT_EQ(run({"frobnicate"}).code, cli::kUnknownSubcommand);
    EXPECT_EQ(run({}).code, cli::kUnknownSubcommand);
}

TEST(CliExitCodes, InvalidParameters) {
    EXPECT_EQ(run({"construct", "omega", "--n", "9"}).code, cli::kInvalidParameters);
    EXPECT_EQ(run({"construct", "omega", "--n", "8"}).code, cli::kInvalidParameters);
    EXPECT_EQ(run({"enumerate", "--kind", "cube", "--n", "2", "--d", "1"}).code, cli::kInvalidParameters);
    EXPECT_EQ(run({"designs", "latin"}).code, cli::kInvalidParameters);
    EXPECT_EQ(run({"designs", "latin", "--order", "3", "--seed", "x"}).code, cli::kInvalidParameters);
    EXPECT_EQ(run({"sample", "--kind", "omega", "--n", "3", "--d", "2", "--trials", "0"}).code, cli::kInvalidParameters);
}

TEST(CliExitCodes, NonMemberIsInvalid) {
    const fs::path dir = scratch("nonmember");
    std::ofstream(dir / "bad.json") << R"({"kind":"omega","n":2,"d":1,"entries":[[1,1],[0,0]]})";
    EXPECT_EQ(run({"verify", (dir / "bad.json").string()}).code, cli::kInvalidParameters);
}

TEST(CliExitCodes, IoFailures) {
    EXPECT_EQ(run({"verify", "/nonexistent/array.json"}).code, cli::kIoFailure);
    const fs::path dir = scratch("io");
    std::ofstream(dir / "broken.json") << "{\"kind\": ";
    EXPECT_EQ(run({"verify", (dir / "broken.json").string()}).code, cli::kIoFailure);
    EXPECT_EQ(run({"bounds", "permanent", (dir / "broken.json").string()}).code, cli::kIoFailure);
    EXPECT_EQ(run({"designs", "latin", "--order", "3", "--out", "/nonexistent/dir/x.json"}).code, cli::kIoFailure);
}

TEST(CliExitCodes, HelpIsSuccess) {
    EXPECT_EQ(run({"--help"}).code, cli::kOk);
}

TEST(CliVerify, GoldensAreVertices) {
    for (const char* name : {"example_3x3x3.json", "sigma_2x2x2.json", "omega_n10_seed0.json"}) {
        const auto r = run({"verify", golden(name)});
        ASSERT_EQ(r.code, cli::kOk) << name << r.err;
        const Json doc = Json::parse(r.out);
        EXPECT_TRUE(doc["member"].get<bool>());
        EXPECT_TRUE(doc["certificates"]["rank"]["is_vertex"].get<bool>()) << name;
        EXPECT_TRUE(doc["certificates"]["graph"]["is_vertex"].get<bool>()) << name;
    }
}

TEST(CliVerify, EnumerationMethodAgrees) {
    const auto r = run({"verify", golden("example_3x3x3.json"), "--method", "enumeration"});
    ASSERT_EQ(r.code, cli::kOk) << r.err;
    EXPECT_TRUE(Json::parse(r.out)["certificates"]["enumeration"]["is_vertex"].get<bool>());
}

TEST(CliVerify, NonVertexReportsWitness) {
    const fs::path dir = scratch("nonvertex");
    std::ofstream(dir / "half.json")
        << R"({"kind":"omega","n":2,"d":1,"entries":[["1/2","1/2"],["1/2","1/2"]]})";
    const auto r = run({"verify", (dir / "half.json").string()});
    ASSERT_EQ(r.code, cli::kOk) << r.err;
    const Json doc = Json::parse(r.out);
    EXPECT_FALSE(doc["certificates"]["rank"]["is_vertex"].get<bool>());
    EXPECT_FALSE(doc["certificates"]["graph"]["is_vertex"].get<bool>());
}

TEST(CliDeterminism, RepeatsAreByteIdentical) {
    const std::vector<std::vector<std::string>> commands{
        {"construct", "omega", "--n", "10", "--seed", "3"},
        {"construct", "sigma", "--n", "4", "--seed", "3", "--count", "2"},
        {"designs", "latin", "--order", "6", "--seed", "3"},
        {"designs", "double-latin", "--n", "8", "--seed", "3"},
        {"sample", "--kind", "omega", "--n", "3", "--d", "2", "--trials", "4", "--seed", "3"},
        {"bounds", "report", "--n", "10"},
    };
    for (const auto& cmd : commands) {
        const auto a = run(cmd), b = run(cmd);
        ASSERT_EQ(a.code, cli::kOk) << cmd[0] << a.err;
        EXPECT_EQ(a.out, b.out) << cmd[0];
        EXPECT_EQ(a.out.find("time"), std::string::npos);
    }
}

TEST(CliDeterminism, SeedEnvironmentOverride) {
    const auto flag = run({"construct", "omega", "--n", "10", "--seed", "7"});
    const auto env = run({"construct", "omega", "--n", "10"}, "7");
    const auto both = run({"construct", "omega", "--n", "10", "--seed", "7"}, "8");
    const auto zero = run({"construct", "omega", "--n", "10", "--seed", "0"});
    const auto neither = run({"construct", "omega", "--n", "10"});
    EXPECT_EQ(flag.out, env.out);
    EXPECT_EQ(flag.out, both.out);
    EXPECT_EQ(zero.out, neither.out);
    EXPECT_NE(flag.out, zero.out);
}

TEST(CliDeterminism, PinnedGoldenReproduces) {
    const auto r = run({"construct", "omega", "--n", "10", "--seed", "0"});
    ASSERT_EQ(r.code, cli::kOk);
    EXPECT_EQ(r.out, slurp(golden("omega_n10_seed0.json")));
}

TEST(CliConstruct, OutputDirectoryGetsOneFilePerRun) {
    const fs::path dir = scratch("construct") / "runs";
    const auto r = run({"construct", "omega", "--n", "10", "--seed", "4", "--count", "3", "--out", dir.string() + "/"});
    ASSERT_EQ(r.code, cli::kOk) << r.err;
    for (int seed : {4, 5, 6}) {
        const fs::path file = dir / ("omega_n10_seed" + std::to_string(seed) + ".json");
        ASSERT_TRUE(fs::exists(file)) << file;
        const auto v = run({"verify", file.string()});
        ASSERT_EQ(v.code, cli::kOk);
        EXPECT_TRUE(Json::parse(v.out)["certificates"]["rank"]["is_vertex"].get<bool>());
    }
    const auto single = run({"construct", "omega", "--n", "10", "--seed", "5"});
    Json lhs = Json::parse(single.out), rhs = Json::parse(slurp(dir / "omega_n10_seed5.json"));
    lhs.erase("meta");
    rhs.erase("meta");
    EXPECT_EQ(lhs, rhs);
}

TEST(CliConstruct, CountWrapsVertices) {
    const auto r = run({"construct", "sigma", "--n", "6", "--count", "3", "--seed", "1"});
    ASSERT_EQ(r.code, cli::kOk) << r.err;
    const Json doc = Json::parse(r.out);
    ASSERT_EQ(doc["vertices"].size(), 3u);
    for (const auto& v : doc["vertices"]) {
        const auto parsed = array_from_json(v);
        EXPECT_TRUE(certify::is_vertex_rank(parsed.array, parsed.spec).is_vertex);
    }
    EXPECT_EQ(doc["meta"]["command"], "construct sigma");
}

TEST(CliSample, BirkhoffTrialsArePermutations) {
    const auto r = run({"sample", "--kind", "omega", "--n", "3", "--d", "1", "--trials", "5"});
    ASSERT_EQ(r.code, cli::kOk) << r.err;
    const Json doc = Json::parse(r.out);
    ASSERT_EQ(doc["per_trial"].size(), 5u);
    for (const auto& t : doc["per_trial"]) {
        EXPECT_EQ(t["support"], 3);
        EXPECT_TRUE(t["permutation"].get<bool>());
        EXPECT_TRUE(t["rank_vertex"].get<bool>());
    }
}

TEST(CliEnumerate, CountsMatchBasisOracle) {
    for (auto [kind, n, d] : std::vector<std::tuple<std::string, int, int>>{{"omega", 3, 1}, {"omega", 2, 2}, {"sigma", 2, 2}}) {
        const auto r = run({"enumerate", "--kind", kind, "--n", std::to_string(n), "--d", std::to_string(d)});
        ASSERT_EQ(r.code, cli::kOk) << r.err;
        const auto expected = oracle::basis_vertices(parse_kind(kind), n, d).size();
        EXPECT_EQ(Json::parse(r.out)["count"].get<std::size_t>(), expected) << kind << n << d;
    }
}

TEST(CliBounds, PermanentOfAllOnes) {
    const fs::path dir = scratch("perm");
    std::ofstream(dir / "j3.json") << R"({"order":3,"entries":[[1,1,1],[1,1,1],[1,1,1]]})";
    const auto r = run({"bounds", "permanent", (dir / "j3.json").string()});
    ASSERT_EQ(r.code, cli::kOk) << r.err;
    const Json doc = Json::parse(r.out);
    EXPECT_EQ(doc["permanent"], "6");
    EXPECT_TRUE(doc["within_bregman_bound"].get<bool>());
}

// Cross-module: every LP optimum over Ω⁽²⁾₃ is in the enumerated vertex list,
// and every pipeline output agrees between the two certifiers.
TEST(CrossModule, SimplexOptimaAreEnumeratedVertices) {
    const auto r = run({"enumerate", "--kind", "omega", "--n", "3", "--d", "2"});
    ASSERT_EQ(r.code, cli::kOk);
    const Json doc = Json::parse(r.out);
    EXPECT_EQ(doc["count"], 66);
    std::vector<Array3> vertices;
    for (const auto& entries : doc["vertices"]) {
        vertices.push_back(array_from_json(Json{{"kind", "omega"}, {"n", 3}, {"d", 2}, {"entries", entries}}).array);
    }
    const PolytopeSpec spec{PolytopeKind::Omega, 3, 2};
    for (std::uint64_t seed = 100; seed < 140; ++seed) {
        const auto opt = sample::maximize(spec, sample::gaussian_objective(spec, seed));
        EXPECT_NE(std::find(vertices.begin(), vertices.end(), opt.point), vertices.end());
    }
}

TEST(CrossModule, PipelineOutputsCertifyConsistently) {
    for (int n : {6, 8, 12}) {
        for (std::uint64_t seed = 0; seed < 10; ++seed) {
            Array3 a;
            try {
                a = omega::run_pipeline(n, seed);
            } catch (const ConstructionError&) {
                continue;
            }
            const PolytopeSpec spec{PolytopeKind::Omega, n, 2};
            const auto graph = certify::is_vertex_half_integral(a);
            const auto rank = certify::is_vertex_rank(a, spec);
            EXPECT_EQ(graph.is_vertex, rank.is_vertex);
            EXPECT_TRUE(rank.is_vertex);
        }
    }
}
