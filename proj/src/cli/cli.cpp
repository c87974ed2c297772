#include "birkhoff/cli.hpp"

#include "birkhoff/bounds.hpp"
#include "birkhoff/certify.hpp"
#include "birkhoff/designs.hpp"
#include "birkhoff/errors.hpp"
#include "birkhoff/json_io.hpp"
#include "birkhoff/omega_build.hpp"
#include "birkhoff/sample.hpp"
#include "birkhoff/sigma_build.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <functional>
#include <ostream>
#include <sstream>

namespace birkhoff::cli {

namespace {

const std::vector<std::string> kSubcommands = {"verify", "enumerate", "construct", "designs", "bounds", "sample"};

struct Options {
    std::uint64_t seed = 0;
    bool seed_given = false;
    std::string out_path;
    std::string file;
    std::string method = "both";
    std::string kind = "omega";
    int n = 0;
    int d = 2;
    int t = 0;
    std::size_t count = 1;
    std::size_t trials = 1;
};

Json spec_json(const PolytopeSpec& spec) {
    return Json{{"kind", to_string(spec.kind)}, {"n", spec.n}, {"d", spec.d}};
}

class Runner {
public:
    Runner(std::ostream& out, const Options& opt) : out_(out), opt_(opt) {}

    Json meta(const std::string& command, Json parameters) const {
        return Json{{"tool", "birkhoff"},
                    {"version", version()},
                    {"command", command},
                    {"seed", opt_.seed},
                    {"parameters", std::move(parameters)}};
    }

    void emit(const Json& doc) const {
        if (opt_.out_path.empty()) {
            out_ << doc.dump(2) << "\n";
        } else {
            write_file(opt_.out_path, doc);
        }
    }

    static void write_file(const std::filesystem::path& path, const Json& doc) {
        std::ofstream file(path, std::ios::binary);
        if (!file || !(file << doc.dump(2) << "\n") || !file.flush()) {
            throw std::ios_base::failure("cannot write " + path.string());
        }
    }

    bool out_is_directory() const {
        return !opt_.out_path.empty() &&
               (opt_.out_path.back() == '/' || std::filesystem::is_directory(opt_.out_path));
    }

    void verify() const {
        const auto doc = read_array_file(opt_.file);
        const PolytopeSpec& spec = doc.spec;
        if (!is_member(doc.array, spec)) {
            throw PreconditionError("array is not a member of " + to_string(spec.kind));
        }
        Json result{{"meta", meta("verify", {{"file", opt_.file}, {"method", opt_.method}})},
                    {"spec", spec_json(spec)},
                    {"member", true}};
        Json certs = Json::object();
        std::optional<bool> rank_verdict;
        if (opt_.method == "rank" || opt_.method == "both") {
            const auto cert = certify::is_vertex_rank(doc.array, spec);
            ensure(certify::witness_is_valid(cert, doc.array, spec), "rank witness failed validation");
            rank_verdict = cert.is_vertex;
            certs["rank"] = certify::certificate_to_json(cert, spec.kind);
        }
        if (opt_.method == "graph" || opt_.method == "both") {
            if (certify::has_half_integral_support(doc.array, spec.kind)) {
                const auto cert = certify::is_vertex_half_integral(doc.array, spec.kind);
                ensure(certify::witness_is_valid(cert, doc.array, spec), "graph witness failed validation");
                ensure(!rank_verdict || *rank_verdict == cert.is_vertex, "graph criterion and rank test disagree");
                certs["graph"] = certify::certificate_to_json(cert, spec.kind);
            } else if (opt_.method == "graph") {
                throw PreconditionError("graph criterion needs one 1 or two 1/2 entries per constraint set");
            } else {
                certs["graph"] = Json{{"applicable", false}};
            }
        }
        if (opt_.method == "enumeration") {
            certs["enumeration"] = certify::certificate_to_json(certify::is_vertex_enumeration(doc.array, spec), spec.kind);
        }
        result["certificates"] = certs;
        emit(result);
    }

    void enumerate() const {
        const PolytopeSpec spec{parse_kind(opt_.kind), opt_.n, opt_.d};
        const auto vertices = certify::enumerate_vertices(spec);
        Json list = Json::array();
        for (const auto& v : vertices) {
            list.push_back(array_to_json(v, spec.kind)["entries"]);
        }
        emit(Json{{"meta", meta("enumerate", spec_json(spec))},
                  {"spec", spec_json(spec)},
                  {"count", vertices.size()},
                  {"vertices", list}});
    }

    template <typename Build>
    void construct(const std::string& kind, Build build) const {
        if (opt_.count == 0) {
            throw PreconditionError("--count must be at least 1");
        }
        const PolytopeKind pk = parse_kind(kind);
        std::vector<Json> docs;
        for (std::size_t i = 0; i < opt_.count; ++i) {
            const std::uint64_t seed = opt_.seed + i;
            const auto v = build(opt_.n, seed);
            Json doc = array_to_json(v.array, pk);
            doc["seed"] = seed;
            doc["certificates"] = Json{{"graph", certify::certificate_to_json(v.graph_certificate, pk)},
                                       {"rank", certify::certificate_to_json(v.rank_certificate, pk)}};
            docs.push_back(std::move(doc));
        }
        Json params{{"n", opt_.n}, {"count", opt_.count}};
        if (out_is_directory()) {
            std::error_code ec;
            std::filesystem::create_directories(opt_.out_path, ec);
            if (ec) {
                throw std::ios_base::failure("cannot create " + opt_.out_path);
            }
            for (auto& doc : docs) {
                const std::string name =
                    kind + "_n" + std::to_string(opt_.n) + "_seed" + std::to_string(doc["seed"].get<std::uint64_t>()) + ".json";
                doc["meta"] = meta("construct " + kind, params);
                write_file(std::filesystem::path(opt_.out_path) / name, doc);
            }
        } else if (docs.size() == 1) {
            Json doc = std::move(docs.front());
            doc["meta"] = meta("construct " + kind, params);
            emit(doc);
        } else {
            emit(Json{{"meta", meta("construct " + kind, params)}, {"vertices", docs}});
        }
    }

    void designs_latin() const {
        const auto latin = designs::random_latin(opt_.t, opt_.seed);
        emit(Json{{"meta", meta("designs latin", {{"order", opt_.t}})}, {"latin_square", designs::latin_to_json(latin)}});
    }

    void designs_double_latin() const {
        const auto x = designs::random_hamiltonian_double_latin(opt_.n, opt_.seed);
        emit(Json{{"meta", meta("designs double-latin", {{"n", opt_.n}})},
                  {"hamiltonian", designs::is_hamiltonian(x)},
                  {"double_latin_square", designs::double_latin_to_json(x)}});
    }

    void bounds_permanent() const {
        std::ifstream in(opt_.file);
        if (!in) {
            throw std::ios_base::failure("cannot open " + opt_.file);
        }
        const auto m = bounds::matrix_from_json(Json::parse(in));
        const Rational per = bounds::permanent(m);
        Json result{{"meta", meta("bounds permanent", {{"file", opt_.file}})},
                    {"order", m.order()},
                    {"permanent", to_string(per)}};
        if (m.is_zero_one()) {
            result["bregman_bound"] = bounds::bregman_upper_bound(m).str(20);
            result["within_bregman_bound"] = bounds::within_bregman_bound(m, per);
        }
        if (m.is_doubly_stochastic()) {
            const Rational vdw = bounds::vdw_lower_bound(m.order());
            result["vdw_lower_bound"] = to_string(vdw);
            result["at_least_vdw_bound"] = per >= vdw;
        }
        emit(result);
    }

    void bounds_report() const {
        Json result{{"meta", meta("bounds report", {{"n", opt_.n}})}};
        result["report"] = bounds::report_to_json(bounds::construction_count_report(opt_.n));
        emit(result);
    }

    void sample() const {
        const PolytopeSpec spec{parse_kind(opt_.kind), opt_.n, opt_.d};
        const auto report = sample::run_experiment(spec, opt_.trials, opt_.seed);
        Json params = spec_json(spec);
        params["trials"] = opt_.trials;
        Json result{{"meta", meta("sample", params)}};
        const Json body = sample::report_to_json(report);
        for (const auto& [key, value] : body.items()) {
            result[key] = value;
        }
        emit(result);
    }

private:
    std::ostream& out_;
    const Options& opt_;
};

std::uint64_t parse_seed(const std::string& text) {
    std::size_t used = 0;
    const auto value = std::stoull(text, &used);
    if (used != text.size()) {
        throw std::invalid_argument("seed must be a non-negative integer");
    }
    return value;
}

}  // namespace

const char* version() { return BIRKHOFF_VERSION; }

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, const char* seed_env) {
    if (args.empty()) {
        err << "usage: birkhoff <verify|enumerate|construct|designs|bounds|sample> [options]\n";
        return kUnknownSubcommand;
    }
    const bool help = args.front() == "--help" || args.front() == "-h";
    if (!help && std::find(kSubcommands.begin(), kSubcommands.end(), args.front()) == kSubcommands.end()) {
        err << "unknown subcommand: " << args.front() << "\n";
        return kUnknownSubcommand;
    }

    Options opt;
    std::function<void(const Runner&)> action;
    CLI::App app{"Vertices of higher-dimensional Birkhoff polytopes", "birkhoff"};
    app.require_subcommand(1);
    app.set_version_flag("--version", version());

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--seed", opt.seed, "64-bit seed (default: $SEED or 0)");
        cmd->add_option("--out", opt.out_path, "write JSON here instead of stdout");
    };
    auto add_spec = [&](CLI::App* cmd, bool need_d) {
        cmd->add_option("--kind", opt.kind)->check(CLI::IsMember({"omega", "sigma"}));
        cmd->add_option("--n", opt.n)->required()->check(CLI::Range(1, 64));
        auto* d = cmd->add_option("--d", opt.d)->check(CLI::Range(1, 2));
        if (need_d) {
            d->required();
        }
    };

    auto* verify = app.add_subcommand("verify", "certify whether an array is a vertex");
    verify->add_option("file", opt.file)->required();
    verify->add_option("--method", opt.method)->check(CLI::IsMember({"rank", "graph", "both", "enumeration"}));
    add_common(verify);
    verify->callback([&] { action = &Runner::verify; });

    auto* enumerate = app.add_subcommand("enumerate", "list every vertex of a tiny polytope");
    add_spec(enumerate, true);
    add_common(enumerate);
    enumerate->callback([&] { action = &Runner::enumerate; });

    auto* construct = app.add_subcommand("construct", "build certified vertices");
    construct->require_subcommand(1);
    for (const std::string kind : {"omega", "sigma"}) {
        auto* sub = construct->add_subcommand(kind);
        sub->add_option("--n", opt.n)->required();
        sub->add_option("--count", opt.count);
        add_common(sub);
        if (kind == "omega") {
            sub->callback([&] { action = [](const Runner& r) { r.construct("omega", omega::construct_vertex); }; });
        } else {
            sub->callback([&] { action = [](const Runner& r) { r.construct("sigma", sigma::construct_sigma_vertex); }; });
        }
    }

    auto* designs = app.add_subcommand("designs", "random combinatorial designs");
    designs->require_subcommand(1);
    auto* latin = designs->add_subcommand("latin", "random Latin square");
    latin->add_option("--order", opt.t)->required()->check(CLI::Range(1, 64));
    add_common(latin);
    latin->callback([&] { action = &Runner::designs_latin; });
    auto* dls = designs->add_subcommand("double-latin", "random Hamiltonian double Latin square");
    dls->add_option("--n", opt.n)->required();
    add_common(dls);
    dls->callback([&] { action = &Runner::designs_double_latin; });

    auto* bounds = app.add_subcommand("bounds", "permanent bounds and counting reports");
    bounds->require_subcommand(1);
    auto* perm = bounds->add_subcommand("permanent", "permanent of a square matrix");
    perm->add_option("file", opt.file)->required();
    add_common(perm);
    perm->callback([&] { action = &Runner::bounds_permanent; });
    auto* report = bounds->add_subcommand("report", "log-scale construction counts");
    report->add_option("--n", opt.n)->required();
    add_common(report);
    report->callback([&] { action = &Runner::bounds_report; });

    auto* sample = app.add_subcommand("sample", "random-objective LP experiment");
    add_spec(sample, false);
    sample->add_option("--trials", opt.trials)->check(CLI::PositiveNumber);
    add_common(sample);
    sample->callback([&] { action = &Runner::sample; });

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        std::ostringstream help_out;
        const int code = app.exit(e, help_out, err);
        out << help_out.str();
        return code == 0 ? kOk : kInvalidParameters;
    }

    bool seed_flag = false;
    for (const auto& a : args) {
        seed_flag = seed_flag || a == "--seed" || a.rfind("--seed=", 0) == 0;
    }
    try {
        if (!seed_flag && seed_env != nullptr && *seed_env != '\0') {
            opt.seed = parse_seed(seed_env);
        }
        Runner runner(out, opt);
        action(runner);
    } catch (const std::ios_base::failure& e) {
        err << "I/O error: " << e.what() << "\n";
        return kIoFailure;
    } catch (const Json::parse_error& e) {
        err << "malformed JSON: " << e.what() << "\n";
        return kIoFailure;
    } catch (const AssertionFailure& e) {
        err << "assertion failed: " << e.what() << "\n";
        return kAssertionFailure;
    } catch (const ConstructionError& e) {
        err << "construction failed: " << e.what() << "\n";
        return kAssertionFailure;
    } catch (const std::invalid_argument& e) {
        err << "invalid parameters: " << e.what() << "\n";
        return kInvalidParameters;
    } catch (const std::out_of_range& e) {
        err << "invalid parameters: " << e.what() << "\n";
        return kInvalidParameters;
    } catch (const Json::exception& e) {
        err << "invalid document: " << e.what() << "\n";
        return kInvalidParameters;
    }
    return kOk;
}

}  // namespace birkhoff::cli
