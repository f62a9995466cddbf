// Command-line front end: reproducible experiments over the library,
// emitting plot-ready CSV and JSON. All randomness derives from --seed.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "cgl/bfs.hpp"
#include "cgl/conjugacy.hpp"
#include "cgl/hypergraph.hpp"
#include "cgl/montecarlo.hpp"
#include "cgl/rng.hpp"
#include "cgl/sampler.hpp"
#include "cgl/sandwich.hpp"
#include "cgl/thresholds.hpp"

using json = nlohmann::ordered_json;

namespace {

constexpr int kExitArgument = 2;
constexpr int kExitCapacity = 3;

std::uint64_t parse_seed(const std::string& text) {
    try {
        std::size_t used = 0;
        std::uint64_t value;
        if (text.rfind("0x", 0) == 0 || text.rfind("0X", 0) == 0)
            value = std::stoull(text.substr(2), &used, 16), used += 2;
        else
            value = std::stoull(text, &used, 10);
        if (used != text.size()) throw std::invalid_argument("trailing");
        return value;
    } catch (const std::exception&) {
        throw cgl::ArgumentError("seed '" + text + "' is not a decimal or hex integer");
    }
}

// "start:stop:count", inclusive linear grid
std::vector<double> parse_grid(const std::string& text) {
    double start = 0, stop = 0;
    long count = 0;
    char extra = 0;
    if (std::sscanf(text.c_str(), "%lf:%lf:%ld%c", &start, &stop, &count, &extra) != 3)
        throw cgl::ArgumentError("p-grid must be 'start:stop:count', got '" + text + "'");
    if (count < 1 || start < 0 || stop > 1 || stop < start)
        throw cgl::ArgumentError("p-grid needs 0 <= start <= stop <= 1 and count >= 1");
    std::vector<double> grid;
    if (count == 1) {
        grid.push_back(start);
    } else {
        for (long i = 0; i < count; ++i)
            grid.push_back(start + (stop - start) * static_cast<double>(i) /
                                       static_cast<double>(count - 1));
    }
    return grid;
}

std::uint32_t default_threads() {
    if (const char* env = std::getenv("CAYLEYLAB_THREADS")) {
        const long v = std::atol(env);
        if (v > 0) return static_cast<std::uint32_t>(v);
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
}

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

void write_text(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw cgl::ArgumentError("cannot open output file '" + path + "'");
    out << text;
    if (!out) throw cgl::ArgumentError("failed writing output file '" + path + "'");
}

json group_header(const cgl::Group& G) {
    return {{"family", cgl::family_name(G.family())},
            {"params", G.param()},
            {"N", G.order()}};
}

struct CommonArgs {
    std::string family;
    std::string out;
    std::string seed_text = "0";
    std::uint32_t d = 2;
    std::uint64_t trials = 2000;
    double epsilon = 0.0;
    std::uint32_t threads = 0;
    std::uint64_t max_tuples = 1'000'000;
};

int run_audit(const CommonArgs& args) {
    const cgl::Group G = cgl::Group::parse(args.family);
    const auto r = cgl::audit_conditions(G, args.d, args.epsilon);
    json j = group_header(G);
    j["d"] = args.d;
    j["epsilon"] = args.epsilon;
    j["M"] = r.M;
    j["involutions"] = r.involutions;
    j["small_class_elements"] = r.small_class_elements;
    j["small_class_involutions"] = r.small_class_involutions;
    j["bound_a"] = r.bound_a;
    j["bound_b"] = r.bound_b;
    j["bound_c"] = r.bound_c;
    j["pass_a"] = r.pass_a;
    j["pass_b"] = r.pass_b;
    j["pass_c"] = r.pass_c;
    write_text(args.out, j.dump(2) + "\n");
    return 0;
}

int run_diameter(const CommonArgs& args, const std::string& gens_text, std::optional<double> p) {
    const cgl::Group G = cgl::Group::parse(args.family);
    cgl::GenSet S;
    if (!gens_text.empty()) {
        std::vector<std::uint32_t> members;
        std::stringstream ss(gens_text);
        std::string item;
        while (std::getline(ss, item, ',')) {
            try {
                members.push_back(static_cast<std::uint32_t>(std::stoul(item)));
            } catch (const std::exception&) {
                throw cgl::ArgumentError("bad generator index '" + item + "'");
            }
        }
        S = cgl::make_genset(G, std::move(members));
    } else if (p) {
        S = cgl::sample_generators(G, *p, parse_seed(args.seed_text));
    } else {
        throw cgl::ArgumentError("diameter needs either --gens or --p with --seed");
    }
    const cgl::DistanceMap m = cgl::bfs_distances(G, S);
    json j = group_header(G);
    j["generators"] = S.members;
    j["connected"] = m.connected;
    if (m.connected) j["diameter"] = m.radius_from_identity;
    else j["diameter"] = nullptr;
    std::vector<std::uint64_t> histogram(static_cast<std::size_t>(m.radius_from_identity) + 1, 0);
    std::uint64_t unreachable = 0;
    for (std::int32_t dist : m.dist) {
        if (dist == cgl::kUnreachable) ++unreachable;
        else ++histogram[static_cast<std::size_t>(dist)];
    }
    j["distance_histogram"] = histogram;
    j["unreachable"] = unreachable;
    write_text(args.out, j.dump(2) + "\n");
    return 0;
}

int run_oracle(const CommonArgs& args, std::int64_t x) {
    const cgl::Group G = cgl::Group::parse(args.family);
    const cgl::EnumLimits limits{args.max_tuples};
    std::vector<cgl::EdgeCensus> censuses;
    if (x >= 0) {
        censuses.push_back(cgl::enumerate_edges(G, static_cast<std::uint32_t>(x), args.d, limits));
    } else {
        auto all = cgl::census_all(G, args.d, limits, false);
        for (std::uint32_t g = 1; g < G.order(); ++g) censuses.push_back(std::move(all[g]));
    }
    std::string csv = "x,k,e_k,bound_k,ratio\n";
    for (const auto& c : censuses) {
        for (std::uint32_t k = 1; k <= args.d; ++k) {
            const double bound = cgl::census_bound(G, args.d, k);
            csv += std::to_string(c.x) + "," + std::to_string(k) + "," + std::to_string(c.e(k)) +
                   "," + format_double(bound) + "," +
                   format_double(static_cast<double>(c.e(k)) / bound) + "\n";
        }
    }
    write_text(args.out, csv);
    return 0;
}

int run_sandwich(const CommonArgs& args, std::int64_t x, double p) {
    const cgl::Group G = cgl::Group::parse(args.family);
    if (x < 0) throw cgl::ArgumentError("sandwich requires --x");
    const auto r =
        cgl::avoidance_sandwich(G, static_cast<std::uint32_t>(x), args.d, p, {args.max_tuples});
    json j = group_header(G);
    j["x"] = x;
    j["d"] = args.d;
    j["p"] = p;
    j["exact"] = r.exact;
    j["kleitman_lower"] = r.kleitman_lower;
    j["janson_upper"] = r.janson_upper;
    j["sandwich_holds"] =
        r.kleitman_lower <= r.exact + 1e-12 && r.exact <= std::min(1.0, r.janson_upper) + 1e-12;
    write_text(args.out, j.dump(2) + "\n");
    return 0;
}

int run_sweep(const CommonArgs& args, const std::string& grid_text, bool uncoupled) {
    const cgl::Group G = cgl::Group::parse(args.family);
    const std::vector<double> grid = parse_grid(grid_text);
    const std::uint64_t seed = parse_seed(args.seed_text);
    cgl::SweepOptions opt;
    opt.coupled = !uncoupled;
    opt.threads = args.threads ? args.threads : default_threads();
    const cgl::SweepTable table = cgl::sweep(G, args.d, grid, args.trials, seed, opt);
    std::string csv = "family,params,N,d,p,trials,successes,phat,ci_low,ci_high,seed,coupled\n";
    for (const auto& row : table.rows) {
        csv += std::string(cgl::family_name(G.family())) + "," + std::to_string(G.param()) + "," +
               std::to_string(G.order()) + "," + std::to_string(args.d) + "," +
               format_double(row.p) + "," + std::to_string(row.est.trials) + "," +
               std::to_string(row.est.successes) + "," + format_double(row.est.phat) + "," +
               format_double(row.est.ci_low) + "," + format_double(row.est.ci_high) + "," +
               std::to_string(seed) + "," + (table.coupled ? "true" : "false") + "\n";
    }
    write_text(args.out, csv);
    return 0;
}

int run_transition(const CommonArgs& args, double target, double tol, double p_lo, double p_hi) {
    const cgl::Group G = cgl::Group::parse(args.family);
    const std::uint64_t seed = parse_seed(args.seed_text);
    cgl::TransitionOptions opt;
    opt.target = target;
    opt.tol = tol;
    opt.p_lo = p_lo;
    opt.p_hi = p_hi;
    opt.threads = args.threads ? args.threads : default_threads();
    const cgl::TransitionResult r = cgl::find_transition(G, args.d, args.trials, seed, opt);
    json j = group_header(G);
    j["d"] = args.d;
    j["p_star"] = r.p_star;
    j["target"] = r.target;
    j["trials_per_probe"] = r.trials_per_probe;
    j["seed"] = seed;
    j["probes"] = r.probes;
    j["confirmation"] = {{"p", r.confirmation.p},
                         {"trials", r.confirmation.trials},
                         {"successes", r.confirmation.successes},
                         {"phat", r.confirmation.phat},
                         {"ci_low", r.confirmation.ci_low},
                         {"ci_high", r.confirmation.ci_high}};
    json predictions;
    for (cgl::Regime regime : cgl::kAllRegimes)
        predictions[cgl::regime_name(regime)] =
            cgl::threshold_probability(regime, G.order(), args.d, 0.0).raw;
    j["regime_predictions"] = predictions;
    write_text(args.out, j.dump(2) + "\n");
    return 0;
}

int run_formulas(const CommonArgs& args, std::uint64_t N, double gamma) {
    json j;
    j["N"] = N;
    j["d"] = args.d;
    j["epsilon"] = args.epsilon;
    j["gamma"] = gamma;
    try {
        j["d_N"] = cgl::d_max(N, gamma);
        j["d_admissible"] = cgl::admissible(N, gamma, args.d);
    } catch (const cgl::ArgumentError&) {
        j["d_N"] = nullptr;
        j["d_admissible"] = nullptr;
    }
    json regimes;
    for (cgl::Regime regime : cgl::kAllRegimes) {
        const auto v = cgl::threshold_probability(regime, N, args.d, args.epsilon);
        regimes[cgl::regime_name(regime)] = {{"p", v.p}, {"raw", v.raw}, {"clamped", v.clamped}};
    }
    j["regimes"] = regimes;
    j["rng_stream"] = cgl::rng::kStreamVersion;
    write_text(args.out, j.dump(2) + "\n");
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"random Cayley graph laboratory"};
    app.require_subcommand(1);

    CommonArgs args;
    std::string gens_text, grid_text;
    std::optional<double> sample_p;
    double p = 0.5, target = 0.5, tol = 1e-4, p_lo = 0.0, p_hi = 1.0, gamma = 0.5;
    std::int64_t x = -1;
    std::uint64_t formulas_N = 0;
    bool uncoupled = false;

    auto add_family = [&](CLI::App* cmd) {
        cmd->add_option("--family", args.family, "family spec, e.g. cyclic:1024 or affqr:179")
            ->required();
    };
    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--out", args.out, "output path (default stdout)");
        cmd->add_option("--d", args.d, "walk / diameter bound");
        cmd->add_option("--seed", args.seed_text, "master seed, decimal or 0x-hex");
        cmd->add_option("--threads", args.threads,
                        "worker threads (default CAYLEYLAB_THREADS or hardware)");
    };

    CLI::App* audit = app.add_subcommand("audit", "involution / small-class condition report");
    add_family(audit);
    add_common(audit);
    audit->add_option("--epsilon", args.epsilon, "epsilon in the bounds");

    CLI::App* diam = app.add_subcommand("diameter", "BFS diameter of one sample");
    add_family(diam);
    add_common(diam);
    diam->add_option("--gens", gens_text, "explicit comma-separated generator indices");
    diam->add_option("--p", sample_p, "sample generators at this probability");

    CLI::App* oracle = app.add_subcommand("oracle", "exact walk-hypergraph census (CSV)");
    add_family(oracle);
    add_common(oracle);
    oracle->add_option("--x", x, "single target element (default: all)");
    oracle->add_option("--max-tuples", args.max_tuples, "enumeration work cap");

    CLI::App* sandwich = app.add_subcommand("sandwich", "exact avoidance probability and bounds");
    add_family(sandwich);
    add_common(sandwich);
    sandwich->add_option("--x", x, "target element")->required();
    sandwich->add_option("--p", p, "inclusion probability")->required();
    sandwich->add_option("--max-tuples", args.max_tuples, "enumeration work cap");

    CLI::App* sweep = app.add_subcommand("sweep", "Monte Carlo sweep over a p grid (CSV)");
    add_family(sweep);
    add_common(sweep);
    sweep->add_option("--p-grid", grid_text, "start:stop:count inclusive linear grid")->required();
    sweep->add_option("--trials", args.trials, "trials per grid point");
    sweep->add_flag("--uncoupled", uncoupled, "independent draws per grid point");

    CLI::App* transition = app.add_subcommand("transition", "locate the diameter threshold");
    add_family(transition);
    add_common(transition);
    transition->add_option("--trials", args.trials, "trials per probe");
    transition->add_option("--target", target, "success probability to locate");
    transition->add_option("--tol", tol, "bisection interval width");
    transition->add_option("--p-lo", p_lo, "bracket low end");
    transition->add_option("--p-hi", p_hi, "bracket high end");

    CLI::App* formulas = app.add_subcommand("formulas", "the six regime formulas and d_N");
    formulas->add_option("--N", formulas_N, "group order")->required();
    add_common(formulas);
    formulas->add_option("--epsilon", args.epsilon, "epsilon in the constants");
    formulas->add_option("--gamma", gamma, "gamma in d_N");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitArgument;
    }

    try {
        if (audit->parsed()) return run_audit(args);
        if (diam->parsed()) return run_diameter(args, gens_text, sample_p);
        if (oracle->parsed()) return run_oracle(args, x);
        if (sandwich->parsed()) return run_sandwich(args, x, p);
        if (sweep->parsed()) return run_sweep(args, grid_text, uncoupled);
        if (transition->parsed()) return run_transition(args, target, tol, p_lo, p_hi);
        if (formulas->parsed()) return run_formulas(args, formulas_N, gamma);
    } catch (const cgl::ArgumentError& e) {
        std::cerr << "argument error: " << e.what() << "\n";
        return kExitArgument;
    } catch (const cgl::CapacityError& e) {
        std::cerr << "capacity error: " << e.what() << "\n";
        return kExitCapacity;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
