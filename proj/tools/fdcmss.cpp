// Benchmark and utility CLI: gen | stats | run | sizing | query.
// Exit codes: 0 success, 2 configuration error, 3 input/parse error.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <mutex>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "fdcmss/decay.hpp"
#include "fdcmss/hash.hpp"
#include "fdcmss/lambda_hcount.hpp"
#include "fdcmss/oracle.hpp"
#include "fdcmss/sketch.hpp"
#include "fdcmss/stream.hpp"

namespace {

using namespace fdcmss;

struct DecayOptions {
    std::string kind = "exp";
    double lambda = 0.99;
    double beta = 2.0;
    double landmark = 0.0;

    DecaySpec make() const {
        if (kind == "exp") return DecaySpec::exponential(lambda, landmark);
        if (kind == "poly") return DecaySpec::polynomial(beta, landmark);
        throw std::invalid_argument("unknown decay kind: " + kind);
    }
};

void add_decay_flags(CLI::App* cmd, DecayOptions& opts) {
    cmd->add_option("--decay", opts.kind, "decay function: exp or poly")
        ->check(CLI::IsMember({"exp", "poly"}));
    cmd->add_option("--lambda", opts.lambda, "fading factor for exp decay");
    cmd->add_option("--beta", opts.beta, "exponent for poly decay");
    cmd->add_option("--landmark", opts.landmark, "landmark time L");
}

int cmd_gen(const ZipfSpec& spec, const std::string& out_path) {
    const auto items = zipf_stream(spec);
    write_items(out_path, items);
    return 0;
}

int cmd_stats(const std::string& in_path) {
    const auto items = read_items(in_path);
    const DatasetStats s = dataset_stats(items);
    std::printf("count      %zu\n", s.count);
    std::printf("distinct   %zu\n", s.distinct);
    std::printf("min        %u\n", s.min);
    std::printf("max        %u\n", s.max);
    std::printf("mean       %.4f\n", s.mean);
    std::printf("median     %.4f\n", s.median);
    std::printf("stddev     %.4f\n", s.stddev);
    std::printf("skewness   %.4f\n", s.skewness);
    return 0;
}

int cmd_sizing(double lambda, double distinct, const std::vector<double>& probs,
               const std::vector<double>& epsilons, const std::string& out_path) {
    std::ostream* out = &std::cout;
    std::ofstream file;
    if (!out_path.empty()) {
        file.open(out_path);
        if (!file) throw std::runtime_error("cannot open " + out_path);
        out = &file;
    }
    *out << "epsilon,p,fdcmss_cells,fdcmss_kb,lhcount_cells,lhcount_kb\n";
    char buf[256];
    for (double p : probs) {
        for (double eps : epsilons) {
            const double fd_cells = theoretical_cells_fdcmss(eps, 1.0 - p);
            const double lh_cells = lh_sizing(lambda, distinct, p, eps).cells;
            std::snprintf(buf, sizeof buf, "%.6g,%.6g,%.6g,%.6g,%.6g,%.6g\n",
                          eps, p, fd_cells,
                          fd_cells * kFdcmssBytesPerCell / 1024.0, lh_cells,
                          lh_cells * kLambdaHCountBytesPerCell / 1024.0);
            *out << buf;
        }
    }
    return 0;
}

int cmd_query(const std::string& snapshot_path, double t, double phi,
              const DecayOptions& decay_opts, std::uint64_t seed) {
    std::ifstream in(snapshot_path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + snapshot_path);
    const FdcmssSketch sketch =
        FdcmssSketch::deserialize(in, phi, decay_opts.make(), seed);
    for (const FrequentItem& f : sketch.query(t)) {
        std::printf("%u,%.9g\n", f.item, f.estimate);
    }
    return 0;
}

// ---------------------------------------------------------------------------
// run subcommand

struct RunConfig {
    std::string algo = "both";  // fdcmss | lhcount | both
    std::string in_path;        // file source when non-empty
    std::size_t n = 1000000;
    double rho = 1.1;
    std::uint32_t universe = 1u << 20;
    std::string sweep = "none";  // none | n | phi | rho | sketch_kb
    std::vector<double> values;
    std::size_t runs = 20;
    double epsilon = 0.001;
    double delta = 0.04;
    double phi = 0.01;
    double lambda = 0.99;
    double lh_epsilon = 0.0;  // 0 = same as epsilon
    double prob = 0.0;        // 0 = 1 - delta
    double distinct = 0.0;    // 0 = universe
    std::uint64_t seed = 1;
    std::size_t jobs = 1;
    bool no_timing = false;
    std::string out_path;
};

struct RunResult {
    std::vector<std::string> rows;  // one or two CSV rows per run
};

// One (sweep point, run index) experiment; feeds the same stream to the
// configured algorithms and the exact oracle.
RunResult execute_run(const RunConfig& cfg, double sweep_value,
                      std::size_t run_index) {
    std::size_t n = cfg.n;
    double phi = cfg.phi;
    double rho = cfg.rho;
    std::optional<std::size_t> budget_bytes;
    if (cfg.sweep == "n") n = static_cast<std::size_t>(sweep_value);
    else if (cfg.sweep == "phi") phi = sweep_value;
    else if (cfg.sweep == "rho") rho = sweep_value;
    else if (cfg.sweep == "sketch_kb")
        budget_bytes = static_cast<std::size_t>(sweep_value * 1024.0);

    // stream seed: shared by both algorithms of this run
    std::uint64_t seed_state = cfg.seed;
    for (std::size_t i = 0; i <= run_index; ++i) splitmix64(seed_state);
    std::uint64_t base = seed_state ^ std::hash<double>{}(sweep_value);
    const std::uint64_t stream_seed = splitmix64(base);
    const std::uint64_t hash_seed = splitmix64(base);

    std::vector<std::uint32_t> items;
    if (!cfg.in_path.empty()) {
        items = read_items(cfg.in_path);
        n = items.size();
        rho = 0.0;
    } else {
        items = zipf_stream({n, rho, cfg.universe, stream_seed});
    }
    const double t_query = static_cast<double>(n) + 1.0;

    const DecaySpec decay = DecaySpec::exponential(cfg.lambda, 0.0);
    ExactDecayedCounts oracle(decay);
    for (std::size_t i = 0; i < items.size(); ++i)
        oracle.process(items[i], static_cast<double>(i + 1));

    const auto truth_pairs = oracle.frequent(phi, t_query);
    std::vector<std::uint32_t> truth;
    truth.reserve(truth_pairs.size());
    for (const auto& [item, est] : truth_pairs) truth.push_back(item);

    std::vector<std::uint32_t> distinct_items;
    distinct_items.reserve(oracle.distinct());
    for (const auto& [item, count] : oracle.raw_counts())
        distinct_items.push_back(item);
    std::sort(distinct_items.begin(), distinct_items.end());

    RunResult result;
    const bool want_fdcmss = cfg.algo != "lhcount";
    const bool want_lh = cfg.algo != "fdcmss";

    std::size_t fd_bytes = 0;
    if (want_fdcmss || want_lh) {
        // FDCMSS dimensions fix the shared byte budget when none is given
        const std::size_t d = rows_for_delta(cfg.delta);
        std::size_t w = cols_for_epsilon(cfg.epsilon);
        if (budget_bytes) {
            w = *budget_bytes / (kFdcmssBytesPerCell * d);
            if (w < 1) throw std::invalid_argument("sketch budget below one column");
        }
        fd_bytes = d * w * kFdcmssBytesPerCell;

        if (want_fdcmss) {
            FdcmssSketch sketch(d, w, phi, decay, hash_seed);
            const auto start = std::chrono::steady_clock::now();
            for (std::size_t i = 0; i < items.size(); ++i)
                sketch.process(items[i], static_cast<double>(i + 1));
            const auto stop = std::chrono::steady_clock::now();
            const double ms =
                std::chrono::duration<double, std::milli>(stop - start).count();

            std::vector<std::uint32_t> reported;
            for (const FrequentItem& f : sketch.query(t_query))
                reported.push_back(f.item);
            std::vector<double> errors;
            errors.reserve(distinct_items.size());
            for (std::uint32_t item : distinct_items)
                errors.push_back(std::abs(sketch.point_estimate(item, t_query) -
                                          oracle.normalized_count(item, t_query)));
            MetricsReport report = compute_metrics(
                reported, truth, std::move(errors), ms, items.size());
            if (cfg.no_timing) report.updates_per_ms = 0.0;
            result.rows.push_back(csv_row("fdcmss", n, phi, rho,
                                          fd_bytes / 1024.0, stream_seed,
                                          report));
        }

        if (want_lh) {
            const double p = cfg.prob > 0.0 ? cfg.prob : 1.0 - cfg.delta;
            const double M = cfg.distinct > 0.0 ? cfg.distinct
                                                : static_cast<double>(cfg.universe);
            const double lh_eps =
                cfg.lh_epsilon > 0.0 ? cfg.lh_epsilon : cfg.epsilon;
            const std::size_t r = lh_sizing(cfg.lambda, M, p, lh_eps).r;
            const std::size_t budget = budget_bytes ? *budget_bytes : fd_bytes;
            const std::size_t m = budget / (kLambdaHCountBytesPerCell * r);
            if (m < 1) throw std::invalid_argument("sketch budget below one column");
            LambdaHCount lh(r, m, {cfg.lambda, phi, lh_eps}, hash_seed);
            const auto start = std::chrono::steady_clock::now();
            for (std::size_t i = 0; i < items.size(); ++i)
                lh.update(items[i], static_cast<double>(i + 1));
            const auto stop = std::chrono::steady_clock::now();
            const double ms =
                std::chrono::duration<double, std::milli>(stop - start).count();

            std::vector<std::uint32_t> reported;
            for (const auto& [item, est] : lh.query(t_query))
                reported.push_back(item);
            std::vector<double> errors;
            errors.reserve(distinct_items.size());
            for (std::uint32_t item : distinct_items)
                errors.push_back(std::abs(lh.point_estimate(item, t_query) -
                                          oracle.normalized_count(item, t_query)));
            MetricsReport report = compute_metrics(
                reported, truth, std::move(errors), ms, items.size());
            if (cfg.no_timing) report.updates_per_ms = 0.0;
            result.rows.push_back(csv_row("lhcount", n, phi, rho,
                                          lh.bytes() / 1024.0, stream_seed,
                                          report));
        }
    }
    return result;
}

int cmd_run(const RunConfig& cfg) {
    if (cfg.epsilon <= 0.0 || cfg.epsilon >= cfg.phi || cfg.phi >= 1.0)
        throw std::invalid_argument("need 0 < epsilon < phi < 1");
    if (cfg.delta <= 0.0 || cfg.delta >= 1.0)
        throw std::invalid_argument("delta must lie in (0, 1)");
    if (cfg.lambda <= 0.0 || cfg.lambda >= 1.0)
        throw std::invalid_argument("lambda must lie in (0, 1)");
    if (cfg.lh_epsilon < 0.0 || cfg.lh_epsilon >= cfg.phi)
        throw std::invalid_argument("lh epsilon must lie in [0, phi)");
    std::vector<double> sweep_values =
        cfg.sweep == "none" ? std::vector<double>{0.0} : cfg.values;
    if (sweep_values.empty())
        throw std::invalid_argument("sweep requested but no --values given");

    struct Task {
        double value;
        std::size_t run;
    };
    std::vector<Task> tasks;
    for (double v : sweep_values)
        for (std::size_t r = 0; r < cfg.runs; ++r) tasks.push_back({v, r});

    std::vector<RunResult> results(tasks.size());
    const std::size_t jobs = std::max<std::size_t>(1, cfg.jobs);
    if (jobs == 1) {
        for (std::size_t i = 0; i < tasks.size(); ++i)
            results[i] = execute_run(cfg, tasks[i].value, tasks[i].run);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> pool;
        std::mutex error_mutex;
        std::string first_error;
        for (std::size_t j = 0; j < jobs; ++j) {
            pool.emplace_back([&] {
                for (;;) {
                    const std::size_t i = next.fetch_add(1);
                    if (i >= tasks.size()) return;
                    try {
                        results[i] = execute_run(cfg, tasks[i].value, tasks[i].run);
                    } catch (const std::exception& e) {
                        std::lock_guard lock(error_mutex);
                        if (first_error.empty()) first_error = e.what();
                    }
                }
            });
        }
        for (auto& t : pool) t.join();
        if (!first_error.empty()) throw std::invalid_argument(first_error);
    }

    std::ostream* out = &std::cout;
    std::ofstream file;
    if (!cfg.out_path.empty()) {
        file.open(cfg.out_path);
        if (!file) throw std::runtime_error("cannot open " + cfg.out_path);
        out = &file;
    }
    *out << kCsvHeader << '\n';
    for (const RunResult& r : results)
        for (const std::string& row : r.rows) *out << row << '\n';
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"FDCMSS time-fading frequent items: sketches and benchmarks"};
    app.require_subcommand(1);

    // gen
    ZipfSpec gen_spec{100000, 1.1, 1u << 20, 1};
    std::string gen_out;
    auto* gen = app.add_subcommand("gen", "generate a seeded Zipf stream file");
    gen->add_option("--n", gen_spec.n, "stream length")->required();
    gen->add_option("--rho", gen_spec.rho, "Zipf skew (0 = uniform)");
    gen->add_option("--universe", gen_spec.universe, "distinct-item cap");
    gen->add_option("--seed", gen_spec.seed, "generator seed");
    gen->add_option("--out", gen_out, "output file")->required();

    // stats
    std::string stats_in;
    auto* stats = app.add_subcommand("stats", "dataset statistics");
    stats->add_option("--in", stats_in, "input item file")->required();

    // sizing
    double sz_lambda = 0.99, sz_distinct = 1048575;
    std::vector<double> sz_probs{0.96};
    std::vector<double> sz_epsilons{0.001};
    std::string sz_out;
    auto* sizing = app.add_subcommand("sizing", "theoretical sketch size table");
    sizing->add_option("--lambda", sz_lambda, "fading factor");
    sizing->add_option("--distinct", sz_distinct, "distinct item count M");
    sizing->add_option("--probs", sz_probs, "success probabilities")->delimiter(',');
    sizing->add_option("--epsilons", sz_epsilons, "error bounds")->delimiter(',');
    sizing->add_option("--out", sz_out, "output CSV (default stdout)");

    // query
    std::string q_snapshot;
    double q_t = 0.0, q_phi = 0.02;
    DecayOptions q_decay;
    std::uint64_t q_seed = 1;
    auto* query = app.add_subcommand("query", "frequent items from a sketch snapshot");
    query->add_option("--snapshot", q_snapshot, "snapshot file")->required();
    query->add_option("--t", q_t, "query time")->required();
    query->add_option("--phi", q_phi, "support threshold");
    query->add_option("--seed", q_seed, "hash master seed used at build time");
    add_decay_flags(query, q_decay);

    // run
    RunConfig rc;
    auto* run = app.add_subcommand("run", "benchmark experiment, CSV output");
    run->add_option("--algo", rc.algo, "fdcmss | lhcount | both")
        ->check(CLI::IsMember({"fdcmss", "lhcount", "both"}));
    run->add_option("--in", rc.in_path, "item file source (instead of Zipf)");
    run->add_option("--n", rc.n, "Zipf stream length");
    run->add_option("--rho", rc.rho, "Zipf skew");
    run->add_option("--universe", rc.universe, "Zipf universe size");
    run->add_option("--sweep", rc.sweep, "none | n | phi | rho | sketch_kb")
        ->check(CLI::IsMember({"none", "n", "phi", "rho", "sketch_kb"}));
    run->add_option("--values", rc.values, "sweep values")->delimiter(',');
    run->add_option("--runs", rc.runs, "runs per sweep point");
    run->add_option("--epsilon", rc.epsilon, "FDCMSS error bound");
    run->add_option("--delta", rc.delta, "FDCMSS failure probability");
    run->add_option("--phi", rc.phi, "support threshold");
    run->add_option("--lambda", rc.lambda, "exponential fading factor");
    run->add_option("--lh-epsilon", rc.lh_epsilon,
                    "lambda-hcount error bound (default: --epsilon)");
    run->add_option("--prob", rc.prob,
                    "lambda-hcount success probability (default: 1 - delta)");
    run->add_option("--distinct", rc.distinct,
                    "lambda-hcount distinct-item count M (default: universe)");
    run->add_option("--seed", rc.seed, "master seed");
    run->add_option("--jobs", rc.jobs, "parallel runs");
    run->add_flag("--no-timing", rc.no_timing,
                  "report updates/ms as 0 for byte-reproducible CSV");
    run->add_option("--out", rc.out_path, "output CSV (default stdout)");

    try {
        app.parse(argc, argv);
        if (*gen) return cmd_gen(gen_spec, gen_out);
        if (*stats) return cmd_stats(stats_in);
        if (*sizing) return cmd_sizing(sz_lambda, sz_distinct, sz_probs,
                                       sz_epsilons, sz_out);
        if (*query) return cmd_query(q_snapshot, q_t, q_phi, q_decay, q_seed);
        if (*run) return cmd_run(rc);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return 2;
    } catch (const fdcmss::ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    }
    return 0;
}
