#ifndef TURAN_TOOLS_CLI_APP_HPP
#define TURAN_TOOLS_CLI_APP_HPP

#include <chrono>
#include <cstdint>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "turan/report_io.hpp"
#include "turan/turan.hpp"

namespace turan::cli
{

struct RunConfig
{
    std::string input;
    int k = 0;
    std::string k_range;
    std::vector<std::uint64_t> samples;
    std::optional<double> eps;
    std::optional<double> delta;
    std::uint64_t seed = 0;
    std::string format = "json";
    std::uint64_t repeat = 1;
    std::optional<double> p;
    std::optional<std::uint64_t> time_budget_secs;
    unsigned threads = 1;
    std::string dump_shadow;
};

class UsageError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

namespace detail
{

struct Loaded
{
    Graph graph;
    GraphSummary summary;
};

inline Loaded load(const RunConfig& cfg)
{
    std::ifstream in(cfg.input);
    if (!in) throw std::runtime_error("cannot open input file '" + cfg.input + "'");
    Loaded l{load_edge_list(in), {}};
    l.summary.input = cfg.input;
    l.summary.n = l.graph.vertex_count();
    l.summary.m = l.graph.edge_count();
    l.summary.alpha = degeneracy_order(l.graph).alpha;
    return l;
}

inline SamplingMode sampling_mode(const RunConfig& cfg)
{
    if (cfg.eps || cfg.delta) {
        if (!cfg.eps || !cfg.delta) throw UsageError("--eps and --delta must be given together");
        if (!cfg.samples.empty()) throw UsageError("--samples cannot be combined with --eps/--delta");
        return ErrorBounds{*cfg.eps, *cfg.delta};
    }
    if (cfg.samples.size() > 1) throw UsageError("this command takes a single --samples value");
    return FixedSamples{cfg.samples.empty() ? default_samples : cfg.samples.front()};
}

inline std::pair<int, int> parse_k_range(const std::string& text)
{
    const auto colon = text.find(':');
    if (colon == std::string::npos) throw UsageError("--k-range expects LO:HI");
    int lo = 0, hi = 0;
    try {
        std::size_t used = 0;
        lo = std::stoi(text.substr(0, colon), &used);
        if (used != colon) throw UsageError("--k-range expects LO:HI");
        const auto rest = text.substr(colon + 1);
        hi = std::stoi(rest, &used);
        if (used != rest.size()) throw UsageError("--k-range expects LO:HI");
    } catch (const std::logic_error&) {
        throw UsageError("--k-range expects LO:HI");
    }
    if (lo < 1 || lo > hi || hi > max_clique_size) throw UsageError("--k-range requires 1 <= LO <= HI <= 64");
    return {lo, hi};
}

/// Emits rows as JSON lines or CSV with a single header.
class RowWriter
{
public:
    RowWriter(std::ostream& out, std::string format) : out_(out), format_(std::move(format)) {}

    void write(const Json& row)
    {
        if (format_ == "csv") {
            write_csv_row(out_, row, !header_done_);
            header_done_ = true;
        } else {
            out_ << row.dump() << '\n';
        }
    }

private:
    std::ostream& out_;
    std::string format_;
    bool header_done_ = false;
};

inline double ms_since(std::chrono::steady_clock::time_point start)
{
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
}

inline void require_k(const RunConfig& cfg, int lo)
{
    if (cfg.k < lo || cfg.k > max_clique_size)
        throw UsageError("--k must lie in [" + std::to_string(lo) + ", 64]");
}

inline void cmd_count(const RunConfig& cfg, RowWriter& w)
{
    require_k(cfg, 1);
    const auto mode = sampling_mode(cfg);
    const Loaded l = load(cfg);
    const auto rep = turan_shadow_count(l.graph, cfg.k, mode, cfg.seed, cfg.threads);
    w.write(to_json("count", l.summary, rep));
}

inline void cmd_exact(const RunConfig& cfg, RowWriter& w)
{
    require_k(cfg, 1);
    const Loaded l = load(cfg);
    ExactOptions opts{.threads = cfg.threads, .deadline = std::nullopt};
    if (cfg.time_budget_secs)
        opts.deadline = std::chrono::steady_clock::now() + std::chrono::seconds(*cfg.time_budget_secs);
    w.write(to_json(l.summary, exact_kclique_count(l.graph, cfg.k, opts)));
}

inline void cmd_stats(const RunConfig& cfg, RowWriter& w)
{
    require_k(cfg, 3);
    const Loaded l = load(cfg);
    const TuranShadow sh = shadow_finder(l.graph, cfg.k);
    if (!cfg.dump_shadow.empty()) {
        std::ofstream dump(cfg.dump_shadow);
        if (!dump) throw std::runtime_error("cannot write '" + cfg.dump_shadow + "'");
        write_shadow(dump, sh);
    }
    w.write(to_json(l.summary, cfg.k, shadow_stats(sh)));
}

inline void cmd_sweep(const RunConfig& cfg, RowWriter& w)
{
    const auto [lo, hi] = parse_k_range(cfg.k_range);
    const auto mode = sampling_mode(cfg);
    const Loaded l = load(cfg);
    for (int k = lo; k <= hi; ++k) {
        const auto start = std::chrono::steady_clock::now();
        const auto rep = turan_shadow_count(l.graph, k, mode, cfg.seed, cfg.threads);
        Json row;
        row["k"] = k;
        row["estimate"] = rep.estimate;
        row["success_ratio"] = rep.success_ratio;
        row["t"] = rep.samples;
        row["time_ms"] = ms_since(start);
        w.write(row);
    }
}

inline void cmd_convergence(const RunConfig& cfg, RowWriter& w)
{
    require_k(cfg, 3);
    if (cfg.repeat < 1) throw UsageError("--repeat must be >= 1");
    std::vector<std::uint64_t> sizes = cfg.samples;
    if (sizes.empty()) sizes.push_back(default_samples);
    const Loaded l = load(cfg);
    const TuranShadow sh = shadow_finder(l.graph, cfg.k);
    const SamplerState st = build_sampler(sh, l.graph);
    for (const auto t : sizes) {
        for (std::uint64_t run = 0; run < cfg.repeat; ++run) {
            const std::uint64_t seed = cfg.seed + run;
            const auto outcome = run_trials(st, l.graph, t, seed, cfg.threads);
            Json row;
            row["k"] = cfg.k;
            row["t"] = t;
            row["run"] = run;
            row["seed"] = seed;
            row["estimate"] = estimate_from_trials(st, outcome.successes, t);
            w.write(row);
        }
    }
}

inline void cmd_baseline(const RunConfig& cfg, RowWriter& w)
{
    require_k(cfg, 3);
    std::vector<double> ps;
    if (cfg.p) ps.push_back(*cfg.p);
    else
        for (int i = 1; i <= 10; ++i) ps.push_back(i / 10.0);
    for (double p : ps)
        if (!(p > 0.0 && p <= 1.0)) throw UsageError("--p must lie in (0, 1]");
    const Loaded l = load(cfg);
    for (double p : ps) w.write(to_json(l.summary, edge_sampling_estimate(l.graph, cfg.k, p, cfg.seed, cfg.threads)));
}

} // namespace detail

/// Parses `argv` and runs one subcommand. Data goes to `out`, diagnostics to
/// `err`. Returns the process exit code.
inline int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"k-clique estimation with Turán shadows"};
    app.require_subcommand(1);
    RunConfig cfg;

    auto add_input = [&](CLI::App* sub) {
        sub->add_option("--input", cfg.input, "edge-list file")->required();
        sub->add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"json", "csv"}));
        sub->add_option("--threads", cfg.threads, "worker threads")->check(CLI::Range(1u, 1024u));
    };
    auto add_sampling = [&](CLI::App* sub, bool many) {
        auto* s = sub->add_option("--samples", cfg.samples, many ? "trial counts (comma separated)" : "trial count")
                      ->delimiter(',')
                      ->check(CLI::PositiveNumber);
        if (!many) s->expected(1);
        auto* e = sub->add_option("--eps", cfg.eps, "relative error")->check(CLI::PositiveNumber);
        auto* d = sub->add_option("--delta", cfg.delta, "failure probability")->check(CLI::Range(0.0, 1.0));
        s->excludes(e)->excludes(d);
        sub->add_option("--seed", cfg.seed, "random seed");
    };

    std::function<void(const RunConfig&, detail::RowWriter&)> action;

    auto* count = app.add_subcommand("count", "estimate the number of k-cliques");
    add_input(count);
    count->add_option("--k", cfg.k, "clique size")->required();
    add_sampling(count, false);
    count->callback([&] { action = detail::cmd_count; });

    auto* exact = app.add_subcommand("exact", "exact k-clique count");
    add_input(exact);
    exact->add_option("--k", cfg.k, "clique size")->required();
    exact->add_option("--time-budget-secs", cfg.time_budget_secs, "give up after this many seconds");
    exact->callback([&] { action = detail::cmd_exact; });

    auto* stats = app.add_subcommand("stats", "Turán shadow statistics");
    add_input(stats);
    stats->add_option("--k", cfg.k, "clique size")->required();
    stats->add_option("--dump-shadow", cfg.dump_shadow, "write shadow entries to this file");
    stats->callback([&] { action = detail::cmd_stats; });

    auto* sweep = app.add_subcommand("sweep", "estimates over a range of k");
    add_input(sweep);
    sweep->add_option("--k-range", cfg.k_range, "LO:HI")->required();
    add_sampling(sweep, false);
    sweep->callback([&] { action = detail::cmd_sweep; });

    auto* conv = app.add_subcommand("convergence", "repeated estimates on one shadow");
    add_input(conv);
    conv->add_option("--k", cfg.k, "clique size")->required();
    conv->add_option("--samples", cfg.samples, "trial counts (comma separated)")
        ->delimiter(',')
        ->check(CLI::PositiveNumber);
    conv->add_option("--repeat", cfg.repeat, "runs per trial count");
    conv->add_option("--seed", cfg.seed, "first seed");
    conv->callback([&] { action = detail::cmd_convergence; });

    auto* base = app.add_subcommand("baseline", "edge-sampling estimate");
    add_input(base);
    base->add_option("--k", cfg.k, "clique size")->required();
    base->add_option("--p", cfg.p, "edge retention probability; omit to sweep 0.1..1.0");
    base->add_option("--seed", cfg.seed, "random seed");
    base->callback([&] { action = detail::cmd_baseline; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err);
    }

    try {
        detail::RowWriter writer(out, cfg.format);
        action(cfg, writer);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}

} // namespace turan::cli

#endif // TURAN_TOOLS_CLI_APP_HPP
