// partcalc: exact partition counts from the command line.

#include <cstdint>
#include <future>
#include <iostream>
#include <limits>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "partcalc/dispatch.hpp"
#include "partcalc/parallel.hpp"
#include "partcalc/render.hpp"
#include "partcalc/stirling_formula.hpp"
#include "partcalc/verify.hpp"

using namespace partcalc;

namespace {

enum Exit { kOk = 0, kUsage = 1, kVerifyFailed = 2, kCostGuard = 3 };

std::uint32_t narrow(std::int64_t v, const char* what) {
    if (v < 0) throw UsageError(std::string(what) + " must be nonnegative");
    if (v > std::numeric_limits<std::uint32_t>::max()) throw UsageError(std::string(what) + " is too large");
    return static_cast<std::uint32_t>(v);
}

struct CommonArgs {
    std::string quantity;
    std::optional<std::int64_t> r;
    std::vector<std::int64_t> parts;
    std::string method = "auto";
    std::string format = "plain";
    bool strict = false;
    bool long_running = false;
    std::size_t jobs = 1;

    ComputationRequest request(std::uint32_t n) const {
        ComputationRequest req;
        auto q = parse_quantity(quantity);
        if (!q) throw UsageError("unknown quantity: " + quantity);
        req.quantity = *q;
        req.n = n;
        if (r) req.r = narrow(*r, "--r");
        if (!parts.empty()) {
            std::vector<std::uint32_t> ps;
            for (auto a : parts) ps.push_back(narrow(a, "parts"));
            req.parts = ps;
        }
        auto m = parse_method(method);
        if (!m) throw UsageError("unknown method: " + method);
        req.method = *m;
        req.strict = strict;
        req.long_running = long_running;
        req.jobs = jobs;
        return req;
    }

    Format parsed_format() const {
        auto f = parse_format(format);
        if (!f) throw UsageError("unknown format: " + format);
        return *f;
    }
};

void add_common(CLI::App* cmd, CommonArgs& args) {
    cmd->add_option("--quantity", args.quantity, "p, pp, pp_r, pps, ppso, P_r or p_a")->required();
    cmd->add_option("--r", args.r, "row bound (pp_r) or number of colours (P_r)");
    cmd->add_option("--parts", args.parts, "comma separated parts for p_a")->delimiter(',');
    cmd->add_option("--method", args.method, "auto, oracle-series, oracle-dp, oracle-enum, theorem or stirling");
    cmd->add_option("--format", args.format, "plain, json or csv");
    cmd->add_flag("--strict", args.strict, "refuse out-of-hypothesis methods instead of falling back");
    cmd->add_flag("--long-running", args.long_running, "raise the Stirling cost guard");
    cmd->add_option("--jobs", args.jobs, "worker threads")->check(CLI::PositiveNumber);
}

void print_notes(const std::vector<std::string>& notes) {
    for (const auto& note : notes) std::cerr << "note: " << note << "\n";
}

int run_compute(const CommonArgs& args, std::int64_t n) {
    const auto result = compute(args.request(narrow(n, "--n")));
    print_notes(result.notes);
    std::cout << render_result(result, args.parsed_format());
    return kOk;
}

int run_table(const CommonArgs& args, std::int64_t from, std::int64_t to) {
    const std::uint32_t lo = narrow(from, "--from");
    const std::uint32_t hi = narrow(to, "--to");
    if (lo > hi) throw UsageError("--from must not exceed --to");
    const Format format = args.parsed_format();
    // Validate once up front so a bad request fails before any work starts.
    (void)args.request(lo);

    const std::size_t count = std::size_t{hi} - lo + 1;
    std::vector<ComputationResult> results(count);
    CommonArgs row_args = args;
    row_args.jobs = 1;
    const Partitioning slicing{std::min<std::size_t>(args.jobs, count)};
    partitioned_reduce(
        count, slicing, 0,
        [&](std::size_t begin, std::size_t end) {
            for (std::size_t i = begin; i < end; ++i)
                results[i] = compute(row_args.request(lo + static_cast<std::uint32_t>(i)));
            return 0;
        },
        [](int a, int b) { return a + b; });

    std::vector<TableRow> rows;
    for (const auto& result : results) {
        for (const auto& note : result.notes) std::cerr << "note: n=" << result.n << ": " << note << "\n";
        rows.push_back(TableRow::from(result));
    }
    std::cout << render_table(rows, format);
    return kOk;
}

int run_verify_cmd(const std::string& suite_name, std::optional<std::int64_t> max_n, bool long_running,
                   std::size_t jobs) {
    auto suite = parse_suite(suite_name);
    if (!suite) throw UsageError("unknown suite: " + suite_name);
    VerifyOptions options;
    if (max_n) options.max_n = narrow(*max_n, "--max-n");
    options.long_running = long_running;
    options.jobs = jobs;
    const auto report = run_verify(*suite, options);
    std::cout << format_report(report);
    return report.passed() ? kOk : kVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact partition and plane-partition counts"};
    app.require_subcommand(1);

    CommonArgs compute_args;
    std::int64_t n = 0;
    auto* compute_cmd = app.add_subcommand("compute", "compute a single value");
    add_common(compute_cmd, compute_args);
    compute_cmd->add_option("--n", n, "argument")->required();

    CommonArgs table_args;
    std::int64_t from = 0, to = 0;
    auto* table_cmd = app.add_subcommand("table", "one value per n in a range");
    add_common(table_cmd, table_args);
    table_cmd->add_option("--from", from, "first n")->required();
    table_cmd->add_option("--to", to, "last n")->required();

    std::string suite;
    std::optional<std::int64_t> max_n;
    bool verify_long = false;
    std::size_t verify_jobs = 1;
    auto* verify_cmd = app.add_subcommand("verify", "run a cross-check suite");
    verify_cmd->add_option("--suite", suite, "examples, cross-method, oracle-consistency or stirling")->required();
    verify_cmd->add_option("--max-n", max_n, "largest n checked");
    verify_cmd->add_flag("--long-running", verify_long, "include cases that take minutes");
    verify_cmd->add_option("--jobs", verify_jobs, "worker threads")->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (*compute_cmd) return run_compute(compute_args, n);
        if (*table_cmd) return run_table(table_args, from, to);
        return run_verify_cmd(suite, max_n, verify_long, verify_jobs);
    } catch (const CostGuardError& e) {
        std::cerr << "refused: " << e.what() << "\n";
        return kCostGuard;
    } catch (const IntegralityError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kVerifyFailed;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }
}
