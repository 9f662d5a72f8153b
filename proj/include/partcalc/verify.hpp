#pragma once

// Cross-method verification suites behind `partcalc verify`.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace partcalc {

enum class Suite { examples, cross_method, oracle_consistency, stirling };

std::string_view to_string(Suite s);
std::optional<Suite> parse_suite(std::string_view name);

struct CheckOutcome {
    std::string identity;
    std::uint64_t checks = 0;
    std::uint64_t failures = 0;
    std::string first_counterexample;  // empty when nothing failed
};

struct VerifyReport {
    Suite suite = Suite::examples;
    std::vector<CheckOutcome> outcomes;
    std::vector<std::string> notes;

    bool passed() const;
};

struct VerifyOptions {
    std::optional<std::uint32_t> max_n;  // per-suite default when unset
    bool long_running = false;
    std::size_t jobs = 1;
};

VerifyReport run_verify(Suite suite, const VerifyOptions& options = {});
std::string format_report(const VerifyReport& report);

}  // namespace partcalc
