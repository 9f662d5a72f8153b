#pragma once

// Routes a counting request to one of the evaluators. `auto` prefers the
// closed formulas over A_n when their stated range covers the request and
// otherwise falls back to the coin-change oracle.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "partcalc/exact.hpp"
#include "partcalc/quantity.hpp"

namespace partcalc {

enum class Method { auto_select, oracle_series, oracle_dp, oracle_enum, theorem, stirling };

std::string_view to_string(Method m);
std::optional<Method> parse_method(std::string_view name);

/// Malformed or inconsistent request.
class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct ComputationRequest {
    Quantity quantity = Quantity::pp;
    std::uint32_t n = 0;
    std::optional<std::uint32_t> r;
    std::optional<std::vector<std::uint32_t>> parts;
    Method method = Method::auto_select;
    /// Out-of-range formula requests fail instead of falling back.
    bool strict = false;
    /// Raises the Stirling box limit to StirlingOptions::kLongRunningMaxBoxPoints.
    bool long_running = false;
    std::size_t jobs = 1;
};

struct ComputationResult {
    Quantity quantity = Quantity::pp;
    std::uint32_t n = 0;
    std::optional<std::uint32_t> r;
    Method method = Method::oracle_dp;  // the method actually used
    ExactInt value;
    std::vector<std::string> notes;
};

/// Throws UsageError for bad requests (and for out-of-range formula requests
/// when strict), CostGuardError when a Stirling box is too large.
ComputationResult compute(const ComputationRequest& request);

/// Whether the A_n formula for q is stated for these parameters (no remapping).
bool theorem_hypothesis_holds(Quantity q, std::uint32_t n, std::optional<std::uint32_t> r);
/// Whether the Stirling wrapper for q is stated for these parameters.
bool stirling_hypothesis_holds(Quantity q, std::uint32_t n, std::optional<std::uint32_t> r);

}  // namespace partcalc
