#pragma once

// Restricted partition counts from the residue-class Stirling expansion
//
//   p_a(n) = 1/(r-1)! sum_m sum_{x in box} sum_{k=m}^{r-1}
//            c(r,k+1) (-1)^{k-m} C(k,m) D^{-k} S(x)^{k-m} n^m,
//
// where the box holds the tuples 0 <= x_t <= b_t with S(x) = sum w_t x_t
// congruent to n mod D. The kernel only depends on S, so points are first
// bucketed by S (with the product of their coordinate coefficients as
// multiplicity) and the rational kernel is evaluated once per distinct S.

#include <cstdint>
#include <functional>
#include <map>
#include <stdexcept>
#include <vector>

#include "partcalc/exact.hpp"
#include "partcalc/parallel.hpp"
#include "partcalc/weights.hpp"

namespace partcalc {

struct CongruenceBox {
    std::vector<std::uint64_t> bounds;   // inclusive upper limit per coordinate
    std::vector<std::uint64_t> weights;  // positive
    ExactInt modulus;                    // D >= 1
    ExactInt residue;                    // reduced into [0, D) on use

    /// prod (b_t + 1), the number of points before the congruence filter.
    ExactInt raw_size() const;
    /// Throws std::invalid_argument on mismatched sizes, zero weights or D < 1.
    void validate() const;
};

/// Every point of the box in lexicographic order. Meant for tests on tiny boxes.
std::vector<std::vector<std::uint64_t>> box_points(const CongruenceBox& box);

struct StirlingKernelParams {
    std::uint32_t r_len;
    ExactInt modulus;
    ExactInt n;
    StirlingTable stirling;

    StirlingKernelParams(std::uint32_t r_len, ExactInt modulus, ExactInt n);
};

/// sum_{m=0}^{r-1} sum_{k=m}^{r-1} c(r,k+1) (-1)^{k-m} C(k,m) D^{-k} S^{k-m} n^m.
ExactRat stirling_kernel(const StirlingKernelParams& kernel, const ExactInt& weighted_sum);

class CostGuardError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class IntegralityError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

struct StirlingOptions {
    static constexpr std::uint64_t kDefaultMaxBoxPoints = 10'000'000;
    static constexpr std::uint64_t kLongRunningMaxBoxPoints = 1'000'000'000;

    /// Refuse boxes whose raw size exceeds this.
    std::uint64_t max_box_points = kDefaultMaxBoxPoints;
    /// Slices of the first coordinate's range.
    Partitioning partitioning{};

    static StirlingOptions long_running() { return {kLongRunningMaxBoxPoints, {}}; }
};

/// Coefficient attached to coordinate `position` taking `value`.
using CoefficientFn = std::function<ExactInt(std::size_t position, std::uint64_t value)>;

struct RegroupedEvaluation {
    ExactInt value;
    std::uint64_t points = 0;          // box points satisfying the congruence
    std::size_t distinct_sums = 0;     // distinct S values among them
    ExactRat unnormalized;             // the sum before division by (r-1)!
};

/// Multiplicity of each weighted sum S over the box points, each point counted
/// with the product of its coordinate coefficients.
std::map<std::uint64_t, ExactInt> weighted_sum_histogram(const CongruenceBox& box, const CoefficientFn& coeff_at,
                                                         const StirlingOptions& options = {},
                                                         std::uint64_t* points_visited = nullptr);

/// Throws CostGuardError for oversized boxes and IntegralityError if the final
/// or partial sums violate the integrality the formula guarantees.
RegroupedEvaluation regrouped_sum_detailed(const CoefficientFn& coeff_at, const CongruenceBox& box,
                                           const StirlingKernelParams& kernel, const StirlingOptions& options = {});
ExactInt regrouped_sum(const CoefficientFn& coeff_at, const CongruenceBox& box, const StirlingKernelParams& kernel,
                       const StirlingOptions& options = {});

/// p_a(n) with one box coordinate per entry of a: 0 <= x_t <= D/a_t - 1.
ExactInt p_a_via_teora(const WeightSequence& a, std::uint32_t n, const StirlingOptions& options = {});
RegroupedEvaluation p_a_via_teora_detailed(const WeightSequence& a, std::uint32_t n,
                                           const StirlingOptions& options = {});

/// Regrouped form: one coordinate l_s per distinct part s with multiplicity
/// mult(s), 0 <= l_s <= mult(s) (D/s - 1), weighted by the number of
/// mult(s)-tuples in [0, D/s - 1] summing to l_s.
RegroupedEvaluation regrouped_for_sequence(const WeightSequence& seq, std::uint32_t n,
                                           const StirlingOptions& options = {});

ExactInt pp_via_stirling(std::uint32_t n, const StirlingOptions& options = {});
ExactInt ppr_via_stirling(std::uint32_t n, std::uint32_t r, const StirlingOptions& options = {});
ExactInt pps_via_stirling(std::uint32_t n, const StirlingOptions& options = {});
ExactInt ppso_via_stirling(std::uint32_t n, const StirlingOptions& options = {});
ExactInt Pr_via_stirling(std::uint32_t n, std::uint32_t r, const StirlingOptions& options = {});

}  // namespace partcalc
