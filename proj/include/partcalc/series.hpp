#pragma once

// Generating-function and dynamic-programming oracles. Both count the same
// objects by independent routes: a truncated Euler product, and the
// coin-change recurrence over an explicit weight sequence.

#include <cstdint>
#include <optional>
#include <vector>

#include "partcalc/exact.hpp"
#include "partcalc/quantity.hpp"
#include "partcalc/weights.hpp"

namespace partcalc {

/// Formal power series modulo z^(degree_bound + 1).
class TruncatedSeries {
public:
    explicit TruncatedSeries(std::uint32_t degree_bound);  // the zero series
    static TruncatedSeries one(std::uint32_t degree_bound);

    std::uint32_t degree_bound() const { return static_cast<std::uint32_t>(coeffs_.size() - 1); }
    const std::vector<ExactInt>& coeffs() const { return coeffs_; }
    const ExactInt& operator[](std::uint32_t i) const { return coeffs_.at(i); }
    ExactInt& operator[](std::uint32_t i) { return coeffs_.at(i); }

    /// Truncated convolution; throws std::invalid_argument on mismatched bounds.
    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);

    /// In place multiplication by 1/(1 - z^k) = 1 + z^k + z^2k + ...
    void mul_geometric(std::uint32_t k);
    /// In place multiplication by (1 - z^k)^(-w) via sum_j C(j+w-1, j) z^(jk).
    void mul_negative_binomial(std::uint32_t k, std::uint32_t w);

    friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

private:
    std::vector<ExactInt> coeffs_;
};

enum class ExpansionRule { repeated_geometric, negative_binomial };

/// prod_{k=1..N} (1 - z^k)^(-w(k)) mod z^(N+1); w(k) = 0 beyond the weight bound.
TruncatedSeries euler_product(const WeightFunction& weights, std::uint32_t degree_bound,
                              ExpansionRule rule = ExpansionRule::negative_binomial);

/// p_a(n): number of x >= 0 with sum a_i x_i = n.
ExactInt restricted_partition_dp(const WeightSequence& a, std::uint32_t n);
/// p_a(0..n) in one pass.
std::vector<ExactInt> restricted_partition_table(const WeightSequence& a, std::uint32_t n);

/// Extra argument for quantities that need one.
struct QuantityArgs {
    std::optional<std::uint32_t> r;
    std::optional<WeightSequence> parts;
};

/// Weight function with bound n for a structured quantity (everything but p_a).
/// Throws std::invalid_argument when r is required and missing or zero.
WeightFunction weight_function_for(Quantity q, std::uint32_t n, const QuantityArgs& args);

/// Count via restricted_partition_dp on the matching weight sequence; 1 at n = 0.
ExactInt oracle_value(Quantity q, std::uint32_t n, const QuantityArgs& args = {});
/// The same count read off the truncated Euler product.
ExactInt oracle_series_value(Quantity q, std::uint32_t n, const QuantityArgs& args = {});
/// Values at 0..n from a single Euler product.
std::vector<ExactInt> oracle_series_table(Quantity q, std::uint32_t n, const QuantityArgs& args = {});

}  // namespace partcalc
