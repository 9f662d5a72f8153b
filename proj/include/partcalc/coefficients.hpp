#pragma once

// Coefficients of f(z) = (1 + z + ... + z^alpha)^e, the multiplicity vectors
// A_n = {(l_1..l_n) : sum s*l_s = n}, and the plane-partition and
// multipartition counts written as sums over A_n of products of those
// coefficients.

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <vector>

#include "partcalc/exact.hpp"
#include "partcalc/parallel.hpp"

namespace partcalc {

/// (1 + z + ... + z^(span-1))^exponent, i.e. alpha = span - 1.
class FPolySpec {
public:
    /// exponent >= 1 and span >= 1; throws std::invalid_argument otherwise.
    FPolySpec(std::uint32_t exponent, ExactInt span);
    /// f_s for the ambient modulus D: exponent s, span D/s. Requires s | D.
    static FPolySpec for_part(std::uint32_t s, const ExactInt& modulus);

    std::uint32_t exponent() const { return exponent_; }
    const ExactInt& span() const { return span_; }
    ExactInt alpha() const { return span_ - ExactInt(1); }
    ExactInt degree() const { return ExactInt(exponent_) * alpha(); }

private:
    std::uint32_t exponent_;
    ExactInt span_;
};

/// Coefficient of z^l by truncated self-multiplication; 0 past the degree.
ExactInt f_coeff_direct(const FPolySpec& spec, std::uint64_t l);
/// All coefficients 0..degree by direct expansion. Throws std::length_error
/// when the degree exceeds `max_degree`.
std::vector<ExactInt> f_coeffs_direct(const FPolySpec& spec, std::uint64_t max_degree = 1u << 20);
/// sum_{i*span + j = l} (-1)^i C(e, i) C(j + e - 1, j); 0 past the degree.
ExactInt f_coeff_closed(const FPolySpec& spec, std::uint64_t l);

/// Element of A_n; entries[s-1] = l_s.
struct MultiplicityVector {
    std::vector<std::uint32_t> entries;

    std::uint32_t n() const { return static_cast<std::uint32_t>(entries.size()); }
    std::uint32_t at(std::uint32_t s) const { return entries.at(s - 1); }
    std::uint64_t weighted_sum() const;

    friend bool operator==(const MultiplicityVector&, const MultiplicityVector&) = default;
};

/// A_n in decreasing lexicographic order of (l_n, ..., l_1). Throws for n = 0.
std::vector<MultiplicityVector> enumerate_A(std::uint32_t n);

/// Raised when a formula is asked for parameters outside the range it is stated for.
class HypothesisError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct TheoremOptions {
    Partitioning partitioning{};
};

/// pp(n) = sum_{A_n} prod_{s=2..n} f_{s, l_s}. Requires n >= 3.
ExactInt pp_via_formu(std::uint32_t n, const TheoremOptions& options = {});
/// pp_r(n) = sum_{A_n} prod_{s=2..n} f_{min(s,r), l_s}. Requires n > r >= 2.
ExactInt ppr_via_formu2(std::uint32_t n, std::uint32_t r, const TheoremOptions& options = {});
/// pps(n) = sum_{A_n} prod_{s=3..n} f_{floor((s+1)/2), l_s}. Requires n >= 3.
ExactInt pps_via_formu3(std::uint32_t n, const TheoremOptions& options = {});
/// ppso(n) = sum_{A_n} prod_{s=2..floor(n/2)} f_{s, l_2s}. Requires n >= 3.
ExactInt ppso_via_formu4(std::uint32_t n, const TheoremOptions& options = {});
/// P_r(n) = sum_{A_n} prod_{s=1..n} f_{r, l_s}. Requires n >= 4 and n > r >= 2.
ExactInt Pr_via_formu5(std::uint32_t n, std::uint32_t r, const TheoremOptions& options = {});

/// sum_{A_m} prod_s f_{r, l_s} with f built on an arbitrary modulus (r must divide it).
ExactInt multipartition_formula_sum(std::uint32_t m, std::uint32_t r, const ExactInt& modulus,
                                    const TheoremOptions& options = {});

/// Whether every l_s over A_n stays below the span D_n/r of f_r, which is what
/// makes f_{r, l} equal the unrestricted count C(l + r - 1, l). Fails at (4, 3).
bool multipartition_formula_bound_holds(std::uint32_t n, std::uint32_t r);

/// P_r evaluator used by the alternating sum; called only with m >= 1.
using PrEvaluator = std::function<ExactInt(std::uint32_t m, std::uint32_t r)>;

/// P_r from the coin-change oracle.
PrEvaluator pr_from_oracle();

/// pp_r(n) from the expansion of prod_{j=1..r-1} (1 - z^j)^(r-j) against the
/// P_r generating function: sum over 0 <= t_j <= r-j of
/// prod_j (-1)^{t_j} C(r-j, t_j) * P_r(n - sum j t_j), with P_r(0) = 1 and
/// P_r(negative) = 0. Requires r >= 1.
ExactInt ppr_via_multipartitions(std::uint32_t n, std::uint32_t r, const PrEvaluator& pr);

/// The alternating sum with P_r(m) for m >= 4 taken from the A_m formula built
/// on D_n, and from the oracle below 4. Requires n >= 4 and n > r >= 2.
ExactInt ppr_via_corollary(std::uint32_t n, std::uint32_t r, const TheoremOptions& options = {});

}  // namespace partcalc
