#include "partcalc/coefficients.hpp"

#include <algorithm>
#include <string>

#include "partcalc/series.hpp"

namespace partcalc {

namespace {

// factors[s][l] for 1 <= s <= n and 0 <= l <= n/s; an empty table stands for
// the constant factor 1 at position s.
using FactorTables = std::vector<std::vector<ExactInt>>;

std::vector<ExactInt> closed_table(const FPolySpec& spec, std::uint32_t max_l) {
    std::vector<ExactInt> out;
    out.reserve(max_l + 1);
    for (std::uint32_t l = 0; l <= max_l; ++l) out.push_back(f_coeff_closed(spec, l));
    return out;
}

ExactInt sum_over_A(std::uint32_t n, const FactorTables& factors, const TheoremOptions& options) {
    const auto tuples = enumerate_A(n);
    return partitioned_reduce(
        tuples.size(), options.partitioning, ExactInt(0),
        [&](std::size_t begin, std::size_t end) {
            ExactInt sum(0);
            for (std::size_t i = begin; i < end; ++i) {
                ExactInt term(1);
                for (std::uint32_t s = 1; s <= n && !term.is_zero(); ++s)
                    if (!factors[s].empty()) term *= factors[s][tuples[i].at(s)];
                sum += term;
            }
            return sum;
        },
        [](ExactInt a, const ExactInt& b) { return a += b; });
}

void require(bool ok, const std::string& what) {
    if (!ok) throw HypothesisError(what);
}

}  // namespace

FPolySpec::FPolySpec(std::uint32_t exponent, ExactInt span) : exponent_(exponent), span_(std::move(span)) {
    if (exponent_ == 0) throw std::invalid_argument("FPolySpec: exponent must be at least 1");
    if (span_ < ExactInt(1)) throw std::invalid_argument("FPolySpec: span must be at least 1");
}

FPolySpec FPolySpec::for_part(std::uint32_t s, const ExactInt& modulus) {
    if (s == 0) throw std::invalid_argument("FPolySpec: s must be at least 1");
    if (!modulus.divisible_by(ExactInt(s)))
        throw std::invalid_argument("FPolySpec: " + std::to_string(s) + " does not divide " + modulus.to_string());
    return FPolySpec(s, modulus.exact_div(ExactInt(s)));
}

ExactInt f_coeff_direct(const FPolySpec& spec, std::uint64_t l) {
    if (ExactInt(static_cast<std::int64_t>(l)) > spec.degree()) return ExactInt(0);
    // Window width alpha+1, capped: a window wider than l+1 never truncates anything.
    const std::uint64_t width = spec.span() > ExactInt(static_cast<std::int64_t>(l))
                                    ? l + 1
                                    : spec.span().to_uint64();
    std::vector<ExactInt> poly(l + 1);
    poly[0] = ExactInt(1);
    std::vector<ExactInt> prefix(l + 2);
    for (std::uint32_t factor = 0; factor < spec.exponent(); ++factor) {
        for (std::uint64_t i = 0; i <= l; ++i) prefix[i + 1] = prefix[i] + poly[i];
        for (std::uint64_t i = 0; i <= l; ++i)
            poly[i] = prefix[i + 1] - (i + 1 >= width ? prefix[i + 1 - width] : ExactInt(0));
    }
    return poly[l];
}

std::vector<ExactInt> f_coeffs_direct(const FPolySpec& spec, std::uint64_t max_degree) {
    const ExactInt degree = spec.degree();
    if (degree > ExactInt(static_cast<std::int64_t>(max_degree)))
        throw std::length_error("f_coeffs_direct: degree " + degree.to_string() + " too large");
    const std::uint64_t deg = degree.to_uint64();
    const std::uint64_t width = spec.span().to_uint64();
    std::vector<ExactInt> poly(deg + 1);
    poly[0] = ExactInt(1);
    std::vector<ExactInt> prefix(deg + 2);
    for (std::uint32_t factor = 0; factor < spec.exponent(); ++factor) {
        for (std::uint64_t i = 0; i <= deg; ++i) prefix[i + 1] = prefix[i] + poly[i];
        for (std::uint64_t i = 0; i <= deg; ++i)
            poly[i] = prefix[i + 1] - (i + 1 >= width ? prefix[i + 1 - width] : ExactInt(0));
    }
    return poly;
}

ExactInt f_coeff_closed(const FPolySpec& spec, std::uint64_t l) {
    const ExactInt target(static_cast<std::int64_t>(l));
    if (target > spec.degree()) return ExactInt(0);
    const std::int64_t e = spec.exponent();
    // i ranges over 0..min(e, floor(l / span)).
    const ExactInt i_max_big = target.floor_div(spec.span());
    const std::int64_t i_max = std::min<std::int64_t>(e, i_max_big.fits_int64() ? i_max_big.to_int64() : e);
    ExactInt sum(0);
    for (std::int64_t i = 0; i <= i_max; ++i) {
        const std::int64_t j = (target - ExactInt(i) * spec.span()).to_int64();
        ExactInt term = binomial(e, i) * binomial(j + e - 1, j);
        if (i % 2 == 0) sum += term; else sum -= term;
    }
    return sum;
}

std::uint64_t MultiplicityVector::weighted_sum() const {
    std::uint64_t total = 0;
    for (std::size_t s = 1; s <= entries.size(); ++s) total += s * entries[s - 1];
    return total;
}

std::vector<MultiplicityVector> enumerate_A(std::uint32_t n) {
    if (n == 0) throw std::invalid_argument("enumerate_A: n must be at least 1");
    std::vector<MultiplicityVector> out;
    MultiplicityVector current{std::vector<std::uint32_t>(n, 0)};
    auto rec = [&](auto&& self, std::uint32_t s, std::uint32_t remaining) -> void {
        if (s == 1) {
            current.entries[0] = remaining;
            out.push_back(current);
            return;
        }
        for (std::uint32_t count = remaining / s + 1; count-- > 0;) {
            current.entries[s - 1] = count;
            self(self, s - 1, remaining - count * s);
        }
        current.entries[s - 1] = 0;
    };
    rec(rec, n, n);
    return out;
}

ExactInt pp_via_formu(std::uint32_t n, const TheoremOptions& options) {
    require(n >= 3, "pp formula requires n >= 3");
    const ExactInt modulus = lcm_range(n);
    FactorTables factors(n + 1);
    for (std::uint32_t s = 2; s <= n; ++s) factors[s] = closed_table(FPolySpec::for_part(s, modulus), n / s);
    return sum_over_A(n, factors, options);
}

ExactInt ppr_via_formu2(std::uint32_t n, std::uint32_t r, const TheoremOptions& options) {
    require(r >= 2 && n > r, "pp_r formula requires n > r >= 2");
    const ExactInt modulus = lcm_range(n);
    FactorTables factors(n + 1);
    for (std::uint32_t s = 2; s <= n; ++s)
        factors[s] = closed_table(FPolySpec::for_part(std::min(s, r), modulus), n / s);
    return sum_over_A(n, factors, options);
}

ExactInt pps_via_formu3(std::uint32_t n, const TheoremOptions& options) {
    require(n >= 3, "pps formula requires n >= 3");
    const ExactInt modulus = lcm_range(n);
    FactorTables factors(n + 1);
    for (std::uint32_t s = 3; s <= n; ++s)
        factors[s] = closed_table(FPolySpec::for_part((s + 1) / 2, modulus), n / s);
    return sum_over_A(n, factors, options);
}

ExactInt ppso_via_formu4(std::uint32_t n, const TheoremOptions& options) {
    require(n >= 3, "ppso formula requires n >= 3");
    const ExactInt modulus = lcm_range(n);
    FactorTables factors(n + 1);
    for (std::uint32_t s = 2; s <= n / 2; ++s)
        factors[2 * s] = closed_table(FPolySpec::for_part(s, modulus), n / (2 * s));
    return sum_over_A(n, factors, options);
}

ExactInt multipartition_formula_sum(std::uint32_t m, std::uint32_t r, const ExactInt& modulus,
                                    const TheoremOptions& options) {
    const FPolySpec spec = FPolySpec::for_part(r, modulus);
    FactorTables factors(m + 1);
    for (std::uint32_t s = 1; s <= m; ++s) factors[s] = closed_table(spec, m / s);
    return sum_over_A(m, factors, options);
}

ExactInt Pr_via_formu5(std::uint32_t n, std::uint32_t r, const TheoremOptions& options) {
    require(n >= 4 && r >= 2 && n > r, "P_r formula requires n >= 4 and n > r >= 2");
    return multipartition_formula_sum(n, r, lcm_range(n), options);
}

bool multipartition_formula_bound_holds(std::uint32_t n, std::uint32_t r) {
    if (r == 0 || n == 0) return false;
    const ExactInt modulus = lcm_range(n);
    if (!modulus.divisible_by(ExactInt(r))) return false;
    return ExactInt(n) <= modulus.exact_div(ExactInt(r)) - ExactInt(1);
}

PrEvaluator pr_from_oracle() {
    return [](std::uint32_t m, std::uint32_t r) {
        return oracle_value(Quantity::P_r, m, QuantityArgs{r, std::nullopt});
    };
}

ExactInt ppr_via_multipartitions(std::uint32_t n, std::uint32_t r, const PrEvaluator& pr) {
    if (r == 0) throw std::invalid_argument("ppr_via_multipartitions: r must be at least 1");
    // The weighted multiplicities of each shift d = sum j t_j are the
    // coefficients of prod_{j=1..r-1} (1 - z^j)^(r-j), truncated at z^n.
    std::vector<ExactInt> shift_weight(n + std::size_t{1});
    auto rec = [&](auto&& self, std::uint32_t j, std::uint64_t shift, ExactInt weight) -> void {
        if (shift > n) return;
        if (j == r) {
            shift_weight[shift] += weight;
            return;
        }
        for (std::uint32_t t = 0; t <= r - j; ++t) {
            ExactInt w = weight * binomial(r - j, t);
            if (t % 2 == 1) w = -w;
            self(self, j + 1, shift + std::uint64_t{j} * t, std::move(w));
        }
    };
    rec(rec, 1, 0, ExactInt(1));

    ExactInt total(0);
    for (std::uint32_t d = 0; d <= n; ++d) {
        if (shift_weight[d].is_zero()) continue;
        const std::uint32_t m = n - d;
        total += shift_weight[d] * (m == 0 ? ExactInt(1) : pr(m, r));
    }
    return total;
}

ExactInt ppr_via_corollary(std::uint32_t n, std::uint32_t r, const TheoremOptions& options) {
    require(n >= 4 && r >= 2 && n > r, "corollary requires n >= 4 and n > r >= 2");
    const ExactInt modulus = lcm_range(n);
    const PrEvaluator oracle = pr_from_oracle();
    return ppr_via_multipartitions(n, r, [&](std::uint32_t m, std::uint32_t rr) {
        return m >= 4 ? multipartition_formula_sum(m, rr, modulus, options) : oracle(m, rr);
    });
}

}  // namespace partcalc
