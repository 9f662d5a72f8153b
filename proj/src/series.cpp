#include "partcalc/series.hpp"

#include <array>
#include <stdexcept>
#include <string>

namespace partcalc {

namespace {

constexpr std::array<std::pair<Quantity, std::string_view>, 7> kQuantityNames{{
    {Quantity::p, "p"},
    {Quantity::pp, "pp"},
    {Quantity::pp_r, "pp_r"},
    {Quantity::pps, "pps"},
    {Quantity::ppso, "ppso"},
    {Quantity::P_r, "P_r"},
    {Quantity::p_a, "p_a"},
}};

std::uint32_t require_r(Quantity q, const QuantityArgs& args) {
    if (!args.r) throw std::invalid_argument(std::string(to_string(q)) + " requires r");
    if (*args.r == 0) throw std::invalid_argument("r must be at least 1");
    return *args.r;
}

const WeightSequence& require_parts(const QuantityArgs& args) {
    if (!args.parts) throw std::invalid_argument("p_a requires a part list");
    return *args.parts;
}

}  // namespace

std::string_view to_string(Quantity q) {
    for (auto [value, name] : kQuantityNames)
        if (value == q) return name;
    return "?";
}

std::optional<Quantity> parse_quantity(std::string_view name) {
    for (auto [value, candidate] : kQuantityNames)
        if (candidate == name) return value;
    return std::nullopt;
}

TruncatedSeries::TruncatedSeries(std::uint32_t degree_bound) : coeffs_(degree_bound + std::size_t{1}) {}

TruncatedSeries TruncatedSeries::one(std::uint32_t degree_bound) {
    TruncatedSeries s(degree_bound);
    s.coeffs_[0] = ExactInt(1);
    return s;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    if (a.degree_bound() != b.degree_bound())
        throw std::invalid_argument("series degree bounds differ");
    const std::uint32_t n = a.degree_bound();
    TruncatedSeries out(n);
    for (std::uint32_t i = 0; i <= n; ++i) {
        if (a.coeffs_[i].is_zero()) continue;
        for (std::uint32_t j = 0; i + j <= n; ++j) out.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return out;
}

void TruncatedSeries::mul_geometric(std::uint32_t k) {
    if (k == 0) throw std::invalid_argument("geometric factor needs k >= 1");
    for (std::size_t i = k; i < coeffs_.size(); ++i) coeffs_[i] += coeffs_[i - k];
}

void TruncatedSeries::mul_negative_binomial(std::uint32_t k, std::uint32_t w) {
    if (k == 0) throw std::invalid_argument("factor needs k >= 1");
    if (w == 0) return;
    const std::size_t size = coeffs_.size();
    std::vector<ExactInt> weights;  // C(j+w-1, j) for j*k < size
    for (std::size_t j = 0; j * k < size; ++j)
        weights.push_back(binomial(static_cast<std::int64_t>(j + w - 1), static_cast<std::int64_t>(j)));
    std::vector<ExactInt> out(size);
    for (std::size_t i = 0; i < size; ++i)
        for (std::size_t j = 0; j * k <= i; ++j)
            if (!coeffs_[i - j * k].is_zero()) out[i] += weights[j] * coeffs_[i - j * k];
    coeffs_ = std::move(out);
}

TruncatedSeries euler_product(const WeightFunction& weights, std::uint32_t degree_bound,
                              ExpansionRule rule) {
    TruncatedSeries s = TruncatedSeries::one(degree_bound);
    for (std::uint32_t k = 1; k <= degree_bound; ++k) {
        const std::uint32_t w = weights.weight(k);
        if (rule == ExpansionRule::negative_binomial) {
            s.mul_negative_binomial(k, w);
        } else {
            for (std::uint32_t t = 0; t < w; ++t) s.mul_geometric(k);
        }
    }
    return s;
}

std::vector<ExactInt> restricted_partition_table(const WeightSequence& a, std::uint32_t n) {
    std::vector<ExactInt> ways(n + std::size_t{1});
    ways[0] = ExactInt(1);
    for (std::uint32_t part : a.parts())
        for (std::size_t v = part; v <= n; ++v) ways[v] += ways[v - part];
    return ways;
}

ExactInt restricted_partition_dp(const WeightSequence& a, std::uint32_t n) {
    return restricted_partition_table(a, n)[n];
}

WeightFunction weight_function_for(Quantity q, std::uint32_t n, const QuantityArgs& args) {
    switch (q) {
        case Quantity::p: return WeightFunction::ordinary(n);
        case Quantity::pp: return WeightFunction::plane(n);
        case Quantity::pp_r: return WeightFunction::plane_rows(n, require_r(q, args));
        case Quantity::pps: return WeightFunction::plane_strict(n);
        case Quantity::ppso: return WeightFunction::plane_symmetric(n);
        case Quantity::P_r: return WeightFunction::multipartition(n, require_r(q, args));
        case Quantity::p_a: break;
    }
    throw std::invalid_argument("p_a has no structured weight function");
}

ExactInt oracle_value(Quantity q, std::uint32_t n, const QuantityArgs& args) {
    if (q == Quantity::p_a) return restricted_partition_dp(require_parts(args), n);
    WeightFunction w = weight_function_for(q, n, args);  // validates r even at n = 0
    if (n == 0) return ExactInt(1);
    return restricted_partition_dp(WeightSequence::from_function(w), n);
}

std::vector<ExactInt> oracle_series_table(Quantity q, std::uint32_t n, const QuantityArgs& args) {
    if (q == Quantity::p_a) return euler_product(require_parts(args).to_function(), n).coeffs();
    return euler_product(weight_function_for(q, n, args), n).coeffs();
}

ExactInt oracle_series_value(Quantity q, std::uint32_t n, const QuantityArgs& args) {
    return oracle_series_table(q, n, args)[n];
}

}  // namespace partcalc
