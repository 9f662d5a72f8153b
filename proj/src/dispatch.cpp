#include "partcalc/dispatch.hpp"

#include <array>
#include <string>

#include "partcalc/coefficients.hpp"
#include "partcalc/diagrams.hpp"
#include "partcalc/series.hpp"
#include "partcalc/stirling_formula.hpp"
#include "partcalc/weights.hpp"

namespace partcalc {

namespace {

constexpr std::array<std::pair<Method, std::string_view>, 6> kMethodNames{{
    {Method::auto_select, "auto"},
    {Method::oracle_series, "oracle-series"},
    {Method::oracle_dp, "oracle-dp"},
    {Method::oracle_enum, "oracle-enum"},
    {Method::theorem, "theorem"},
    {Method::stirling, "stirling"},
}};

constexpr std::uint32_t kEnumerationCap = 10;

QuantityArgs args_of(const ComputationRequest& req) {
    QuantityArgs args;
    args.r = req.r;
    if (req.parts) args.parts = WeightSequence(*req.parts);
    return args;
}

void validate(const ComputationRequest& req) {
    const bool has_r = req.r.has_value();
    if (needs_r(req.quantity) && !has_r)
        throw UsageError(std::string(to_string(req.quantity)) + " requires --r");
    if (!needs_r(req.quantity) && has_r)
        throw UsageError("--r only applies to pp_r and P_r");
    if (has_r && *req.r == 0) throw UsageError("r must be at least 1");
    const bool has_parts = req.parts.has_value();
    if (req.quantity == Quantity::p_a && !has_parts) throw UsageError("p_a requires --parts");
    if (req.quantity != Quantity::p_a && has_parts) throw UsageError("--parts only applies to p_a");
    if (has_parts) {
        if (req.parts->empty()) throw UsageError("--parts must list at least one part");
        for (std::uint32_t a : *req.parts)
            if (a == 0) throw UsageError("parts must be positive");
    }
    if (req.jobs == 0) throw UsageError("jobs must be at least 1");
}

// A_n formula value, remapping pp_r and P_r edge cases to the formula that
// covers them. nullopt when no formula applies.
std::optional<ExactInt> theorem_value(const ComputationRequest& req, bool allow_remap,
                                      std::vector<std::string>& notes) {
    const TheoremOptions opts{Partitioning{req.jobs}};
    const std::uint32_t n = req.n;
    const auto r = req.r;
    if (theorem_hypothesis_holds(req.quantity, n, r)) {
        switch (req.quantity) {
            case Quantity::p: return ExactInt(static_cast<std::int64_t>(enumerate_A(n).size()));
            case Quantity::pp: return pp_via_formu(n, opts);
            case Quantity::pp_r: return ppr_via_formu2(n, *r, opts);
            case Quantity::pps: return pps_via_formu3(n, opts);
            case Quantity::ppso: return ppso_via_formu4(n, opts);
            case Quantity::P_r:
                if (!multipartition_formula_bound_holds(n, *r))
                    notes.push_back("warning: n = " + std::to_string(n) + " exceeds D_n/r - 1 = " +
                                    (lcm_range(n).exact_div(ExactInt(*r)) - ExactInt(1)).to_string() +
                                    "; the A_n formula over-trims f_r here and may differ from P_r(n)");
                return Pr_via_formu5(n, *r, opts);
            case Quantity::p_a: break;
        }
        return std::nullopt;
    }
    if (!allow_remap) return std::nullopt;
    if (req.quantity == Quantity::pp_r && n >= 3) {
        if (*r >= n) {
            notes.push_back("r >= n: pp_r(n) = pp(n)");
            return pp_via_formu(n, opts);
        }
        if (*r == 1) {
            notes.push_back("r = 1: pp_1(n) = p(n) = #A_n");
            return ExactInt(static_cast<std::int64_t>(enumerate_A(n).size()));
        }
    }
    if (req.quantity == Quantity::P_r && *r == 1 && n >= 3) {
        notes.push_back("r = 1: P_1(n) = p(n) = #A_n");
        return ExactInt(static_cast<std::int64_t>(enumerate_A(n).size()));
    }
    return std::nullopt;
}

WeightSequence sequence_for(const ComputationRequest& req) {
    if (req.quantity == Quantity::p_a) return WeightSequence(*req.parts);
    return WeightSequence::from_function(weight_function_for(req.quantity, req.n, args_of(req)));
}

std::optional<ExactInt> stirling_value(const ComputationRequest& req, bool allow_general,
                                       std::vector<std::string>& notes) {
    StirlingOptions opts = req.long_running ? StirlingOptions::long_running() : StirlingOptions{};
    opts.partitioning = Partitioning{req.jobs};
    const std::uint32_t n = req.n;
    if (stirling_hypothesis_holds(req.quantity, n, req.r)) {
        switch (req.quantity) {
            case Quantity::pp: return pp_via_stirling(n, opts);
            case Quantity::pp_r: return ppr_via_stirling(n, *req.r, opts);
            case Quantity::pps: return pps_via_stirling(n, opts);
            case Quantity::ppso: return ppso_via_stirling(n, opts);
            case Quantity::P_r: return Pr_via_stirling(n, *req.r, opts);
            case Quantity::p_a: return p_a_via_teora(WeightSequence(*req.parts), n, opts);
            case Quantity::p: return p_a_via_teora(seq_ordinary(n), n, opts);
        }
    }
    if (!allow_general || n == 0) return std::nullopt;
    notes.push_back("used the per-entry residue-class expansion on the full weight sequence");
    return p_a_via_teora(sequence_for(req), n, opts);
}

std::optional<ExactInt> enum_value(const ComputationRequest& req) {
    if (req.n > kEnumerationCap) return std::nullopt;
    std::optional<DiagramFilter> filter;
    switch (req.quantity) {
        case Quantity::p: filter = DiagramFilter::max_rows(1); break;
        case Quantity::pp: filter = DiagramFilter::all(); break;
        case Quantity::pp_r: filter = DiagramFilter::max_rows(*req.r); break;
        case Quantity::pps: filter = DiagramFilter::strict(); break;
        case Quantity::ppso: filter = DiagramFilter::symmetric(); break;
        case Quantity::P_r:
        case Quantity::p_a: return std::nullopt;
    }
    if (req.n == 0) return ExactInt(1);
    EnumerationOptions opts;
    opts.cap = kEnumerationCap;
    opts.partitioning = Partitioning{req.jobs};
    return count_filtered(req.n, *filter, opts);
}

}  // namespace

std::string_view to_string(Method m) {
    for (auto [value, name] : kMethodNames)
        if (value == m) return name;
    return "?";
}

std::optional<Method> parse_method(std::string_view name) {
    for (auto [value, candidate] : kMethodNames)
        if (candidate == name) return value;
    return std::nullopt;
}

bool theorem_hypothesis_holds(Quantity q, std::uint32_t n, std::optional<std::uint32_t> r) {
    switch (q) {
        case Quantity::p:
        case Quantity::pp:
        case Quantity::pps:
        case Quantity::ppso: return n >= 3;
        case Quantity::pp_r: return r && *r >= 2 && n > *r;
        case Quantity::P_r: return r && n >= 4 && *r >= 2 && n > *r;
        case Quantity::p_a: return false;
    }
    return false;
}

bool stirling_hypothesis_holds(Quantity q, std::uint32_t n, std::optional<std::uint32_t> r) {
    switch (q) {
        case Quantity::pp:
        case Quantity::pps:
        case Quantity::ppso: return n >= 3;
        case Quantity::pp_r: return r && n >= 3 && *r >= 2 && *r + 1 <= n;
        case Quantity::P_r: return r && n >= 4 && *r >= 2 && n > *r;
        case Quantity::p: return n >= 1;
        case Quantity::p_a: return true;
    }
    return false;
}

ComputationResult compute(const ComputationRequest& req) {
    validate(req);
    ComputationResult out;
    out.quantity = req.quantity;
    out.n = req.n;
    out.r = req.r;
    const QuantityArgs args = args_of(req);

    auto use_dp = [&] {
        out.method = Method::oracle_dp;
        out.value = oracle_value(req.quantity, req.n, args);
    };
    auto fallback = [&](std::string_view why) {
        if (req.strict)
            throw UsageError(std::string(to_string(req.method)) + " does not apply: " + std::string(why));
        out.notes.push_back(std::string(to_string(req.method)) + " does not apply (" + std::string(why) +
                            "); fell back to oracle-dp");
        use_dp();
    };

    switch (req.method) {
        case Method::auto_select: {
            const bool formula_ok =
                theorem_hypothesis_holds(req.quantity, req.n, req.r) &&
                (req.quantity != Quantity::P_r || multipartition_formula_bound_holds(req.n, *req.r));
            if (formula_ok) {
                out.method = Method::theorem;
                out.value = *theorem_value(req, false, out.notes);
            } else {
                use_dp();
            }
            break;
        }
        case Method::oracle_dp: use_dp(); break;
        case Method::oracle_series:
            out.method = Method::oracle_series;
            out.value = oracle_series_value(req.quantity, req.n, args);
            break;
        case Method::oracle_enum:
            if (auto v = enum_value(req)) {
                out.method = Method::oracle_enum;
                out.value = *v;
            } else {
                fallback("enumeration covers p, pp, pp_r, pps, ppso with n <= " + std::to_string(kEnumerationCap));
            }
            break;
        case Method::theorem:
            if (auto v = theorem_value(req, !req.strict, out.notes)) {
                out.method = Method::theorem;
                out.value = *v;
            } else {
                fallback("parameters outside the formula's stated range");
            }
            break;
        case Method::stirling:
            if (auto v = stirling_value(req, !req.strict, out.notes)) {
                out.method = Method::stirling;
                out.value = *v;
            } else {
                fallback("parameters outside the formula's stated range");
            }
            break;
    }
    return out;
}

}  // namespace partcalc
