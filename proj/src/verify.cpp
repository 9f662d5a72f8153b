#include "partcalc/verify.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "partcalc/coefficients.hpp"
#include "partcalc/diagrams.hpp"
#include "partcalc/dispatch.hpp"
#include "partcalc/series.hpp"
#include "partcalc/stirling_formula.hpp"
#include "partcalc/weights.hpp"

namespace partcalc {

namespace {

constexpr std::uint32_t kEnumLimit = 8;

struct Case {
    Quantity q;
    std::uint32_t n;
    std::optional<std::uint32_t> r;
};

std::string describe(const Case& c) {
    std::string s = "quantity=" + std::string(to_string(c.q)) + " n=" + std::to_string(c.n);
    if (c.r) s += " r=" + std::to_string(*c.r);
    return s;
}

class Recorder {
public:
    explicit Recorder(VerifyReport& report) : report_(report) {}

    CheckOutcome& outcome(const std::string& identity) {
        for (auto& o : report_.outcomes)
            if (o.identity == identity) return o;
        report_.outcomes.push_back(CheckOutcome{identity, 0, 0, {}});
        return report_.outcomes.back();
    }

    void expect_equal(const std::string& identity, const std::string& where, const ExactInt& expected,
                      const ExactInt& got) {
        CheckOutcome& o = outcome(identity);
        ++o.checks;
        if (expected == got) return;
        if (o.failures++ == 0)
            o.first_counterexample = where + " expected=" + expected.to_string() + " got=" + got.to_string();
    }

    void expect_true(const std::string& identity, const std::string& where, bool ok) {
        CheckOutcome& o = outcome(identity);
        ++o.checks;
        if (!ok && o.failures++ == 0) o.first_counterexample = where;
    }

    void note(std::string text) { report_.notes.push_back(std::move(text)); }

private:
    VerifyReport& report_;
};

std::vector<Case> structured_cases(std::uint32_t max_n) {
    std::vector<Case> cases;
    for (std::uint32_t n = 0; n <= max_n; ++n) {
        for (Quantity q : {Quantity::p, Quantity::pp, Quantity::pps, Quantity::ppso}) cases.push_back({q, n, {}});
        for (std::uint32_t r = 1; r <= 6; ++r) {
            cases.push_back({Quantity::pp_r, n, r});
            cases.push_back({Quantity::P_r, n, r});
        }
    }
    return cases;
}

QuantityArgs args_for(const Case& c) { return QuantityArgs{c.r, std::nullopt}; }

void run_examples(Recorder& rec) {
    auto value = [](Quantity q, std::uint32_t n, std::optional<std::uint32_t> r, Method m) {
        ComputationRequest req;
        req.quantity = q;
        req.n = n;
        req.r = r;
        req.method = m;
        req.strict = true;
        return compute(req).value;
    };
    const std::string id = "worked examples";
    for (Method m : {Method::oracle_dp, Method::oracle_series, Method::theorem, Method::stirling, Method::oracle_enum})
        rec.expect_equal(id, "pp(3) via " + std::string(to_string(m)), ExactInt(6), value(Quantity::pp, 3, {}, m));
    rec.expect_equal(id, "pp_1(3)", ExactInt(3), value(Quantity::pp_r, 3, 1, Method::oracle_dp));
    rec.expect_equal(id, "pp_2(3) oracle", ExactInt(5), value(Quantity::pp_r, 3, 2, Method::oracle_dp));
    rec.expect_equal(id, "pp_2(3) theorem", ExactInt(5), value(Quantity::pp_r, 3, 2, Method::theorem));
    rec.expect_equal(id, "pp_2(3) stirling", ExactInt(5), value(Quantity::pp_r, 3, 2, Method::stirling));
    rec.expect_equal(id, "pp_3(3)", ExactInt(6), value(Quantity::pp_r, 3, 3, Method::oracle_dp));
    rec.expect_equal(id, "pps(3) oracle", ExactInt(4), value(Quantity::pps, 3, {}, Method::oracle_dp));
    rec.expect_equal(id, "pps(3) theorem", ExactInt(4), value(Quantity::pps, 3, {}, Method::theorem));
    rec.expect_equal(id, "ppso(3) oracle", ExactInt(3), value(Quantity::ppso, 3, {}, Method::oracle_dp));
    rec.expect_equal(id, "ppso(3) theorem", ExactInt(3), value(Quantity::ppso, 3, {}, Method::theorem));
    rec.expect_equal(id, "P_2(4) oracle", ExactInt(20), value(Quantity::P_r, 4, 2, Method::oracle_dp));
    rec.expect_equal(id, "P_2(4) theorem", ExactInt(20), value(Quantity::P_r, 4, 2, Method::theorem));
    rec.expect_equal(id, "P_2(4) stirling", ExactInt(20), value(Quantity::P_r, 4, 2, Method::stirling));

    const std::string diagrams = "diagram counts for n = 3";
    rec.expect_equal(diagrams, "all", ExactInt(6), count_filtered(3, DiagramFilter::all()));
    rec.expect_equal(diagrams, "strict", ExactInt(4), count_filtered(3, DiagramFilter::strict()));
    rec.expect_equal(diagrams, "symmetric", ExactInt(2), count_filtered(3, DiagramFilter::symmetric()));
    rec.expect_equal(diagrams, "max_rows(2)", ExactInt(5), count_filtered(3, DiagramFilter::max_rows(2)));
    rec.expect_equal(diagrams, "max_rows(1)", ExactInt(3), count_filtered(3, DiagramFilter::max_rows(1)));

    const std::string sets = "multiplicity vector sets";
    auto as_set = [](std::uint32_t n) {
        std::vector<std::vector<std::uint32_t>> out;
        for (const auto& v : enumerate_A(n)) out.push_back(v.entries);
        std::sort(out.begin(), out.end());
        return out;
    };
    std::vector<std::vector<std::uint32_t>> a3{{3, 0, 0}, {1, 1, 0}, {0, 0, 1}};
    std::vector<std::vector<std::uint32_t>> a4{{4, 0, 0, 0}, {2, 1, 0, 0}, {1, 0, 1, 0}, {0, 2, 0, 0}, {0, 0, 0, 1}};
    std::sort(a3.begin(), a3.end());
    std::sort(a4.begin(), a4.end());
    rec.expect_true(sets, "A_3", as_set(3) == a3);
    rec.expect_true(sets, "A_4", as_set(4) == a4);

    const std::string f = "f_{2,l} = l + 1 for l <= 4 at D = 12";
    for (std::uint32_t l = 0; l <= 4; ++l)
        rec.expect_equal(f, "l=" + std::to_string(l), ExactInt(l + 1), f_coeff_closed(FPolySpec::for_part(2, ExactInt(12)), l));

    const std::string lengths = "weight sequence lengths";
    rec.expect_equal(lengths, "seq_pp(3)", ExactInt(6), ExactInt(static_cast<std::int64_t>(seq_pp(3).length())));
    rec.expect_equal(lengths, "seq_pp_r(3,2)", ExactInt(5), ExactInt(static_cast<std::int64_t>(seq_pp_r(3, 2).length())));
    rec.expect_equal(lengths, "seq_strict(3)", ExactInt(4), ExactInt(static_cast<std::int64_t>(seq_strict(3).length())));
    rec.expect_equal(lengths, "seq_strict(4)", ExactInt(6), ExactInt(static_cast<std::int64_t>(seq_strict(4).length())));
}

void run_oracle_consistency(Recorder& rec, std::uint32_t max_n, const VerifyOptions& options) {
    for (const Case& c : structured_cases(max_n)) {
        const QuantityArgs args = args_for(c);
        const ExactInt dp = oracle_value(c.q, c.n, args);
        const auto w = weight_function_for(c.q, c.n, args);
        rec.expect_equal("euler product (negative binomial) == coin-change DP", describe(c), dp,
                         euler_product(w, c.n, ExpansionRule::negative_binomial)[c.n]);
        rec.expect_equal("euler product (repeated geometric) == coin-change DP", describe(c), dp,
                         euler_product(w, c.n, ExpansionRule::repeated_geometric)[c.n]);
    }

    EnumerationOptions eopts;
    eopts.partitioning = Partitioning{options.jobs};
    for (std::uint32_t n = 1; n <= std::min(max_n, kEnumLimit); ++n) {
        const auto diagrams = enumerate_diagrams(n, eopts);
        auto count = [&](DiagramFilter f) {
            return ExactInt(static_cast<std::int64_t>(
                std::count_if(diagrams.begin(), diagrams.end(), [&](const auto& d) { return f.accepts(d); })));
        };
        const std::string where = "n=" + std::to_string(n);
        rec.expect_equal("enumerated diagrams == pp series", where, oracle_series_value(Quantity::pp, n),
                         count(DiagramFilter::all()));
        rec.expect_equal("enumerated strict diagrams == pps series", where, oracle_series_value(Quantity::pps, n),
                         count(DiagramFilter::strict()));
        rec.expect_equal("enumerated symmetric diagrams == ppso series", where,
                         oracle_series_value(Quantity::ppso, n), count(DiagramFilter::symmetric()));
        rec.expect_equal("enumerated symmetric diagrams == enumerated strict odd-part diagrams", where,
                         count(DiagramFilter::strict_odd()), count(DiagramFilter::symmetric()));
        for (std::uint32_t r = 1; r <= n; ++r)
            rec.expect_equal("enumerated diagrams with <= r rows == pp_r series", where + " r=" + std::to_string(r),
                             oracle_series_value(Quantity::pp_r, n, QuantityArgs{r, std::nullopt}),
                             count(DiagramFilter::max_rows(r)));
    }
}

void run_cross_method(Recorder& rec, std::uint32_t max_n, const VerifyOptions& options) {
    const std::uint32_t stirling_limit = options.long_running ? 5 : 4;
    std::uint64_t guarded = 0;
    for (const Case& c : structured_cases(max_n)) {
        const ExactInt dp = oracle_value(c.q, c.n, args_for(c));
        ComputationRequest req;
        req.quantity = c.q;
        req.n = c.n;
        req.r = c.r;
        req.strict = true;
        req.long_running = options.long_running;
        req.jobs = options.jobs;
        auto check = [&](Method m) {
            req.method = m;
            rec.expect_equal(std::string(to_string(m)) + " == oracle-dp", describe(c), dp, compute(req).value);
        };
        check(Method::oracle_series);
        if (theorem_hypothesis_holds(c.q, c.n, c.r)) check(Method::theorem);
        if (c.n >= 1 && c.n <= kEnumLimit && c.q != Quantity::P_r && !(c.q == Quantity::pp_r && *c.r > c.n + 1))
            check(Method::oracle_enum);
        if (c.n <= stirling_limit && stirling_hypothesis_holds(c.q, c.n, c.r)) {
            try {
                check(Method::stirling);
            } catch (const CostGuardError&) {
                ++guarded;
            }
        }
    }
    // p_a on a few fixed part lists.
    for (const std::vector<std::uint32_t>& parts :
         {std::vector<std::uint32_t>{1, 2, 3}, {2, 3, 4}, {1, 1, 2, 2}, {3, 5, 7}}) {
        const WeightSequence a(parts);
        for (std::uint32_t n = 0; n <= std::max<std::uint32_t>(max_n, 20); ++n) {
            ComputationRequest req;
            req.quantity = Quantity::p_a;
            req.n = n;
            req.parts = parts;
            req.strict = true;
            req.jobs = options.jobs;
            const ExactInt dp = restricted_partition_dp(a, n);
            for (Method m : {Method::oracle_series, Method::stirling}) {
                req.method = m;
                rec.expect_equal(std::string(to_string(m)) + " == oracle-dp (p_a)",
                                 "quantity=p_a parts=" + a.to_string() + " n=" + std::to_string(n), dp,
                                 compute(req).value);
            }
        }
    }
    if (guarded > 0) rec.note(std::to_string(guarded) + " Stirling evaluations skipped by the cost guard");
}

void run_stirling(Recorder& rec, std::uint32_t max_n, const VerifyOptions& options) {
    StirlingOptions sopts = options.long_running ? StirlingOptions::long_running() : StirlingOptions{};
    sopts.partitioning = Partitioning{options.jobs};
    const std::vector<WeightSequence> sequences{
        WeightSequence({1, 2}), WeightSequence({1, 2, 3}), WeightSequence({2, 3, 4}),
        WeightSequence({1, 1, 2, 2}), seq_strict(4), seq_pp(3)};
    for (const auto& a : sequences) {
        const std::string name = "quantity=p_a parts=" + a.to_string();
        const auto dp = restricted_partition_table(a, 60);
        for (std::uint32_t n = 0; n <= 60; ++n)
            rec.expect_equal("per-entry residue-class expansion == DP", name + " n=" + std::to_string(n), dp[n],
                             p_a_via_teora(a, n, sopts));
    }

    const std::uint32_t top = std::min<std::uint32_t>(max_n, options.long_running ? 5 : 4);
    if (max_n > top) rec.note("regrouped wrappers capped at n = " + std::to_string(top) + " (use --long-running for n = 5)");
    std::uint64_t guarded = 0;
    auto check = [&](const std::string& name, const Case& c, const std::function<ExactInt()>& eval) {
        try {
            rec.expect_equal(name + " == oracle", describe(c), oracle_value(c.q, c.n, args_for(c)), eval());
        } catch (const CostGuardError&) {
            ++guarded;
        }
    };
    for (std::uint32_t n = 3; n <= top; ++n) {
        check("pp regrouped", {Quantity::pp, n, {}}, [&] { return pp_via_stirling(n, sopts); });
        check("pps regrouped", {Quantity::pps, n, {}}, [&] { return pps_via_stirling(n, sopts); });
        check("ppso regrouped", {Quantity::ppso, n, {}}, [&] { return ppso_via_stirling(n, sopts); });
        for (std::uint32_t r = 2; r < n; ++r) {
            check("pp_r regrouped", {Quantity::pp_r, n, r}, [&] { return ppr_via_stirling(n, r, sopts); });
            if (n >= 4) check("P_r regrouped", {Quantity::P_r, n, r}, [&] { return Pr_via_stirling(n, r, sopts); });
        }
    }
    if (guarded > 0) rec.note(std::to_string(guarded) + " regrouped evaluations skipped by the cost guard");
}

}  // namespace

std::string_view to_string(Suite s) {
    switch (s) {
        case Suite::examples: return "examples";
        case Suite::cross_method: return "cross-method";
        case Suite::oracle_consistency: return "oracle-consistency";
        case Suite::stirling: return "stirling";
    }
    return "?";
}

std::optional<Suite> parse_suite(std::string_view name) {
    for (Suite s : {Suite::examples, Suite::cross_method, Suite::oracle_consistency, Suite::stirling})
        if (to_string(s) == name) return s;
    return std::nullopt;
}

bool VerifyReport::passed() const {
    return std::all_of(outcomes.begin(), outcomes.end(), [](const CheckOutcome& o) { return o.failures == 0; });
}

VerifyReport run_verify(Suite suite, const VerifyOptions& options) {
    VerifyReport report;
    report.suite = suite;
    Recorder rec(report);
    switch (suite) {
        case Suite::examples: run_examples(rec); break;
        case Suite::oracle_consistency: run_oracle_consistency(rec, options.max_n.value_or(40), options); break;
        case Suite::cross_method: run_cross_method(rec, options.max_n.value_or(12), options); break;
        case Suite::stirling: run_stirling(rec, options.max_n.value_or(4), options); break;
    }
    return report;
}

std::string format_report(const VerifyReport& report) {
    std::ostringstream os;
    os << "suite " << to_string(report.suite) << "\n";
    for (const auto& o : report.outcomes) {
        os << (o.failures == 0 ? "  ok    " : "  FAIL  ") << o.identity << ": " << (o.checks - o.failures) << "/"
           << o.checks << " agree";
        if (o.failures > 0) os << "; first counterexample: " << o.first_counterexample;
        os << "\n";
    }
    for (const auto& note : report.notes) os << "  note: " << note << "\n";
    os << (report.passed() ? "PASSED" : "FAILED") << "\n";
    return os.str();
}

}  // namespace partcalc
