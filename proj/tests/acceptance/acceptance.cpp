// Acceptance run: one PASS/FAIL line per criterion. All comparisons are exact;
// each criterion also has a wall-clock budget.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "partcalc/coefficients.hpp"
#include "partcalc/diagrams.hpp"
#include "partcalc/dispatch.hpp"
#include "partcalc/series.hpp"
#include "partcalc/stirling_formula.hpp"

using namespace partcalc;

namespace {

class Criterion {
public:
    explicit Criterion(std::string title) : title_(std::move(title)) {}

    void equal(const std::string& where, const ExactInt& expected, const ExactInt& got) {
        ++checks_;
        if (expected == got) return;
        if (failures_++ < 5) examples_.push_back(where + " expected=" + expected.to_string() + " got=" + got.to_string());
    }

    void holds(const std::string& where, bool ok) {
        ++checks_;
        if (!ok && failures_++ < 5) examples_.push_back(where);
    }

    // Runs `body`, catching anything it throws as a failed check.
    void run(const std::string& where, const std::function<void()>& body) {
        try {
            body();
        } catch (const std::exception& e) {
            ++checks_;
            if (failures_++ < 5) examples_.push_back(where + " threw: " + e.what());
        }
    }

    bool report(double seconds, double budget) const {
        const bool ok = failures_ == 0 && seconds < budget;
        std::printf("%s  %s  [%llu checks, %llu mismatches, %.2f s of %.0f s]\n", ok ? "PASS" : "FAIL", title_.c_str(),
                    static_cast<unsigned long long>(checks_), static_cast<unsigned long long>(failures_), seconds,
                    budget);
        for (const auto& e : examples_) std::printf("      %s\n", e.c_str());
        if (failures_ > examples_.size())
            std::printf("      ... %llu more\n", static_cast<unsigned long long>(failures_ - examples_.size()));
        if (seconds >= budget) std::printf("      over the time budget\n");
        std::fflush(stdout);
        return ok;
    }

private:
    std::string title_;
    std::uint64_t checks_ = 0, failures_ = 0;
    std::vector<std::string> examples_;
};

std::string at(Quantity q, std::uint32_t n, std::optional<std::uint32_t> r = std::nullopt) {
    std::string s = "quantity=" + std::string(to_string(q)) + " n=" + std::to_string(n);
    if (r) s += " r=" + std::to_string(*r);
    return s;
}

ExactInt oracle(Quantity q, std::uint32_t n, std::optional<std::uint32_t> r = std::nullopt) {
    return oracle_value(q, n, QuantityArgs{r, std::nullopt});
}

ExactInt count(std::size_t v) { return ExactInt(static_cast<std::int64_t>(v)); }

void criterion_1(Criterion& c) {
    auto via = [](Quantity q, std::uint32_t n, std::optional<std::uint32_t> r, Method m) {
        ComputationRequest req;
        req.quantity = q;
        req.n = n;
        req.r = r;
        req.method = m;
        req.strict = true;
        return compute(req).value;
    };
    for (Method m : {Method::oracle_dp, Method::oracle_series, Method::oracle_enum, Method::theorem, Method::stirling})
        c.equal("pp(3) via " + std::string(to_string(m)), 6, via(Quantity::pp, 3, {}, m));
    for (Method m : {Method::oracle_dp, Method::oracle_enum}) {
        c.equal("pp_1(3)", 3, via(Quantity::pp_r, 3, 1, m));
        c.equal("pp_2(3)", 5, via(Quantity::pp_r, 3, 2, m));
        c.equal("pp_3(3)", 6, via(Quantity::pp_r, 3, 3, m));
    }
    c.equal("pp_2(3) via theorem", 5, via(Quantity::pp_r, 3, 2, Method::theorem));
    for (Method m : {Method::oracle_dp, Method::theorem, Method::stirling}) {
        c.equal("pps(3) via " + std::string(to_string(m)), 4, via(Quantity::pps, 3, {}, m));
        c.equal("ppso(3) via " + std::string(to_string(m)), 3, via(Quantity::ppso, 3, {}, m));
        c.equal("P_2(4) via " + std::string(to_string(m)), 20, via(Quantity::P_r, 4, 2, m));
    }
    const std::vector<std::vector<std::uint32_t>> a3{{0, 0, 1}, {1, 1, 0}, {3, 0, 0}};
    const std::vector<std::vector<std::uint32_t>> a4{{0, 0, 0, 1}, {1, 0, 1, 0}, {0, 2, 0, 0}, {2, 1, 0, 0}, {4, 0, 0, 0}};
    auto entries = [](std::uint32_t n) {
        std::vector<std::vector<std::uint32_t>> out;
        for (const auto& v : enumerate_A(n)) out.push_back(v.entries);
        return out;
    };
    c.holds("A_3 listing", entries(3) == a3);
    c.holds("A_4 listing", entries(4) == a4);
}

void criterion_2(Criterion& c) {
    for (std::uint32_t n = 0; n <= 40; ++n) {
        std::vector<std::pair<Quantity, std::optional<std::uint32_t>>> cases{
            {Quantity::p, {}}, {Quantity::pp, {}}, {Quantity::pps, {}}, {Quantity::ppso, {}}};
        for (std::uint32_t r = 1; r <= 6; ++r) {
            cases.push_back({Quantity::pp_r, r});
            cases.push_back({Quantity::P_r, r});
        }
        for (auto [q, r] : cases) {
            const QuantityArgs args{r, std::nullopt};
            const ExactInt dp = oracle_value(q, n, args);
            const auto w = weight_function_for(q, n, args);
            c.equal(at(q, n, r) + " negative-binomial", dp, euler_product(w, n, ExpansionRule::negative_binomial)[n]);
            c.equal(at(q, n, r) + " geometric", dp, euler_product(w, n, ExpansionRule::repeated_geometric)[n]);
        }
    }
}

void criterion_3(Criterion& c) {
    for (std::uint32_t n = 1; n <= 8; ++n) {
        const auto ds = enumerate_diagrams(n);
        auto filtered = [&](DiagramFilter f) {
            std::size_t k = 0;
            for (const auto& d : ds) k += f.accepts(d);
            return count(k);
        };
        c.equal("all " + at(Quantity::pp, n), oracle_series_value(Quantity::pp, n), filtered(DiagramFilter::all()));
        c.equal("strict " + at(Quantity::pps, n), oracle_series_value(Quantity::pps, n),
                filtered(DiagramFilter::strict()));
        c.equal("symmetric " + at(Quantity::ppso, n), oracle_series_value(Quantity::ppso, n),
                filtered(DiagramFilter::symmetric()));
        c.equal("symmetric vs strict odd-part n=" + std::to_string(n), filtered(DiagramFilter::strict_odd()),
                filtered(DiagramFilter::symmetric()));
        for (std::uint32_t r = 1; r <= n; ++r)
            c.equal("max_rows " + at(Quantity::pp_r, n, r),
                    oracle_series_value(Quantity::pp_r, n, QuantityArgs{r, std::nullopt}),
                    filtered(DiagramFilter::max_rows(r)));
    }
}

void criterion_4(Criterion& c) {
    for (std::uint32_t n = 3; n <= 30; ++n) {
        c.run(at(Quantity::pp, n), [&] { c.equal(at(Quantity::pp, n), oracle(Quantity::pp, n), pp_via_formu(n)); });
        c.run(at(Quantity::pps, n), [&] { c.equal(at(Quantity::pps, n), oracle(Quantity::pps, n), pps_via_formu3(n)); });
        c.run(at(Quantity::ppso, n),
              [&] { c.equal(at(Quantity::ppso, n), oracle(Quantity::ppso, n), ppso_via_formu4(n)); });
        for (std::uint32_t r = 2; r < n; ++r)
            c.run(at(Quantity::pp_r, n, r), [&] {
                c.equal(at(Quantity::pp_r, n, r), oracle(Quantity::pp_r, n, r), ppr_via_formu2(n, r));
            });
    }
    for (std::uint32_t n = 4; n <= 20; ++n)
        for (std::uint32_t r = 2; r < n; ++r)
            c.run(at(Quantity::P_r, n, r), [&] {
                c.equal(at(Quantity::P_r, n, r) + " A_n formula", oracle(Quantity::P_r, n, r), Pr_via_formu5(n, r));
            });
    const auto pr = pr_from_oracle();
    for (std::uint32_t n = 0; n <= 25; ++n)
        for (std::uint32_t r = 1; r <= 6; ++r) {
            c.run(at(Quantity::pp_r, n, r), [&] {
                c.equal(at(Quantity::pp_r, n, r) + " multipartition expansion", oracle(Quantity::pp_r, n, r),
                        ppr_via_multipartitions(n, r, pr));
            });
            if (n >= 4 && r >= 2 && n > r)
                c.run(at(Quantity::pp_r, n, r), [&] {
                    c.equal(at(Quantity::pp_r, n, r) + " corollary", oracle(Quantity::pp_r, n, r),
                            ppr_via_corollary(n, r));
                });
        }
}

void criterion_5(Criterion& c) {
    const std::vector<WeightSequence> seqs{WeightSequence({1, 2}),       WeightSequence({1, 2, 3}),
                                           WeightSequence({2, 3, 4}),    WeightSequence({1, 1, 2, 2}),
                                           seq_strict(4),                seq_pp(3)};
    for (const auto& a : seqs) {
        const auto dp = restricted_partition_table(a, 60);
        for (std::uint32_t n = 0; n <= 60; ++n) {
            const std::string where = "quantity=p_a parts=" + a.to_string() + " n=" + std::to_string(n);
            c.run(where, [&] {
                const auto detail = p_a_via_teora_detailed(a, n);
                c.equal(where, dp[n], detail.value);
                c.holds(where + " integrality", detail.unnormalized.is_integer());
            });
        }
    }
    for (std::uint32_t n = 3; n <= 4; ++n) {
        c.run(at(Quantity::pp, n), [&] { c.equal(at(Quantity::pp, n), oracle(Quantity::pp, n), pp_via_stirling(n)); });
        c.run(at(Quantity::pps, n),
              [&] { c.equal(at(Quantity::pps, n), oracle(Quantity::pps, n), pps_via_stirling(n)); });
        c.run(at(Quantity::ppso, n),
              [&] { c.equal(at(Quantity::ppso, n), oracle(Quantity::ppso, n), ppso_via_stirling(n)); });
    }
    for (auto [n, r] : {std::pair{3u, 2u}, {4u, 2u}, {4u, 3u}}) {
        c.run(at(Quantity::pp_r, n, r), [&] {
            c.equal(at(Quantity::pp_r, n, r), oracle(Quantity::pp_r, n, r), ppr_via_stirling(n, r));
        });
        if (n >= 4)
            c.run(at(Quantity::P_r, n, r), [&] {
                c.equal(at(Quantity::P_r, n, r), oracle(Quantity::P_r, n, r), Pr_via_stirling(n, r));
            });
    }
}

void criterion_6(Criterion& c) {
    for (std::uint32_t D : {6u, 12u, 60u})
        for (std::uint32_t s = 1; s <= 6; ++s) {
            if (D % s) continue;
            const auto spec = FPolySpec::for_part(s, ExactInt(D));
            const auto direct = f_coeffs_direct(spec);
            const std::uint64_t deg = spec.degree().to_uint64();
            const std::string where = "D=" + std::to_string(D) + " s=" + std::to_string(s);
            ExactInt mass(0);
            for (std::uint64_t i = 0; i <= deg; ++i) {
                c.equal(where + " reciprocity i=" + std::to_string(i), direct[i], direct[deg - i]);
                c.equal(where + " closed form i=" + std::to_string(i), direct[i], f_coeff_closed(spec, i));
                mass += direct[i];
            }
            c.equal(where + " total", ExactInt(D / s).pow(s), mass);
        }
    for (std::uint32_t n = 1; n <= 40; ++n) c.equal("#A_n n=" + std::to_string(n), oracle(Quantity::p, n), count(enumerate_A(n).size()));
}

void criterion_7(Criterion& c) {
    for (std::size_t slices : {2u, 8u}) {
        const std::string where = " slices=" + std::to_string(slices);
        const TheoremOptions t{Partitioning{slices}};
        c.equal("pp A_n sum n=24" + where, pp_via_formu(24), pp_via_formu(24, t));
        c.equal("pp_r A_n sum n=20 r=4" + where, ppr_via_formu2(20, 4), ppr_via_formu2(20, 4, t));
        c.equal("pps A_n sum n=22" + where, pps_via_formu3(22), pps_via_formu3(22, t));
        c.equal("ppso A_n sum n=22" + where, ppso_via_formu4(22), ppso_via_formu4(22, t));
        c.equal("P_r A_n sum n=16 r=3" + where, Pr_via_formu5(16, 3), Pr_via_formu5(16, 3, t));
        c.equal("P_r corollary n=14 r=3" + where, ppr_via_corollary(14, 3), ppr_via_corollary(14, 3, t));

        StirlingOptions s;
        s.partitioning = Partitioning{slices};
        c.equal("pp regrouped n=4" + where, pp_via_stirling(4), pp_via_stirling(4, s));
        c.equal("P_r regrouped n=4 r=3" + where, Pr_via_stirling(4, 3), Pr_via_stirling(4, 3, s));
        for (std::uint32_t n : {17u, 60u})
            c.equal("p_a strict(4) n=" + std::to_string(n) + where, p_a_via_teora(seq_strict(4), n),
                    p_a_via_teora(seq_strict(4), n, s));

        const EnumerationOptions e{10, Partitioning{slices}};
        c.holds("diagrams n=8" + where, enumerate_diagrams(8) == enumerate_diagrams(8, e));
    }
}

}  // namespace

int main() {
    struct Entry {
        const char* title;
        double budget;
        void (*body)(Criterion&);
    };
    const Entry entries[] = {
        {"criterion 1: worked examples", 1, criterion_1},
        {"criterion 2: Euler product == DP, 0 <= n <= 40", 10, criterion_2},
        {"criterion 3: diagram enumeration == series, 1 <= n <= 8", 120, criterion_3},
        {"criterion 4: A_n formulas and multipartition expansion == oracle", 300, criterion_4},
        {"criterion 5: residue-class Stirling formulas == oracle", 300, criterion_5},
        {"criterion 6: f-coefficient properties and #A_n = p(n)", 10, criterion_6},
        {"criterion 7: results independent of 1/2/8-way slicing", 300, criterion_7},
    };
    int failed = 0;
    for (const auto& entry : entries) {
        Criterion c(entry.title);
        const auto start = std::chrono::steady_clock::now();
        c.run(entry.title, [&] { entry.body(c); });
        const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        failed += !c.report(seconds, entry.budget);
    }
    std::printf("%d of 7 criteria failed\n", failed);
    return failed == 0 ? 0 : 1;
}
