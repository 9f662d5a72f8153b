#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <string>
#include <sys/wait.h>

#include "partcalc/dispatch.hpp"
#include "partcalc/render.hpp"
#include "partcalc/verify.hpp"

using namespace partcalc;

namespace {

struct Run {
    int status;
    std::string out;
};

// Runs the CLI with stderr discarded.
Run run(const std::string& args) {
    const std::string cmd = std::string(PARTCALC_BIN) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    std::array<char, 4096> buf;
    while (std::size_t got = fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), got);
    const int raw = pclose(pipe);
    return {WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, out};
}

ComputationRequest request(Quantity q, std::uint32_t n, std::optional<std::uint32_t> r = std::nullopt,
                           Method m = Method::auto_select) {
    ComputationRequest req;
    req.quantity = q;
    req.n = n;
    req.r = r;
    req.method = m;
    return req;
}

}  // namespace

TEST_CASE("dispatch picks the formula when it applies") {
    auto res = compute(request(Quantity::pp, 3));
    CHECK(res.method == Method::theorem);
    CHECK(res.value == ExactInt(6));
    res = compute(request(Quantity::pp, 2));
    CHECK(res.method == Method::oracle_dp);
    CHECK(res.value == ExactInt(3));
    // The A_n formula is off at (4, 3), so auto goes to the DP.
    res = compute(request(Quantity::P_r, 4, 3));
    CHECK(res.method == Method::oracle_dp);
    CHECK(res.value == ExactInt(51));
    res = compute(request(Quantity::P_r, 4, 3, Method::theorem));
    CHECK(res.value == ExactInt(48));
    CHECK_FALSE(res.notes.empty());
}

TEST_CASE("fallbacks and strictness") {
    auto req = request(Quantity::pp, 2, std::nullopt, Method::theorem);
    auto res = compute(req);
    CHECK(res.method == Method::oracle_dp);
    CHECK(res.notes.size() == 1);
    req.strict = true;
    CHECK_THROWS_AS(compute(req), UsageError);
    req = request(Quantity::P_r, 4, 2, Method::oracle_enum);
    CHECK(compute(req).method == Method::oracle_dp);
    req.strict = true;
    CHECK_THROWS_AS(compute(req), UsageError);
    res = compute(request(Quantity::pp_r, 5, 7, Method::theorem));
    CHECK(res.method == Method::theorem);
    CHECK(res.value == ExactInt(24));
}

TEST_CASE("request validation") {
    CHECK_THROWS_AS(compute(request(Quantity::pp_r, 4)), UsageError);
    CHECK_THROWS_AS(compute(request(Quantity::pp, 4, 2)), UsageError);
    CHECK_THROWS_AS(compute(request(Quantity::P_r, 4, 0)), UsageError);
    CHECK_THROWS_AS(compute(request(Quantity::p_a, 4)), UsageError);
    auto req = request(Quantity::p_a, 4);
    req.parts = std::vector<std::uint32_t>{1, 0};
    CHECK_THROWS_AS(compute(req), UsageError);
    req.parts = std::vector<std::uint32_t>{1, 2, 3};
    req.n = 6;
    req.method = Method::stirling;
    CHECK(compute(req).value == ExactInt(7));
}

TEST_CASE("all applicable methods agree") {
    for (Quantity q : {Quantity::pp, Quantity::pps, Quantity::ppso})
        for (std::uint32_t n = 0; n <= 8; ++n) {
            const ExactInt want = compute(request(q, n, std::nullopt, Method::oracle_dp)).value;
            for (Method m : {Method::oracle_series, Method::theorem, Method::auto_select}) {
                auto req = request(q, n, std::nullopt, m);
                req.strict = true;
                if (m == Method::theorem && !theorem_hypothesis_holds(q, n, std::nullopt)) continue;
                CHECK(compute(req).value == want);
            }
        }
}

TEST_CASE("render round trips") {
    std::vector<TableRow> rows;
    for (std::uint32_t n = 0; n <= 12; ++n) rows.push_back(TableRow::from(compute(request(Quantity::P_r, n, 3))));
    for (Format f : {Format::json, Format::csv}) {
        const std::string text = render_table(rows, f);
        CHECK(render_table(parse_table(text, f), f) == text);
    }
    CHECK(parse_table(render_table(rows, Format::json), Format::json) == rows);
    CHECK(render_table({rows[3]}, Format::csv) == "n,value\n3,22\n");
    CHECK(render_result(compute(request(Quantity::pp, 3)), Format::plain) == "pp(3) = 6 [method=theorem]\n");
    CHECK(render_result(compute(request(Quantity::P_r, 4, 2)), Format::json) ==
          "{\"quantity\":\"P_r\",\"n\":4,\"r\":2,\"method\":\"theorem\",\"value\":\"20\"}\n");
    CHECK_THROWS_AS(parse_table("[{\"n\":1}", Format::json), std::invalid_argument);
    CHECK_THROWS_AS(parse_table("n,val\n", Format::csv), std::invalid_argument);
    CHECK_THROWS_AS(parse_table("n,value\n1,2,3\n", Format::csv), std::invalid_argument);
    CHECK_THROWS_AS(parse_table("n,value\n1,x\n", Format::csv), std::invalid_argument);
    CHECK(parse_format("csv") == Format::csv);
    CHECK_FALSE(parse_format("xml").has_value());
    CHECK(parse_method("oracle-enum") == Method::oracle_enum);
    CHECK(parse_suite("cross-method") == Suite::cross_method);
}

TEST_CASE("examples suite passes") {
    const auto report = run_verify(Suite::examples);
    CHECK(report.passed());
    CHECK(format_report(report).find("FAIL") == std::string::npos);
}

TEST_CASE("binary: outputs") {
    auto r = run("compute --quantity pp --n 3 --method theorem");
    CHECK(r.status == 0);
    CHECK(r.out == "pp(3) = 6 [method=theorem]\n");
    r = run("compute --quantity p_a --parts 1,2,3 --n 6 --method stirling --format csv");
    CHECK(r.status == 0);
    CHECK(r.out == "n,value\n6,7\n");
    r = run("table --quantity pp --from 0 --to 8 --format csv");
    CHECK(r.out == "n,value\n0,1\n1,1\n2,3\n3,6\n4,13\n5,24\n6,48\n7,86\n8,160\n");
    r = run("table --quantity pps --from 0 --to 4 --jobs 3");
    CHECK(r.out == "0 1\n1 1\n2 2\n3 4\n4 7\n");
    r = run("table --quantity P_r --r 2 --from 0 --to 5 --format json");
    CHECK(r.status == 0);
    CHECK(parse_table(r.out, Format::json).size() == 6);
    CHECK(parse_table(r.out, Format::json)[5].value == ExactInt(36));
}

TEST_CASE("binary: exit codes") {
    CHECK(run("compute --quantity pp --n 3").status == 0);
    CHECK(run("compute --quantity pp_r --n 3").status == 1);
    CHECK(run("compute --quantity nope --n 3").status == 1);
    CHECK(run("compute --quantity pp --n -3").status == 1);
    CHECK(run("compute --quantity pp --n 2 --method theorem --strict").status == 1);
    CHECK(run("compute --quantity pp --n 2 --method theorem").status == 0);
    CHECK(run("table --quantity pp --from 5 --to 2").status == 1);
    CHECK(run("frobnicate").status == 1);
    CHECK(run("--help").status == 0);
    CHECK(run("compute --quantity pp --n 5 --method stirling --strict").status == 3);
    CHECK(run("compute --quantity P_r --n 5 --r 4 --method stirling --strict --long-running").status == 3);
    CHECK(run("verify --suite examples").status == 0);
    CHECK(run("verify --suite nope").status == 1);
    // The multipartition formula is off at (4, 3); the suite must say so.
    const auto cross = run("verify --suite cross-method --max-n 5");
    CHECK(cross.status == 2);
    CHECK(cross.out.find("quantity=P_r n=4 r=3 expected=51 got=48") != std::string::npos);
}
