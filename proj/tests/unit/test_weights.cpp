#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stdexcept>

#include "partcalc/weights.hpp"

using namespace partcalc;

TEST_CASE("weight functions") {
    const auto pp = WeightFunction::plane(5);
    CHECK(pp.bound() == 5);
    CHECK(pp.weight(0) == 0);
    CHECK(pp.weight(4) == 4);
    CHECK(pp.weight(6) == 0);
    const auto rows = WeightFunction::plane_rows(6, 2);
    CHECK(rows.weight(1) == 1);
    CHECK(rows.weight(5) == 2);
    const auto strict = WeightFunction::plane_strict(6);
    for (std::uint32_t k = 1; k <= 6; ++k) CHECK(strict.weight(k) == (k + 1) / 2);
    const auto sym = WeightFunction::plane_symmetric(8);
    const std::uint32_t lambda[] = {1, 1, 1, 2, 1, 3, 1, 4};
    for (std::uint32_t k = 1; k <= 8; ++k) CHECK(sym.weight(k) == lambda[k - 1]);
    CHECK(WeightFunction::multipartition(4, 3).weight(4) == 3);
    CHECK(WeightFunction::ordinary(4).weight(2) == 1);
    CHECK_THROWS_AS(WeightFunction::plane_rows(3, 0), std::invalid_argument);
    CHECK_THROWS_AS(WeightFunction(3, {1, 2}), std::invalid_argument);
}

TEST_CASE("weight sequences") {
    const WeightSequence a({3, 1, 2, 2});
    CHECK(a.parts() == std::vector<std::uint32_t>{1, 2, 2, 3});
    CHECK(a.multiplicity(2) == 2);
    CHECK(a.multiplicity(4) == 0);
    CHECK(a.lcm() == ExactInt(6));
    CHECK(a.max_part() == 3);
    CHECK(a.to_string() == "(1,2,2,3)");
    CHECK(a.compressed().size() == 3);
    CHECK(WeightSequence::from_function(a.to_function()).parts() == a.parts());
    CHECK_THROWS_AS(WeightSequence({}), std::invalid_argument);
    CHECK_THROWS_AS(WeightSequence({1, 0}), std::invalid_argument);
}

TEST_CASE("structured sequences") {
    CHECK(seq_pp(3).parts() == std::vector<std::uint32_t>{1, 2, 2, 3, 3, 3});
    CHECK(seq_pp_r(3, 2).parts() == std::vector<std::uint32_t>{1, 2, 2, 3, 3});
    CHECK(seq_strict(4).parts() == std::vector<std::uint32_t>{1, 2, 3, 3, 4, 4});
    CHECK(seq_multipartition(3, 2).length() == 6);
    CHECK(seq_ordinary(5).length() == 5);
    CHECK(seq_symmetric(4).parts() == std::vector<std::uint32_t>{1, 2, 3, 4, 4});
    // Sum of the weights 1..n.
    for (std::uint32_t n = 1; n <= 12; ++n) {
        CHECK(seq_pp(n).length() == n * (n + 1) / 2);
        CHECK(seq_pp(n).lcm() == lcm_range(n));
    }
    CHECK_THROWS_AS(seq_pp(0), std::invalid_argument);
    CHECK_THROWS_AS(seq_strict(0), std::invalid_argument);
    CHECK_THROWS_AS(seq_multipartition(0, 2), std::invalid_argument);
}
