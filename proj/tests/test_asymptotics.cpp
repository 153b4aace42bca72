#include "doctest.h"

#include <vector>

#include "segner/asymptotics.hpp"

using namespace segner;

namespace {

ExactRational q(const char* text) { return ExactRational::parse(text); }

// √π/4 = 0.443113462726379006... (mpmath)
const CertifiedInterval kRootPiOver4(q("443113462726379006/1000000000000000000"),
                                     q("443113462726379007/1000000000000000000"));

}  // namespace

TEST_CASE("power of two grid") {
    CHECK(power_of_two_grid(1, 10) == std::vector<std::uint64_t>{1, 2, 4, 8, 10});
    CHECK(power_of_two_grid(512, 4096) == std::vector<std::uint64_t>{512, 1024, 2048, 4096});
    CHECK(power_of_two_grid(5, 5) == std::vector<std::uint64_t>{5});
    CHECK_THROWS_AS(power_of_two_grid(0, 4), std::invalid_argument);
}

TEST_CASE("stable decimal") {
    CHECK(stable_decimal(CertifiedInterval::point(q("1/4")), 6) == "0.250000");
    CHECK(stable_decimal(CertifiedInterval(q("31415/10000"), q("31416/10000")), 6) == "3.141...");
    CHECK(stable_decimal(CertifiedInterval(q("1/3"), q("1/3") + q("1/1000000000")), 5) == "0.33333");
}

TEST_CASE("radius samples") {
    const std::vector<std::uint64_t> points{1, 10, 100, 1000};
    const auto samples = estimate_radius(points, kDefaultPrecisionBits);
    REQUIRE(samples.size() == 4);
    CHECK(samples[0].root.contains(q("1")));
    CHECK(samples[3].root.lo() > q("394/100"));
    CHECK(samples[3].root.hi() < q("397/100"));
    for (std::size_t i = 1; i < samples.size(); ++i) {
        CHECK(samples[i].root.lo() > samples[i - 1].root.hi());
        CHECK(samples[i].root.hi() < q("4"));
        CHECK(samples[i].root.width() < q("1/1000000000000000000000000000000"));
    }
    // 16796^(1/10) = 2.6455780984... (mpmath)
    CHECK(stable_decimal(samples[1].root, 8) == "2.64557809");
    CHECK_THROWS_AS(estimate_radius(std::vector<std::uint64_t>{0}, 64), std::invalid_argument);
    CHECK_THROWS_AS(estimate_radius(std::uint64_t{9}, 64), std::invalid_argument);
    CHECK(estimate_radius(std::uint64_t{64}, 64).front().n == 1);
}

TEST_CASE("stirling ratio") {
    const std::vector<std::uint64_t> points{1, 10, 100, 1000};
    const auto rows = stirling_ratio(points, kDefaultPrecisionBits);
    REQUIRE(rows.size() == 4);
    CHECK(rows[0].ratio.subset_of(kRootPiOver4));
    CHECK(rows[3].ratio.lo() > q("998/1000"));
    CHECK(rows[3].ratio.hi() < q("1"));
    for (std::size_t i = 1; i < rows.size(); ++i) CHECK(rows[i].ratio.lo() > rows[i - 1].ratio.hi());
    // The ratio is 1 - 9/(8n) + 145/(128n^2) + O(n^-3).
    const ExactRational predicted = ExactRational(1) - q("9/8000") + q("145/128000000");
    CHECK((rows[3].ratio.midpoint() - predicted).abs() < q("1/100000000"));
}

TEST_CASE("critical exponent fit") {
    const FitResult fit = fit_r0(512, 4096);
    CHECK(fit.samples == 4);
    CHECK(fit.slope > 1.49);
    CHECK(fit.slope < 1.51);
    CHECK(fit.intercept > 0.5);
    CHECK(fit.intercept < 0.65);
    CHECK(fit.residual_max < 1e-3);

    const std::vector<std::uint64_t> pair{2048, 4096};
    const FitResult two = fit_r0(pair);
    CHECK(two.samples == 2);
    CHECK(std::abs(two.slope - 1.5) < 0.05);
    // Larger n moves the slope toward 3/2.
    CHECK(std::abs(two.slope - 1.5) < std::abs(fit_r0(16, 128).slope - 1.5));

    CHECK_THROWS_AS(fit_r0(1, 100), std::invalid_argument);
    CHECK_THROWS_AS(fit_r0(100, 100), std::invalid_argument);
    CHECK_THROWS_AS(fit_r0(std::vector<std::uint64_t>{64, 64}), std::invalid_argument);
}

TEST_CASE("precision does not move stable digits") {
    const std::vector<std::uint64_t> points{777};
    const auto coarse = estimate_radius(points, 128);
    const auto fine = estimate_radius(points, 256);
    CHECK(fine[0].root.width() < coarse[0].root.width());
    const std::string a = stable_decimal(coarse[0].root, 20);
    const std::string b = stable_decimal(fine[0].root, 20);
    const std::string a_digits = a.substr(0, a.find("..."));
    CHECK(b.rfind(a_digits, 0) == 0);

    const FitResult f128 = fit_r0(256, 2048, 128);
    const FitResult f256 = fit_r0(256, 2048, 256);
    CHECK(std::abs(f128.slope - f256.slope) < 1e-12);
}

TEST_CASE("limit table") {
    const std::vector<std::uint64_t> points{37, 100, 1000, 10'000};
    const auto rows = limit_convergence_table(points, limit_constant_bracket(100'000));
    REQUIRE(rows.size() == 4);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        CHECK(rows[i].distance.lo() > 0);
        if (i > 0) CHECK(rows[i].distance.hi() < rows[i - 1].distance.lo());
    }
    // Reference distances from mpmath: 0.70803..., 0.0047737...
    CHECK(rows[0].distance.lo() > q("7/10"));
    CHECK(rows[0].distance.hi() < q("71/100"));
    CHECK(rows[3].distance.lo() > q("4773/1000000"));
    CHECK(rows[3].distance.hi() < q("4774/1000000"));
    CHECK_THROWS_AS(limit_convergence_table(std::vector<std::uint64_t>{3}, CertifiedInterval::point(5)),
                    std::invalid_argument);
}

TEST_CASE("exponent probe drifts on either side of 3/2") {
    const std::vector<std::uint64_t> points{64, 256, 1024, 4096};
    const auto below = exponent_probe(q("7/5"), 4, points, kDefaultPrecisionBits);
    const auto above = exponent_probe(q("8/5"), 4, points, kDefaultPrecisionBits);
    for (std::size_t i = 1; i < points.size(); ++i) {
        CHECK(below[i].log_ratio.hi() < below[i - 1].log_ratio.lo());
        CHECK(above[i].log_ratio.lo() > above[i - 1].log_ratio.hi());
    }
    // With M = 6 the r = 2 ratio never rises above 0 (C_n n^2 <= 6^n).
    const auto six = exponent_probe(q("2"), 6, points, kDefaultPrecisionBits);
    for (const auto& row : six) CHECK(row.log_ratio.hi() < 0);
}
