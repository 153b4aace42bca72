#pragma once

/**
 * @file asymptotics.hpp
 * @brief Empirical growth measurements of the Catalan numbers.
 *
 * Catalan values come from Segner's recursion; nothing here uses the closed
 * form. Logarithms of big integers go through ln_bracket (binary exponent
 * plus atanh series on the mantissa), and the few remaining transcendental
 * steps (exp, sqrt, π) run in MPFR with directed rounding, so every
 * reported quantity is a CertifiedInterval. `stable_decimal` prints only the
 * digits on which both endpoints agree.
 *
 * The least-squares fit for the critical exponent is the one place where
 * results are estimates rather than brackets.
 */

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "segner/exactnum.hpp"

namespace segner {

inline constexpr unsigned kDefaultPrecisionBits = 256;

/// Powers of two inside [lo, hi], together with lo and hi themselves.
std::vector<std::uint64_t> power_of_two_grid(std::uint64_t lo, std::uint64_t hi);

/// Truncated decimal carrying only digits shared by both endpoints, at most
/// max_digits after the point. Ends in "..." when digits were dropped.
std::string stable_decimal(const CertifiedInterval& value, std::size_t max_digits);

/// Bracket for ln C_n.
CertifiedInterval ln_catalan(const ExactInt& catalan, unsigned precision_bits);

struct RadiusSample {
    std::uint64_t n;
    CertifiedInterval root;  // contains C_n^(1/n)
};

/// C_n^(1/n) at each point (n >= 1); tends to 1/R = 4.
std::vector<RadiusSample> estimate_radius(std::span<const std::uint64_t> n_points, unsigned precision_bits);
/// Default grid: 1 and the powers of two up to max_n, plus max_n. max_n >= 10.
std::vector<RadiusSample> estimate_radius(std::uint64_t max_n, unsigned precision_bits);

struct LimitRow {
    std::uint64_t n;
    ExactRational g;
    /// g(n) minus the limit bracket for 2 + π²/3: [g - hi, g - lo].
    CertifiedInterval distance;
};

/// g(n) and its distance to 2 + π²/3 at each point (n >= 4).
std::vector<LimitRow> limit_convergence_table(std::span<const std::uint64_t> n_points,
                                              std::uint64_t bracket_terms = kDefaultZetaTerms);
/// Same, against a bracket the caller already has.
std::vector<LimitRow> limit_convergence_table(std::span<const std::uint64_t> n_points,
                                              const CertifiedInterval& limit);

struct StirlingRow {
    std::uint64_t n;
    CertifiedInterval ratio;  // contains C_n·√π·n^(3/2) / 4^n
};

std::vector<StirlingRow> stirling_ratio(std::span<const std::uint64_t> n_points, unsigned precision_bits);

struct FitResult {
    double slope;
    double intercept;
    std::string slope_decimal;
    std::string intercept_decimal;
    std::uint64_t n_min;
    std::uint64_t n_max;
    std::size_t samples;
    double residual_max;
};

/// Least squares of y(n) = ln(4^n / C_n) on ln n over power_of_two_grid.
/// Slope estimates the critical exponent 3/2, intercept ln √π.
/// Throws std::invalid_argument unless 2 <= n_min < n_max.
FitResult fit_r0(std::uint64_t n_min, std::uint64_t n_max, unsigned precision_bits = kDefaultPrecisionBits);
/// Fit over explicit points (at least two distinct, each >= 2).
FitResult fit_r0(std::span<const std::uint64_t> n_points, unsigned precision_bits = kDefaultPrecisionBits);

struct ExponentProbeRow {
    std::uint64_t n;
    CertifiedInterval log_ratio;  // contains ln(C_n·n^r / M^n)
};

/// ln(C_n·n^r / M^n) over the given points for a rational exponent r.
/// With M = 4 the sequence drifts down for r < 3/2 and up for r > 3/2.
std::vector<ExponentProbeRow> exponent_probe(const ExactRational& r, std::uint64_t M,
                                             std::span<const std::uint64_t> n_points, unsigned precision_bits);

}  // namespace segner
