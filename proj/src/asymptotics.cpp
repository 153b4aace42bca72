#include "segner/asymptotics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "segner/bigfloat.hpp"
#include "segner/bounds.hpp"
#include "segner/catalan.hpp"

namespace segner {

namespace {

ExactInt to_int(std::uint64_t v) { return ExactInt(mpz_class(static_cast<unsigned long>(v))); }

std::uint64_t largest(std::span<const std::uint64_t> points) {
    return points.empty() ? 0 : *std::max_element(points.begin(), points.end());
}

// Guard bits absorb the binary exponent multiplying ln 2.
unsigned working_bits(unsigned precision_bits) { return precision_bits + 64; }
unsigned series_terms(unsigned bits) { return bits / 3 + 8; }

CertifiedInterval ln_integer(std::uint64_t v, unsigned precision_bits) {
    const unsigned bits = working_bits(precision_bits);
    return ln_bracket(CertifiedInterval::point(ExactRational(to_int(v))), series_terms(bits), bits);
}

CertifiedInterval to_interval(const BigFloat& lo, const BigFloat& hi) { return {lo.to_rational(), hi.to_rational()}; }

}  // namespace

std::vector<std::uint64_t> power_of_two_grid(std::uint64_t lo, std::uint64_t hi) {
    if (lo == 0 || lo > hi) throw std::invalid_argument("power_of_two_grid: need 1 <= lo <= hi");
    std::vector<std::uint64_t> grid{lo};
    for (std::uint64_t p = 1; p <= hi && p != 0; p *= 2) {
        if (p > lo && p < hi) grid.push_back(p);
    }
    if (hi != lo) grid.push_back(hi);
    return grid;
}

std::string stable_decimal(const CertifiedInterval& value, std::size_t max_digits) {
    // Truncation is monotone, so digits shared by both endpoints are shared
    // by every point in between.
    std::size_t digits = max_digits;
    while (true) {
        const std::string lo = value.lo().to_decimal(digits);
        if (lo == value.hi().to_decimal(digits)) return digits < max_digits ? lo + "..." : lo;
        if (digits == 0) return "~" + lo;
        --digits;
    }
}

CertifiedInterval ln_catalan(const ExactInt& catalan, unsigned precision_bits) {
    const unsigned bits = working_bits(precision_bits);
    return ln_bracket(CertifiedInterval::point(ExactRational(catalan)), series_terms(bits), bits);
}

std::vector<RadiusSample> estimate_radius(std::span<const std::uint64_t> n_points, unsigned precision_bits) {
    if (std::find(n_points.begin(), n_points.end(), std::uint64_t{0}) != n_points.end()) {
        throw std::invalid_argument("estimate_radius: n must be >= 1");
    }
    const CatalanTable table = compute_segner(largest(n_points));
    const unsigned bits = working_bits(precision_bits);
    std::vector<RadiusSample> out;
    for (std::uint64_t n : n_points) {
        const CertifiedInterval ln_c = ln_catalan(table[n], precision_bits);
        const BigFloat count = BigFloat::from(ExactRational(to_int(n)), bits);
        const BigFloat lo = BigFloat::from(ln_c.lo(), bits, Rounding::down).div(count, Rounding::down).exp(Rounding::down);
        const BigFloat hi = BigFloat::from(ln_c.hi(), bits, Rounding::up).div(count, Rounding::up).exp(Rounding::up);
        out.push_back({n, to_interval(lo, hi)});
    }
    return out;
}

std::vector<RadiusSample> estimate_radius(std::uint64_t max_n, unsigned precision_bits) {
    if (max_n < 10) throw std::invalid_argument("estimate_radius: max_n must be >= 10");
    return estimate_radius(power_of_two_grid(1, max_n), precision_bits);
}

std::vector<LimitRow> limit_convergence_table(std::span<const std::uint64_t> n_points, std::uint64_t bracket_terms) {
    return limit_convergence_table(n_points, limit_constant_bracket(bracket_terms));
}

std::vector<LimitRow> limit_convergence_table(std::span<const std::uint64_t> n_points, const CertifiedInterval& limit) {
    std::vector<LimitRow> out;
    for (std::uint64_t n : n_points) {
        if (n < 4) throw std::invalid_argument("limit_convergence_table: n must be >= 4");
        ExactRational g = quotient_g_closed(n);
        CertifiedInterval distance(g - limit.hi(), g - limit.lo());
        out.push_back({n, std::move(g), std::move(distance)});
    }
    return out;
}

std::vector<StirlingRow> stirling_ratio(std::span<const std::uint64_t> n_points, unsigned precision_bits) {
    if (std::find(n_points.begin(), n_points.end(), std::uint64_t{0}) != n_points.end()) {
        throw std::invalid_argument("stirling_ratio: n must be >= 1");
    }
    const CatalanTable table = compute_segner(largest(n_points));
    const unsigned bits = working_bits(precision_bits);
    std::vector<StirlingRow> out;
    for (std::uint64_t n : n_points) {
        // 4^n is a power of two, so the final division is exact.
        const ExactRational four_pow(ExactInt::pow(4, n));
        auto bound = [&](Rounding dir) {
            const BigFloat c = BigFloat::from(ExactRational(table[n]), bits, dir);
            const BigFloat root_pi = BigFloat::pi(bits, dir).sqrt(dir);
            const BigFloat nn = BigFloat::from(ExactRational(to_int(n)), bits);
            const BigFloat n_three_halves = nn.mul(nn.sqrt(dir), dir);
            return c.mul(root_pi, dir).mul(n_three_halves, dir).div(BigFloat::from(four_pow, bits), dir);
        };
        out.push_back({n, to_interval(bound(Rounding::down), bound(Rounding::up))});
    }
    return out;
}

FitResult fit_r0(std::uint64_t n_min, std::uint64_t n_max, unsigned precision_bits) {
    if (n_min < 2 || n_min >= n_max) throw std::invalid_argument("fit_r0: need 2 <= n_min < n_max");
    const auto grid = power_of_two_grid(n_min, n_max);
    return fit_r0(grid, precision_bits);
}

FitResult fit_r0(std::span<const std::uint64_t> n_points, unsigned precision_bits) {
    std::vector<std::uint64_t> points(n_points.begin(), n_points.end());
    std::sort(points.begin(), points.end());
    points.erase(std::unique(points.begin(), points.end()), points.end());
    if (points.size() < 2 || points.front() < 2) {
        throw std::invalid_argument("fit_r0: need at least two distinct points, each >= 2");
    }

    const CatalanTable table = compute_segner(points.back());
    const unsigned bits = working_bits(precision_bits);
    const CertifiedInterval ln4 = ln_integer(4, precision_bits);

    std::vector<BigFloat> xs;
    std::vector<BigFloat> ys;
    for (std::uint64_t n : points) {
        const CertifiedInterval y = ln4 * ExactRational(to_int(n)) - ln_catalan(table[n], precision_bits);
        xs.push_back(BigFloat::from(ln_integer(n, precision_bits).midpoint(), bits));
        ys.push_back(BigFloat::from(y.midpoint(), bits));
    }

    const BigFloat count = BigFloat::from(static_cast<long>(points.size()), bits);
    BigFloat sx(bits), sy(bits), sxx(bits), sxy(bits);
    for (std::size_t i = 0; i < xs.size(); ++i) {
        sx = sx.add(xs[i]);
        sy = sy.add(ys[i]);
        sxx = sxx.add(xs[i].mul(xs[i]));
        sxy = sxy.add(xs[i].mul(ys[i]));
    }
    const BigFloat denom = count.mul(sxx).sub(sx.mul(sx));
    const BigFloat slope = count.mul(sxy).sub(sx.mul(sy)).div(denom);
    const BigFloat intercept = sy.sub(slope.mul(sx)).div(count);

    BigFloat residual_max(bits);
    for (std::size_t i = 0; i < xs.size(); ++i) {
        const BigFloat residual = ys[i].sub(intercept.add(slope.mul(xs[i]))).abs();
        if (residual_max < residual) residual_max = residual;
    }

    const std::size_t shown = std::min<std::size_t>(precision_bits * 3 / 10, 30);
    return FitResult{
        slope.to_double(),
        intercept.to_double(),
        slope.to_rational().to_decimal(shown),
        intercept.to_rational().to_decimal(shown),
        points.front(),
        points.back(),
        points.size(),
        residual_max.to_double(),
    };
}

std::vector<ExponentProbeRow> exponent_probe(const ExactRational& r, std::uint64_t M,
                                             std::span<const std::uint64_t> n_points, unsigned precision_bits) {
    if (M < 1) throw std::invalid_argument("exponent_probe: M must be >= 1");
    const CatalanTable table = compute_segner(largest(n_points));
    const CertifiedInterval ln_m = ln_integer(M, precision_bits);
    std::vector<ExponentProbeRow> out;
    for (std::uint64_t n : n_points) {
        if (n < 1) throw std::invalid_argument("exponent_probe: n must be >= 1");
        CertifiedInterval value = ln_catalan(table[n], precision_bits) + ln_integer(n, precision_bits) * r -
                                  ln_m * ExactRational(to_int(n));
        out.push_back({n, value.round_outward(working_bits(precision_bits))});
    }
    return out;
}

}  // namespace segner
