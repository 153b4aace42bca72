#pragma once

// Truncated formal power series with exact rational coefficients, and the
// coefficient-wise checks of the Catalan generating function identities.

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "segner/exactnum.hpp"

namespace segner {

/// c_0 + c_1 x + ... + c_N x^N; nothing is asserted about x^(N+1) and up.
class SeriesPoly {
public:
    /// Throws std::invalid_argument on an empty coefficient list.
    explicit SeriesPoly(std::vector<ExactRational> coeffs);
    static SeriesPoly constant(const ExactRational& value, std::size_t order);
    static SeriesPoly from_integers(std::span<const ExactInt> coeffs);

    std::size_t order() const { return coeffs_.size() - 1; }
    const ExactRational& operator[](std::size_t k) const { return coeffs_.at(k); }
    std::span<const ExactRational> coeffs() const { return coeffs_; }

    /// Returns a copy with coefficient k replaced.
    SeriesPoly with_coefficient(std::size_t k, ExactRational value) const;

    friend bool operator==(const SeriesPoly&, const SeriesPoly&) = default;

private:
    std::vector<ExactRational> coeffs_;
};

/// Orders must match; throws std::invalid_argument otherwise.
SeriesPoly add(const SeriesPoly& a, const SeriesPoly& b);
SeriesPoly subtract(const SeriesPoly& a, const SeriesPoly& b);
/// Cauchy product truncated at the shared order.
SeriesPoly multiply(const SeriesPoly& a, const SeriesPoly& b);
/// x·a, truncated at a's order.
SeriesPoly shift_up(const SeriesPoly& a);

/// C_0 + C_1 x + ... + C_order x^order from Segner's recursion.
SeriesPoly catalan_series(std::size_t order);

struct GoldbachCheck {
    bool holds = true;
    /// Smallest C-index n at which either identity fails.
    std::optional<std::size_t> first_failing_index;
    /// "T=(1+xT)^2" or "xC^2-C+1=0" for the first failure.
    std::string failing_identity;
};

/// Checks, for the given C-series of order N >= 1, that with
/// T(x) = (C(x) - 1)/x (order N-1) both T = (1 + xT)^2 and
/// x·C^2 - C + 1 = 0 hold at every coefficient determined by C_0..C_N.
GoldbachCheck verify_goldbach_quadratic(const SeriesPoly& c);
/// Same check on catalan_series(order). Throws for order 0.
GoldbachCheck verify_goldbach_quadratic(std::size_t order);

/// Σ coeffs[k]·x^k, exact.
ExactRational evaluate_partial_sum(const SeriesPoly& s, const ExactRational& x);

}  // namespace segner
