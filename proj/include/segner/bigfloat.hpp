#pragma once

// Thin RAII owner of an MPFR value. Each value carries its own precision;
// operations take an explicit rounding direction so callers can keep
// lower/upper bounds honest.

#include <string>

#include <mpfr.h>

#include "segner/exactnum.hpp"

namespace segner {

enum class Rounding { nearest, down, up };

class BigFloat {
public:
    explicit BigFloat(unsigned precision_bits);
    BigFloat(const BigFloat& other);
    BigFloat(BigFloat&& other) noexcept;
    BigFloat& operator=(const BigFloat& other);
    BigFloat& operator=(BigFloat&& other) noexcept;
    ~BigFloat();

    static BigFloat from(const ExactRational& value, unsigned precision_bits, Rounding rounding = Rounding::nearest);
    static BigFloat from(long value, unsigned precision_bits);
    static BigFloat pi(unsigned precision_bits, Rounding rounding = Rounding::nearest);

    unsigned precision() const { return static_cast<unsigned>(mpfr_get_prec(v_)); }

    BigFloat add(const BigFloat& rhs, Rounding rounding = Rounding::nearest) const;
    BigFloat sub(const BigFloat& rhs, Rounding rounding = Rounding::nearest) const;
    BigFloat mul(const BigFloat& rhs, Rounding rounding = Rounding::nearest) const;
    BigFloat div(const BigFloat& rhs, Rounding rounding = Rounding::nearest) const;
    BigFloat sqrt(Rounding rounding = Rounding::nearest) const;
    BigFloat exp(Rounding rounding = Rounding::nearest) const;
    BigFloat abs() const;

    /// Exact value of this binary float.
    ExactRational to_rational() const;
    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

    friend bool operator<(const BigFloat& a, const BigFloat& b) { return mpfr_less_p(a.v_, b.v_) != 0; }

private:
    mpfr_t v_;
};

}  // namespace segner
