#pragma once

/**
 * @file exactnum.hpp
 * @brief Exact integers, canonical rationals and certified intervals.
 *
 * Everything the rest of the library proves is decided here: comparisons
 * between ExactRational values are exact, and CertifiedInterval endpoints
 * are rationals that bracket a real number with no floating point involved.
 *
 * ExactInt and ExactRational wrap GMP's mpz/mpq types. Rationals are kept
 * canonical at all times (reduced, positive denominator, zero is 0/1), so
 * structural equality and mathematical equality coincide.
 */

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace segner {

/// Raised when a computation that must be exact (a division with zero
/// remainder, an identity) turns out not to be. Always indicates a bug.
class IntegrityError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Raised when a request exceeds a configured resource cap.
class ResourceLimitError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ExactInt {
public:
    ExactInt() = default;
    ExactInt(long value) : v_(value) {}  // NOLINT(google-explicit-constructor)
    explicit ExactInt(mpz_class value) : v_(std::move(value)) {}

    /// Parses an optionally signed decimal integer. Throws std::invalid_argument.
    static ExactInt parse(std::string_view text);
    static ExactInt pow(const ExactInt& base, unsigned long exponent);
    static ExactInt binomial(unsigned long n, unsigned long k);

    std::string to_string() const { return v_.get_str(10); }
    int sign() const { return sgn(v_); }
    bool is_zero() const { return sign() == 0; }
    /// Number of bits in |value|; 0 for zero.
    std::size_t bit_length() const;
    /// Number of decimal digits in |value| (1 for zero).
    std::size_t decimal_digits() const { return v_.get_str(10).size() - (sign() < 0 ? 1 : 0); }

    const mpz_class& raw() const { return v_; }

    ExactInt& operator+=(const ExactInt& rhs) { v_ += rhs.v_; return *this; }
    ExactInt& operator-=(const ExactInt& rhs) { v_ -= rhs.v_; return *this; }
    ExactInt& operator*=(const ExactInt& rhs) { v_ *= rhs.v_; return *this; }

    friend ExactInt operator+(ExactInt a, const ExactInt& b) { return a += b; }
    friend ExactInt operator-(ExactInt a, const ExactInt& b) { return a -= b; }
    friend ExactInt operator*(ExactInt a, const ExactInt& b) { return a *= b; }
    friend ExactInt operator-(const ExactInt& a) { return ExactInt(mpz_class(-a.v_)); }

    friend bool operator==(const ExactInt& a, const ExactInt& b) { return cmp(a.v_, b.v_) == 0; }
    friend std::strong_ordering operator<=>(const ExactInt& a, const ExactInt& b) {
        return cmp(a.v_, b.v_) <=> 0;
    }

private:
    mpz_class v_;
};

struct DivisionResult {
    ExactInt quotient;
    ExactInt remainder;
};

/// Truncating division. Throws std::domain_error on a zero divisor.
DivisionResult divide(const ExactInt& numerator, const ExactInt& denominator);

class ExactRational {
public:
    ExactRational() = default;
    ExactRational(long value) : v_(value) {}  // NOLINT(google-explicit-constructor)
    ExactRational(const ExactInt& value) : v_(value.raw()) {}  // NOLINT(google-explicit-constructor)
    /// Builds num/den and canonicalizes. Throws std::domain_error if den == 0.
    ExactRational(const ExactInt& num, const ExactInt& den);
    explicit ExactRational(mpq_class value);

    /// Parses "a/b" or "a". Throws std::invalid_argument.
    static ExactRational parse(std::string_view text);

    ExactInt numerator() const { return ExactInt(v_.get_num()); }
    ExactInt denominator() const { return ExactInt(v_.get_den()); }
    int sign() const { return sgn(v_); }

    /// Always "num/den", even when den is 1.
    std::string to_string() const;
    /// Decimal expansion truncated toward zero after `digits` fractional
    /// digits, e.g. 6.0150 for g(36) with digits = 4.
    std::string to_decimal(std::size_t digits) const;
    /// Nearest double; for display and tolerances in tests only.
    double to_double() const { return v_.get_d(); }

    ExactInt floor() const;
    ExactInt ceil() const;
    ExactRational abs() const { return ExactRational(mpq_class(::abs(v_))); }
    ExactRational reciprocal() const;

    const mpq_class& raw() const { return v_; }

    ExactRational& operator+=(const ExactRational& rhs) { v_ += rhs.v_; return *this; }
    ExactRational& operator-=(const ExactRational& rhs) { v_ -= rhs.v_; return *this; }
    ExactRational& operator*=(const ExactRational& rhs) { v_ *= rhs.v_; return *this; }
    ExactRational& operator/=(const ExactRational& rhs);

    friend ExactRational operator+(ExactRational a, const ExactRational& b) { return a += b; }
    friend ExactRational operator-(ExactRational a, const ExactRational& b) { return a -= b; }
    friend ExactRational operator*(ExactRational a, const ExactRational& b) { return a *= b; }
    friend ExactRational operator/(ExactRational a, const ExactRational& b) { return a /= b; }
    friend ExactRational operator-(const ExactRational& a) { return ExactRational(mpq_class(-a.v_)); }

    friend bool operator==(const ExactRational& a, const ExactRational& b) { return cmp(a.v_, b.v_) == 0; }
    friend std::strong_ordering operator<=>(const ExactRational& a, const ExactRational& b) {
        return cmp(a.v_, b.v_) <=> 0;
    }

private:
    mpq_class v_;
};

ExactRational pow(const ExactRational& base, unsigned long exponent);

/// Largest multiple of 2^-bits that is <= x.
ExactRational round_down(const ExactRational& x, unsigned bits);
/// Smallest multiple of 2^-bits that is >= x.
ExactRational round_up(const ExactRational& x, unsigned bits);

/// Sum of the given rationals by pairwise (balanced tree) summation. Same
/// value as a left fold, but intermediate denominators stay balanced.
ExactRational pairwise_sum(std::span<const ExactRational> terms);

/// Closed interval [lo, hi] with rational endpoints known to contain some
/// real quantity. Operations round outward: the result always contains
/// every real result obtainable from points of the operands.
class CertifiedInterval {
public:
    /// Throws std::invalid_argument unless lo <= hi.
    CertifiedInterval(ExactRational lo, ExactRational hi);
    static CertifiedInterval point(const ExactRational& x) { return {x, x}; }

    const ExactRational& lo() const { return lo_; }
    const ExactRational& hi() const { return hi_; }
    ExactRational width() const { return hi_ - lo_; }
    ExactRational midpoint() const { return (lo_ + hi_) / ExactRational(2); }

    bool contains(const ExactRational& x) const { return lo_ <= x && x <= hi_; }
    bool subset_of(const CertifiedInterval& other) const {
        return other.lo_ <= lo_ && hi_ <= other.hi_;
    }

    /// Widens to dyadic endpoints with at most `bits` fractional bits.
    CertifiedInterval round_outward(unsigned bits) const;

    friend CertifiedInterval operator+(const CertifiedInterval& a, const CertifiedInterval& b);
    friend CertifiedInterval operator-(const CertifiedInterval& a, const CertifiedInterval& b);
    friend CertifiedInterval operator*(const CertifiedInterval& a, const CertifiedInterval& b);
    /// Throws std::domain_error if b contains zero.
    friend CertifiedInterval operator/(const CertifiedInterval& a, const CertifiedInterval& b);
    friend CertifiedInterval operator+(const CertifiedInterval& a, const ExactRational& b);
    friend CertifiedInterval operator*(const CertifiedInterval& a, const ExactRational& b);

    friend bool operator==(const CertifiedInterval&, const CertifiedInterval&) = default;

private:
    ExactRational lo_;
    ExactRational hi_;
};

struct HarmonicValue {
    std::uint64_t n;
    ExactRational value;
};

/// H_n = 1 + 1/2 + ... + 1/n. Throws std::invalid_argument for n = 0.
HarmonicValue harmonic(std::uint64_t n);

/// Σ_{k=first..last} 1/k^power, exact; zero when first > last. first >= 1.
ExactRational reciprocal_power_sum(std::uint64_t first, std::uint64_t last, unsigned power);

inline constexpr std::uint64_t kDefaultZetaTerms = 1'000'000;
inline constexpr unsigned kDefaultLnTerms = 64;

/// Bracket for ζ(power) from the partial sum through m-1 plus the integral
/// tail bounds 1/((p-1)m^(p-1)) <= Σ_{k>=m} 1/k^p <= 1/((p-1)(m-1)^(p-1)).
/// Requires power >= 2 and m >= 2.
CertifiedInterval zeta_bracket(unsigned power, std::uint64_t m);

/// [S + 1/m, S + 1/(m-1)] with S = Σ_{k<m} 1/k^2; contains π²/6.
CertifiedInterval zeta2_bracket(std::uint64_t m = kDefaultZetaTerms);

/// 2 + 2·zeta2_bracket(m); contains 2 + π²/3.
CertifiedInterval limit_constant_bracket(std::uint64_t m = kDefaultZetaTerms);

/// Interval containing ln x, from ln x = e·ln 2 + 2·atanh((m-1)/(m+1)) with
/// x = m·2^e, 1 <= m < 2, and the atanh series truncated after `terms`
/// terms with its remainder added to the upper endpoint. Exact rational
/// arithmetic throughout. Throws std::invalid_argument for x <= 0.
CertifiedInterval ln_bracket(const ExactRational& x, unsigned terms = kDefaultLnTerms);

/// Same scheme applied to an interval argument (lo > 0), with every
/// intermediate rounded outward to `working_bits` fractional bits so that
/// denominators stay bounded. Contains ln t for every t in x.
CertifiedInterval ln_bracket(const CertifiedInterval& x, unsigned terms, unsigned working_bits);

}  // namespace segner
