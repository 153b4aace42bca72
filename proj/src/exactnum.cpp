#include "segner/exactnum.hpp"

#include <algorithm>
#include <cctype>
#include <utility>
#include <vector>

namespace segner {

namespace {

bool is_decimal_integer(std::string_view text) {
    if (!text.empty() && (text.front() == '-' || text.front() == '+')) text.remove_prefix(1);
    return !text.empty() &&
           std::all_of(text.begin(), text.end(), [](unsigned char c) { return std::isdigit(c) != 0; });
}

mpz_class parse_mpz(std::string_view text) {
    if (!is_decimal_integer(text)) {
        throw std::invalid_argument("not a decimal integer: '" + std::string(text) + "'");
    }
    if (text.front() == '+') text.remove_prefix(1);
    return mpz_class(std::string(text), 10);
}

ExactRational pow2(long exponent) {
    mpz_class p = 1;
    mpz_mul_2exp(p.get_mpz_t(), p.get_mpz_t(), static_cast<mp_bitcnt_t>(exponent < 0 ? -exponent : exponent));
    return exponent >= 0 ? ExactRational(ExactInt(p)) : ExactRational(ExactInt(1), ExactInt(p));
}

ExactRational sum_range(std::uint64_t first, std::uint64_t last, unsigned power) {
    if (last - first < 16) {
        mpq_class acc = 0;
        for (std::uint64_t k = first; k <= last; ++k) {
            mpz_class den;
            mpz_ui_pow_ui(den.get_mpz_t(), k, power);
            acc += mpq_class(mpz_class(1), den);
        }
        return ExactRational(std::move(acc));
    }
    const std::uint64_t mid = first + (last - first) / 2;
    return sum_range(first, mid, power) + sum_range(mid + 1, last, power);
}

// Identity when bits == 0 (exact mode).
ExactRational maybe_round(const ExactRational& x, unsigned bits, bool upward) {
    if (bits == 0) return x;
    return upward ? round_up(x, bits) : round_down(x, bits);
}

// One-sided bound on atanh(z) for 0 <= z < 1 from the first `terms` terms
// of z + z^3/3 + z^5/5 + ...; the upper bound adds the geometric remainder
// z^(2K+1) / ((2K+1)(1 - z^2)).
ExactRational atanh_bound(const ExactRational& z, unsigned terms, unsigned bits, bool upward) {
    const ExactRational z2 = maybe_round(z * z, bits, upward);
    ExactRational power = z;
    ExactRational sum = 0;
    for (unsigned k = 0; k < terms; ++k) {
        sum += maybe_round(power / ExactRational(static_cast<long>(2 * k + 1)), bits, upward);
        power = maybe_round(power * z2, bits, upward);
    }
    if (upward) {
        const ExactRational tail =
            power / (ExactRational(static_cast<long>(2 * terms + 1)) * (ExactRational(1) - z2));
        sum += maybe_round(tail, bits, true);
    }
    return sum;
}

// floor(log2 x) for x > 0.
long floor_log2(const ExactRational& x) {
    const auto num_bits = static_cast<long>(x.numerator().bit_length());
    const auto den_bits = static_cast<long>(x.denominator().bit_length());
    long e = num_bits - den_bits;
    // x / 2^e lies in (1/2, 2); nudge into [1, 2).
    if (x < pow2(e)) --e;
    return e;
}

// One-sided bound on ln t for a single t > 0.
ExactRational ln_bound(const ExactRational& t, unsigned terms, unsigned bits, bool upward) {
    const long e = floor_log2(t);
    const ExactRational mantissa = t / pow2(e);
    const ExactRational z = maybe_round((mantissa - ExactRational(1)) / (mantissa + ExactRational(1)), bits, upward);
    const ExactRational ln_mantissa = ExactRational(2) * atanh_bound(z, terms, bits, upward);
    if (e == 0) return ln_mantissa;
    // e * ln2 needs the ln2 bound in the direction matching the sign of e.
    const bool ln2_upward = (e > 0) == upward;
    const ExactRational ln2 = ExactRational(2) * atanh_bound(ExactRational(ExactInt(1), ExactInt(3)), terms, bits, ln2_upward);
    return ExactRational(e) * ln2 + ln_mantissa;
}

}  // namespace

// ExactInt

ExactInt ExactInt::parse(std::string_view text) { return ExactInt(parse_mpz(text)); }

ExactInt ExactInt::pow(const ExactInt& base, unsigned long exponent) {
    mpz_class out;
    mpz_pow_ui(out.get_mpz_t(), base.v_.get_mpz_t(), exponent);
    return ExactInt(std::move(out));
}

ExactInt ExactInt::binomial(unsigned long n, unsigned long k) {
    mpz_class out;
    mpz_bin_uiui(out.get_mpz_t(), n, k);
    return ExactInt(std::move(out));
}

std::size_t ExactInt::bit_length() const {
    return is_zero() ? 0 : mpz_sizeinbase(v_.get_mpz_t(), 2);
}

DivisionResult divide(const ExactInt& numerator, const ExactInt& denominator) {
    if (denominator.is_zero()) throw std::domain_error("division by zero");
    mpz_class q;
    mpz_class r;
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), numerator.raw().get_mpz_t(), denominator.raw().get_mpz_t());
    return {ExactInt(std::move(q)), ExactInt(std::move(r))};
}

// ExactRational

ExactRational::ExactRational(const ExactInt& num, const ExactInt& den) {
    if (den.is_zero()) throw std::domain_error("zero denominator");
    v_ = mpq_class(num.raw(), den.raw());
    v_.canonicalize();
}

ExactRational::ExactRational(mpq_class value) : v_(std::move(value)) {
    if (sgn(v_.get_den()) == 0) throw std::domain_error("zero denominator");
    v_.canonicalize();
}

ExactRational ExactRational::parse(std::string_view text) {
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) return ExactRational(ExactInt::parse(text));
    const auto den_text = text.substr(slash + 1);
    if (!den_text.empty() && den_text.front() == '-') {
        throw std::invalid_argument("denominator must be unsigned: '" + std::string(text) + "'");
    }
    ExactInt den = ExactInt::parse(den_text);
    if (den.is_zero()) throw std::invalid_argument("zero denominator: '" + std::string(text) + "'");
    return {ExactInt::parse(text.substr(0, slash)), den};
}

std::string ExactRational::to_string() const {
    return v_.get_num().get_str(10) + "/" + v_.get_den().get_str(10);
}

std::string ExactRational::to_decimal(std::size_t digits) const {
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, digits);
    mpz_class scaled = ::abs(v_.get_num()) * scale;
    mpz_tdiv_q(scaled.get_mpz_t(), scaled.get_mpz_t(), v_.get_den().get_mpz_t());
    std::string body = scaled.get_str(10);
    if (body.size() <= digits) body.insert(0, digits + 1 - body.size(), '0');
    std::string out = sign() < 0 ? "-" : "";
    out += body.substr(0, body.size() - digits);
    if (digits > 0) out += "." + body.substr(body.size() - digits);
    return out;
}

ExactInt ExactRational::floor() const {
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), v_.get_num().get_mpz_t(), v_.get_den().get_mpz_t());
    return ExactInt(std::move(q));
}

ExactInt ExactRational::ceil() const {
    mpz_class q;
    mpz_cdiv_q(q.get_mpz_t(), v_.get_num().get_mpz_t(), v_.get_den().get_mpz_t());
    return ExactInt(std::move(q));
}

ExactRational ExactRational::reciprocal() const {
    if (sign() == 0) throw std::domain_error("reciprocal of zero");
    return ExactRational(denominator(), numerator());
}

ExactRational& ExactRational::operator/=(const ExactRational& rhs) {
    if (rhs.sign() == 0) throw std::domain_error("division by zero");
    v_ /= rhs.v_;
    return *this;
}

ExactRational pow(const ExactRational& base, unsigned long exponent) {
    return {ExactInt::pow(base.numerator(), exponent), ExactInt::pow(base.denominator(), exponent)};
}

ExactRational round_down(const ExactRational& x, unsigned bits) {
    mpz_class scaled = x.raw().get_num();
    mpz_mul_2exp(scaled.get_mpz_t(), scaled.get_mpz_t(), bits);
    mpz_fdiv_q(scaled.get_mpz_t(), scaled.get_mpz_t(), x.raw().get_den().get_mpz_t());
    return ExactRational(ExactInt(std::move(scaled))) * pow2(-static_cast<long>(bits));
}

ExactRational round_up(const ExactRational& x, unsigned bits) {
    mpz_class scaled = x.raw().get_num();
    mpz_mul_2exp(scaled.get_mpz_t(), scaled.get_mpz_t(), bits);
    mpz_cdiv_q(scaled.get_mpz_t(), scaled.get_mpz_t(), x.raw().get_den().get_mpz_t());
    return ExactRational(ExactInt(std::move(scaled))) * pow2(-static_cast<long>(bits));
}

ExactRational pairwise_sum(std::span<const ExactRational> terms) {
    if (terms.empty()) return 0;
    if (terms.size() == 1) return terms.front();
    const std::size_t half = terms.size() / 2;
    return pairwise_sum(terms.first(half)) + pairwise_sum(terms.subspan(half));
}

// CertifiedInterval

CertifiedInterval::CertifiedInterval(ExactRational lo, ExactRational hi)
    : lo_(std::move(lo)), hi_(std::move(hi)) {
    if (hi_ < lo_) throw std::invalid_argument("interval with lo > hi");
}

CertifiedInterval CertifiedInterval::round_outward(unsigned bits) const {
    return {round_down(lo_, bits), round_up(hi_, bits)};
}

CertifiedInterval operator+(const CertifiedInterval& a, const CertifiedInterval& b) {
    return {a.lo_ + b.lo_, a.hi_ + b.hi_};
}

CertifiedInterval operator-(const CertifiedInterval& a, const CertifiedInterval& b) {
    return {a.lo_ - b.hi_, a.hi_ - b.lo_};
}

CertifiedInterval operator*(const CertifiedInterval& a, const CertifiedInterval& b) {
    const ExactRational products[] = {a.lo_ * b.lo_, a.lo_ * b.hi_, a.hi_ * b.lo_, a.hi_ * b.hi_};
    const auto [lo, hi] = std::minmax_element(std::begin(products), std::end(products));
    return {*lo, *hi};
}

CertifiedInterval operator/(const CertifiedInterval& a, const CertifiedInterval& b) {
    if (b.contains(0)) throw std::domain_error("interval division by an interval containing zero");
    return a * CertifiedInterval(b.hi_.reciprocal(), b.lo_.reciprocal());
}

CertifiedInterval operator+(const CertifiedInterval& a, const ExactRational& b) {
    return {a.lo_ + b, a.hi_ + b};
}

CertifiedInterval operator*(const CertifiedInterval& a, const ExactRational& b) {
    if (b.sign() >= 0) return {a.lo_ * b, a.hi_ * b};
    return {a.hi_ * b, a.lo_ * b};
}

// Sums and constants

HarmonicValue harmonic(std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("harmonic: n must be >= 1");
    return {n, reciprocal_power_sum(1, n, 1)};
}

ExactRational reciprocal_power_sum(std::uint64_t first, std::uint64_t last, unsigned power) {
    if (first == 0) throw std::invalid_argument("reciprocal_power_sum: first must be >= 1");
    if (first > last) return 0;
    return sum_range(first, last, power);
}

CertifiedInterval zeta_bracket(unsigned power, std::uint64_t m) {
    if (power < 2) throw std::invalid_argument("zeta_bracket: power must be >= 2");
    if (m < 2) throw std::invalid_argument("zeta_bracket: m must be >= 2");
    const ExactRational partial = reciprocal_power_sum(1, m - 1, power);
    const ExactInt scale = static_cast<long>(power - 1);
    const ExactRational tail_lo(1, scale * ExactInt::pow(ExactInt(mpz_class(m)), power - 1));
    const ExactRational tail_hi(1, scale * ExactInt::pow(ExactInt(mpz_class(m - 1)), power - 1));
    return {partial + tail_lo, partial + tail_hi};
}

CertifiedInterval zeta2_bracket(std::uint64_t m) { return zeta_bracket(2, m); }

CertifiedInterval limit_constant_bracket(std::uint64_t m) {
    return zeta2_bracket(m) * ExactRational(2) + ExactRational(2);
}

CertifiedInterval ln_bracket(const ExactRational& x, unsigned terms) {
    if (x.sign() <= 0) throw std::invalid_argument("ln_bracket: argument must be positive");
    return {ln_bound(x, terms, 0, false), ln_bound(x, terms, 0, true)};
}

CertifiedInterval ln_bracket(const CertifiedInterval& x, unsigned terms, unsigned working_bits) {
    if (x.lo().sign() <= 0) throw std::invalid_argument("ln_bracket: interval must be positive");
    if (working_bits == 0) throw std::invalid_argument("ln_bracket: working_bits must be >= 1");
    return {ln_bound(x.lo(), terms, working_bits, false), ln_bound(x.hi(), terms, working_bits, true)};
}

}  // namespace segner
