#include "segner/bigfloat.hpp"

#include <utility>

namespace segner {

namespace {

mpfr_rnd_t mode(Rounding rounding) {
    switch (rounding) {
        case Rounding::down: return MPFR_RNDD;
        case Rounding::up: return MPFR_RNDU;
        case Rounding::nearest: break;
    }
    return MPFR_RNDN;
}

}  // namespace

BigFloat::BigFloat(unsigned precision_bits) {
    mpfr_init2(v_, static_cast<mpfr_prec_t>(precision_bits < MPFR_PREC_MIN ? MPFR_PREC_MIN : precision_bits));
    mpfr_set_zero(v_, 1);
}

BigFloat::BigFloat(const BigFloat& other) {
    mpfr_init2(v_, mpfr_get_prec(other.v_));
    mpfr_set(v_, other.v_, MPFR_RNDN);
}

BigFloat::BigFloat(BigFloat&& other) noexcept {
    mpfr_init2(v_, MPFR_PREC_MIN);
    mpfr_swap(v_, other.v_);
}

BigFloat& BigFloat::operator=(const BigFloat& other) {
    if (this != &other) {
        mpfr_set_prec(v_, mpfr_get_prec(other.v_));
        mpfr_set(v_, other.v_, MPFR_RNDN);
    }
    return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& other) noexcept {
    mpfr_swap(v_, other.v_);
    return *this;
}

BigFloat::~BigFloat() { mpfr_clear(v_); }

BigFloat BigFloat::from(const ExactRational& value, unsigned precision_bits, Rounding rounding) {
    BigFloat out(precision_bits);
    mpfr_set_q(out.v_, value.raw().get_mpq_t(), mode(rounding));
    return out;
}

BigFloat BigFloat::from(long value, unsigned precision_bits) {
    BigFloat out(precision_bits);
    mpfr_set_si(out.v_, value, MPFR_RNDN);
    return out;
}

BigFloat BigFloat::pi(unsigned precision_bits, Rounding rounding) {
    BigFloat out(precision_bits);
    mpfr_const_pi(out.v_, mode(rounding));
    return out;
}

BigFloat BigFloat::add(const BigFloat& rhs, Rounding rounding) const {
    BigFloat out(precision());
    mpfr_add(out.v_, v_, rhs.v_, mode(rounding));
    return out;
}

BigFloat BigFloat::sub(const BigFloat& rhs, Rounding rounding) const {
    BigFloat out(precision());
    mpfr_sub(out.v_, v_, rhs.v_, mode(rounding));
    return out;
}

BigFloat BigFloat::mul(const BigFloat& rhs, Rounding rounding) const {
    BigFloat out(precision());
    mpfr_mul(out.v_, v_, rhs.v_, mode(rounding));
    return out;
}

BigFloat BigFloat::div(const BigFloat& rhs, Rounding rounding) const {
    BigFloat out(precision());
    mpfr_div(out.v_, v_, rhs.v_, mode(rounding));
    return out;
}

BigFloat BigFloat::sqrt(Rounding rounding) const {
    BigFloat out(precision());
    mpfr_sqrt(out.v_, v_, mode(rounding));
    return out;
}

BigFloat BigFloat::exp(Rounding rounding) const {
    BigFloat out(precision());
    mpfr_exp(out.v_, v_, mode(rounding));
    return out;
}

BigFloat BigFloat::abs() const {
    BigFloat out(precision());
    mpfr_abs(out.v_, v_, MPFR_RNDN);
    return out;
}

ExactRational BigFloat::to_rational() const {
    if (!mpfr_number_p(v_)) throw std::domain_error("BigFloat: not a finite number");
    mpz_class mantissa;
    const mpfr_exp_t exponent = mpfr_get_z_2exp(mantissa.get_mpz_t(), v_);
    ExactRational out{ExactInt(mantissa)};
    mpz_class scale = 1;
    if (exponent >= 0) {
        mpz_mul_2exp(scale.get_mpz_t(), scale.get_mpz_t(), static_cast<mp_bitcnt_t>(exponent));
        return out * ExactRational(ExactInt(scale));
    }
    mpz_mul_2exp(scale.get_mpz_t(), scale.get_mpz_t(), static_cast<mp_bitcnt_t>(-exponent));
    return out / ExactRational(ExactInt(scale));
}

}  // namespace segner
