#include "doctest.h"

#include <numeric>
#include <random>

#include "segner/exactnum.hpp"

using namespace segner;

namespace {

ExactRational q(const char* text) { return ExactRational::parse(text); }

// Decimal literal with 40 digits, as a rational.
ExactRational decimal(const std::string& digits_after_point, long integer_part) {
    ExactInt scale = ExactInt::pow(10, digits_after_point.size());
    return ExactRational(ExactInt(integer_part) * scale + ExactInt::parse(digits_after_point), scale);
}

// Reference values (40 significant digits, computed with mpmath).
const ExactRational kZeta2 = decimal("644934066848226436472415166646025189219", 1);
const ExactRational kLimit = decimal("289868133696452872944830333292050378438", 5);
const ExactRational kLn2 = decimal("6931471805599453094172321214581765680755", 0);
const ExactRational kTol = ExactRational(1, ExactInt::pow(10, 38));

bool near(const CertifiedInterval& iv, const ExactRational& reference) {
    // The reference is only good to kTol; widen accordingly.
    return iv.lo() <= reference + kTol && reference - kTol <= iv.hi();
}

}  // namespace

TEST_CASE("ExactInt basics") {
    CHECK(ExactInt::parse("-0").sign() == 0);
    CHECK(ExactInt::parse("-0").to_string() == "0");
    CHECK(ExactInt::parse("+17") == ExactInt(17));
    CHECK_THROWS_AS(ExactInt::parse("12a"), std::invalid_argument);
    CHECK_THROWS_AS(ExactInt::parse(""), std::invalid_argument);
    CHECK(ExactInt::pow(2, 100).to_string() == "1267650600228229401496703205376");
    CHECK(ExactInt::pow(2, 100).bit_length() == 101);
    CHECK(ExactInt(0).bit_length() == 0);
    CHECK(ExactInt::binomial(10, 5) == ExactInt(252));

    const auto [quotient, remainder] = divide(ExactInt(-7), ExactInt(2));
    CHECK(quotient == ExactInt(-3));
    CHECK(remainder == ExactInt(-1));
    CHECK_THROWS_AS(divide(ExactInt(1), ExactInt(0)), std::domain_error);
}

TEST_CASE("ExactRational is canonical") {
    CHECK(q("6/4").to_string() == "3/2");
    CHECK(ExactRational(ExactInt(3), ExactInt(-6)).to_string() == "-1/2");
    CHECK(q("-3/6").to_string() == "-1/2");
    CHECK_THROWS_AS(q("3/-6"), std::invalid_argument);
    CHECK(q("-0/5").to_string() == "0/1");
    CHECK(q("7").to_string() == "7/1");
    CHECK_THROWS_AS(q("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(q("1/x"), std::invalid_argument);
    CHECK_THROWS_AS(ExactRational(ExactInt(1), ExactInt(0)), std::domain_error);
    CHECK_THROWS_AS(q("1/2") / q("0"), std::domain_error);
    CHECK(q("1/3") + q("1/6") == q("1/2"));
    CHECK(q("-7/2").floor() == ExactInt(-4));
    CHECK(q("-7/2").ceil() == ExactInt(-3));
}

TEST_CASE("decimal rendering truncates") {
    CHECK(q("2/3").to_decimal(4) == "0.6666");
    CHECK(q("-2/3").to_decimal(2) == "-0.66");
    CHECK(q("1/200").to_decimal(2) == "0.00");
    CHECK(q("12345/100").to_decimal(0) == "123");
}

TEST_CASE("rational arithmetic stays canonical under random operations") {
    std::mt19937_64 rng(1751);
    std::uniform_int_distribution<long> dist(-1000, 1000);
    auto random_rational = [&] {
        long den = 0;
        while (den == 0) den = dist(rng);
        return ExactRational(ExactInt(dist(rng)), ExactInt(den));
    };
    auto canonical = [](const ExactRational& x) {
        const mpz_class g = gcd(x.numerator().raw(), x.denominator().raw());
        return x.denominator().sign() > 0 && g == 1;
    };
    for (int i = 0; i < 500; ++i) {
        const ExactRational a = random_rational();
        const ExactRational b = random_rational();
        CHECK(canonical(a + b));
        CHECK(canonical(a * b));
        CHECK(canonical(a - b));
        if (b.sign() != 0) {
            CHECK(canonical(a / b));
            CHECK((a / b) * b == a);
        }
        CHECK((a + b) - b == a);
        CHECK(ExactRational::parse((a * b).to_string()) == a * b);
    }
}

TEST_CASE("outward rounding") {
    const ExactRational third = q("1/3");
    CHECK(round_down(third, 4) == q("5/16"));
    CHECK(round_up(third, 4) == q("6/16"));
    CHECK(round_down(-third, 4) == q("-6/16"));
    CHECK(round_up(q("3/8"), 3) == q("3/8"));

    const CertifiedInterval iv(q("1/3"), q("2/3"));
    const CertifiedInterval rounded = iv.round_outward(10);
    CHECK(iv.subset_of(rounded));
    CHECK(rounded.width() <= iv.width() + q("2/1024"));
}

TEST_CASE("interval arithmetic contains sampled point results") {
    std::mt19937_64 rng(1758);
    std::uniform_int_distribution<long> dist(-50, 50);
    std::uniform_int_distribution<long> step(0, 16);
    for (int trial = 0; trial < 200; ++trial) {
        const ExactRational a_lo(ExactInt(dist(rng)), ExactInt(7));
        const ExactRational b_lo(ExactInt(dist(rng)), ExactInt(5));
        const CertifiedInterval a(a_lo, a_lo + ExactRational(ExactInt(step(rng) + 1), ExactInt(3)));
        const CertifiedInterval b(b_lo, b_lo + ExactRational(ExactInt(step(rng) + 1), ExactInt(4)));
        for (int s = 0; s <= 4; ++s) {
            const ExactRational x = a.lo() + a.width() * ExactRational(ExactInt(s), ExactInt(4));
            const ExactRational y = b.lo() + b.width() * ExactRational(ExactInt(4 - s), ExactInt(4));
            CHECK((a + b).contains(x + y));
            CHECK((a - b).contains(x - y));
            CHECK((a * b).contains(x * y));
            CHECK((a * q("-3/2")).contains(x * q("-3/2")));
            if (!b.contains(0)) CHECK((a / b).contains(x / y));
        }
    }
    CHECK_THROWS_AS(CertifiedInterval(q("1"), q("0")), std::invalid_argument);
    CHECK_THROWS_AS(CertifiedInterval(q("1"), q("2")) / CertifiedInterval(q("-1"), q("1")), std::domain_error);
}

TEST_CASE("harmonic numbers") {
    CHECK(harmonic(1).value == q("1"));
    CHECK(harmonic(2).value == q("3/2"));
    CHECK(harmonic(4).value == q("25/12"));
    CHECK_THROWS_AS(harmonic(0), std::invalid_argument);

    SUBCASE("pairwise summation matches a left fold") {
        ExactRational fold = 0;
        for (long k = 1; k <= 300; ++k) fold += ExactRational(ExactInt(1), ExactInt(k));
        CHECK(harmonic(300).value == fold);
    }

    SUBCASE("telescoping H_n - H_(n-1) = 1/n for 2 <= n <= 10^4") {
        // Build H_n incrementally and compare against independent sums at checkpoints.
        ExactRational running = harmonic(1).value;
        bool ok = true;
        for (std::uint64_t n = 2; n <= 10'000; ++n) {
            const ExactRational previous = running;
            running += ExactRational(ExactInt(1), ExactInt(static_cast<long>(n)));
            if (running - previous != ExactRational(ExactInt(1), ExactInt(static_cast<long>(n)))) ok = false;
            if (n % 2500 == 0 && harmonic(n).value != running) ok = false;
        }
        CHECK(ok);
    }
}

TEST_CASE("zeta(2) brackets") {
    CHECK(zeta2_bracket(2) == CertifiedInterval(q("3/2"), q("2")));
    CHECK_THROWS_AS(zeta2_bracket(1), std::invalid_argument);
    CHECK_THROWS_AS(zeta_bracket(1, 10), std::invalid_argument);

    for (std::uint64_t m : {2, 3, 10, 1000, 10'000}) {
        const CertifiedInterval z = zeta2_bracket(m);
        CHECK(near(z, kZeta2));
        CHECK(z.width() == ExactRational(ExactInt(1), ExactInt(static_cast<long>(m * (m - 1)))));
    }

    SUBCASE("brackets nest as m grows") {
        CertifiedInterval previous = zeta2_bracket(2);
        bool nested = true;
        for (std::uint64_t m = 3; m <= 1000; ++m) {
            CertifiedInterval current = zeta2_bracket(m);
            if (!current.subset_of(previous)) nested = false;
            previous = std::move(current);
        }
        CHECK(nested);
    }

    SUBCASE("general power") {
        // ζ(3) = 1.2020569031595942853997...
        const CertifiedInterval z3 = zeta_bracket(3, 2000);
        CHECK(z3.contains(q("12020569031595942853/10000000000000000000")));
        CHECK(z3.width() < q("1/1000000"));
    }
}

TEST_CASE("limit constant bracket") {
    CHECK(limit_constant_bracket(2) == CertifiedInterval(q("5"), q("6")));
    const CertifiedInterval coarse = limit_constant_bracket(1000);
    const CertifiedInterval fine = limit_constant_bracket(5000);
    CHECK(fine.subset_of(coarse));
    CHECK(near(fine, kLimit));
}

TEST_CASE("natural logarithm brackets") {
    CHECK(ln_bracket(q("1")) == CertifiedInterval(q("0"), q("0")));
    CHECK(near(ln_bracket(q("2")), kLn2));
    CHECK(ln_bracket(q("2"), 64).width() < q("1/1000000000000000000000000000000000000000"));
    CHECK(near(ln_bracket(q("1/2")), -kLn2));
    CHECK_THROWS_AS(ln_bracket(q("0")), std::invalid_argument);
    CHECK_THROWS_AS(ln_bracket(q("-3")), std::invalid_argument);

    SUBCASE("ln(10^6) = 6 ln 10") {
        const ExactRational reference = decimal("81551055796427410410794872810618524561", 13);
        CHECK(near(ln_bracket(ExactRational(ExactInt::pow(10, 6))), reference));
    }

    SUBCASE("widths shrink with more terms") {
        ExactRational previous = ln_bracket(q("7/5"), 1).width();
        for (unsigned terms = 2; terms <= 30; ++terms) {
            const ExactRational width = ln_bracket(q("7/5"), terms).width();
            CHECK(width < previous);
            previous = width;
        }
    }

    SUBCASE("rounded interval variant contains the exact bracket") {
        for (const char* x : {"2", "3/7", "1000001/3", "5"}) {
            const CertifiedInterval exact = ln_bracket(q(x), 40);
            const CertifiedInterval rounded = ln_bracket(CertifiedInterval::point(q(x)), 40, 200);
            CHECK(rounded.contains(exact.lo()));
            CHECK(rounded.contains(exact.hi()));
            CHECK(rounded.width() < q("1/1000000000000000000000000000000"));
        }
    }
}

TEST_CASE("H_n < 1 + ln n") {
    for (std::uint64_t n : {2, 10, 100, 1000}) {
        const CertifiedInterval ln_n = ln_bracket(ExactRational(ExactInt(static_cast<long>(n))));
        CHECK(harmonic(n).value < ExactRational(1) + ln_n.lo());
    }
}
