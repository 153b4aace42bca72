#include "segner/bounds.hpp"

#include <algorithm>
#include <stdexcept>

#include "segner/catalan.hpp"

namespace segner {

namespace {

ExactInt to_int(std::uint64_t v) { return ExactInt(mpz_class(static_cast<unsigned long>(v))); }

void require(bool condition, const std::string& message) {
    if (!condition) throw std::invalid_argument(message);
}

// Σ_{k=first..last} 1/(k(n-k))^r, pairwise.
ExactRational convolution_weights(std::uint64_t first, std::uint64_t last, std::uint64_t n, unsigned r) {
    if (first > last) return 0;
    if (last - first < 16) {
        mpq_class acc = 0;
        for (std::uint64_t k = first; k <= last; ++k) {
            mpz_class den;
            mpz_ui_pow_ui(den.get_mpz_t(), static_cast<unsigned long>(k * (n - k)), r);
            acc += mpq_class(mpz_class(1), den);
        }
        return ExactRational(std::move(acc));
    }
    const std::uint64_t mid = first + (last - first) / 2;
    return convolution_weights(first, mid, n, r) + convolution_weights(mid + 1, last, n, r);
}

ExactRational closed_form(std::uint64_t n, const ExactRational& harmonic_prev, const ExactRational& inverse_squares) {
    const ExactInt big_n = to_int(n);
    const ExactRational two_over_n2(2, big_n * big_n);
    const ExactRational four_over_n3(4, big_n * big_n * big_n);
    return two_over_n2 * (ExactRational(1) + inverse_squares) + four_over_n3 * harmonic_prev;
}

std::string trusted_lemma_for(unsigned r) {
    if (r == 2) {
        return "g(n) > g(n+1) for every n >= 4: analytic monotonicity lemma, reducing to "
               "1/2 + 1/3 + ... + 1/(n-1) > 1/2 + 1/(2n); checked exactly only on the recorded range";
    }
    return "g_" + std::to_string(r) +
           "(n) > g_" + std::to_string(r) +
           "(n+1) beyond the recorded range: empirical, no analytic proof is supplied";
}

}  // namespace

ExactRational sum_S(std::uint64_t n) {
    require(n >= 1, "sum_S: n must be >= 1");
    const ExactInt big_n = to_int(n);
    return ExactRational(2, big_n * big_n) + convolution_weights(1, n - 1, n, 2);
}

ExactRational sum_S_closed(std::uint64_t n) {
    require(n >= 2, "sum_S_closed: n must be >= 2");
    return closed_form(n, harmonic(n - 1).value, reciprocal_power_sum(1, n - 1, 2));
}

ExactRational quotient_g(std::uint64_t n) {
    require(n >= 1, "quotient_g: n must be >= 1");
    const ExactInt m = to_int(n + 1);
    return sum_S(n) * ExactRational(m * m);
}

ExactRational quotient_g_closed(std::uint64_t n) {
    require(n >= 2, "quotient_g_closed: n must be >= 2");
    const ExactInt m = to_int(n + 1);
    return sum_S_closed(n) * ExactRational(m * m);
}

ExactRational sum_S_general(unsigned r, std::uint64_t n) {
    require(r >= 2, "sum_S_general: r must be >= 2");
    require(n >= 1, "sum_S_general: n must be >= 1");
    return ExactRational(2, ExactInt::pow(to_int(n), r)) + convolution_weights(1, n - 1, n, r);
}

ExactRational quotient_g_general(unsigned r, std::uint64_t n) {
    return sum_S_general(r, n) * ExactRational(ExactInt::pow(to_int(n + 1), r));
}

// QuotientSequence

QuotientSequence::QuotientSequence(std::uint64_t start) : n_(start) {
    require(start >= 2, "QuotientSequence: start must be >= 2");
    harmonic_ = harmonic(start - 1).value;
    inverse_squares_ = reciprocal_power_sum(1, start - 1, 2);
    refresh();
}

void QuotientSequence::advance() {
    const ExactInt big_n = to_int(n_);
    harmonic_ += ExactRational(1, big_n);
    inverse_squares_ += ExactRational(1, big_n * big_n);
    ++n_;
    refresh();
}

void QuotientSequence::refresh() {
    const ExactInt m = to_int(n_ + 1);
    g_ = closed_form(n_, harmonic_, inverse_squares_) * ExactRational(m * m);
}

// Monotonicity and the reduced inequality

MonotoneReport check_monotone_decreasing(std::uint64_t from, std::uint64_t to) {
    return check_monotone_decreasing(2, from, to);
}

MonotoneReport check_monotone_decreasing(unsigned r, std::uint64_t from, std::uint64_t to) {
    require(from >= 1 && from < to, "check_monotone_decreasing: need 1 <= from < to");
    require(r >= 2, "check_monotone_decreasing: r must be >= 2");
    MonotoneReport report{from, to, true, std::nullopt};
    auto note = [&](std::uint64_t n, const ExactRational& current, const ExactRational& next) {
        if (!(current > next) && report.holds) {
            report.holds = false;
            report.first_violation = n;
        }
    };

    if (r != 2) {
        ExactRational previous = quotient_g_general(r, from);
        for (std::uint64_t n = from; n < to && report.holds; ++n) {
            ExactRational next = quotient_g_general(r, n + 1);
            note(n, previous, next);
            previous = std::move(next);
        }
        return report;
    }

    std::uint64_t n = from;
    ExactRational previous = from == 1 ? quotient_g(1) : QuotientSequence(from).g();
    QuotientSequence sequence(std::max<std::uint64_t>(from + 1, 2));
    while (n < to && report.holds) {
        note(n, previous, sequence.g());
        previous = sequence.g();
        ++n;
        if (n < to) sequence.advance();
    }
    return report;
}

bool reduced_inequality_holds(std::uint64_t n) {
    require(n >= 2, "reduced_inequality_holds: n must be >= 2");
    const ExactRational lhs = harmonic(n - 1).value - ExactRational(1);
    const ExactRational rhs = ExactRational(1, 2) + ExactRational(1, to_int(2 * n));
    return lhs > rhs;
}

std::vector<std::uint64_t> reduced_inequality_failures(std::uint64_t from, std::uint64_t to) {
    require(from >= 2 && from <= to, "reduced_inequality_failures: need 2 <= from <= to");
    std::vector<std::uint64_t> failures;
    // lhs = H_{n-1} - 1
    ExactRational lhs = harmonic(from - 1).value - ExactRational(1);
    for (std::uint64_t n = from; n <= to; ++n) {
        if (n > from) lhs += ExactRational(1, to_int(n - 1));
        const ExactRational rhs = ExactRational(1, 2) + ExactRational(1, to_int(2 * n));
        if (!(lhs > rhs)) failures.push_back(n);
    }
    return failures;
}

SandwichReport check_sandwich(std::uint64_t from, std::uint64_t to, const CertifiedInterval& limit,
                              const ExactRational& upper) {
    require(from >= 4 && from <= to, "check_sandwich: need 4 <= from <= to");
    // A short dyadic upper bound for limit.hi settles almost every comparison
    // without touching the (very long) exact endpoint.
    const ExactRational coarse_hi = round_up(limit.hi(), 128);
    SandwichReport report;
    QuotientSequence sequence(from);
    for (std::uint64_t n = from; n <= to; ++n) {
        const ExactRational& g = sequence.g();
        const bool above = g > coarse_hi || g > limit.hi();
        if (!(above && g < upper)) {
            report.holds = false;
            report.first_violation = n;
            break;
        }
        if (n < to) sequence.advance();
    }
    return report;
}

R1FailureReport demonstrate_r1_failure(std::uint64_t n_min, std::uint64_t n_max) {
    require(n_min >= 2 && n_min <= n_max && n_max <= 10'000, "demonstrate_r1_failure: range must lie within [2, 10^4]");
    R1FailureReport report{n_min, n_max, 0, {}};
    ExactRational h = harmonic(n_min - 1).value;
    for (std::uint64_t n = n_min; n <= n_max; ++n) {
        if (n > n_min) h += ExactRational(1, to_int(n - 1));
        const ExactRational rhs = ExactRational(to_int(n), to_int(n + 1)) - ExactRational(2);
        ++report.checked;
        if (h < rhs) report.successes.push_back(n);
    }
    return report;
}

R0FailureReport demonstrate_r0_failure(std::uint64_t M, std::uint64_t n_min, std::uint64_t n_max) {
    require(M >= 1 && n_min <= n_max, "demonstrate_r0_failure: need M >= 1 and n_min <= n_max");
    R0FailureReport report{M, n_min, n_max, {}};
    const ExactInt base = to_int(M);
    for (std::uint64_t n = n_min; n <= n_max; ++n) {
        const ExactInt power = ExactInt::pow(base, n);
        if (power * to_int(n + 1) <= power * base) report.step_holds.push_back(n);
    }
    return report;
}

std::vector<BaseCheck> verify_base_cases(unsigned r, std::uint64_t M, std::uint64_t up_to) {
    require(up_to >= 1, "verify_base_cases: up_to must be >= 1");
    const CatalanTable table = compute_segner(up_to);
    std::vector<BaseCheck> checks;
    checks.reserve(up_to);
    const ExactInt base = to_int(M);
    ExactInt power = 1;
    for (std::uint64_t n = 1; n <= up_to; ++n) {
        power *= base;
        const ExactInt lhs = ExactInt::pow(to_int(n), r) * table[n];
        checks.push_back({n, table[n], lhs <= power});
    }
    return checks;
}

std::string to_string(Verdict verdict) { return verdict == Verdict::verified ? "verified" : "falsified"; }

BoundCertificate build_certificate(unsigned r, std::uint64_t M, std::uint64_t threshold,
                                   std::uint64_t monotone_check_to) {
    require(r >= 2, "build_certificate: r must be >= 2");
    require(M >= 1, "build_certificate: M must be >= 1");
    require(threshold >= kMonotoneRegionStart, "build_certificate: threshold must be >= 4");
    require(monotone_check_to >= threshold, "build_certificate: monotone_check_to must be >= threshold");

    BoundCertificate cert;
    cert.r = r;
    cert.M = M;
    cert.threshold = threshold;
    cert.base_case_max = threshold;
    cert.base_checks = verify_base_cases(r, M, threshold);
    for (const auto& check : cert.base_checks) {
        if (!check.passes) {
            cert.failures.push_back("base case n=" + std::to_string(check.n) + ": n^" + std::to_string(r) +
                                    "*C_n > M^n");
        }
    }

    cert.g_at_threshold = quotient_g_general(r, threshold);
    cert.g_prev_threshold = quotient_g_general(r, threshold - 1);
    if (!(cert.g_at_threshold < ExactRational(to_int(M)))) {
        cert.failures.push_back("g(" + std::to_string(threshold) + ") = " + cert.g_at_threshold.to_decimal(6) +
                                "... is not < M = " + std::to_string(M));
    }

    const std::uint64_t to = std::max(monotone_check_to, kMonotoneRegionStart + 1);
    const MonotoneReport monotone = check_monotone_decreasing(r, kMonotoneRegionStart, to);
    cert.monotone = {kMonotoneRegionStart, to, monotone.holds, monotone.first_violation};
    if (!monotone.holds) {
        cert.failures.push_back("g(n) > g(n+1) fails at n=" + std::to_string(*monotone.first_violation));
    }

    cert.trusted_lemma = trusted_lemma_for(r);
    cert.verdict = cert.failures.empty() ? Verdict::verified : Verdict::falsified;
    if (cert.verdict == Verdict::verified) cert.radius_lower_bound = ExactRational(1, to_int(M));
    return cert;
}

CertificateAudit audit_certificate(const BoundCertificate& cert) {
    CertificateAudit audit;
    auto issue = [&](std::string text) {
        audit.ok = false;
        audit.issues.push_back(std::move(text));
    };

    if (cert.schema_version != kCertificateSchemaVersion) issue("schema_version: unsupported");
    if (cert.r < 2) issue("r: must be >= 2");
    if (cert.M < 1) issue("M: must be >= 1");
    if (cert.threshold < kMonotoneRegionStart) issue("threshold: must be >= 4");
    if (cert.base_case_max != cert.threshold) issue("base_case_max: must equal threshold");
    if (cert.monotone.from != kMonotoneRegionStart) issue("monotone_spot_checks.from: must be 4");
    if (cert.monotone.to < cert.threshold) issue("monotone_spot_checks.to: must be >= threshold");
    if (cert.verdict == Verdict::verified && !cert.failures.empty()) issue("verdict: verified with failures listed");
    if (!audit.ok) return audit;

    // Recompute from scratch and compare field by field.
    const BoundCertificate fresh = build_certificate(cert.r, cert.M, cert.threshold, cert.monotone.to);
    if (cert.base_checks != fresh.base_checks) {
        if (cert.base_checks.size() != fresh.base_checks.size()) {
            issue("base_checks: expected " + std::to_string(fresh.base_checks.size()) + " entries");
        } else {
            for (std::size_t i = 0; i < fresh.base_checks.size(); ++i) {
                if (cert.base_checks[i] != fresh.base_checks[i]) {
                    issue("base_checks[" + std::to_string(i) + "]: does not reproduce");
                }
            }
        }
    }
    if (cert.g_at_threshold != fresh.g_at_threshold) issue("g_at_threshold: does not reproduce");
    if (cert.g_prev_threshold != fresh.g_prev_threshold) issue("g_prev_threshold: does not reproduce");
    if (cert.monotone != fresh.monotone) issue("monotone_spot_checks: does not reproduce");
    if (cert.verdict != fresh.verdict) issue("verdict: recorded " + to_string(cert.verdict) + ", recomputed " + to_string(fresh.verdict));
    if (cert.radius_lower_bound != fresh.radius_lower_bound) issue("radius_lower_bound: does not reproduce");
    if (cert.trusted_lemma != fresh.trusted_lemma) issue("trusted_lemma: does not match the lemma relied on");
    return audit;
}

bool verify_certificate(const BoundCertificate& cert) { return audit_certificate(cert).ok; }

SearchResult search_bound(unsigned r, const SearchOptions& options) {
    require(r >= 2, "search_bound: r must be >= 2");
    SearchResult result;
    result.r = r;

    // lim g_r(n) = 2 + 2ζ(r); refine until the bracket separates integers.
    std::uint64_t terms = 1'000;
    CertifiedInterval limit = zeta_bracket(r, terms) * ExactRational(2) + ExactRational(2);
    while (limit.lo().floor() != limit.hi().floor() && terms < 10'000'000) {
        terms *= 10;
        limit = zeta_bracket(r, terms) * ExactRational(2) + ExactRational(2);
    }
    result.limit = limit;
    const ExactInt lowest = std::max(limit.hi().floor() + ExactInt(1), ExactInt(2));
    const std::uint64_t first_candidate = mpz_get_ui(lowest.raw().get_mpz_t());

    // g_r(4), g_r(5), ... computed once and reused across candidates.
    std::vector<ExactRational> g_values;
    std::optional<QuotientSequence> sequence;
    auto g_at = [&](std::uint64_t n) -> const ExactRational& {
        while (g_values.size() <= n - kMonotoneRegionStart) {
            const std::uint64_t next = kMonotoneRegionStart + g_values.size();
            if (r == 2) {
                if (!sequence) {
                    sequence.emplace(next);
                } else {
                    sequence->advance();
                }
                g_values.push_back(sequence->g());
            } else {
                g_values.push_back(quotient_g_general(r, next));
            }
        }
        return g_values[n - kMonotoneRegionStart];
    };

    // Raising M only relaxes n^r·C_n <= M^n, so a few dozen candidates suffice.
    for (std::uint64_t M = first_candidate; M < first_candidate + 64; ++M) {
        const ExactRational bound(to_int(M));
        std::optional<std::uint64_t> threshold;
        for (std::uint64_t n = kMonotoneRegionStart; n <= options.scan_limit; ++n) {
            if (g_at(n) < bound) {
                threshold = n;
                break;
            }
        }
        if (!threshold) {
            result.message = "no threshold N <= " + std::to_string(options.scan_limit) + " with g_" +
                             std::to_string(r) + "(N) < " + std::to_string(M);
            return result;
        }
        const auto base = verify_base_cases(r, M, *threshold);
        if (!std::all_of(base.begin(), base.end(), [](const BaseCheck& c) { return c.passes; })) continue;

        BoundCertificate cert = build_certificate(r, M, *threshold, *threshold + options.check_window);
        if (cert.verdict != Verdict::verified) {
            result.message = "candidate M=" + std::to_string(M) + ", N=" + std::to_string(*threshold) +
                             " failed: " + cert.failures.front();
            return result;
        }
        result.found = true;
        result.M = M;
        result.N = *threshold;
        result.certificate = std::move(cert);
        result.message = "verified";
        return result;
    }
    result.message = "base cases failed for every candidate M";
    return result;
}

}  // namespace segner
