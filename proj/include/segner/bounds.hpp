#pragma once

/**
 * @file bounds.hpp
 * @brief Exact checks behind the bound C_n <= M^n / n^r.
 *
 * Substituting C_k <= M^k / k^r into Segner's recursion bounds C_{n+1} by
 * M^n·S_r(n) with
 *
 *     S_r(n) = 2/n^r + Σ_{k=1..n-1} 1/(k(n-k))^r,
 *
 * so the induction step from n to n+1 goes through exactly when the
 * quotient g_r(n) = S_r(n)·(n+1)^r is at most M. For r = 2,
 *
 *     S(n) = (2/n^2)(1 + Σ_{k<n} 1/k^2) + (4/n^3) H_{n-1},
 *
 * g decreases for n >= 4 towards 2 + π²/3, g(36) > 6 > g(37), and the base
 * cases n <= 37 hold, which together give C_n <= 6^n/n^2 for all n >= 1
 * and a radius of convergence of at least 1/6.
 *
 * Every comparison here is exact; nothing is rounded.
 */

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "segner/exactnum.hpp"

namespace segner {

/// S(n) by direct summation of the defining terms. n >= 1.
ExactRational sum_S(std::uint64_t n);
/// S(n) from the harmonic rewrite. n >= 2.
ExactRational sum_S_closed(std::uint64_t n);
/// g(n) = S(n)·(n+1)^2 from sum_S. n >= 1.
ExactRational quotient_g(std::uint64_t n);
/// g(n) from sum_S_closed; the practical route for large n. n >= 2.
ExactRational quotient_g_closed(std::uint64_t n);

/// S_r(n) for integer r >= 2, n >= 1, by direct summation.
ExactRational sum_S_general(unsigned r, std::uint64_t n);
/// g_r(n) = S_r(n)·(n+1)^r.
ExactRational quotient_g_general(unsigned r, std::uint64_t n);

/// Walks g(n), g(n+1), ... for r = 2, updating H_{n-1} and Σ_{k<n} 1/k^2
/// incrementally instead of resumming.
class QuotientSequence {
public:
    /// start >= 2.
    explicit QuotientSequence(std::uint64_t start);

    std::uint64_t n() const { return n_; }
    const ExactRational& g() const { return g_; }
    void advance();

private:
    void refresh();

    std::uint64_t n_;
    ExactRational harmonic_;        // H_{n-1}
    ExactRational inverse_squares_; // Σ_{k<n} 1/k^2
    ExactRational g_;
};

struct MonotoneReport {
    std::uint64_t from = 0;
    std::uint64_t to = 0;
    bool holds = true;
    /// Smallest n in [from, to-1] with g(n) <= g(n+1).
    std::optional<std::uint64_t> first_violation;
};

/// g(n) > g(n+1) for every n in [from, to-1], r = 2.
/// Throws std::invalid_argument unless 1 <= from < to.
MonotoneReport check_monotone_decreasing(std::uint64_t from, std::uint64_t to);
/// Same for g_r; r = 2 dispatches to the incremental route.
MonotoneReport check_monotone_decreasing(unsigned r, std::uint64_t from, std::uint64_t to);

/// 1/2 + 1/3 + ... + 1/(n-1) > 1/2 + 1/(2n); the step to which g(n) > g(n+1)
/// reduces. True exactly for n >= 4. Throws for n < 2.
bool reduced_inequality_holds(std::uint64_t n);
/// Every n in [from, to] where reduced_inequality_holds(n) is false.
std::vector<std::uint64_t> reduced_inequality_failures(std::uint64_t from, std::uint64_t to);

struct SandwichReport {
    bool holds = true;
    std::optional<std::uint64_t> first_violation;
};

/// limit.hi < g(n) < upper for all n in [from, to].
SandwichReport check_sandwich(std::uint64_t from, std::uint64_t to, const CertifiedInterval& limit,
                              const ExactRational& upper);

/// The r = 1 attempt needs H_{n-1} < n/(n+1) - 2 at every step.
struct R1FailureReport {
    std::uint64_t n_min = 0;
    std::uint64_t n_max = 0;
    std::uint64_t checked = 0;
    std::vector<std::uint64_t> successes;  // n where the inequality held
};

/// Range must lie within [2, 10^4].
R1FailureReport demonstrate_r1_failure(std::uint64_t n_min, std::uint64_t n_max);

/// The r = 0 attempt needs M^n (n+1) <= M^(n+1), i.e. n + 1 <= M.
struct R0FailureReport {
    std::uint64_t M = 0;
    std::uint64_t n_min = 0;
    std::uint64_t n_max = 0;
    std::vector<std::uint64_t> step_holds;  // n where M^n (n+1) <= M^(n+1)
};

R0FailureReport demonstrate_r0_failure(std::uint64_t M, std::uint64_t n_min, std::uint64_t n_max);

struct BaseCheck {
    std::uint64_t n = 0;
    ExactInt catalan;
    bool passes = false;  // n^r · C_n <= M^n

    friend bool operator==(const BaseCheck&, const BaseCheck&) = default;
};

/// n^r·C_n <= M^n for 1 <= n <= up_to, C_n from Segner's recursion.
std::vector<BaseCheck> verify_base_cases(unsigned r, std::uint64_t M, std::uint64_t up_to);

enum class Verdict { verified, falsified };

std::string to_string(Verdict verdict);

struct MonotoneSpotCheck {
    std::uint64_t from = 4;
    std::uint64_t to = 0;
    bool passes = false;
    std::optional<std::uint64_t> first_violation;

    friend bool operator==(const MonotoneSpotCheck&, const MonotoneSpotCheck&) = default;
};

inline constexpr int kCertificateSchemaVersion = 1;
inline constexpr std::uint64_t kMonotoneRegionStart = 4;

/// Finite evidence that C_n <= M^n / n^r for every n >= 1.
///
/// The induction step at n yields C_{n+1} once g_r(n) < M, so the base
/// checks run through n = threshold itself and the step takes over from
/// threshold + 1. That g_r stays below M past the spot-checked range rests
/// on the lemma named in `trusted_lemma`.
struct BoundCertificate {
    int schema_version = kCertificateSchemaVersion;
    unsigned r = 2;
    std::uint64_t M = 0;
    std::uint64_t threshold = 0;
    std::uint64_t base_case_max = 0;
    std::vector<BaseCheck> base_checks;
    ExactRational g_at_threshold;
    ExactRational g_prev_threshold;
    MonotoneSpotCheck monotone;
    std::string trusted_lemma;
    Verdict verdict = Verdict::falsified;
    std::vector<std::string> failures;
    std::optional<ExactRational> radius_lower_bound;
};

/// Assembles and checks a certificate. Never throws for a false claim; the
/// verdict is falsified and `failures` names each failing check.
/// Throws std::invalid_argument if r < 2, M < 1, threshold < 4 or
/// monotone_check_to < threshold.
BoundCertificate build_certificate(unsigned r, std::uint64_t M, std::uint64_t threshold,
                                   std::uint64_t monotone_check_to);

struct CertificateAudit {
    bool ok = true;
    std::vector<std::string> issues;
};

/// Recomputes every recorded check from scratch and lists discrepancies.
CertificateAudit audit_certificate(const BoundCertificate& cert);
bool verify_certificate(const BoundCertificate& cert);

struct SearchOptions {
    std::uint64_t scan_limit = 100'000;
    std::uint64_t check_window = 1'000;
};

struct SearchResult {
    bool found = false;
    unsigned r = 2;
    std::uint64_t M = 0;
    std::uint64_t N = 0;
    std::optional<BoundCertificate> certificate;
    /// Certified bracket for lim g_r(n) = 2 + 2·ζ(r).
    std::optional<CertifiedInterval> limit;
    std::string message;
};

/// Smallest integer M (then smallest N >= 4) admitting a verified
/// certificate. Candidates below the certified limit 2 + 2ζ(r) are skipped;
/// a candidate whose threshold is not reached within scan_limit ends the
/// search with found = false.
SearchResult search_bound(unsigned r, const SearchOptions& options = {});

}  // namespace segner
