// Acceptance suite: one line per criterion, nonzero exit if any fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "segner/asymptotics.hpp"
#include "segner/bounds.hpp"
#include "segner/catalan.hpp"
#include "segner/certificate_json.hpp"
#include "segner/cli.hpp"
#include "segner/oracle.hpp"
#include "segner/series.hpp"

using namespace segner;

namespace {

ExactRational q(const char* text) { return ExactRational::parse(text); }

struct Outcome {
    bool pass = true;
    std::string detail;

    void require(bool condition, const std::string& what) {
        if (!condition) {
            pass = false;
            detail += (detail.empty() ? "" : "; ") + what;
        }
    }
};

struct Criterion {
    int id;
    const char* name;
    double budget_seconds;
    std::function<Outcome()> body;
};

// Shared between criteria 6 and 9; built lazily so its cost is charged once.
const CertifiedInterval& limit_bracket() {
    static const CertifiedInterval bracket = limit_constant_bracket(1'000'000);
    return bracket;
}

Outcome value_pinning() {
    Outcome o;
    std::ostringstream out;
    std::ostringstream err;
    const int code = run_cli({"compute", "--max", "8", "--method", "all", "--format", "json"}, out, err);
    o.require(code == kExitOk, "exit code " + std::to_string(code));
    const auto doc = nlohmann::json::parse(out.str());
    const std::vector<std::string> expected{"1", "1", "2", "5", "14", "42", "132", "429", "1430"};
    for (const char* method : {"segner", "product", "binomial"}) {
        o.require(doc["methods"][method].get<std::vector<std::string>>() == expected, std::string(method) + " table");
    }
    o.require(doc["agree"] == true, "methods disagree");
    o.detail = o.pass ? "C_1..C_8 = 1 2 5 14 42 132 429 1430, three methods agree" : o.detail;
    return o;
}

Outcome oracle_equivalence() {
    Outcome o;
    const CatalanTable table = compute_binomial(9);
    for (int sides = 3; sides <= 11; ++sides) {
        const TriangulationCount result = count_triangulations(sides, {kDefaultMaxSides, true});
        o.require(result.count == table[static_cast<std::size_t>(sides - 2)],
                  "sides " + std::to_string(sides) + " gave " + result.count.to_string());
    }
    if (o.pass) o.detail = "sides 3..11 match C_1..C_9 (T_9 = 429, T_10 = 1430)";
    return o;
}

Outcome goldbach_identity() {
    Outcome o;
    const GoldbachCheck clean = verify_goldbach_quadratic(200);
    o.require(clean.holds, "order 200 check failed");
    const SeriesPoly c = catalan_series(200);
    const std::size_t fault = 117;
    const GoldbachCheck bad = verify_goldbach_quadratic(c.with_coefficient(fault, c[fault] + ExactRational(1)));
    o.require(!bad.holds, "fault not detected");
    o.require(bad.first_failing_index == std::optional<std::size_t>(fault), "fault reported at wrong index");
    if (o.pass) o.detail = "order 200 holds; fault at C_117 reported at 117";
    return o;
}

Outcome threshold_reproduction() {
    Outcome o;
    const ExactRational g36 = quotient_g(36);
    const ExactRational g37 = quotient_g(37);
    o.require(q("60150/10000") <= g36 && g36 < q("60151/10000"), "g(36) = " + g36.to_decimal(6));
    o.require(q("59979/10000") <= g37 && g37 < q("59980/10000"), "g(37) = " + g37.to_decimal(6));
    if (o.pass) o.detail = "g(36) = " + g36.to_decimal(8) + "..., g(37) = " + g37.to_decimal(8) + "...";
    return o;
}

Outcome certificate() {
    Outcome o;
    const BoundCertificate cert = build_certificate(2, 6, 37, 10'000);
    o.require(cert.verdict == Verdict::verified, "M=6 certificate not verified");
    o.require(cert.radius_lower_bound == std::optional<ExactRational>(q("1/6")), "radius bound is not 1/6");
    o.require(verify_certificate(cert), "verify_certificate rejected the built certificate");
    const BoundCertificate back = certificate_from_json(nlohmann::json::parse(to_json(cert).dump()));
    o.require(verify_certificate(back), "JSON round trip rejected");
    o.require(build_certificate(2, 5, 37, 10'000).verdict == Verdict::falsified, "M=5 not falsified");
    o.require(build_certificate(2, 6, 36, 10'000).verdict == Verdict::falsified, "threshold 36 not falsified");
    if (o.pass) o.detail = "M=6, N=37 verified, R >= 1/6, JSON round trip ok; M=5 and N=36 falsified";
    return o;
}

Outcome quotient_properties() {
    Outcome o;
    bool closed_ok = true;
    for (std::uint64_t n = 2; n <= 2000; ++n) {
        if (sum_S(n) != sum_S_closed(n)) {
            closed_ok = false;
            o.require(false, "sum_S != sum_S_closed at n = " + std::to_string(n));
            break;
        }
    }
    const MonotoneReport monotone = check_monotone_decreasing(4, 10'000);
    o.require(monotone.holds, "g not decreasing at n = " + std::to_string(monotone.first_violation.value_or(0)));
    const auto failures = reduced_inequality_failures(2, 10'000);
    o.require(failures == std::vector<std::uint64_t>{2, 3}, "reduced inequality failure set differs");
    const SandwichReport sandwich = check_sandwich(37, 10'000, limit_bracket(), q("6"));
    o.require(sandwich.holds, "sandwich fails at n = " + std::to_string(sandwich.first_violation.value_or(0)));
    if (o.pass && closed_ok) {
        o.detail = "closed form exact on 2..2000; decreasing on 4..10^4; reduced inequality fails only at 2, 3; "
                   "limit < g < 6 on 37..10^4";
    }
    return o;
}

Outcome consequence_audit() {
    Outcome o;
    const auto checks = verify_base_cases(2, 6, 2000);
    o.require(checks.size() == 2000, "wrong number of checks");
    o.require(std::all_of(checks.begin(), checks.end(), [](const BaseCheck& c) { return c.passes; }),
              "a Segner-table check failed");
    // Repeat against the binomial route.
    const CatalanTable table = compute_binomial(2000);
    ExactInt six_pow(1);
    for (std::uint64_t n = 1; n <= 2000; ++n) {
        six_pow = six_pow * ExactInt(6);
        if (ExactInt(static_cast<long>(n * n)) * table[n] > six_pow) {
            o.require(false, "binomial check failed at n = " + std::to_string(n));
            break;
        }
    }
    if (o.pass) o.detail = "n^2 C_n <= 6^n for 1 <= n <= 2000 (Segner and binomial tables)";
    return o;
}

Outcome r1_failure() {
    Outcome o;
    const R1FailureReport report = demonstrate_r1_failure(2, 1000);
    o.require(report.checked == 999, "checked " + std::to_string(report.checked));
    o.require(report.successes.empty(), std::to_string(report.successes.size()) + " successes");
    if (o.pass) o.detail = "0 successes over 2..1000";
    return o;
}

Outcome limit_constant() {
    Outcome o;
    const std::vector<std::uint64_t> points{37, 100, 1000, 10'000, 100'000};
    const auto rows = limit_convergence_table(points, limit_bracket());
    for (std::size_t i = 1; i < rows.size(); ++i) {
        o.require(rows[i].distance.hi() < rows[i - 1].distance.lo(),
                  "distance not decreasing at n = " + std::to_string(rows[i].n));
    }
    const CertifiedInterval& last = rows.back().distance;
    o.require(last.lo() >= 0 && last.hi() < q("1/1000"), "g(10^5) distance " + stable_decimal(last, 8));
    if (o.pass) {
        o.detail = "limit in " + stable_decimal(limit_bracket(), 8) + ", g(10^5) - limit = " + stable_decimal(last, 8);
    }
    return o;
}

Outcome asymptotics() {
    Outcome o;
    const std::vector<std::uint64_t> point{1000};
    const RadiusSample root = estimate_radius(point, kDefaultPrecisionBits).front();
    o.require(root.root.lo() > q("394/100") && root.root.hi() < q("397/100"), "C_1000^(1/1000) out of range");
    const StirlingRow stirling = stirling_ratio(point, kDefaultPrecisionBits).front();
    o.require(stirling.ratio.lo() > q("998/1000") && stirling.ratio.hi() < q("1"), "Stirling ratio out of range");
    const FitResult fit = fit_r0(512, 4096);
    o.require(fit.slope >= 1.48 && fit.slope <= 1.52, "slope " + fit.slope_decimal);
    if (o.pass) {
        o.detail = "C_1000^(1/1000) = " + stable_decimal(root.root, 6) + ", ratio(1000) = " +
                   stable_decimal(stirling.ratio, 6) + ", slope = " + fit.slope_decimal.substr(0, 8);
    }
    return o;
}

Outcome general_r() {
    Outcome o;
    const SearchResult search = search_bound(3);
    o.require(search.found && search.certificate.has_value(), "no certificate for r = 3: " + search.message);
    if (search.certificate) o.require(verify_certificate(*search.certificate), "r = 3 certificate rejected");
    for (std::uint64_t n = 1; n <= 500; ++n) {
        if (sum_S_general(2, n) != sum_S(n)) {
            o.require(false, "sum_S_general(2, n) differs at n = " + std::to_string(n));
            break;
        }
    }
    if (o.pass) {
        o.detail = "r = 3: M = " + std::to_string(search.M) + ", N = " + std::to_string(search.N) +
                   " verified; sum_S_general(2, .) = sum_S on 1..500";
    }
    return o;
}

}  // namespace

int main() {
    const std::vector<Criterion> criteria{
        {1, "value pinning", 1, value_pinning},
        {2, "oracle equivalence", 60, oracle_equivalence},
        {3, "Goldbach identity", 10, goldbach_identity},
        {4, "threshold reproduction", 1, threshold_reproduction},
        {5, "certificate", 30, certificate},
        {6, "quotient properties", 120, quotient_properties},
        {7, "consequence audit", 30, consequence_audit},
        {8, "r = 1 failure", 1, r1_failure},
        {9, "limit constant", 120, limit_constant},
        {10, "asymptotics", 120, asymptotics},
        {11, "general r", 60, general_r},
    };

    int failed = 0;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome outcome;
        try {
            outcome = c.body();
        } catch (const std::exception& e) {
            outcome.pass = false;
            outcome.detail = std::string("exception: ") + e.what();
        }
        const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (seconds > c.budget_seconds) {
            outcome.pass = false;
            outcome.detail += "; over the " + std::to_string(static_cast<int>(c.budget_seconds)) + " s budget";
        }
        if (!outcome.pass) ++failed;
        std::printf("[%s] %2d %-24s %7.2f s  %s\n", outcome.pass ? "PASS" : "FAIL", c.id, c.name, seconds,
                    outcome.detail.c_str());
        std::fflush(stdout);
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
