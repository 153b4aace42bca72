#include "segner/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "segner/asymptotics.hpp"
#include "segner/bounds.hpp"
#include "segner/catalan.hpp"
#include "segner/certificate_json.hpp"
#include "segner/oracle.hpp"
#include "segner/series.hpp"

namespace segner {

namespace {

using Json = nlohmann::ordered_json;

enum class Format { text, json, csv };

struct Common {
    Format format = Format::text;
    std::string output;
    unsigned precision_bits = kDefaultPrecisionBits;
};

struct Emitted {
    std::string body;
    int code = kExitOk;
};

// Key/value reports share one shape across the three formats.
using Fields = std::vector<std::pair<std::string, Json>>;

std::string scalar_text(const Json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

std::string render_fields(const Fields& fields, Format format) {
    std::ostringstream os;
    if (format == Format::json) {
        Json doc = Json::object();
        for (const auto& [k, v] : fields) doc[k] = v;
        os << doc.dump(2) << "\n";
    } else if (format == Format::csv) {
        os << "key,value\n";
        for (const auto& [k, v] : fields) os << k << "," << scalar_text(v) << "\n";
    } else {
        for (const auto& [k, v] : fields) os << k << ": " << scalar_text(v) << "\n";
    }
    return os.str();
}

// Rows of already-formatted cells; JSON output is an array of objects.
std::string render_table(const std::vector<std::string>& header, const std::vector<std::vector<Json>>& rows,
                         Format format) {
    std::ostringstream os;
    if (format == Format::json) {
        Json doc = Json::array();
        for (const auto& row : rows) {
            Json obj = Json::object();
            for (std::size_t i = 0; i < header.size(); ++i) obj[header[i]] = row[i];
            doc.push_back(std::move(obj));
        }
        os << doc.dump(2) << "\n";
        return os.str();
    }
    const char* sep = format == Format::csv ? "," : "  ";
    std::vector<std::size_t> widths(header.size());
    for (std::size_t i = 0; i < header.size(); ++i) {
        widths[i] = header[i].size();
        for (const auto& row : rows) widths[i] = std::max(widths[i], scalar_text(row[i]).size());
    }
    auto line = [&](auto cell) {
        for (std::size_t i = 0; i < header.size(); ++i) {
            if (i > 0) os << sep;
            if (format == Format::text) {
                os << std::setw(static_cast<int>(widths[i])) << cell(i);
            } else {
                os << cell(i);
            }
        }
        os << "\n";
    };
    line([&](std::size_t i) { return header[i]; });
    for (const auto& row : rows) line([&](std::size_t i) { return scalar_text(row[i]); });
    return os.str();
}

std::size_t memory_cap_mb() {
    const char* raw = std::getenv("SEGNER_MAX_MEMORY_MB");
    if (raw == nullptr) return 0;
    try {
        return static_cast<std::size_t>(std::stoull(raw));
    } catch (const std::exception&) {
        return 0;
    }
}

// C_n has about 2n bits, so a table through max_index holds ~max^2/4 bytes.
void enforce_table_cap(std::uint64_t max_index, std::size_t tables) {
    const std::size_t cap = memory_cap_mb();
    if (cap == 0) return;
    const double estimate_mb = static_cast<double>(max_index) * static_cast<double>(max_index) / 4.0 *
                               static_cast<double>(tables) / (1024.0 * 1024.0);
    if (estimate_mb > static_cast<double>(cap)) {
        throw ResourceLimitError("estimated " + std::to_string(static_cast<std::uint64_t>(estimate_mb)) +
                                 " MB exceeds SEGNER_MAX_MEMORY_MB=" + std::to_string(cap));
    }
}

void add_common(CLI::App* cmd, Common& common) {
    cmd->add_option("--format", common.format, "Output format")
        ->transform(CLI::CheckedTransformer(
            std::map<std::string, Format>{{"text", Format::text}, {"json", Format::json}, {"csv", Format::csv}}));
    cmd->add_option("--output", common.output, "Write results to this file instead of stdout");
}

void add_precision(CLI::App* cmd, Common& common) {
    cmd->add_option("--precision-bits", common.precision_bits, "Working precision in bits")
        ->check(CLI::Range(16u, 1u << 16));
}

// compute

struct ComputeArgs {
    std::uint64_t max = 8;
    std::string method = "all";
    bool t_index = false;
};

Emitted run_compute(const ComputeArgs& args, const Common& common) {
    std::vector<CatalanMethod> methods;
    if (args.method == "all") {
        methods = {CatalanMethod::segner, CatalanMethod::product, CatalanMethod::binomial};
    } else {
        methods = {*parse_catalan_method(args.method)};
    }
    enforce_table_cap(args.max, methods.size());

    std::vector<CatalanTable> tables;
    for (auto m : methods) tables.push_back(compute(m, args.max));

    bool agree = true;
    std::vector<bool> row_agrees(args.max + 1, true);
    for (std::uint64_t n = 0; n <= args.max; ++n) {
        for (const auto& t : tables) {
            if (t[n] != tables.front()[n]) row_agrees[n] = false;
        }
        agree = agree && row_agrees[n];
    }

    const std::string index_name = args.t_index ? "T" : "C";
    const std::uint64_t offset = args.t_index ? 2 : 0;
    Emitted emitted;
    emitted.code = agree ? kExitOk : kExitFalsified;

    if (common.format == Format::json) {
        Json per_method = Json::object();
        for (const auto& t : tables) {
            Json values = Json::array();
            for (const auto& v : t.values()) values.push_back(v.to_string());
            per_method[std::string(to_string(t.method()))] = std::move(values);
        }
        Json doc;
        doc["max_index"] = args.max;
        doc["index"] = index_name;
        doc["first_index"] = offset;
        doc["methods"] = std::move(per_method);
        doc["agree"] = agree;
        emitted.body = doc.dump(2) + "\n";
        return emitted;
    }

    std::vector<std::string> header{"n"};
    if (tables.size() == 1) {
        header.push_back(index_name + "_n");
    } else {
        for (const auto& t : tables) header.emplace_back(to_string(t.method()));
        header.emplace_back("agree");
    }
    std::vector<std::vector<Json>> rows;
    for (std::uint64_t n = 0; n <= args.max; ++n) {
        std::vector<Json> row{n + offset};
        for (const auto& t : tables) row.emplace_back(t[n].to_string());
        if (tables.size() > 1) row.emplace_back(row_agrees[n] ? "yes" : "NO");
        rows.push_back(std::move(row));
    }
    emitted.body = render_table(header, rows, common.format);
    return emitted;
}

// oracle

struct OracleArgs {
    int sides = 0;
    int max_sides = kDefaultMaxSides;
};

Emitted run_oracle(const OracleArgs& args, const Common& common) {
    const TriangulationCount result = count_triangulations(args.sides, {args.max_sides, false});
    const ExactInt expected = catalan_binomial(static_cast<std::size_t>(args.sides - 2));
    const bool matches = result.count == expected;
    Fields fields{{"sides", args.sides}, {"count", result.count.to_string()}, {"matches_catalan", matches}};
    return {render_fields(fields, common.format), matches ? kExitOk : kExitFalsified};
}

// series

struct SeriesArgs {
    std::size_t order = 200;
    std::optional<std::size_t> perturb;
    std::string x = "1/6";
};

Emitted run_series_verify(const SeriesArgs& args, const Common& common) {
    if (args.order < 1) throw std::invalid_argument("--order must be >= 1");
    SeriesPoly c = catalan_series(args.order);
    if (args.perturb) {
        if (*args.perturb > args.order) throw std::invalid_argument("--perturb index exceeds --order");
        c = c.with_coefficient(*args.perturb, c[*args.perturb] + ExactRational(1));
    }
    const GoldbachCheck check = verify_goldbach_quadratic(c);
    Fields fields{
        {"order", args.order},
        {"perturbed_index", args.perturb ? Json(*args.perturb) : Json(nullptr)},
        {"holds", check.holds},
        {"first_failing_index", check.first_failing_index ? Json(*check.first_failing_index) : Json(nullptr)},
        {"failing_identity", check.holds ? Json(nullptr) : Json(check.failing_identity)},
    };
    return {render_fields(fields, common.format), check.holds ? kExitOk : kExitFalsified};
}

Emitted run_series_eval(const SeriesArgs& args, const Common& common) {
    const ExactRational x = ExactRational::parse(args.x);
    const ExactRational value = evaluate_partial_sum(catalan_series(args.order), x);
    Fields fields{{"order", args.order},
                  {"x", x.to_string()},
                  {"value", value.to_string()},
                  {"decimal", value.to_decimal(20)}};
    return {render_fields(fields, common.format), kExitOk};
}

// bounds

struct BoundsArgs {
    unsigned r = 2;
    std::uint64_t n = 37;
    std::uint64_t m = 6;
    std::uint64_t threshold = 37;
    std::uint64_t monotone_to = 1000;
    std::uint64_t scan_limit = SearchOptions{}.scan_limit;
    std::uint64_t window = SearchOptions{}.check_window;
    std::uint64_t n_min = 2;
    std::uint64_t n_max = 1000;
    std::string input;
};

Emitted run_bounds_s(const BoundsArgs& args, const Common& common) {
    const ExactRational s = args.r == 2 ? sum_S(args.n) : sum_S_general(args.r, args.n);
    Fields fields{{"r", args.r}, {"n", args.n}, {"S", s.to_string()}, {"decimal", s.to_decimal(20)}};
    return {render_fields(fields, common.format), kExitOk};
}

Emitted run_bounds_g(const BoundsArgs& args, const Common& common) {
    ExactRational g;
    if (args.r == 2) {
        g = args.n >= 2 ? quotient_g_closed(args.n) : quotient_g(args.n);
    } else {
        g = quotient_g_general(args.r, args.n);
    }
    Fields fields{{"r", args.r}, {"n", args.n}, {"g", g.to_string()}, {"decimal", g.to_decimal(20)}};
    return {render_fields(fields, common.format), kExitOk};
}

std::string certificate_text(const BoundCertificate& cert) {
    std::ostringstream os;
    os << "claim: C_n <= " << cert.M << "^n / n^" << cert.r << " for all n >= 1\n"
       << "verdict: " << to_string(cert.verdict) << "\n"
       << "threshold: " << cert.threshold << "\n"
       << "base cases: n = 1.." << cert.base_case_max << ", "
       << std::count_if(cert.base_checks.begin(), cert.base_checks.end(), [](const BaseCheck& c) { return c.passes; })
       << " of " << cert.base_checks.size() << " pass\n"
       << "g(" << cert.threshold << "): " << cert.g_at_threshold.to_decimal(10) << "...\n"
       << "g(" << cert.threshold - 1 << "): " << cert.g_prev_threshold.to_decimal(10) << "...\n"
       << "monotone on [" << cert.monotone.from << ", " << cert.monotone.to
       << "]: " << (cert.monotone.passes ? "yes" : "no") << "\n"
       << "trusted lemma: " << cert.trusted_lemma << "\n";
    for (const auto& f : cert.failures) os << "failure: " << f << "\n";
    if (cert.radius_lower_bound) os << "radius of convergence >= " << cert.radius_lower_bound->to_string() << "\n";
    return os.str();
}

std::string certificate_body(const BoundCertificate& cert, Format format) {
    if (format == Format::json) return to_json(cert).dump(2) + "\n";
    if (format == Format::csv) {
        std::vector<std::vector<Json>> rows;
        for (const auto& c : cert.base_checks) rows.push_back({c.n, c.catalan.to_string(), c.passes});
        return render_table({"n", "C_n", "passes"}, rows, Format::csv);
    }
    return certificate_text(cert);
}

Emitted run_bounds_certify(const BoundsArgs& args, const Common& common) {
    const BoundCertificate cert = build_certificate(args.r, args.m, args.threshold, args.monotone_to);
    return {certificate_body(cert, common.format), cert.verdict == Verdict::verified ? kExitOk : kExitFalsified};
}

Emitted run_bounds_search(const BoundsArgs& args, const Common& common) {
    const SearchResult result = search_bound(args.r, {args.scan_limit, args.window});
    Emitted emitted;
    emitted.code = result.found ? kExitOk : kExitFalsified;
    if (common.format == Format::json) {
        Json doc;
        doc["found"] = result.found;
        doc["r"] = result.r;
        doc["M"] = result.found ? Json(result.M) : Json(nullptr);
        doc["N"] = result.found ? Json(result.N) : Json(nullptr);
        doc["limit"] = result.limit ? to_json(*result.limit) : Json(nullptr);
        doc["message"] = result.message;
        doc["certificate"] = result.certificate ? to_json(*result.certificate) : Json(nullptr);
        emitted.body = doc.dump(2) + "\n";
        return emitted;
    }
    Fields fields{{"found", result.found},
                  {"r", result.r},
                  {"M", result.found ? Json(result.M) : Json(nullptr)},
                  {"N", result.found ? Json(result.N) : Json(nullptr)},
                  {"message", result.message}};
    emitted.body = render_fields(fields, common.format);
    return emitted;
}

Emitted run_bounds_r1(const BoundsArgs& args, const Common& common) {
    const R1FailureReport report = demonstrate_r1_failure(args.n_min, args.n_max);
    Fields fields{{"inequality", "H_{n-1} < n/(n+1) - 2"},
                  {"n_min", report.n_min},
                  {"n_max", report.n_max},
                  {"checked", report.checked},
                  {"successes", report.successes.size()},
                  {"fails_everywhere", report.successes.empty()}};
    return {render_fields(fields, common.format), report.successes.empty() ? kExitOk : kExitFalsified};
}

Emitted run_bounds_verify(const BoundsArgs& args, const Common& common) {
    std::string text;
    if (args.input == "-") {
        text.assign(std::istreambuf_iterator<char>(std::cin), {});
    } else {
        std::ifstream in(args.input);
        if (!in) throw std::invalid_argument("cannot read " + args.input);
        text.assign(std::istreambuf_iterator<char>(in), {});
    }
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw MalformedCertificate("<document>", e.what());
    }
    const BoundCertificate cert = certificate_from_json(doc);
    const CertificateAudit audit = audit_certificate(cert);
    const bool verified = audit.ok && cert.verdict == Verdict::verified;
    Fields fields{{"reproduces", audit.ok}, {"verdict", to_string(cert.verdict)}, {"issues", audit.issues}};
    return {render_fields(fields, common.format), verified ? kExitOk : kExitFalsified};
}

// asymptotics

struct AsymArgs {
    std::uint64_t max = 1024;
    std::vector<std::uint64_t> n;
    std::uint64_t n_min = 512;
    std::uint64_t n_max = 4096;
    std::uint64_t zeta_terms = kDefaultZetaTerms;
    std::string r = "7/5";
    std::uint64_t m = 4;
};

std::size_t shown_digits(unsigned precision_bits) { return std::min<std::size_t>(precision_bits * 3 / 10, 40); }

Emitted run_radius(const AsymArgs& args, const Common& common) {
    const auto points = args.n.empty() ? power_of_two_grid(1, args.max) : args.n;
    enforce_table_cap(*std::max_element(points.begin(), points.end()), 1);
    std::vector<std::vector<Json>> rows;
    for (const auto& s : estimate_radius(points, common.precision_bits)) {
        rows.push_back({s.n, stable_decimal(s.root, shown_digits(common.precision_bits)),
                        stable_decimal(CertifiedInterval(s.root.hi().reciprocal(), s.root.lo().reciprocal()),
                                       shown_digits(common.precision_bits))});
    }
    return {render_table({"n", "C_n^(1/n)", "1/C_n^(1/n)"}, rows, common.format), kExitOk};
}

Emitted run_limit(const AsymArgs& args, const Common& common) {
    const std::vector<std::uint64_t> points = args.n.empty() ? std::vector<std::uint64_t>{37, 100, 1000, 10000} : args.n;
    const CertifiedInterval limit = limit_constant_bracket(args.zeta_terms);
    std::vector<std::vector<Json>> rows;
    for (const auto& row : limit_convergence_table(points, limit)) {
        rows.push_back({row.n, row.g.to_decimal(10), row.distance.lo().to_decimal(10), row.distance.hi().to_decimal(10)});
    }
    return {render_table({"n", "g", "distance_lo", "distance_hi"}, rows, common.format), kExitOk};
}

Emitted run_stirling(const AsymArgs& args, const Common& common) {
    const auto points = args.n.empty() ? power_of_two_grid(1, args.max) : args.n;
    enforce_table_cap(*std::max_element(points.begin(), points.end()), 1);
    std::vector<std::vector<Json>> rows;
    for (const auto& row : stirling_ratio(points, common.precision_bits)) {
        rows.push_back({row.n, stable_decimal(row.ratio, shown_digits(common.precision_bits))});
    }
    return {render_table({"n", "ratio"}, rows, common.format), kExitOk};
}

Emitted run_r0(const AsymArgs& args, const Common& common) {
    enforce_table_cap(args.n_max, 1);
    const FitResult fit = fit_r0(args.n_min, args.n_max, common.precision_bits);
    Fields fields{{"n_min", fit.n_min},
                  {"n_max", fit.n_max},
                  {"samples", fit.samples},
                  {"slope", fit.slope_decimal},
                  {"intercept", fit.intercept_decimal},
                  {"residual_max", fit.residual_max}};
    return {render_fields(fields, common.format), kExitOk};
}

Emitted run_probe(const AsymArgs& args, const Common& common) {
    const auto points = args.n.empty() ? power_of_two_grid(16, 4096) : args.n;
    enforce_table_cap(*std::max_element(points.begin(), points.end()), 1);
    const ExactRational r = ExactRational::parse(args.r);
    std::vector<std::vector<Json>> rows;
    for (const auto& row : exponent_probe(r, args.m, points, common.precision_bits)) {
        rows.push_back({row.n, stable_decimal(row.log_ratio, 12)});
    }
    return {render_table({"n", "ln(C_n*n^r/M^n)"}, rows, common.format), kExitOk};
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact Catalan-number computations and convergence certificates", "segner"};
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all", "Show help for every subcommand");

    Common common;
    std::function<Emitted()> action;

    ComputeArgs compute_args;
    auto* compute_cmd = app.add_subcommand("compute", "Catalan numbers by one or all methods");
    compute_cmd->add_option("--max", compute_args.max, "Largest index n");
    compute_cmd->add_option("--method", compute_args.method, "segner|product|binomial|all")
        ->check(CLI::IsMember({"segner", "product", "binomial", "all"}));
    compute_cmd->add_flag("--t-index", compute_args.t_index, "Label rows as T_n = C_{n-2} (polygon sides)");
    add_common(compute_cmd, common);
    compute_cmd->callback([&] { action = [&] { return run_compute(compute_args, common); }; });

    OracleArgs oracle_args;
    auto* oracle_cmd = app.add_subcommand("oracle", "Count triangulations of a convex polygon by enumeration");
    oracle_cmd->add_option("--sides", oracle_args.sides, "Number of polygon sides")->required();
    oracle_cmd->add_option("--max-sides", oracle_args.max_sides, "Override the enumeration cap");
    add_common(oracle_cmd, common);
    oracle_cmd->callback([&] { action = [&] { return run_oracle(oracle_args, common); }; });

    SeriesArgs series_args;
    auto* series_cmd = app.add_subcommand("series", "Generating function checks");
    series_cmd->require_subcommand(1);
    auto* series_verify = series_cmd->add_subcommand("verify", "Check Goldbach's quadratic coefficient-wise");
    series_verify->add_option("--order", series_args.order, "Truncation order");
    series_verify->add_option("--perturb", series_args.perturb, "Add 1 to C_k before checking (fault injection)");
    add_common(series_verify, common);
    series_verify->callback([&] { action = [&] { return run_series_verify(series_args, common); }; });
    auto* series_eval = series_cmd->add_subcommand("eval", "Partial sum of C(x) at a rational x");
    series_eval->add_option("--order", series_args.order, "Truncation order");
    series_eval->add_option("--x", series_args.x, "Point as NUM/DEN");
    add_common(series_eval, common);
    series_eval->callback([&] { action = [&] { return run_series_eval(series_args, common); }; });

    BoundsArgs bounds_args;
    auto* bounds_cmd = app.add_subcommand("bounds", "The C_n <= M^n/n^r induction");
    bounds_cmd->require_subcommand(1);
    auto* bounds_s = bounds_cmd->add_subcommand("s", "Exact S_r(n)");
    auto* bounds_g = bounds_cmd->add_subcommand("g", "Exact g_r(n) = S_r(n)(n+1)^r");
    for (auto* cmd : {bounds_s, bounds_g}) {
        cmd->add_option("--n", bounds_args.n, "Index n")->check(CLI::PositiveNumber);
        cmd->add_option("--r", bounds_args.r, "Exponent r")->check(CLI::Range(2u, 64u));
        add_common(cmd, common);
    }
    bounds_s->callback([&] { action = [&] { return run_bounds_s(bounds_args, common); }; });
    bounds_g->callback([&] { action = [&] { return run_bounds_g(bounds_args, common); }; });

    auto* certify = bounds_cmd->add_subcommand("certify", "Build and check a bound certificate");
    certify->add_option("--r", bounds_args.r, "Exponent r")->check(CLI::Range(2u, 64u));
    certify->add_option("--m", bounds_args.m, "Constant M")->check(CLI::PositiveNumber);
    certify->add_option("--threshold", bounds_args.threshold, "Threshold N (>= 4)")->check(CLI::Range(4ull, 100'000ull));
    certify->add_option("--monotone-to", bounds_args.monotone_to, "Spot-check g(n) > g(n+1) up to here");
    add_common(certify, common);
    certify->callback([&] { action = [&] { return run_bounds_certify(bounds_args, common); }; });

    auto* search = bounds_cmd->add_subcommand("search", "Find the least M and threshold N for exponent r");
    search->add_option("--r", bounds_args.r, "Exponent r")->check(CLI::Range(2u, 64u));
    search->add_option("--scan-limit", bounds_args.scan_limit, "Largest n scanned for the threshold");
    search->add_option("--window", bounds_args.window, "Monotone spot-check window past N");
    add_common(search, common);
    search->callback([&] { action = [&] { return run_bounds_search(bounds_args, common); }; });

    auto* r1 = bounds_cmd->add_subcommand("r1-failure", "Show the r = 1 induction step never holds");
    r1->add_option("--n-min", bounds_args.n_min, "First n");
    r1->add_option("--n-max", bounds_args.n_max, "Last n");
    add_common(r1, common);
    r1->callback([&] { action = [&] { return run_bounds_r1(bounds_args, common); }; });

    auto* verify = bounds_cmd->add_subcommand("verify", "Re-check a certificate JSON document");
    verify->add_option("--input", bounds_args.input, "Certificate file, or - for stdin")->required();
    add_common(verify, common);
    verify->callback([&] { action = [&] { return run_bounds_verify(bounds_args, common); }; });

    AsymArgs asym_args;
    auto* asym_cmd = app.add_subcommand("asymptotics", "Empirical growth of C_n");
    asym_cmd->require_subcommand(1);
    auto* radius = asym_cmd->add_subcommand("radius", "C_n^(1/n), tending to 1/R = 4");
    radius->add_option("--max", asym_args.max, "Largest n of the power-of-two grid")->check(CLI::Range(10ull, 1ull << 20));
    radius->add_option("--n", asym_args.n, "Explicit sample points (repeatable)")->check(CLI::PositiveNumber);
    add_precision(radius, common);
    add_common(radius, common);
    radius->callback([&] { action = [&] { return run_radius(asym_args, common); }; });

    auto* limit = asym_cmd->add_subcommand("limit", "g(n) approaching 2 + pi^2/3");
    limit->add_option("--n", asym_args.n, "Sample points (repeatable, each >= 4)")->check(CLI::Range(4ull, 10'000'000ull));
    limit->add_option("--zeta-terms", asym_args.zeta_terms, "Terms m of the zeta(2) bracket")->check(CLI::Range(2ull, 10'000'000ull));
    add_common(limit, common);
    limit->callback([&] { action = [&] { return run_limit(asym_args, common); }; });

    auto* stirling = asym_cmd->add_subcommand("stirling", "C_n sqrt(pi) n^(3/2) / 4^n");
    stirling->add_option("--max", asym_args.max, "Largest n of the power-of-two grid")->check(CLI::Range(1ull, 1ull << 20));
    stirling->add_option("--n", asym_args.n, "Explicit sample points (repeatable)")->check(CLI::PositiveNumber);
    add_precision(stirling, common);
    add_common(stirling, common);
    stirling->callback([&] { action = [&] { return run_stirling(asym_args, common); }; });

    auto* r0 = asym_cmd->add_subcommand("r0", "Fit the critical exponent from ln(4^n/C_n) vs ln n");
    r0->add_option("--n-min", asym_args.n_min, "Smallest n")->check(CLI::Range(2ull, 1ull << 20));
    r0->add_option("--n-max", asym_args.n_max, "Largest n")->check(CLI::Range(3ull, 1ull << 20));
    add_precision(r0, common);
    add_common(r0, common);
    r0->callback([&] { action = [&] { return run_r0(asym_args, common); }; });

    auto* probe = asym_cmd->add_subcommand("probe", "ln(C_n n^r / M^n) for a rational exponent r");
    probe->add_option("--r", asym_args.r, "Exponent as NUM/DEN");
    probe->add_option("--m", asym_args.m, "Base M")->check(CLI::PositiveNumber);
    probe->add_option("--n", asym_args.n, "Sample points (repeatable)")->check(CLI::PositiveNumber);
    add_precision(probe, common);
    add_common(probe, common);
    probe->callback([&] { action = [&] { return run_probe(asym_args, common); }; });

    std::vector<const char*> argv{"segner"};
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        const Emitted emitted = action();
        if (common.output.empty()) {
            out << emitted.body;
        } else {
            std::ofstream file(common.output, std::ios::binary);
            if (!file) {
                err << "error: cannot write " << common.output << "\n";
                return kExitUsage;
            }
            file << emitted.body;
        }
        return emitted.code;
    } catch (const MalformedCertificate& e) {
        err << "malformed certificate: " << e.what() << "\n";
        return kExitUsage;
    } catch (const ResourceLimitError& e) {
        err << "resource limit: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}

}  // namespace segner
