#include "segner/certificate_json.hpp"

namespace segner {

namespace {

using nlohmann::json;

const json& field(const json& obj, const std::string& path, const char* key) {
    if (!obj.is_object()) throw MalformedCertificate(path, "expected an object");
    const auto it = obj.find(key);
    if (it == obj.end()) throw MalformedCertificate(path.empty() ? key : path + "." + key, "missing");
    return *it;
}

std::string join(const std::string& path, const char* key) { return path.empty() ? key : path + "." + key; }

std::uint64_t read_uint(const json& obj, const std::string& path, const char* key) {
    const json& v = field(obj, path, key);
    if (!v.is_number_unsigned()) throw MalformedCertificate(join(path, key), "expected a non-negative integer");
    return v.get<std::uint64_t>();
}

bool read_bool(const json& obj, const std::string& path, const char* key) {
    const json& v = field(obj, path, key);
    if (!v.is_boolean()) throw MalformedCertificate(join(path, key), "expected a boolean");
    return v.get<bool>();
}

std::string read_string(const json& obj, const std::string& path, const char* key) {
    const json& v = field(obj, path, key);
    if (!v.is_string()) throw MalformedCertificate(join(path, key), "expected a string");
    return v.get<std::string>();
}

ExactRational read_rational(const json& obj, const std::string& path, const char* key) {
    const std::string text = read_string(obj, path, key);
    try {
        return ExactRational::parse(text);
    } catch (const std::exception& e) {
        throw MalformedCertificate(join(path, key), e.what());
    }
}

}  // namespace

nlohmann::ordered_json to_json(const CertifiedInterval& interval) {
    return {{"lo", interval.lo().to_string()}, {"hi", interval.hi().to_string()}};
}

nlohmann::ordered_json to_json(const BoundCertificate& cert) {
    nlohmann::ordered_json base = nlohmann::ordered_json::array();
    for (const auto& check : cert.base_checks) {
        base.push_back({{"n", check.n}, {"C_n", check.catalan.to_string()}, {"passes", check.passes}});
    }
    nlohmann::ordered_json monotone = {
        {"from", cert.monotone.from},
        {"to", cert.monotone.to},
        {"passes", cert.monotone.passes},
        {"first_violation", nullptr},
    };
    if (cert.monotone.first_violation) monotone["first_violation"] = *cert.monotone.first_violation;

    nlohmann::ordered_json doc;
    doc["schema_version"] = cert.schema_version;
    doc["claim"] = "C_n <= M^n / n^r for all n >= 1";
    doc["r"] = cert.r;
    doc["M"] = cert.M;
    doc["threshold"] = cert.threshold;
    doc["base_case_max"] = cert.base_case_max;
    doc["base_checks"] = std::move(base);
    doc["g_at_threshold"] = cert.g_at_threshold.to_string();
    doc["g_at_threshold_decimal"] = cert.g_at_threshold.to_decimal(10);
    doc["g_prev_threshold"] = cert.g_prev_threshold.to_string();
    doc["g_prev_threshold_decimal"] = cert.g_prev_threshold.to_decimal(10);
    doc["monotone_spot_checks"] = std::move(monotone);
    doc["trusted_lemma"] = cert.trusted_lemma;
    doc["verdict"] = to_string(cert.verdict);
    doc["failures"] = cert.failures;
    doc["radius_lower_bound"] =
        cert.radius_lower_bound ? nlohmann::ordered_json(cert.radius_lower_bound->to_string()) : nlohmann::ordered_json(nullptr);
    return doc;
}

BoundCertificate certificate_from_json(const nlohmann::json& doc) {
    BoundCertificate cert;
    const std::string root;
    cert.schema_version = static_cast<int>(read_uint(doc, root, "schema_version"));
    cert.r = static_cast<unsigned>(read_uint(doc, root, "r"));
    cert.M = read_uint(doc, root, "M");
    cert.threshold = read_uint(doc, root, "threshold");
    cert.base_case_max = read_uint(doc, root, "base_case_max");

    const json& base = field(doc, root, "base_checks");
    if (!base.is_array()) throw MalformedCertificate("base_checks", "expected an array");
    for (std::size_t i = 0; i < base.size(); ++i) {
        const std::string path = "base_checks[" + std::to_string(i) + "]";
        BaseCheck check;
        check.n = read_uint(base[i], path, "n");
        const std::string c = read_string(base[i], path, "C_n");
        try {
            check.catalan = ExactInt::parse(c);
        } catch (const std::exception& e) {
            throw MalformedCertificate(path + ".C_n", e.what());
        }
        check.passes = read_bool(base[i], path, "passes");
        cert.base_checks.push_back(std::move(check));
    }

    cert.g_at_threshold = read_rational(doc, root, "g_at_threshold");
    cert.g_prev_threshold = read_rational(doc, root, "g_prev_threshold");

    const std::string mpath = "monotone_spot_checks";
    const json& monotone = field(doc, root, "monotone_spot_checks");
    cert.monotone.from = read_uint(monotone, mpath, "from");
    cert.monotone.to = read_uint(monotone, mpath, "to");
    cert.monotone.passes = read_bool(monotone, mpath, "passes");
    const json& violation = field(monotone, mpath, "first_violation");
    if (!violation.is_null()) {
        if (!violation.is_number_unsigned()) {
            throw MalformedCertificate(mpath + ".first_violation", "expected null or a non-negative integer");
        }
        cert.monotone.first_violation = violation.get<std::uint64_t>();
    }

    cert.trusted_lemma = read_string(doc, root, "trusted_lemma");
    const std::string verdict = read_string(doc, root, "verdict");
    if (verdict == "verified") {
        cert.verdict = Verdict::verified;
    } else if (verdict == "falsified") {
        cert.verdict = Verdict::falsified;
    } else {
        throw MalformedCertificate("verdict", "expected \"verified\" or \"falsified\"");
    }

    const json& failures = field(doc, root, "failures");
    if (!failures.is_array()) throw MalformedCertificate("failures", "expected an array");
    for (std::size_t i = 0; i < failures.size(); ++i) {
        if (!failures[i].is_string()) throw MalformedCertificate("failures[" + std::to_string(i) + "]", "expected a string");
        cert.failures.push_back(failures[i].get<std::string>());
    }

    const json& radius = field(doc, root, "radius_lower_bound");
    if (!radius.is_null()) cert.radius_lower_bound = read_rational(doc, root, "radius_lower_bound");
    return cert;
}

}  // namespace segner
