#pragma once

// JSON form of BoundCertificate. Rationals are "num/den" strings and
// Catalan values decimal strings, so the document is exact.

#include <stdexcept>
#include <string>

#include "json.hpp"
#include "segner/bounds.hpp"

namespace segner {

/// A certificate document that cannot be read; what() names the field.
class MalformedCertificate : public std::runtime_error {
public:
    MalformedCertificate(std::string field, const std::string& problem)
        : std::runtime_error(field + ": " + problem), field_(std::move(field)) {}
    const std::string& field() const { return field_; }

private:
    std::string field_;
};

nlohmann::ordered_json to_json(const BoundCertificate& cert);
/// Throws MalformedCertificate.
BoundCertificate certificate_from_json(const nlohmann::json& doc);

nlohmann::ordered_json to_json(const CertifiedInterval& interval);

}  // namespace segner
