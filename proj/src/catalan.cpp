#include "segner/catalan.hpp"

#include <stdexcept>
#include <string>

namespace segner {

std::string_view to_string(CatalanMethod method) {
    switch (method) {
        case CatalanMethod::segner: return "segner";
        case CatalanMethod::product: return "product";
        case CatalanMethod::binomial: return "binomial";
    }
    return "?";
}

std::optional<CatalanMethod> parse_catalan_method(std::string_view name) {
    for (auto m : {CatalanMethod::segner, CatalanMethod::product, CatalanMethod::binomial}) {
        if (to_string(m) == name) return m;
    }
    return std::nullopt;
}

CatalanTable::CatalanTable(CatalanMethod method, std::vector<ExactInt> values)
    : method_(method), values_(std::move(values)) {
    if (values_.empty()) throw std::invalid_argument("CatalanTable: empty value list");
}

ExactInt segner_step(std::span<const ExactInt> prefix) {
    if (prefix.empty()) throw std::invalid_argument("segner_step: empty prefix");
    const std::size_t n = prefix.size() - 1;
    mpz_class acc = 0;
    // Symmetric convolution: pair k with n-k once.
    for (std::size_t k = 0; k < (n + 1) / 2; ++k) {
        mpz_addmul(acc.get_mpz_t(), prefix[k].raw().get_mpz_t(), prefix[n - k].raw().get_mpz_t());
    }
    acc *= 2;
    if (n % 2 == 0) {
        mpz_addmul(acc.get_mpz_t(), prefix[n / 2].raw().get_mpz_t(), prefix[n / 2].raw().get_mpz_t());
    }
    return ExactInt(std::move(acc));
}

CatalanTable compute_segner(std::size_t max_index) {
    std::vector<ExactInt> values;
    values.reserve(max_index + 1);
    values.emplace_back(1);
    while (values.size() <= max_index) values.push_back(segner_step(values));
    return {CatalanMethod::segner, std::move(values)};
}

ExactInt catalan_product(std::size_t n) {
    if (n == 0) return 1;
    // T_{n+2} = Π_{i=3..n+2} (4i - 10) / Π_{i=2..n+1} i
    mpz_class numerator = 1;
    mpz_class denominator = 1;
    for (std::size_t j = 1; j <= n; ++j) numerator *= static_cast<unsigned long>(4 * j - 2);
    for (std::size_t i = 2; i <= n + 1; ++i) denominator *= static_cast<unsigned long>(i);
    auto [q, r] = divide(ExactInt(numerator), ExactInt(denominator));
    if (!r.is_zero()) {
        throw IntegrityError("product formula: nonzero remainder at n = " + std::to_string(n));
    }
    return q;
}

ExactInt catalan_binomial(std::size_t n) {
    auto [q, r] = divide(ExactInt::binomial(2 * n, n), ExactInt(static_cast<long>(n + 1)));
    if (!r.is_zero()) {
        throw IntegrityError("binomial formula: nonzero remainder at n = " + std::to_string(n));
    }
    return q;
}

CatalanTable compute_product(std::size_t max_index) {
    std::vector<ExactInt> values;
    values.reserve(max_index + 1);
    for (std::size_t n = 0; n <= max_index; ++n) values.push_back(catalan_product(n));
    return {CatalanMethod::product, std::move(values)};
}

CatalanTable compute_binomial(std::size_t max_index) {
    std::vector<ExactInt> values;
    values.reserve(max_index + 1);
    for (std::size_t n = 0; n <= max_index; ++n) values.push_back(catalan_binomial(n));
    return {CatalanMethod::binomial, std::move(values)};
}

CatalanTable compute(CatalanMethod method, std::size_t max_index) {
    switch (method) {
        case CatalanMethod::segner: return compute_segner(max_index);
        case CatalanMethod::product: return compute_product(max_index);
        case CatalanMethod::binomial: return compute_binomial(max_index);
    }
    throw std::invalid_argument("unknown Catalan method");
}

}  // namespace segner
