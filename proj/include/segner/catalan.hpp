#pragma once

// Catalan numbers C_0, C_1, ... by three independent exact methods:
// Segner's convolution recursion, Euler's product formula (with the
// reindexing C_n = T_{n+2}) and the central binomial quotient.
//
// Tables are always indexed by n in C_n. T_n = C_{n-2} is a display-only
// convention handled by the CLI.

#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "segner/exactnum.hpp"

namespace segner {

enum class CatalanMethod { segner, product, binomial };

std::string_view to_string(CatalanMethod method);
std::optional<CatalanMethod> parse_catalan_method(std::string_view name);

class CatalanTable {
public:
    CatalanTable(CatalanMethod method, std::vector<ExactInt> values);

    CatalanMethod method() const { return method_; }
    std::size_t max_index() const { return values_.size() - 1; }
    std::span<const ExactInt> values() const { return values_; }
    const ExactInt& operator[](std::size_t n) const { return values_.at(n); }

private:
    CatalanMethod method_;
    std::vector<ExactInt> values_;
};

/// values[n+1] = Σ_{k=0..n} values[k]·values[n-k], values[0] = 1.
CatalanTable compute_segner(std::size_t max_index);

/// Euler's product: C_n = (2·6·10···(4n-2)) / (n+1)!, one exact division
/// per entry. Throws IntegrityError on a nonzero remainder.
CatalanTable compute_product(std::size_t max_index);

/// C_n = binom(2n, n) / (n+1). Throws IntegrityError on a nonzero remainder.
CatalanTable compute_binomial(std::size_t max_index);

CatalanTable compute(CatalanMethod method, std::size_t max_index);

/// Single entries of the division-based methods.
ExactInt catalan_product(std::size_t n);
ExactInt catalan_binomial(std::size_t n);

/// Given (C_0, ..., C_n), returns Σ C_k·C_{n-k} = C_{n+1}.
/// Throws std::invalid_argument on an empty prefix.
ExactInt segner_step(std::span<const ExactInt> prefix);

}  // namespace segner
