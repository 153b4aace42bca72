#include "segner/series.hpp"

#include <stdexcept>

#include "segner/catalan.hpp"

namespace segner {

namespace {

void require_same_order(const SeriesPoly& a, const SeriesPoly& b, const char* op) {
    if (a.order() != b.order()) {
        throw std::invalid_argument(std::string(op) + ": order mismatch (" + std::to_string(a.order()) +
                                    " vs " + std::to_string(b.order()) + ")");
    }
}

}  // namespace

SeriesPoly::SeriesPoly(std::vector<ExactRational> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) throw std::invalid_argument("SeriesPoly: no coefficients");
}

SeriesPoly SeriesPoly::constant(const ExactRational& value, std::size_t order) {
    std::vector<ExactRational> coeffs(order + 1, ExactRational(0));
    coeffs[0] = value;
    return SeriesPoly(std::move(coeffs));
}

SeriesPoly SeriesPoly::from_integers(std::span<const ExactInt> coeffs) {
    return SeriesPoly(std::vector<ExactRational>(coeffs.begin(), coeffs.end()));
}

SeriesPoly SeriesPoly::with_coefficient(std::size_t k, ExactRational value) const {
    SeriesPoly copy = *this;
    copy.coeffs_.at(k) = std::move(value);
    return copy;
}

SeriesPoly add(const SeriesPoly& a, const SeriesPoly& b) {
    require_same_order(a, b, "add");
    std::vector<ExactRational> out(a.coeffs().begin(), a.coeffs().end());
    for (std::size_t k = 0; k < out.size(); ++k) out[k] += b[k];
    return SeriesPoly(std::move(out));
}

SeriesPoly subtract(const SeriesPoly& a, const SeriesPoly& b) {
    require_same_order(a, b, "subtract");
    std::vector<ExactRational> out(a.coeffs().begin(), a.coeffs().end());
    for (std::size_t k = 0; k < out.size(); ++k) out[k] -= b[k];
    return SeriesPoly(std::move(out));
}

SeriesPoly multiply(const SeriesPoly& a, const SeriesPoly& b) {
    require_same_order(a, b, "multiply");
    const std::size_t n = a.order();
    std::vector<ExactRational> out(n + 1);
    for (std::size_t k = 0; k <= n; ++k) {
        mpq_class acc = 0;
        for (std::size_t i = 0; i <= k; ++i) acc += a[i].raw() * b[k - i].raw();
        out[k] = ExactRational(std::move(acc));
    }
    return SeriesPoly(std::move(out));
}

SeriesPoly shift_up(const SeriesPoly& a) {
    std::vector<ExactRational> out(a.order() + 1, ExactRational(0));
    for (std::size_t k = 1; k <= a.order(); ++k) out[k] = a[k - 1];
    return SeriesPoly(std::move(out));
}

SeriesPoly catalan_series(std::size_t order) {
    const CatalanTable table = compute_segner(order);
    return SeriesPoly::from_integers(table.values());
}

GoldbachCheck verify_goldbach_quadratic(const SeriesPoly& c) {
    const std::size_t n = c.order();
    if (n < 1) throw std::invalid_argument("verify_goldbach_quadratic: order must be >= 1");

    GoldbachCheck result;
    auto record = [&](std::size_t index, const char* identity) {
        if (!result.first_failing_index || index < *result.first_failing_index) {
            result.holds = false;
            result.first_failing_index = index;
            result.failing_identity = identity;
        }
    };

    // x·C^2 - C + 1: coefficient k (1 <= k <= N) only involves C_0..C_k.
    const SeriesPoly c_squared = multiply(c, c);
    const SeriesPoly lhs = add(subtract(shift_up(c_squared), c), SeriesPoly::constant(1, n));
    for (std::size_t k = 0; k <= n; ++k) {
        if (lhs[k].sign() != 0) {
            record(k, "xC^2-C+1=0");
            break;
        }
    }

    // T = (C - 1)/x keeps order N-1; T_j corresponds to C_{j+1}.
    std::vector<ExactRational> t_coeffs(c.coeffs().begin() + 1, c.coeffs().end());
    const SeriesPoly t(std::move(t_coeffs));
    const SeriesPoly one_plus_xt = add(SeriesPoly::constant(1, t.order()), shift_up(t));
    const SeriesPoly rhs = multiply(one_plus_xt, one_plus_xt);
    for (std::size_t j = 0; j <= t.order(); ++j) {
        if (t[j] != rhs[j]) {
            record(j + 1, "T=(1+xT)^2");
            break;
        }
    }
    return result;
}

GoldbachCheck verify_goldbach_quadratic(std::size_t order) {
    return verify_goldbach_quadratic(catalan_series(order));
}

ExactRational evaluate_partial_sum(const SeriesPoly& s, const ExactRational& x) {
    ExactRational acc = 0;
    for (std::size_t k = s.order() + 1; k-- > 0;) acc = acc * x + s[k];
    return acc;
}

}  // namespace segner
