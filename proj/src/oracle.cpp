#include "segner/oracle.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace segner {

namespace {

bool strictly_inside(int v, Diagonal d) { return d.i < v && v < d.j; }

bool cross_unchecked(Diagonal a, Diagonal b) {
    if (a.i == b.i || a.i == b.j || a.j == b.i || a.j == b.j) return false;
    return strictly_inside(b.i, a) != strictly_inside(b.j, a);
}

class Enumerator {
public:
    Enumerator(int sides, bool audit) : sides_(sides), audit_(audit) {
        for (int i = 0; i < sides; ++i) {
            for (int j = i + 2; j < sides; ++j) {
                if (is_valid_diagonal({i, j}, sides)) all_.push_back({i, j});
            }
        }
        const std::size_t n = all_.size();
        compatible_.assign(n * n, 0);
        for (std::size_t a = 0; a < n; ++a) {
            for (std::size_t b = 0; b < n; ++b) compatible_[a * n + b] = !cross_unchecked(all_[a], all_[b]);
        }
    }

    std::uint64_t run() {
        count_ = 0;
        chosen_.clear();
        extend(0);
        return count_;
    }

private:
    void extend(std::size_t start) {
        const auto target = static_cast<std::size_t>(sides_ - 3);
        if (chosen_.size() == target) {
            if (audit_) check_complete();
            ++count_;
            return;
        }
        const std::size_t n = all_.size();
        for (std::size_t c = start; c < n; ++c) {
            // Not enough candidates left to reach a full triangulation.
            if (n - c < target - chosen_.size()) break;
            bool ok = true;
            for (std::size_t prev : chosen_) {
                if (!compatible_[prev * n + c]) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            chosen_.push_back(c);
            extend(c + 1);
            chosen_.pop_back();
        }
    }

    void check_complete() const {
        if (chosen_.size() != static_cast<std::size_t>(sides_ - 3)) {
            throw IntegrityError("triangulation with wrong number of diagonals");
        }
        for (std::size_t a = 0; a < chosen_.size(); ++a) {
            for (std::size_t b = a + 1; b < chosen_.size(); ++b) {
                if (diagonals_cross(all_[chosen_[a]], all_[chosen_[b]], sides_)) {
                    throw IntegrityError("enumerated set contains crossing diagonals");
                }
            }
        }
    }

    int sides_;
    bool audit_;
    std::vector<Diagonal> all_;
    std::vector<char> compatible_;
    std::vector<std::size_t> chosen_;
    std::uint64_t count_ = 0;
};

}  // namespace

bool is_valid_diagonal(Diagonal d, int sides) {
    return sides >= 4 && 0 <= d.i && d.i < d.j && d.j < sides && d.j - d.i >= 2 &&
           !(d.i == 0 && d.j == sides - 1);
}

bool diagonals_cross(Diagonal d1, Diagonal d2, int sides) {
    if (!is_valid_diagonal(d1, sides) || !is_valid_diagonal(d2, sides)) {
        throw std::invalid_argument("diagonals_cross: invalid diagonal for a " + std::to_string(sides) + "-gon");
    }
    return cross_unchecked(d1, d2);
}

TriangulationCount count_triangulations(int sides, const EnumerationOptions& options) {
    if (sides < 3) throw std::invalid_argument("count_triangulations: need at least 3 sides");
    if (sides > options.max_sides) {
        throw ResourceLimitError("count_triangulations: " + std::to_string(sides) +
                                 " sides exceeds the enumeration limit of " + std::to_string(options.max_sides));
    }
    if (sides == 3) return {3, ExactInt(1), 0};
    Enumerator enumerator(sides, options.audit);
    const std::uint64_t count = enumerator.run();
    return {sides, ExactInt(mpz_class(static_cast<unsigned long>(count))), sides - 3};
}

}  // namespace segner
