#pragma once

/**
 * @file oracle.hpp
 * @brief Brute-force triangulation counts for convex polygons.
 *
 * Counts maximal sets of pairwise non-crossing diagonals by backtracking.
 * Shares no code with the catalan module, so agreement between the two is
 * an independent check of Segner's recursion.
 */

#include "segner/exactnum.hpp"

namespace segner {

/// Chord between vertices i < j of a convex polygon labelled 0..sides-1.
struct Diagonal {
    int i;
    int j;

    friend bool operator==(const Diagonal&, const Diagonal&) = default;
};

/// True iff d is a diagonal (not a side, not degenerate) of the polygon.
bool is_valid_diagonal(Diagonal d, int sides);

/// True iff the open chords d1 and d2 meet in the polygon interior.
/// Purely combinatorial: exactly one endpoint of d2 lies strictly inside
/// the arc (d1.i, d1.j). Diagonals sharing an endpoint never cross.
/// Throws std::invalid_argument if either diagonal is invalid.
bool diagonals_cross(Diagonal d1, Diagonal d2, int sides);

struct TriangulationCount {
    int sides;
    ExactInt count;
    int diagonals_per_triangulation;
};

inline constexpr int kDefaultMaxSides = 12;

struct EnumerationOptions {
    int max_sides = kDefaultMaxSides;
    /// Re-checks every completed set for size and pairwise non-crossing.
    bool audit = false;
};

/// Throws std::invalid_argument for sides < 3 and ResourceLimitError for
/// sides > options.max_sides.
TriangulationCount count_triangulations(int sides, const EnumerationOptions& options = {});

}  // namespace segner
