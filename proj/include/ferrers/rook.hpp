#pragma once

#include <vector>

#include "ferrers/diagram.hpp"

namespace ferrers {

// A full non-attacking rook placement: one square per row, all columns
// distinct, every square inside the diagram. Squares are kept sorted by row;
// equality is set equality.
struct RookPlacement {
    std::vector<Square> squares;

    static RookPlacement of(std::vector<Square> squares);

    bool operator==(const RookPlacement&) const = default;
    auto operator<=>(const RookPlacement&) const = default;
};

// Checks all placement invariants against d; on failure the message names the
// first violated one.
Validation validate_placement(const Diagram& d, const RookPlacement& p);

// All placements of a square diagram (rows() == cols()), ordered by the
// column chosen for row m, then row m-1, and so on. Backtracks over rows from
// shortest to longest; on a Ferrers board every partial assignment built this
// way extends, so the walk is cheap.
std::vector<RookPlacement> enumerate_rook_placements(const Diagram& d);

// Number of placements, counted by the same backtracking walk without
// materializing them.
unsigned long long count_rook_placements(const Diagram& d);

} // namespace ferrers
