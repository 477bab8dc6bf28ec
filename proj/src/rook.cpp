#include "ferrers/rook.hpp"

#include <algorithm>

namespace ferrers {

RookPlacement RookPlacement::of(std::vector<Square> squares) {
    std::sort(squares.begin(), squares.end());
    return RookPlacement{std::move(squares)};
}

Validation validate_placement(const Diagram& d, const RookPlacement& p) {
    const int m = d.rows();
    const int n = d.cols();
    if (static_cast<int>(p.squares.size()) != m) {
        return Validation::fail("placement has " + std::to_string(p.squares.size()) +
                                " squares; diagram has " + std::to_string(m) + " rows");
    }
    std::vector<int> row_hits(m + 1, 0);
    for (const Square& s : p.squares) {
        if (s.row < 1 || s.row > m || s.col < 1 || s.col > n) {
            return Validation::fail("square (" + std::to_string(s.row) + "," +
                                    std::to_string(s.col) + ") is outside the board");
        }
        ++row_hits[s.row];
    }
    for (int a = 1; a <= m; ++a) {
        if (row_hits[a] == 0) return Validation::fail("row " + std::to_string(a) + " has no square");
        if (row_hits[a] > 1)
            return Validation::fail("row " + std::to_string(a) + " has multiple squares");
    }
    std::vector<int> col_hits(n + 1, 0);
    for (const Square& s : p.squares) {
        if (++col_hits[s.col] > 1) {
            return Validation::fail("column " + std::to_string(s.col) + " is used twice");
        }
    }
    for (const Square& s : p.squares) {
        if (!d.contains(s.row, s.col)) {
            return Validation::fail("square (" + std::to_string(s.row) + "," +
                                    std::to_string(s.col) + ") lies outside the diagram");
        }
    }
    return Validation::pass();
}

namespace {

// Walks rows n, n-1, ..., 1 (shortest to longest), trying unused columns in
// ascending order. emit is called with col_of_row once per complete placement.
template <typename Emit>
void walk_placements(const Diagram& d, Emit&& emit) {
    const int n = d.rows();
    std::vector<int> col_of_row(n + 1, 0);
    std::vector<bool> used(n + 1, false);
    auto rec = [&](auto&& self, int a) -> void {
        if (a == 0) {
            emit(col_of_row);
            return;
        }
        for (int c = 1; c <= d.row_length(a); ++c) {
            if (used[c]) continue;
            used[c] = true;
            col_of_row[a] = c;
            self(self, a - 1);
            used[c] = false;
        }
    };
    rec(rec, n);
}

} // namespace

std::vector<RookPlacement> enumerate_rook_placements(const Diagram& d) {
    require(d.rows() == d.cols(), "rook placements need a square diagram; got " +
                                      std::to_string(d.rows()) + " rows, " +
                                      std::to_string(d.cols()) + " columns");
    const int n = d.rows();
    std::vector<RookPlacement> result;
    walk_placements(d, [&](const std::vector<int>& col_of_row) {
        std::vector<Square> squares;
        squares.reserve(n);
        for (int a = 1; a <= n; ++a) squares.push_back({a, col_of_row[a]});
        result.push_back(RookPlacement{std::move(squares)}); // already sorted by row
    });
    return result;
}

unsigned long long count_rook_placements(const Diagram& d) {
    require(d.rows() == d.cols(), "rook placements need a square diagram; got " +
                                      std::to_string(d.rows()) + " rows, " +
                                      std::to_string(d.cols()) + " columns");
    unsigned long long count = 0;
    walk_placements(d, [&](const std::vector<int>&) { ++count; });
    return count;
}

} // namespace ferrers
