#pragma once

#include <compare>
#include <string>
#include <vector>

#include "ferrers/errors.hpp"

namespace ferrers {

enum class VertexKind { Row, Col };

// A vertex of the bipartite graph of a diagram: either a row or a column,
// 1-based, rows numbered top-down and columns left-right.
struct Vertex {
    VertexKind kind;
    int index;

    auto operator<=>(const Vertex&) const = default;
};

std::string to_string(const Vertex& v); // "r5", "c2"

// A cell position (row, col), 1-based. Also used for graph edges, since the
// edges of a Ferrers graph are exactly the squares of its diagram.
struct Square {
    int row;
    int col;

    auto operator<=>(const Square&) const = default;
};

/// An integer partition λ₁ ≥ λ₂ ≥ … ≥ λ_m ≥ 1 viewed as a diagram of squares,
/// with its conjugate (column lengths) derived on construction. Square (a,b)
/// is present iff b ≤ λ_a, so the square set is closed downward and leftward.
///
/// Immutable after construction; safe to share across threads.
class Diagram {
public:
    static Diagram from_row_lengths(const std::vector<int>& lengths);

    int rows() const { return static_cast<int>(row_lengths_.size()); } // m
    int cols() const { return static_cast<int>(col_lengths_.size()); } // n = λ₁
    int row_length(int a) const;                                       // λ_a
    int col_length(int b) const;                                       // λ′_b
    const std::vector<int>& row_lengths() const { return row_lengths_; }
    const std::vector<int>& col_lengths() const { return col_lengths_; }
    long long cells() const; // Σ λ_a

    // True iff square (row, col) is in the diagram. Indices must be within
    // 1..m and 1..n.
    bool contains(int row, int col) const;

    Diagram conjugate() const;

    // All squares in row-major order; these are the graph's edges.
    std::vector<Square> edges() const;

    bool operator==(const Diagram&) const = default;

private:
    Diagram() = default;
    std::vector<int> row_lengths_;
    std::vector<int> col_lengths_;
};

// A selection of original row/column indices to keep, both strictly
// increasing and nonempty.
struct IndexSubset {
    std::vector<int> rows;
    std::vector<int> cols;
};

/// A diagram induced by retained rows and columns, together with the
/// original↔local index maps (local indices are 1-based and dense).
/// Retained rows and columns are never silently dropped: a subset that would
/// leave an empty row or column is rejected instead.
class InducedSubdiagram {
public:
    InducedSubdiagram(Diagram d, std::vector<int> orig_rows, std::vector<int> orig_cols);

    const Diagram& diagram() const { return diagram_; }

    int original_row(int local) const;
    int original_col(int local) const;
    int local_row(int orig) const;
    int local_col(int orig) const;

private:
    Diagram diagram_;
    std::vector<int> orig_rows_; // orig_rows_[local-1] = original index
    std::vector<int> orig_cols_;
};

InducedSubdiagram induced_subdiagram(const Diagram& d, const IndexSubset& keep);

// Validation outcome carrying the first violated invariant, for diagnostics.
struct Validation {
    bool ok = true;
    std::string message;

    explicit operator bool() const { return ok; }
    static Validation pass() { return {}; }
    static Validation fail(std::string msg) { return {false, std::move(msg)}; }
};

} // namespace ferrers
