#include "ferrers/diagram.hpp"

#include <algorithm>
#include <numeric>

namespace ferrers {

std::string to_string(const Vertex& v) {
    return (v.kind == VertexKind::Row ? "r" : "c") + std::to_string(v.index);
}

Diagram Diagram::from_row_lengths(const std::vector<int>& lengths) {
    require(!lengths.empty(), "a diagram needs at least one row");
    for (std::size_t i = 0; i < lengths.size(); ++i) {
        require(lengths[i] >= 1, "row length at position " + std::to_string(i + 1) +
                                     " is " + std::to_string(lengths[i]) + "; all must be >= 1");
        if (i > 0) {
            require(lengths[i] <= lengths[i - 1],
                    "row lengths must be weakly decreasing; position " + std::to_string(i + 1) +
                        " grows from " + std::to_string(lengths[i - 1]) + " to " +
                        std::to_string(lengths[i]));
        }
    }
    Diagram d;
    d.row_lengths_ = lengths;
    // Conjugate: λ′_b = #{a : λ_a ≥ b}.
    const int n = lengths.front();
    d.col_lengths_.resize(n);
    for (int b = 1; b <= n; ++b) {
        int count = 0;
        for (int len : lengths) {
            if (len >= b) ++count;
        }
        d.col_lengths_[b - 1] = count;
    }
    return d;
}

int Diagram::row_length(int a) const {
    require(a >= 1 && a <= rows(), "row index " + std::to_string(a) + " out of range 1.." +
                                       std::to_string(rows()));
    return row_lengths_[a - 1];
}

int Diagram::col_length(int b) const {
    require(b >= 1 && b <= cols(), "column index " + std::to_string(b) + " out of range 1.." +
                                       std::to_string(cols()));
    return col_lengths_[b - 1];
}

long long Diagram::cells() const {
    return std::accumulate(row_lengths_.begin(), row_lengths_.end(), 0LL);
}

bool Diagram::contains(int row, int col) const {
    require(row >= 1 && row <= rows(), "row index " + std::to_string(row) + " out of range 1.." +
                                           std::to_string(rows()));
    require(col >= 1 && col <= cols(), "column index " + std::to_string(col) +
                                           " out of range 1.." + std::to_string(cols()));
    return col <= row_lengths_[row - 1];
}

Diagram Diagram::conjugate() const {
    Diagram d;
    d.row_lengths_ = col_lengths_;
    d.col_lengths_ = row_lengths_;
    return d;
}

std::vector<Square> Diagram::edges() const {
    std::vector<Square> result;
    result.reserve(static_cast<std::size_t>(cells()));
    for (int a = 1; a <= rows(); ++a) {
        for (int b = 1; b <= row_lengths_[a - 1]; ++b) {
            result.push_back({a, b});
        }
    }
    return result;
}

namespace {

void check_subset_axis(const std::vector<int>& sel, int limit, const char* what) {
    require(!sel.empty(), std::string("retained ") + what + " set must be nonempty");
    for (std::size_t i = 0; i < sel.size(); ++i) {
        require(sel[i] >= 1 && sel[i] <= limit, std::string("retained ") + what + " index " +
                                                    std::to_string(sel[i]) + " out of range 1.." +
                                                    std::to_string(limit));
        require(i == 0 || sel[i] > sel[i - 1],
                std::string("retained ") + what + " indices must be strictly increasing");
    }
}

} // namespace

InducedSubdiagram::InducedSubdiagram(Diagram d, std::vector<int> orig_rows,
                                     std::vector<int> orig_cols)
    : diagram_(std::move(d)), orig_rows_(std::move(orig_rows)), orig_cols_(std::move(orig_cols)) {}

int InducedSubdiagram::original_row(int local) const {
    invariant(local >= 1 && local <= static_cast<int>(orig_rows_.size()),
              "local row index out of range");
    return orig_rows_[local - 1];
}

int InducedSubdiagram::original_col(int local) const {
    invariant(local >= 1 && local <= static_cast<int>(orig_cols_.size()),
              "local column index out of range");
    return orig_cols_[local - 1];
}

int InducedSubdiagram::local_row(int orig) const {
    auto it = std::lower_bound(orig_rows_.begin(), orig_rows_.end(), orig);
    invariant(it != orig_rows_.end() && *it == orig,
              "row " + std::to_string(orig) + " is not retained");
    return static_cast<int>(it - orig_rows_.begin()) + 1;
}

int InducedSubdiagram::local_col(int orig) const {
    auto it = std::lower_bound(orig_cols_.begin(), orig_cols_.end(), orig);
    invariant(it != orig_cols_.end() && *it == orig,
              "column " + std::to_string(orig) + " is not retained");
    return static_cast<int>(it - orig_cols_.begin()) + 1;
}

InducedSubdiagram induced_subdiagram(const Diagram& d, const IndexSubset& keep) {
    check_subset_axis(keep.rows, d.rows(), "row");
    check_subset_axis(keep.cols, d.cols(), "column");

    // Local row a′ length = number of retained columns within the original
    // row's length.
    std::vector<int> lengths;
    lengths.reserve(keep.rows.size());
    for (int a : keep.rows) {
        int len = 0;
        for (int c : keep.cols) {
            if (c <= d.row_length(a)) ++len;
        }
        require(len >= 1, "retained row " + std::to_string(a) + " would be empty");
        lengths.push_back(len);
    }
    for (int c : keep.cols) {
        bool nonempty = false;
        for (int a : keep.rows) {
            if (c <= d.row_length(a)) nonempty = true;
        }
        require(nonempty, "retained column " + std::to_string(c) + " would be empty");
    }
    // Retained rows keep their relative order, so lengths stay weakly
    // decreasing and the result is again a valid diagram.
    invariant(std::is_sorted(lengths.rbegin(), lengths.rend()),
              "induced row lengths are not weakly decreasing");
    return InducedSubdiagram(Diagram::from_row_lengths(lengths), keep.rows, keep.cols);
}

} // namespace ferrers
