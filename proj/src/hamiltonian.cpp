#include "ferrers/hamiltonian.hpp"

#include <algorithm>
#include <atomic>

namespace ferrers {

namespace {
std::atomic<BijectionMutation> g_mutation{BijectionMutation::none};
}

namespace test_hooks {
void set_bijection_mutation(BijectionMutation m) { g_mutation.store(m); }
BijectionMutation bijection_mutation() { return g_mutation.load(); }
} // namespace test_hooks

Validation validate_path(const Diagram& d, const HamiltonianPath& p) {
    const int m = d.rows();
    const int n = d.cols();
    if (m != n) {
        return Validation::fail("diagram is not square (" + std::to_string(m) + " rows, " +
                                std::to_string(n) + " columns)");
    }
    if (static_cast<int>(p.seq.size()) != 2 * n) {
        return Validation::fail("path has " + std::to_string(p.seq.size()) +
                                " vertices; expected " + std::to_string(2 * n));
    }
    for (std::size_t i = 0; i < p.seq.size(); ++i) {
        const Vertex& v = p.seq[i];
        const VertexKind expected = (i % 2 == 0) ? VertexKind::Row : VertexKind::Col;
        if (v.kind != expected) {
            return Validation::fail("position " + std::to_string(i + 1) +
                                    " must alternate starting from a row vertex; got " +
                                    to_string(v));
        }
        if (v.index < 1 || v.index > n) {
            return Validation::fail("vertex " + to_string(v) + " out of range");
        }
    }
    std::vector<int> row_seen(n + 1, 0), col_seen(n + 1, 0);
    for (const Vertex& v : p.seq) {
        auto& seen = (v.kind == VertexKind::Row) ? row_seen : col_seen;
        if (++seen[v.index] > 1) {
            return Validation::fail("vertex " + to_string(v) + " visited twice");
        }
    }
    // Counts are forced: 2n vertices, alternating, none repeated.
    for (std::size_t i = 0; i + 1 < p.seq.size(); ++i) {
        const Vertex& u = p.seq[i];
        const Vertex& v = p.seq[i + 1];
        const int row = (u.kind == VertexKind::Row) ? u.index : v.index;
        const int col = (u.kind == VertexKind::Row) ? v.index : u.index;
        if (!d.contains(row, col)) {
            return Validation::fail("consecutive vertices " + to_string(u) + " and " +
                                    to_string(v) + " are not adjacent: square (" +
                                    std::to_string(row) + "," + std::to_string(col) +
                                    ") is not in the diagram");
        }
    }
    return Validation::pass();
}

RookPair path_to_rook_pair(const Diagram& d, const HamiltonianPath& p) {
    require(d.rows() == d.cols(), "conversion needs a square diagram");
    if (Validation v = validate_path(d, p); !v) {
        throw RejectedInput("invalid path: " + v.message);
    }
    const int n = d.rows();
    std::vector<bool> col_has_a(n + 1, false);
    std::vector<Square> a_squares, b_squares;
    a_squares.reserve(n);
    b_squares.reserve(n);

    int prev_col = 1; // b₀
    for (int i = 0; i < n; ++i) {
        const int row = p.seq[2 * i].index;     // a_i
        const int col = p.seq[2 * i + 1].index; // b_i
        int a_col;
        if (!col_has_a[prev_col]) {
            a_col = prev_col;
        } else {
            a_col = 1;
            while (a_col <= n && col_has_a[a_col]) ++a_col;
            invariant(a_col <= n, "no column left for an A mark");
            for (int c = 1; c < a_col; ++c) {
                invariant(col_has_a[c], "fallback chose a column that is not the first free one");
            }
            invariant(a_col > prev_col, "first free column does not follow the previous column");
        }
        invariant(d.contains(row, a_col), "A mark (" + std::to_string(row) + "," +
                                              std::to_string(a_col) + ") falls outside the diagram");
        col_has_a[a_col] = true;
        a_squares.push_back({row, a_col});
        b_squares.push_back({row, col});
        prev_col = col;
    }

    RookPair pair{RookPlacement::of(std::move(a_squares)), RookPlacement::of(std::move(b_squares))};
    invariant(static_cast<bool>(validate_placement(d, pair.a)), "A marks are not a rook placement");
    invariant(static_cast<bool>(validate_placement(d, pair.b)), "B marks are not a rook placement");
    return pair;
}

HamiltonianPath rook_pair_to_path(const Diagram& d, const RookPlacement& a,
                                  const RookPlacement& b) {
    require(d.rows() == d.cols(), "conversion needs a square diagram");
    if (Validation v = validate_placement(d, a); !v) {
        throw RejectedInput("invalid A placement: " + v.message);
    }
    if (Validation v = validate_placement(d, b); !v) {
        throw RejectedInput("invalid B placement: " + v.message);
    }
    const int n = d.rows();
    std::vector<int> a_row_in_col(n + 1, 0); // 0 = no A left in that column
    std::vector<int> b_col_in_row(n + 1, 0);
    for (const Square& s : a.squares) a_row_in_col[s.col] = s.row;
    for (const Square& s : b.squares) b_col_in_row[s.row] = s.col;

    const bool mutate = (test_hooks::bijection_mutation() == BijectionMutation::fallback_highest);

    HamiltonianPath path;
    path.seq.reserve(2 * n);
    int prev_col = 1; // b₀
    for (int i = 0; i < n; ++i) {
        int a_col = prev_col;
        if (a_row_in_col[a_col] == 0) {
            if (mutate) {
                a_col = n;
                while (a_col >= 1 && a_row_in_col[a_col] == 0) --a_col;
            } else {
                a_col = 1;
                while (a_col <= n && a_row_in_col[a_col] == 0) ++a_col;
            }
            invariant(a_col >= 1 && a_col <= n, "no A mark left to remove");
        }
        const int row = a_row_in_col[a_col];
        a_row_in_col[a_col] = 0;
        const int col = b_col_in_row[row];
        invariant(col != 0, "row " + std::to_string(row) + " holds no B mark");
        b_col_in_row[row] = 0;
        path.seq.push_back({VertexKind::Row, row});
        path.seq.push_back({VertexKind::Col, col});
        prev_col = col;
    }

    if (Validation v = validate_path(d, path); !v) {
        throw InvariantViolation("reconstructed path is invalid: " + v.message);
    }
    return path;
}

HamiltonianPath swap_ab_path(const Diagram& d, const HamiltonianPath& p) {
    RookPair pair = path_to_rook_pair(d, p);
    return rook_pair_to_path(d, pair.b, pair.a);
}

HamiltonianPath transpose_path(const Diagram& d, const HamiltonianPath& p) {
    require(d.rows() == d.cols(), "conversion needs a square diagram");
    if (Validation v = validate_path(d, p); !v) {
        throw RejectedInput("invalid path: " + v.message);
    }
    HamiltonianPath result;
    result.seq.reserve(p.seq.size());
    for (auto it = p.seq.rbegin(); it != p.seq.rend(); ++it) {
        const VertexKind flipped =
            (it->kind == VertexKind::Row) ? VertexKind::Col : VertexKind::Row;
        result.seq.push_back({flipped, it->index});
    }
    const Diagram conj = d.conjugate();
    if (Validation v = validate_path(conj, result); !v) {
        throw InvariantViolation("transposed path is invalid on the conjugate: " + v.message);
    }
    return result;
}

} // namespace ferrers
