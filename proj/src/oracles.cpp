#include "ferrers/oracles.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace ferrers {

BigInt determinant(ExactMatrix m) {
    const std::size_t k = m.dim();
    if (k == 0) return 1;
    int sign = 1;
    BigInt prev = 1;
    for (std::size_t p = 0; p + 1 < k; ++p) {
        if (m.at(p, p) == 0) {
            std::size_t swap_row = p + 1;
            while (swap_row < k && m.at(swap_row, p) == 0) ++swap_row;
            if (swap_row == k) return 0;
            for (std::size_t j = 0; j < k; ++j) std::swap(m.at(p, j), m.at(swap_row, j));
            sign = -sign;
        }
        for (std::size_t i = p + 1; i < k; ++i) {
            for (std::size_t j = p + 1; j < k; ++j) {
                // Exact integer division: this is the Bareiss one-step
                // fraction-free update.
                m.at(i, j) = (m.at(i, j) * m.at(p, p) - m.at(i, p) * m.at(p, j)) / prev;
            }
            m.at(i, p) = 0;
        }
        prev = m.at(p, p);
    }
    return sign * m.at(k - 1, k - 1);
}

ExactMatrix reduced_laplacian(const Diagram& d, const std::vector<Square>& edges,
                              const WeightVector* w) {
    const int m = d.rows();
    const int n = d.cols();
    if (w != nullptr) {
        require(static_cast<int>(w->x.size()) == m && static_cast<int>(w->y.size()) == n,
                "weight vector does not match the diagram");
    }
    // Vertex order: rows 1..m then columns 1..n; vertex "row 1" is dropped,
    // so row a maps to a-2 and column b to m-1 + b-1.
    const std::size_t dim = static_cast<std::size_t>(m + n - 1);
    ExactMatrix lap(dim);
    auto idx = [&](bool is_row, int i) -> long long {
        return is_row ? i - 2 : (m - 1) + (i - 1);
    };
    for (const Square& e : edges) {
        require(e.row >= 1 && e.row <= m && e.col >= 1 && e.col <= n && d.contains(e.row, e.col),
                "edge (" + std::to_string(e.row) + "," + std::to_string(e.col) +
                    ") is not in the diagram");
        const BigInt weight = (w != nullptr) ? w->x[e.row - 1] * w->y[e.col - 1] : BigInt(1);
        const long long u = idx(true, e.row);
        const long long v = idx(false, e.col);
        if (u >= 0) lap.at(u, u) += weight;
        lap.at(v, v) += weight;
        if (u >= 0) {
            lap.at(u, v) -= weight;
            lap.at(v, u) -= weight;
        }
    }
    return lap;
}

BigInt kirchhoff_count(const Diagram& d) {
    return determinant(reduced_laplacian(d, d.edges()));
}

BigInt weighted_kirchhoff(const Diagram& d, const WeightVector& w) {
    return determinant(reduced_laplacian(d, d.edges(), &w));
}

namespace {

// Orient a complete traversal: row end first when the ends differ in kind,
// otherwise the lexicographically smaller of the two traversals.
std::vector<Vertex> canonical_orientation(std::vector<Vertex> seq) {
    std::vector<Vertex> rev(seq.rbegin(), seq.rend());
    if (seq.front().kind != rev.front().kind) {
        return (seq.front().kind == VertexKind::Row) ? seq : rev;
    }
    return std::min(seq, rev);
}

} // namespace

std::vector<HamiltonianPath> enumerate_hamiltonian_paths(const Diagram& d) {
    const int m = d.rows();
    const int n = d.cols();
    const int total = m + n;
    std::set<std::vector<Vertex>> found;

    std::vector<bool> row_used(m + 1, false), col_used(n + 1, false);
    std::vector<Vertex> seq;
    seq.reserve(total);

    auto dfs = [&](auto&& self, const Vertex& at) -> void {
        seq.push_back(at);
        (at.kind == VertexKind::Row ? row_used : col_used)[at.index] = true;
        if (static_cast<int>(seq.size()) == total) {
            found.insert(canonical_orientation(seq));
        } else if (at.kind == VertexKind::Row) {
            for (int b = 1; b <= d.row_length(at.index); ++b) {
                if (!col_used[b]) self(self, Vertex{VertexKind::Col, b});
            }
        } else {
            for (int a = 1; a <= d.col_length(at.index); ++a) {
                if (!row_used[a]) self(self, Vertex{VertexKind::Row, a});
            }
        }
        (at.kind == VertexKind::Row ? row_used : col_used)[at.index] = false;
        seq.pop_back();
    };

    for (int a = 1; a <= m; ++a) dfs(dfs, Vertex{VertexKind::Row, a});
    for (int b = 1; b <= n; ++b) dfs(dfs, Vertex{VertexKind::Col, b});

    std::vector<HamiltonianPath> result;
    result.reserve(found.size());
    for (auto& seq_found : found) result.push_back(HamiltonianPath{seq_found});
    return result;
}

std::vector<SpanningTree> enumerate_spanning_trees(const Diagram& d, std::size_t max_trees) {
    require(max_trees >= 1, "tree cap must be >= 1");
    const BigInt expected = count_spanning_trees_formula(d);
    if (expected > max_trees) {
        throw ResourceLimit("shape has " + expected.str() + " spanning trees; cap is " +
                            std::to_string(max_trees));
    }

    const int m = d.rows();
    const int n = d.cols();
    const int vcount = m + n;
    const std::vector<Square> all_edges = d.edges();
    const int ecount = static_cast<int>(all_edges.size());

    // Vertex ids: rows 0..m-1, cols m..m+n-1.
    auto vid = [&](const Square& e, bool row_side) {
        return row_side ? e.row - 1 : m + e.col - 1;
    };

    // Plain union-find without path compression: each include writes exactly
    // one parent entry, so backtracking can undo it by restoring that entry.
    std::vector<int> parent(vcount);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int v) {
        while (parent[v] != v) v = parent[v];
        return v;
    };

    // Is every vertex connected using the chosen edges plus the still
    // undecided suffix?
    auto connectable = [&](int next_idx) {
        std::vector<int> comp(vcount);
        for (int v = 0; v < vcount; ++v) comp[v] = find(v);
        for (int i = next_idx; i < ecount; ++i) {
            const int u = comp[vid(all_edges[i], true)];
            const int v = comp[vid(all_edges[i], false)];
            if (u != v) {
                for (int& c : comp) {
                    if (c == u) c = v;
                }
            }
        }
        return std::all_of(comp.begin(), comp.end(), [&](int c) { return c == comp[0]; });
    };

    std::vector<SpanningTree> result;
    std::vector<Square> chosen;
    chosen.reserve(vcount - 1);

    auto rec = [&](auto&& self, int idx) -> void {
        if (static_cast<int>(chosen.size()) == vcount - 1) {
            if (result.size() >= max_trees) {
                throw ResourceLimit("spanning tree enumeration exceeded cap of " +
                                    std::to_string(max_trees));
            }
            result.push_back(SpanningTree{chosen}); // ascending row-major already
            return;
        }
        if (idx == ecount) return;
        if (static_cast<int>(chosen.size()) + (ecount - idx) < vcount - 1) return;
        if (!connectable(idx)) return;

        const int u = find(vid(all_edges[idx], true));
        const int v = find(vid(all_edges[idx], false));
        if (u != v) {
            // Include first so emission order is lexicographic.
            parent[u] = v;
            chosen.push_back(all_edges[idx]);
            self(self, idx + 1);
            chosen.pop_back();
            parent[u] = u;
        }
        self(self, idx + 1);
    };
    rec(rec, 0);
    return result;
}

} // namespace ferrers
