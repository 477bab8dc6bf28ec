#include "ferrers/spanning.hpp"

#include <algorithm>
#include <numeric>

namespace ferrers {

SpanningTree SpanningTree::of(std::vector<Square> edges) {
    std::sort(edges.begin(), edges.end());
    return SpanningTree{std::move(edges)};
}

Validation validate_config(const Diagram& d, const RcConfiguration& cfg) {
    const int m = d.rows();
    const int n = d.cols();
    if (static_cast<int>(cfg.r_cols.size()) != m - 1) {
        return Validation::fail("configuration has " + std::to_string(cfg.r_cols.size()) +
                                " R marks; diagram needs " + std::to_string(m - 1));
    }
    if (static_cast<int>(cfg.c_rows.size()) != n - 1) {
        return Validation::fail("configuration has " + std::to_string(cfg.c_rows.size()) +
                                " C marks; diagram needs " + std::to_string(n - 1));
    }
    for (int a = 2; a <= m; ++a) {
        const int c = cfg.r_cols[a - 2];
        if (c < 1 || c > d.row_length(a)) {
            return Validation::fail("R for row " + std::to_string(a) + " sits in column " +
                                    std::to_string(c) + ", outside that row");
        }
    }
    for (int b = 2; b <= n; ++b) {
        const int r = cfg.c_rows[b - 2];
        if (r < 1 || r > d.col_length(b)) {
            return Validation::fail("C for column " + std::to_string(b) + " sits in row " +
                                    std::to_string(r) + ", outside that column");
        }
    }
    return Validation::pass();
}

Validation validate_tree(const Diagram& d, const SpanningTree& t) {
    const int m = d.rows();
    const int n = d.cols();
    const int expected = m + n - 1;
    if (static_cast<int>(t.edges.size()) != expected) {
        return Validation::fail("tree has " + std::to_string(t.edges.size()) +
                                " edges; a spanning tree of this diagram has " +
                                std::to_string(expected));
    }
    for (const Square& e : t.edges) {
        if (e.row < 1 || e.row > m || e.col < 1 || e.col > n || !d.contains(e.row, e.col)) {
            return Validation::fail("edge (" + std::to_string(e.row) + "," +
                                    std::to_string(e.col) + ") is not in the diagram");
        }
    }
    // Union-find over rows 0..m-1, cols m..m+n-1. With m+n-1 distinct acyclic
    // edges the tree is automatically connected.
    std::vector<int> parent(m + n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int v) {
        while (parent[v] != v) v = parent[v] = parent[parent[v]];
        return v;
    };
    std::vector<Square> sorted = t.edges;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
        return Validation::fail("duplicate edge in tree");
    }
    for (const Square& e : t.edges) {
        const int u = find(e.row - 1);
        const int v = find(m + e.col - 1);
        if (u == v) {
            return Validation::fail("edges contain a cycle through (" + std::to_string(e.row) +
                                    "," + std::to_string(e.col) + ")");
        }
        parent[u] = v;
    }
    return Validation::pass();
}

namespace {

// A prunable line during stage one: a non-first row with no alive C, or a
// non-first column with no alive R.
struct Prunable {
    bool is_row;
    int index;
};

// chooser picks one entry from a nonempty candidate list ordered rows
// ascending then columns ascending.
template <typename Chooser>
SpanningTree config_to_tree_impl(const Diagram& d, const RcConfiguration& cfg,
                                 Chooser&& chooser) {
    if (Validation v = validate_config(d, cfg); !v) {
        throw RejectedInput("invalid configuration: " + v.message);
    }
    const int m = d.rows();
    const int n = d.cols();

    std::vector<bool> row_alive(m + 1, true), col_alive(n + 1, true);
    // c_in_row[a]: alive C marks sitting in row a; r_in_col[b]: alive R marks
    // sitting in column b.
    std::vector<int> c_in_row(m + 1, 0), r_in_col(n + 1, 0);
    for (int a = 2; a <= m; ++a) ++r_in_col[cfg.r_cols[a - 2]];
    for (int b = 2; b <= n; ++b) ++c_in_row[cfg.c_rows[b - 2]];

    std::vector<Square> edges;
    edges.reserve(m + n - 1);

    // Stage one: peel rows/columns that carry no mark of the other kind.
    for (;;) {
        std::vector<Prunable> candidates;
        for (int a = 2; a <= m; ++a) {
            if (row_alive[a] && c_in_row[a] == 0) candidates.push_back({true, a});
        }
        for (int b = 2; b <= n; ++b) {
            if (col_alive[b] && r_in_col[b] == 0) candidates.push_back({false, b});
        }
        if (candidates.empty()) break;
        const Prunable pick = candidates[chooser(candidates.size())];
        if (pick.is_row) {
            const int a = pick.index;
            const int b = cfg.r_cols[a - 2];
            edges.push_back({a, b});
            row_alive[a] = false;
            --r_in_col[b];
        } else {
            const int b = pick.index;
            const int a = cfg.c_rows[b - 2];
            edges.push_back({a, b});
            col_alive[b] = false;
            --c_in_row[a];
        }
    }

    // Stage two: the irreducible core. Every alive non-first row holds a C
    // and every alive non-first column an R; counting forces the core to be
    // square, with the R's and C's each a rook placement on the subdiagram
    // without row 1 and column 1.
    std::vector<int> core_rows, core_cols;
    for (int a = 2; a <= m; ++a) {
        if (row_alive[a]) core_rows.push_back(a);
    }
    for (int b = 2; b <= n; ++b) {
        if (col_alive[b]) core_cols.push_back(b);
    }
    invariant(core_rows.size() == core_cols.size(),
              "irreducible core keeps " + std::to_string(core_rows.size()) + " rows but " +
                  std::to_string(core_cols.size()) + " columns");
    invariant(c_in_row[1] == 0, "core C mark sits in the first row");
    invariant(r_in_col[1] == 0, "core R mark sits in the first column");
    for (int a : core_rows) {
        invariant(c_in_row[a] == 1, "core row " + std::to_string(a) + " holds " +
                                        std::to_string(c_in_row[a]) + " C marks");
    }
    for (int b : core_cols) {
        invariant(r_in_col[b] == 1, "core column " + std::to_string(b) + " holds " +
                                        std::to_string(r_in_col[b]) + " R marks");
    }

    if (core_rows.empty()) {
        edges.push_back({1, 1});
    } else {
        const InducedSubdiagram sub = induced_subdiagram(d, IndexSubset{core_rows, core_cols});
        std::vector<Square> a_local, b_local;
        for (int a : core_rows) {
            const int b = cfg.r_cols[a - 2];
            invariant(col_alive[b], "core R points at a pruned column");
            a_local.push_back({sub.local_row(a), sub.local_col(b)});
        }
        for (int b : core_cols) {
            const int a = cfg.c_rows[b - 2];
            invariant(row_alive[a], "core C points at a pruned row");
            b_local.push_back({sub.local_row(a), sub.local_col(b)});
        }
        HamiltonianPath path;
        try {
            path = rook_pair_to_path(sub.diagram(), RookPlacement::of(std::move(a_local)),
                                     RookPlacement::of(std::move(b_local)));
        } catch (const RejectedInput& e) {
            // The core marks are built here, not by the caller; a rejection
            // is a bug in this conversion.
            throw InvariantViolation(std::string("core marks are not rook placements: ") +
                                     e.what());
        }
        // Attach: column 1 to the path's row end, row 1 to its column end.
        const int k = static_cast<int>(core_rows.size());
        edges.push_back({sub.original_row(path.seq.front().index), 1});
        for (int i = 0; i < k; ++i) {
            const int row = sub.original_row(path.seq[2 * i].index);
            const int col = sub.original_col(path.seq[2 * i + 1].index);
            edges.push_back({row, col});
            if (i + 1 < k) {
                edges.push_back({sub.original_row(path.seq[2 * i + 2].index), col});
            }
        }
        edges.push_back({1, sub.original_col(path.seq.back().index)});
    }

    SpanningTree tree = SpanningTree::of(std::move(edges));
    if (Validation v = validate_tree(d, tree); !v) {
        throw InvariantViolation("conversion produced a non-tree: " + v.message);
    }
    return tree;
}

// chooser picks one entry from a nonempty candidate list of removable leaves
// ordered columns (index descending) then rows (index descending).
template <typename Chooser>
RcConfiguration tree_to_config_impl(const Diagram& d, const SpanningTree& t, Chooser&& chooser) {
    if (Validation v = validate_tree(d, t); !v) {
        throw RejectedInput("invalid tree: " + v.message);
    }
    const int m = d.rows();
    const int n = d.cols();

    // Adjacency over vertices: rows 1..m, cols 1..n.
    std::vector<std::vector<int>> row_adj(m + 1), col_adj(n + 1);
    for (const Square& e : t.edges) {
        row_adj[e.row].push_back(e.col);
        col_adj[e.col].push_back(e.row);
    }
    std::vector<int> row_deg(m + 1), col_deg(n + 1);
    for (int a = 1; a <= m; ++a) row_deg[a] = static_cast<int>(row_adj[a].size());
    for (int b = 1; b <= n; ++b) col_deg[b] = static_cast<int>(col_adj[b].size());
    std::vector<bool> row_alive(m + 1, true), col_alive(n + 1, true);

    RcConfiguration cfg;
    cfg.r_cols.assign(std::max(0, m - 1), 0);
    cfg.c_rows.assign(std::max(0, n - 1), 0);

    auto alive_row_neighbor = [&](int b) {
        for (int a : col_adj[b]) {
            if (row_alive[a]) return a;
        }
        throw InvariantViolation("leaf column " + std::to_string(b) + " has no alive neighbor");
    };
    auto alive_col_neighbor = [&](int a) {
        for (int b : row_adj[a]) {
            if (col_alive[b]) return b;
        }
        throw InvariantViolation("leaf row " + std::to_string(a) + " has no alive neighbor");
    };

    // Peel leaves other than row 1 / column 1, recording the edge each one
    // hung by as its R or C mark.
    for (;;) {
        std::vector<Prunable> candidates;
        for (int b = n; b >= 2; --b) {
            if (col_alive[b] && col_deg[b] == 1) candidates.push_back({false, b});
        }
        for (int a = m; a >= 2; --a) {
            if (row_alive[a] && row_deg[a] == 1) candidates.push_back({true, a});
        }
        if (candidates.empty()) break;
        const Prunable pick = candidates[chooser(candidates.size())];
        if (pick.is_row) {
            const int a = pick.index;
            const int b = alive_col_neighbor(a);
            cfg.r_cols[a - 2] = b;
            row_alive[a] = false;
            --col_deg[b];
        } else {
            const int b = pick.index;
            const int a = alive_row_neighbor(b);
            cfg.c_rows[b - 2] = a;
            col_alive[b] = false;
            --row_deg[a];
        }
    }

    // The remainder is the tree's path from row 1 to column 1. Walk it from
    // the column-1 end; the interior (endpoints stripped) is the core path in
    // canonical orientation.
    invariant(row_alive[1] && col_alive[1], "first row or column was peeled");
    invariant(col_deg[1] == 1 && row_deg[1] == 1,
              "remainder is not a path between the first row and first column");
    std::vector<Vertex> walk;
    Vertex cur{VertexKind::Col, 1};
    Vertex prev{VertexKind::Col, 0}; // sentinel
    for (;;) {
        walk.push_back(cur);
        if (cur.kind == VertexKind::Row && cur.index == 1) break;
        Vertex next{VertexKind::Row, 0};
        bool found = false;
        if (cur.kind == VertexKind::Col) {
            for (int a : col_adj[cur.index]) {
                if (row_alive[a] && !(prev.kind == VertexKind::Row && prev.index == a)) {
                    invariant(!found, "remainder vertex " + to_string(cur) + " branches");
                    next = {VertexKind::Row, a};
                    found = true;
                }
            }
        } else {
            for (int b : row_adj[cur.index]) {
                if (col_alive[b] && !(prev.kind == VertexKind::Col && prev.index == b)) {
                    invariant(!found, "remainder vertex " + to_string(cur) + " branches");
                    next = {VertexKind::Col, b};
                    found = true;
                }
            }
        }
        invariant(found, "remainder path breaks at " + to_string(cur));
        prev = cur;
        cur = next;
    }
    const int alive_count = static_cast<int>(std::count(row_alive.begin() + 1, row_alive.end(), true) +
                                             std::count(col_alive.begin() + 1, col_alive.end(), true));
    invariant(static_cast<int>(walk.size()) == alive_count, "remainder is not a single path");

    if (walk.size() > 2) {
        std::vector<int> core_rows, core_cols;
        for (std::size_t i = 1; i + 1 < walk.size(); ++i) {
            (walk[i].kind == VertexKind::Row ? core_rows : core_cols).push_back(walk[i].index);
        }
        std::sort(core_rows.begin(), core_rows.end());
        std::sort(core_cols.begin(), core_cols.end());
        const InducedSubdiagram sub = induced_subdiagram(d, IndexSubset{core_rows, core_cols});
        HamiltonianPath local_path;
        for (std::size_t i = 1; i + 1 < walk.size(); ++i) {
            const Vertex& v = walk[i];
            if (v.kind == VertexKind::Row) {
                local_path.seq.push_back({VertexKind::Row, sub.local_row(v.index)});
            } else {
                local_path.seq.push_back({VertexKind::Col, sub.local_col(v.index)});
            }
        }
        RookPair pair;
        try {
            pair = path_to_rook_pair(sub.diagram(), local_path);
        } catch (const RejectedInput& e) {
            throw InvariantViolation(std::string("remainder is not a core path: ") + e.what());
        }
        for (const Square& s : pair.a.squares) {
            cfg.r_cols[sub.original_row(s.row) - 2] = sub.original_col(s.col);
        }
        for (const Square& s : pair.b.squares) {
            cfg.c_rows[sub.original_col(s.col) - 2] = sub.original_row(s.row);
        }
    }

    if (Validation v = validate_config(d, cfg); !v) {
        throw InvariantViolation("conversion produced an invalid configuration: " + v.message);
    }
    return cfg;
}

} // namespace

SpanningTree config_to_tree(const Diagram& d, const RcConfiguration& cfg) {
    return config_to_tree_impl(d, cfg, [](std::size_t) { return std::size_t{0}; });
}

SpanningTree config_to_tree(const Diagram& d, const RcConfiguration& cfg,
                            std::mt19937_64& prune_rng) {
    return config_to_tree_impl(d, cfg, [&prune_rng](std::size_t count) {
        return std::uniform_int_distribution<std::size_t>(0, count - 1)(prune_rng);
    });
}

RcConfiguration tree_to_config(const Diagram& d, const SpanningTree& t) {
    return tree_to_config_impl(d, t, [](std::size_t) { return std::size_t{0}; });
}

RcConfiguration tree_to_config(const Diagram& d, const SpanningTree& t,
                               std::mt19937_64& leaf_rng) {
    return tree_to_config_impl(d, t, [&leaf_rng](std::size_t count) {
        return std::uniform_int_distribution<std::size_t>(0, count - 1)(leaf_rng);
    });
}

BigInt count_spanning_trees_formula(const Diagram& d) {
    BigInt result = 1;
    for (int a = 2; a <= d.rows(); ++a) result *= d.row_length(a);
    for (int b = 2; b <= d.cols(); ++b) result *= d.col_length(b);
    return result;
}

namespace {

void check_weights(const Diagram& d, const WeightVector& w) {
    require(static_cast<int>(w.x.size()) == d.rows(),
            "weight vector has " + std::to_string(w.x.size()) + " row weights; diagram has " +
                std::to_string(d.rows()) + " rows");
    require(static_cast<int>(w.y.size()) == d.cols(),
            "weight vector has " + std::to_string(w.y.size()) + " column weights; diagram has " +
                std::to_string(d.cols()) + " columns");
}

} // namespace

BigInt weighted_tree_sum_formula(const Diagram& d, const WeightVector& w) {
    check_weights(d, w);
    std::vector<BigInt> x_prefix(w.x.size() + 1), y_prefix(w.y.size() + 1);
    for (std::size_t i = 0; i < w.x.size(); ++i) x_prefix[i + 1] = x_prefix[i] + w.x[i];
    for (std::size_t i = 0; i < w.y.size(); ++i) y_prefix[i + 1] = y_prefix[i] + w.y[i];

    BigInt result = 1;
    for (const BigInt& v : w.x) result *= v;
    for (const BigInt& v : w.y) result *= v;
    for (int a = 2; a <= d.rows(); ++a) result *= y_prefix[d.row_length(a)];
    for (int b = 2; b <= d.cols(); ++b) result *= x_prefix[d.col_length(b)];
    return result;
}

BigInt tree_weight(const Diagram& d, const SpanningTree& t, const WeightVector& w) {
    check_weights(d, w);
    if (Validation v = validate_tree(d, t); !v) {
        throw RejectedInput("invalid tree: " + v.message);
    }
    BigInt result = 1;
    for (const Square& e : t.edges) result *= w.x[e.row - 1] * w.y[e.col - 1];
    return result;
}

BigInt config_weight(const Diagram& d, const RcConfiguration& cfg, const WeightVector& w) {
    check_weights(d, w);
    if (Validation v = validate_config(d, cfg); !v) {
        throw RejectedInput("invalid configuration: " + v.message);
    }
    BigInt result = w.x[0] * w.y[0]; // the X at (1,1)
    for (int a = 2; a <= d.rows(); ++a) result *= w.x[a - 1] * w.y[cfg.r_cols[a - 2] - 1];
    for (int b = 2; b <= d.cols(); ++b) result *= w.x[cfg.c_rows[b - 2] - 1] * w.y[b - 1];
    return result;
}

ConfigEnumerator::ConfigEnumerator(const Diagram& d) {
    for (int a = 2; a <= d.rows(); ++a) r_limits_.push_back(d.row_length(a));
    for (int b = 2; b <= d.cols(); ++b) c_limits_.push_back(d.col_length(b));
    current_.r_cols.assign(r_limits_.size(), 1);
    current_.c_rows.assign(c_limits_.size(), 1);
}

bool ConfigEnumerator::next(RcConfiguration& out) {
    if (done_) return false;
    if (fresh_) {
        fresh_ = false;
        out = current_;
        return true;
    }
    // Odometer with c_rows fastest, so the stream is lexicographic in
    // (r_cols, c_rows).
    auto bump = [](std::vector<int>& digits, const std::vector<int>& limits) {
        for (std::size_t i = digits.size(); i-- > 0;) {
            if (digits[i] < limits[i]) {
                ++digits[i];
                std::fill(digits.begin() + static_cast<std::ptrdiff_t>(i) + 1, digits.end(), 1);
                return true;
            }
        }
        return false;
    };
    if (!bump(current_.c_rows, c_limits_)) {
        if (!bump(current_.r_cols, r_limits_)) {
            done_ = true;
            return false;
        }
        std::fill(current_.c_rows.begin(), current_.c_rows.end(), 1);
    }
    out = current_;
    return true;
}

void for_each_config(const Diagram& d, const std::function<void(const RcConfiguration&)>& fn) {
    ConfigEnumerator en(d);
    RcConfiguration cfg;
    while (en.next(cfg)) fn(cfg);
}

} // namespace ferrers
