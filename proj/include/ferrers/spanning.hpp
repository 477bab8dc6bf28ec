#pragma once

#include <functional>
#include <random>
#include <vector>

#include "ferrers/bigint.hpp"
#include "ferrers/diagram.hpp"
#include "ferrers/hamiltonian.hpp"

namespace ferrers {

/// An R/C configuration: one R mark per row 2..m (recorded by the column it
/// sits in), one C mark per column 2..n (recorded by the row it sits in), and
/// an implicit X mark at (1,1). Several R's may share a column, several C's a
/// row. These configurations are in bijection with the spanning trees of the
/// diagram's graph.
struct RcConfiguration {
    std::vector<int> r_cols; // r_cols[a-2] = column of the R in row a
    std::vector<int> c_rows; // c_rows[b-2] = row of the C in column b

    bool operator==(const RcConfiguration&) const = default;
    auto operator<=>(const RcConfiguration&) const = default;
};

// A spanning tree of the bipartite graph, as its m+n-1 edges sorted
// row-major.
struct SpanningTree {
    std::vector<Square> edges;

    static SpanningTree of(std::vector<Square> edges);

    bool operator==(const SpanningTree&) const = default;
    auto operator<=>(const SpanningTree&) const = default;
};

// One weight per row (x) and per column (y); the edge (a,b) carries weight
// x_a * y_b. Exact integers, any sign.
struct WeightVector {
    std::vector<BigInt> x;
    std::vector<BigInt> y;
};

Validation validate_config(const Diagram& d, const RcConfiguration& cfg);
Validation validate_tree(const Diagram& d, const SpanningTree& t);

/// Converts a configuration to its spanning tree in two stages. Stage one
/// repeatedly prunes a row >= 2 whose alive part holds no C (emitting the
/// edge to its R's column) or a column >= 2 whose alive part holds no R
/// (emitting the edge to its C's row); row 1 and column 1 are never pruned,
/// and the result does not depend on the pruning order. Stage two takes the
/// irreducible core, whose R's and C's form two rook placements on the core
/// subdiagram without row 1 and column 1, turns that pair into a Hamiltonian
/// path, and attaches the path's row end to column 1 and its column end to
/// row 1.
SpanningTree config_to_tree(const Diagram& d, const RcConfiguration& cfg);

// Same conversion with a randomized pruning order; must return the same tree.
SpanningTree config_to_tree(const Diagram& d, const RcConfiguration& cfg,
                            std::mt19937_64& prune_rng);

/// Exact inverse of config_to_tree. Repeatedly removes a leaf other than
/// row 1 / column 1, recording the edge it hung by as that line's R or C
/// mark; the remainder is the tree's path from row 1 to column 1, whose
/// interior converts back through the rook-pair correspondence. The result
/// does not depend on the leaf-removal order.
RcConfiguration tree_to_config(const Diagram& d, const SpanningTree& t);

RcConfiguration tree_to_config(const Diagram& d, const SpanningTree& t,
                               std::mt19937_64& leaf_rng);

// Number of spanning trees: product of all row lengths but the first, times
// the product of all column lengths but the first.
BigInt count_spanning_trees_formula(const Diagram& d);

// Total weight of all spanning trees:
//   (x₁…x_m)(y₁…y_n) · ∏_{a=2..m} (y₁+…+y_{λ_a}) · ∏_{b=2..n} (x₁+…+x_{λ′_b})
BigInt weighted_tree_sum_formula(const Diagram& d, const WeightVector& w);

// Product of x_a y_b over the tree's edges.
BigInt tree_weight(const Diagram& d, const SpanningTree& t, const WeightVector& w);

// x₁y₁ times the product of x_a y_b over every R and C mark. Equals the
// weight of the corresponding tree.
BigInt config_weight(const Diagram& d, const RcConfiguration& cfg, const WeightVector& w);

/// Streams every configuration of d exactly once, in lexicographic
/// (r_cols, c_rows) order, without materializing the whole family.
class ConfigEnumerator {
public:
    explicit ConfigEnumerator(const Diagram& d);

    // Writes the next configuration into out; false once exhausted.
    bool next(RcConfiguration& out);

private:
    std::vector<int> r_limits_; // λ_a for a = 2..m
    std::vector<int> c_limits_; // λ′_b for b = 2..n
    RcConfiguration current_;
    bool fresh_ = true;
    bool done_ = false;
};

void for_each_config(const Diagram& d, const std::function<void(const RcConfiguration&)>& fn);

} // namespace ferrers
