#pragma once

#include <cstddef>
#include <vector>

#include "ferrers/bigint.hpp"
#include "ferrers/diagram.hpp"
#include "ferrers/hamiltonian.hpp"
#include "ferrers/spanning.hpp"

namespace ferrers {

// Dense square matrix of exact integers.
class ExactMatrix {
public:
    explicit ExactMatrix(std::size_t dim) : dim_(dim), cells_(dim * dim) {}

    std::size_t dim() const { return dim_; }
    BigInt& at(std::size_t i, std::size_t j) { return cells_[i * dim_ + j]; }
    const BigInt& at(std::size_t i, std::size_t j) const { return cells_[i * dim_ + j]; }

private:
    std::size_t dim_;
    std::vector<BigInt> cells_;
};

// Determinant by fraction-free (Bareiss) elimination with row pivoting; every
// intermediate value stays an exact integer.
BigInt determinant(ExactMatrix m);

// Laplacian of the graph on d's vertices restricted to the given edges, with
// the row and column of vertex "row 1" deleted. Unit edge weights unless w is
// given, in which case edge (a,b) weighs x_a * y_b. The edge list need not be
// all of d's squares, which lets callers probe subgraphs.
ExactMatrix reduced_laplacian(const Diagram& d, const std::vector<Square>& edges,
                              const WeightVector* w = nullptr);

// All Hamiltonian paths of the graph, by exhaustive depth-first search from
// every vertex with bipartite alternation. Paths are deduplicated into a
// canonical orientation (row end first; if both ends have the same kind, the
// lexicographically smaller traversal) and returned in lexicographic order.
// Empty whenever the row and column counts differ by two or more.
std::vector<HamiltonianPath> enumerate_hamiltonian_paths(const Diagram& d);

// All spanning trees, by recursive edge inclusion/exclusion over the
// row-major edge list with connectivity pruning, in lexicographic order of
// their sorted edge lists. The tree count is guarded by max_trees (checked
// upfront against the closed-form count, and again while emitting); exceeding
// it raises ResourceLimit.
std::vector<SpanningTree> enumerate_spanning_trees(const Diagram& d,
                                                   std::size_t max_trees = 1'000'000);

// Spanning-tree count as the reduced-Laplacian determinant.
BigInt kirchhoff_count(const Diagram& d);

// Total spanning-tree weight as the reduced weighted-Laplacian determinant.
BigInt weighted_kirchhoff(const Diagram& d, const WeightVector& w);

} // namespace ferrers
