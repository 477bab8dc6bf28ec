#pragma once

#include <vector>

#include "ferrers/diagram.hpp"
#include "ferrers/rook.hpp"

namespace ferrers {

/// A Hamiltonian path of the bipartite graph, stored in canonical orientation:
/// a₁ b₁ a₂ b₂ … a_n b_n where the a_i are row vertices and the b_i are
/// column vertices. An undirected path of a square diagram has exactly one
/// row end, so this form is unique.
struct HamiltonianPath {
    std::vector<Vertex> seq;

    bool operator==(const HamiltonianPath&) const = default;
    auto operator<=>(const HamiltonianPath&) const = default;
};

struct RookPair {
    RookPlacement a;
    RookPlacement b;

    bool operator==(const RookPair&) const = default;
};

// Checks the canonical-path invariants against d (square diagram, alternating
// row/column sequence covering every vertex once, consecutive vertices
// adjacent).
Validation validate_path(const Diagram& d, const HamiltonianPath& p);

/// Converts a Hamiltonian path to an ordered pair of rook placements.
/// Walking the path with b₀ = 1: at step i a B is marked on (a_i, b_i), and
/// an A is marked on (a_i, b_{i-1}) unless column b_{i-1} already holds an A,
/// in which case the A goes to the first column without one. The procedure
/// asserts, each time that fallback fires, that every lower column already
/// holds an A, that the chosen column follows b_{i-1}, and that the chosen
/// square is inside the diagram; a failure there is an invariant violation,
/// not a user error.
RookPair path_to_rook_pair(const Diagram& d, const HamiltonianPath& p);

/// Exact inverse of path_to_rook_pair. With b₀ = 1: at step i, remove the A
/// in column b_{i-1} (or, if that column holds none, the A in the first
/// column that still holds one) and let a_i be its row; then remove the B in
/// row a_i and let b_i be its column.
HamiltonianPath rook_pair_to_path(const Diagram& d, const RookPlacement& a,
                                  const RookPlacement& b);

// Swaps the roles of the two placements: an involution on the Hamiltonian
// paths of d.
HamiltonianPath swap_ab_path(const Diagram& d, const HamiltonianPath& p);

// Exchanges row and column vertices of the same index and re-orients, giving
// a path of conjugate(d). Applying it twice (on d, then conjugate(d)) is the
// identity.
HamiltonianPath transpose_path(const Diagram& d, const HamiltonianPath& p);

// Deliberate defect injectable into rook_pair_to_path, used to prove the
// verification harness can detect a broken bijection. Never set outside
// self-tests.
enum class BijectionMutation { none, fallback_highest };

namespace test_hooks {
void set_bijection_mutation(BijectionMutation m);
BijectionMutation bijection_mutation();
} // namespace test_hooks

} // namespace ferrers
