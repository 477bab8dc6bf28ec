#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace ferrers {

struct VerifyOptions {
    int max_cells = 10;            // run over every shape with at most this many squares
    std::uint64_t seed = 42;       // drives random weights and randomized orders
    std::size_t max_trees = 1'000'000; // enumeration guard; exceeding it skips with a warning
    int weight_trials_per_shape = 20;
    int order_trials_per_shape = 4;
    int weight_min = 1;
    int weight_max = 5;
};

struct VerifyStats {
    long long shapes = 0;
    long long configs_checked = 0;
    long long trees_enumerated = 0;
    long long paths_checked = 0;
    long long rook_pairs_checked = 0;
    long long weight_checks = 0;
    long long order_trials = 0;
    long long pathless_shapes = 0; // shapes with |rows-cols| >= 2, confirmed path-free
};

struct VerifyReport {
    bool passed = true;
    std::vector<std::string> failures; // first counterexamples, capped
    std::vector<std::string> warnings; // skipped checks, never silent
    VerifyStats stats;
};

// Sweeps every shape with at most max_cells squares and checks all library
// invariants against the independent oracles: the three-way spanning-tree
// counts, both bijections' round trips on their full domains, the
// path/rook-pair count identity, involutions, order independence under
// seeded random prune/leaf orders, and weight preservation under seeded
// random weights.
VerifyReport run_verification(const VerifyOptions& opts);

} // namespace ferrers
