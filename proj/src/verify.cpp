#include "ferrers/verify.hpp"

#include <algorithm>
#include <cstdlib>
#include <random>
#include <set>

#include "ferrers/oracles.hpp"
#include "ferrers/partition_gen.hpp"
#include "ferrers/rook.hpp"
#include "ferrers/text_format.hpp"

namespace ferrers {

namespace {

constexpr std::size_t kMaxFailures = 25;

struct Context {
    const VerifyOptions& opts;
    VerifyReport& report;
    std::mt19937_64 rng;

    void fail(const std::string& shape, const std::string& msg) {
        report.passed = false;
        if (report.failures.size() < kMaxFailures) {
            report.failures.push_back("shape " + shape + ": " + msg);
        }
    }
    void warn(const std::string& shape, const std::string& msg) {
        report.warnings.push_back("shape " + shape + ": " + msg);
    }
};

RcConfiguration random_config(const Diagram& d, std::mt19937_64& rng) {
    RcConfiguration cfg;
    for (int a = 2; a <= d.rows(); ++a) {
        cfg.r_cols.push_back(std::uniform_int_distribution<int>(1, d.row_length(a))(rng));
    }
    for (int b = 2; b <= d.cols(); ++b) {
        cfg.c_rows.push_back(std::uniform_int_distribution<int>(1, d.col_length(b))(rng));
    }
    return cfg;
}

WeightVector random_weights(const Diagram& d, const VerifyOptions& opts, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> dist(opts.weight_min, opts.weight_max);
    WeightVector w;
    for (int a = 0; a < d.rows(); ++a) w.x.emplace_back(dist(rng));
    for (int b = 0; b < d.cols(); ++b) w.y.emplace_back(dist(rng));
    return w;
}

void check_diagram_core(const Diagram& d, const std::string& shape, Context& ctx) {
    if (d.conjugate().conjugate() != d) {
        ctx.fail(shape, "conjugate applied twice is not the identity");
        return;
    }
    const Diagram conj = d.conjugate();
    for (int a = 1; a <= d.rows(); ++a) {
        for (int b = 1; b <= d.cols(); ++b) {
            if (d.contains(a, b) != conj.contains(b, a)) {
                ctx.fail(shape, "containment is not symmetric under conjugation at (" +
                                    std::to_string(a) + "," + std::to_string(b) + ")");
                return;
            }
            if (d.contains(a, b) && (!d.contains(1, b) || !d.contains(a, 1))) {
                ctx.fail(shape, "square set is not downward closed at (" + std::to_string(a) +
                                    "," + std::to_string(b) + ")");
                return;
            }
        }
    }
    if (static_cast<long long>(d.edges().size()) != d.cells()) {
        ctx.fail(shape, "edge list size disagrees with the cell count");
    }
}

// Full bijection sweep: every configuration converts to a distinct tree,
// converts back to itself, and the tree family matches exhaustive
// enumeration. Returns the (config, tree) pairs for reuse.
std::vector<std::pair<RcConfiguration, SpanningTree>> check_spanning(const Diagram& d,
                                                                     const std::string& shape,
                                                                     Context& ctx) {
    std::vector<std::pair<RcConfiguration, SpanningTree>> pairs;
    const BigInt formula = count_spanning_trees_formula(d);
    const BigInt det = kirchhoff_count(d);
    if (formula != det) {
        ctx.fail(shape, "closed-form count " + formula.str() + " != determinant count " +
                            det.str());
    }

    bool enumerated = true;
    std::vector<SpanningTree> all_trees;
    try {
        all_trees = enumerate_spanning_trees(d, ctx.opts.max_trees);
        ctx.report.stats.trees_enumerated += static_cast<long long>(all_trees.size());
    } catch (const ResourceLimit& e) {
        ctx.warn(shape, std::string("spanning-tree enumeration skipped: ") + e.what());
        enumerated = false;
    }
    if (enumerated && BigInt(all_trees.size()) != formula) {
        ctx.fail(shape, "enumeration found " + std::to_string(all_trees.size()) +
                            " trees; closed form says " + formula.str());
    }

    std::set<SpanningTree> seen;
    ConfigEnumerator en(d);
    RcConfiguration cfg;
    while (en.next(cfg)) {
        const SpanningTree tree = config_to_tree(d, cfg);
        ++ctx.report.stats.configs_checked;
        if (!seen.insert(tree).second) {
            ctx.fail(shape, "two configurations map to tree " + text::format_tree(tree));
            return pairs;
        }
        const RcConfiguration back = tree_to_config(d, tree);
        if (back != cfg) {
            ctx.fail(shape, "round trip broke for configuration " + text::format_config(cfg) +
                                ": came back as " + text::format_config(back));
            return pairs;
        }
        pairs.emplace_back(cfg, tree);
    }
    if (BigInt(pairs.size()) != formula) {
        ctx.fail(shape, "configuration stream yielded " + std::to_string(pairs.size()) +
                            " items; closed form says " + formula.str());
    }
    if (enumerated && !std::equal(seen.begin(), seen.end(), all_trees.begin(), all_trees.end())) {
        ctx.fail(shape, "converted tree family differs from exhaustive enumeration");
    }
    return pairs;
}

void check_order_independence(const Diagram& d, const std::string& shape, Context& ctx) {
    for (int trial = 0; trial < ctx.opts.order_trials_per_shape; ++trial) {
        const RcConfiguration cfg = random_config(d, ctx.rng);
        const SpanningTree canonical = config_to_tree(d, cfg);
        std::mt19937_64 prune_rng(ctx.rng());
        if (config_to_tree(d, cfg, prune_rng) != canonical) {
            ctx.fail(shape, "randomized pruning changed the tree for configuration " +
                                text::format_config(cfg));
            return;
        }
        std::mt19937_64 leaf_rng(ctx.rng());
        if (tree_to_config(d, canonical, leaf_rng) != cfg) {
            ctx.fail(shape, "randomized leaf removal changed the configuration for tree " +
                                text::format_tree(canonical));
            return;
        }
        ++ctx.report.stats.order_trials;
    }
}

void check_weights(const Diagram& d, const std::string& shape,
                   const std::vector<std::pair<RcConfiguration, SpanningTree>>& pairs,
                   Context& ctx) {
    for (int trial = 0; trial < ctx.opts.weight_trials_per_shape; ++trial) {
        const WeightVector w = random_weights(d, ctx.opts, ctx.rng);
        BigInt total = 0;
        for (const auto& [cfg, tree] : pairs) {
            const BigInt tw = tree_weight(d, tree, w);
            const BigInt cw = config_weight(d, cfg, w);
            if (tw != cw) {
                ctx.fail(shape, "weights differ for configuration " + text::format_config(cfg) +
                                    ": tree " + tw.str() + ", configuration " + cw.str());
                return;
            }
            total += tw;
        }
        const BigInt formula = weighted_tree_sum_formula(d, w);
        const BigInt det = weighted_kirchhoff(d, w);
        if (formula != total || formula != det) {
            ctx.fail(shape, "weighted totals disagree: formula " + formula.str() + ", tree sum " +
                                total.str() + ", determinant " + det.str());
            return;
        }
        ++ctx.report.stats.weight_checks;
    }
}

void check_square_diagram(const Diagram& d, const std::string& shape, Context& ctx) {
    const auto placements = enumerate_rook_placements(d);
    for (const RookPlacement& p : placements) {
        if (Validation v = validate_placement(d, p); !v) {
            ctx.fail(shape, "enumerated placement fails validation: " + v.message);
            return;
        }
    }
    if (count_rook_placements(d) != placements.size()) {
        ctx.fail(shape, "rook count disagrees with rook enumeration");
    }

    // Transposing every placement must give exactly the placements of the
    // conjugate.
    const Diagram conj = d.conjugate();
    std::set<RookPlacement> transposed;
    for (const RookPlacement& p : placements) {
        std::vector<Square> squares;
        for (const Square& s : p.squares) squares.push_back({s.col, s.row});
        transposed.insert(RookPlacement::of(std::move(squares)));
    }
    const auto conj_placements = enumerate_rook_placements(conj);
    if (transposed != std::set<RookPlacement>(conj_placements.begin(), conj_placements.end())) {
        ctx.fail(shape, "placements do not transpose onto the conjugate's placements");
    }

    const auto paths = enumerate_hamiltonian_paths(d);
    const BigInt path_count(paths.size());
    const BigInt rook_count(placements.size());
    if (path_count != rook_count * rook_count) {
        ctx.fail(shape, "path count " + path_count.str() + " is not the square of rook count " +
                            rook_count.str());
    }

    for (const HamiltonianPath& p : paths) {
        ++ctx.report.stats.paths_checked;
        if (Validation v = validate_path(d, p); !v) {
            ctx.fail(shape, "enumerated path fails validation: " + v.message);
            return;
        }
        const RookPair pair = path_to_rook_pair(d, p);
        if (rook_pair_to_path(d, pair.a, pair.b) != p) {
            ctx.fail(shape, "path round trip broke for " + text::format_path(p));
            return;
        }
        const HamiltonianPath swapped = swap_ab_path(d, p);
        if (Validation v = validate_path(d, swapped); !v) {
            ctx.fail(shape, "swapped path is invalid: " + v.message);
            return;
        }
        if (swap_ab_path(d, swapped) != p) {
            ctx.fail(shape, "swapping the placements twice is not the identity for " +
                                text::format_path(p));
            return;
        }
        const HamiltonianPath flipped = transpose_path(d, p);
        if (transpose_path(conj, flipped) != p) {
            ctx.fail(shape, "transposing twice is not the identity for " + text::format_path(p));
            return;
        }
    }

    for (const RookPlacement& a : placements) {
        for (const RookPlacement& b : placements) {
            ++ctx.report.stats.rook_pairs_checked;
            const HamiltonianPath p = rook_pair_to_path(d, a, b);
            const RookPair back = path_to_rook_pair(d, p);
            if (back.a != a || back.b != b) {
                ctx.fail(shape, "rook-pair round trip broke for A=" + text::format_placement(a) +
                                    " B=" + text::format_placement(b));
                return;
            }
        }
    }
}

void check_determinant_selfcheck(const Diagram& d, const std::string& shape,
                                 const SpanningTree& tree, Context& ctx) {
    if (determinant(reduced_laplacian(d, tree.edges)) != 1) {
        ctx.fail(shape, "reduced Laplacian of a single tree does not have determinant 1");
        return;
    }
    std::vector<Square> broken(tree.edges.begin(), tree.edges.end() - 1);
    if (determinant(reduced_laplacian(d, broken)) != 0) {
        ctx.fail(shape, "reduced Laplacian of a disconnected subgraph is nonzero");
    }
}

} // namespace

VerifyReport run_verification(const VerifyOptions& opts) {
    VerifyReport report;
    Context ctx{opts, report, std::mt19937_64(opts.seed)};

    for (const auto& lengths : partitions_up_to(opts.max_cells)) {
        const Diagram d = Diagram::from_row_lengths(lengths);
        const std::string shape = text::format_shape(lengths);
        ++report.stats.shapes;

        check_diagram_core(d, shape, ctx);
        const auto pairs = check_spanning(d, shape, ctx);
        check_order_independence(d, shape, ctx);
        if (!pairs.empty()) {
            check_weights(d, shape, pairs, ctx);
            check_determinant_selfcheck(d, shape, pairs.front().second, ctx);
        }

        if (d.rows() == d.cols()) {
            check_square_diagram(d, shape, ctx);
        } else if (std::abs(d.rows() - d.cols()) >= 2) {
            if (!enumerate_hamiltonian_paths(d).empty()) {
                ctx.fail(shape, "found a Hamiltonian path despite rows and columns differing by " +
                                    std::to_string(std::abs(d.rows() - d.cols())));
            } else {
                ++report.stats.pathless_shapes;
            }
        }

        if (report.failures.size() >= kMaxFailures) break;
    }
    return report;
}

} // namespace ferrers
