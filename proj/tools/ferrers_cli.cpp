// Command-line front end: construction, counting, conversions, weighted
// sums, and the batch self-verification sweep. Exit codes: 0 success,
// 1 rejected input, 2 internal invariant violation or method disagreement,
// 3 resource limit.

#include <algorithm>
#include <cstdint>
#include <iostream>
#include <limits>
#include <map>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "ferrers/oracles.hpp"
#include "ferrers/partition_gen.hpp"
#include "ferrers/rook.hpp"
#include "ferrers/text_format.hpp"
#include "ferrers/verify.hpp"

namespace {

using ferrers::BigInt;
using ferrers::Diagram;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitRejected = 1;
constexpr int kExitInvariant = 2;
constexpr int kExitResource = 3;

json bigint_to_json(const BigInt& v) {
    // Exact within int64, decimal string beyond.
    if (v >= std::numeric_limits<std::int64_t>::min() &&
        v <= std::numeric_limits<std::int64_t>::max()) {
        return static_cast<std::int64_t>(v);
    }
    return v.str();
}

Diagram diagram_from(const std::string& shape) {
    return Diagram::from_row_lengths(ferrers::text::parse_shape(shape));
}

struct InfoCmd {
    std::string shape;
    bool as_json = false;

    int run() const {
        const Diagram d = diagram_from(shape);
        const std::string conj = ferrers::text::format_shape(d.col_lengths());
        if (as_json) {
            json out{{"shape", d.row_lengths()},
                     {"m", d.rows()},
                     {"n", d.cols()},
                     {"conjugate", d.col_lengths()},
                     {"edges", d.cells()}};
            std::cout << out.dump() << "\n";
        } else {
            std::cout << "m=" << d.rows() << " n=" << d.cols() << " conjugate=" << conj
                      << " edges=" << d.cells() << "\n";
        }
        return kExitOk;
    }
};

struct CountCmd {
    std::string kind;
    std::string shape;
    std::string method; // empty = default for the kind
    bool all_methods = false;
    bool as_json = false;

    static BigInt evaluate(const std::string& kind, const std::string& method, const Diagram& d) {
        if (kind == "rooks") {
            return BigInt(ferrers::count_rook_placements(d));
        }
        if (kind == "hamiltonian") {
            if (method == "enumerate") return BigInt(ferrers::enumerate_hamiltonian_paths(d).size());
            // formula: rook count squared
            ferrers::require(d.rows() == d.cols(),
                             "hamiltonian counts need a square diagram; got " +
                                 std::to_string(d.rows()) + " rows, " + std::to_string(d.cols()) +
                                 " columns");
            const BigInt rooks(ferrers::count_rook_placements(d));
            return rooks * rooks;
        }
        if (method == "formula") return ferrers::count_spanning_trees_formula(d);
        if (method == "kirchhoff") return ferrers::kirchhoff_count(d);
        return BigInt(ferrers::enumerate_spanning_trees(d).size());
    }

    int run() const {
        static const std::map<std::string, std::vector<std::string>> valid{
            {"rooks", {"enumerate"}},
            {"hamiltonian", {"formula", "enumerate"}},
            {"spanning", {"formula", "kirchhoff", "enumerate"}}};
        const auto it = valid.find(kind);
        ferrers::require(it != valid.end(), "unknown count kind \"" + kind + "\"");
        const Diagram d = diagram_from(shape);
        if (kind == "rooks" || kind == "hamiltonian") {
            ferrers::require(d.rows() == d.cols(), kind + " counts need a square diagram; got " +
                                                       std::to_string(d.rows()) + " rows, " +
                                                       std::to_string(d.cols()) + " columns");
        }

        std::vector<std::string> methods;
        if (all_methods) {
            methods = it->second;
        } else {
            std::string chosen = method;
            if (chosen.empty()) chosen = (kind == "spanning") ? "formula" : "enumerate";
            ferrers::require(std::find(it->second.begin(), it->second.end(), chosen) !=
                                 it->second.end(),
                             "method \"" + chosen + "\" is not valid for " + kind);
            methods.push_back(chosen);
        }

        std::vector<std::pair<std::string, BigInt>> results;
        for (const std::string& m : methods) results.emplace_back(m, evaluate(kind, m, d));
        const bool agree = std::all_of(results.begin(), results.end(), [&](const auto& r) {
            return r.second == results.front().second;
        });

        if (as_json) {
            json out{{"shape", d.row_lengths()}, {"kind", kind}};
            if (all_methods) {
                json per;
                for (const auto& [m, v] : results) per[m] = bigint_to_json(v);
                out["methods"] = per;
                out["agree"] = agree;
                if (agree) out["result"] = bigint_to_json(results.front().second);
            } else {
                out["method"] = results.front().first;
                out["result"] = bigint_to_json(results.front().second);
            }
            std::cout << out.dump() << "\n";
        } else if (all_methods) {
            for (const auto& [m, v] : results) std::cout << m << "=" << v << "\n";
        } else {
            std::cout << results.front().second << "\n";
        }
        if (!agree) {
            std::cerr << "error: methods disagree\n";
            return kExitInvariant;
        }
        return kExitOk;
    }
};

struct ConvertCmd {
    std::string direction;
    std::string shape;
    std::string path;
    std::string a;
    std::string b;
    std::string config;
    std::string tree;
    bool as_json = false;

    int run() const {
        const Diagram d = diagram_from(shape);
        json out{{"shape", d.row_lengths()}, {"method", direction}};
        if (direction == "path-to-rooks") {
            ferrers::require(!path.empty(), "path-to-rooks needs --path");
            const auto p = ferrers::text::parse_path(path);
            const auto pair = ferrers::path_to_rook_pair(d, p);
            // Print the squares in the path's row order, matching the walk
            // that produced them.
            std::vector<int> row_order;
            for (std::size_t i = 0; i < p.seq.size(); i += 2) row_order.push_back(p.seq[i].index);
            const std::string a_text = ferrers::text::format_placement(pair.a, row_order);
            const std::string b_text = ferrers::text::format_placement(pair.b, row_order);
            if (as_json) {
                out["result"] = {{"a", a_text}, {"b", b_text}};
                std::cout << out.dump() << "\n";
            } else {
                std::cout << "A=" << a_text << "\n" << "B=" << b_text << "\n";
            }
        } else if (direction == "rooks-to-path") {
            ferrers::require(!a.empty() && !b.empty(), "rooks-to-path needs --a and --b");
            const auto pa = ferrers::text::parse_placement(a);
            const auto pb = ferrers::text::parse_placement(b);
            const std::string text = ferrers::text::format_path(ferrers::rook_pair_to_path(d, pa, pb));
            if (as_json) {
                out["result"] = text;
                std::cout << out.dump() << "\n";
            } else {
                std::cout << text << "\n";
            }
        } else if (direction == "config-to-tree") {
            ferrers::require(!config.empty(), "config-to-tree needs --config");
            const auto cfg = ferrers::text::parse_config(config, d);
            const std::string text = ferrers::text::format_tree(ferrers::config_to_tree(d, cfg));
            if (as_json) {
                out["result"] = text;
                std::cout << out.dump() << "\n";
            } else {
                std::cout << text << "\n";
            }
        } else if (direction == "tree-to-config") {
            ferrers::require(!tree.empty(), "tree-to-config needs --tree");
            const auto t = ferrers::text::parse_tree(tree);
            const std::string text = ferrers::text::format_config(ferrers::tree_to_config(d, t));
            if (as_json) {
                out["result"] = text;
                std::cout << out.dump() << "\n";
            } else {
                std::cout << text << "\n";
            }
        } else {
            throw ferrers::RejectedInput("unknown conversion \"" + direction + "\"");
        }
        return kExitOk;
    }
};

struct WeightCmd {
    std::string shape;
    std::string x;
    std::string y;
    std::string method;
    bool all_methods = false;
    bool as_json = false;

    static BigInt evaluate(const std::string& method, const Diagram& d,
                           const ferrers::WeightVector& w) {
        if (method == "formula") return ferrers::weighted_tree_sum_formula(d, w);
        if (method == "kirchhoff") return ferrers::weighted_kirchhoff(d, w);
        BigInt total = 0;
        for (const auto& t : ferrers::enumerate_spanning_trees(d)) {
            total += ferrers::tree_weight(d, t, w);
        }
        return total;
    }

    int run() const {
        static const std::vector<std::string> valid{"formula", "kirchhoff", "enumerate"};
        const Diagram d = diagram_from(shape);
        ferrers::WeightVector w{ferrers::text::parse_weights(x), ferrers::text::parse_weights(y)};
        ferrers::require(static_cast<int>(w.x.size()) == d.rows(),
                         "--x needs " + std::to_string(d.rows()) + " weights");
        ferrers::require(static_cast<int>(w.y.size()) == d.cols(),
                         "--y needs " + std::to_string(d.cols()) + " weights");
        for (const BigInt& v : w.x) ferrers::require(v >= 1, "row weights must be >= 1");
        for (const BigInt& v : w.y) ferrers::require(v >= 1, "column weights must be >= 1");

        std::vector<std::string> methods;
        if (all_methods) {
            methods = valid;
        } else {
            const std::string chosen = method.empty() ? "formula" : method;
            ferrers::require(std::find(valid.begin(), valid.end(), chosen) != valid.end(),
                             "method \"" + chosen + "\" is not valid for weight");
            methods.push_back(chosen);
        }

        std::vector<std::pair<std::string, BigInt>> results;
        for (const std::string& m : methods) results.emplace_back(m, evaluate(m, d, w));
        const bool agree = std::all_of(results.begin(), results.end(), [&](const auto& r) {
            return r.second == results.front().second;
        });

        if (as_json) {
            json out{{"shape", d.row_lengths()},
                     {"x", ferrers::text::format_weights(w.x)},
                     {"y", ferrers::text::format_weights(w.y)}};
            if (all_methods) {
                json per;
                for (const auto& [m, v] : results) per[m] = bigint_to_json(v);
                out["methods"] = per;
                out["agree"] = agree;
                if (agree) out["result"] = bigint_to_json(results.front().second);
            } else {
                out["method"] = results.front().first;
                out["result"] = bigint_to_json(results.front().second);
            }
            std::cout << out.dump() << "\n";
        } else if (all_methods) {
            for (const auto& [m, v] : results) std::cout << m << "=" << v << "\n";
        } else {
            std::cout << results.front().second << "\n";
        }
        if (!agree) {
            std::cerr << "error: methods disagree\n";
            return kExitInvariant;
        }
        return kExitOk;
    }
};

struct VerifyCmd {
    int max_cells = 10;
    std::uint64_t seed = 42;
    std::string mutate = "none";
    bool as_json = false;

    int run() const {
        ferrers::require(max_cells >= 1, "--max-cells must be >= 1");
        if (mutate == "fallback-highest") {
            ferrers::test_hooks::set_bijection_mutation(
                ferrers::BijectionMutation::fallback_highest);
        } else {
            ferrers::require(mutate == "none", "unknown mutation \"" + mutate + "\"");
        }

        ferrers::VerifyOptions opts;
        opts.max_cells = max_cells;
        opts.seed = seed;
        ferrers::VerifyReport report;
        try {
            report = ferrers::run_verification(opts);
        } catch (const ferrers::InvariantViolation& e) {
            // A broken bijection step can trip a runtime invariant instead of
            // producing a wrong value; either way verification fails.
            std::cerr << "verification aborted by invariant violation: " << e.what() << "\n";
            return kExitInvariant;
        }

        if (as_json) {
            json out{{"max_cells", max_cells},
                     {"seed", seed},
                     {"passed", report.passed},
                     {"shapes", report.stats.shapes},
                     {"configs", report.stats.configs_checked},
                     {"trees", report.stats.trees_enumerated},
                     {"paths", report.stats.paths_checked},
                     {"rook_pairs", report.stats.rook_pairs_checked},
                     {"weight_checks", report.stats.weight_checks},
                     {"order_trials", report.stats.order_trials},
                     {"pathless_shapes", report.stats.pathless_shapes},
                     {"failures", report.failures},
                     {"warnings", report.warnings}};
            std::cout << out.dump() << "\n";
        } else {
            std::cout << "shapes checked:  " << report.stats.shapes << "\n"
                      << "configurations:  " << report.stats.configs_checked << "\n"
                      << "trees:           " << report.stats.trees_enumerated << "\n"
                      << "paths:           " << report.stats.paths_checked << "\n"
                      << "rook pairs:      " << report.stats.rook_pairs_checked << "\n"
                      << "weight checks:   " << report.stats.weight_checks << "\n"
                      << "order trials:    " << report.stats.order_trials << "\n"
                      << "pathless shapes: " << report.stats.pathless_shapes << "\n";
            for (const std::string& w : report.warnings) std::cout << "warning: " << w << "\n";
            if (report.passed) {
                std::cout << "PASS: all invariants hold (max-cells=" << max_cells
                          << ", seed=" << seed << ")\n";
            } else {
                for (const std::string& f : report.failures) std::cout << "FAIL: " << f << "\n";
            }
        }
        return report.passed ? kExitOk : kExitInvariant;
    }
};

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact combinatorics on Ferrers graphs: rook placements, Hamiltonian paths, "
                 "spanning trees, and their weighted counts"};
    app.require_subcommand(1);

    InfoCmd info;
    auto* info_cmd = app.add_subcommand("info", "Summarize a diagram and its graph");
    info_cmd->add_option("--shape", info.shape, "Row lengths, e.g. 6,5,5,2")->required();
    info_cmd->add_flag("--json", info.as_json, "Machine-readable output");

    CountCmd count;
    auto* count_cmd = app.add_subcommand("count", "Count rooks, hamiltonian paths, or spanning trees");
    count_cmd->add_option("kind", count.kind, "rooks | hamiltonian | spanning")->required();
    count_cmd->add_option("--shape", count.shape, "Row lengths")->required();
    count_cmd->add_option("--method", count.method,
                          "formula | enumerate | kirchhoff (validity depends on kind)");
    count_cmd->add_flag("--all-methods", count.all_methods,
                        "Run every valid method and fail on disagreement");
    count_cmd->add_flag("--json", count.as_json, "Machine-readable output");

    ConvertCmd convert;
    auto* convert_cmd = app.add_subcommand("convert", "Convert between equivalent objects");
    convert_cmd
        ->add_option("direction", convert.direction,
                     "path-to-rooks | rooks-to-path | config-to-tree | tree-to-config")
        ->required();
    convert_cmd->add_option("--shape", convert.shape, "Row lengths")->required();
    convert_cmd->add_option("--path", convert.path, "Path, e.g. \"r2 c1 r1 c2\"");
    convert_cmd->add_option("--a", convert.a, "First placement, e.g. \"1,2;2,1\"");
    convert_cmd->add_option("--b", convert.b, "Second placement");
    convert_cmd->add_option("--config", convert.config, "Configuration, e.g. \"R=2,1;C=2,2\"");
    convert_cmd->add_option("--tree", convert.tree, "Tree edges, e.g. \"1,1;1,2;2,1\"");
    convert_cmd->add_flag("--json", convert.as_json, "Machine-readable output");

    WeightCmd weight;
    auto* weight_cmd = app.add_subcommand("weight", "Total weight of all spanning trees");
    weight_cmd->add_option("--shape", weight.shape, "Row lengths")->required();
    weight_cmd->add_option("--x", weight.x, "Row weights, e.g. 1,2")->required();
    weight_cmd->add_option("--y", weight.y, "Column weights, e.g. 3,4")->required();
    weight_cmd->add_option("--method", weight.method, "formula | kirchhoff | enumerate");
    weight_cmd->add_flag("--all-methods", weight.all_methods,
                         "Run every method and fail on disagreement");
    weight_cmd->add_flag("--json", weight.as_json, "Machine-readable output");

    VerifyCmd verify;
    auto* verify_cmd = app.add_subcommand("verify", "Sweep all shapes up to a cell budget and "
                                                    "check every library invariant");
    verify_cmd->add_option("--max-cells", verify.max_cells, "Largest cell count to sweep");
    verify_cmd->add_option("--seed", verify.seed, "Seed for random weights and orders");
    verify_cmd->add_flag("--json", verify.as_json, "Machine-readable output");
    // Self-test of the harness: deliberately break one bijection step and
    // confirm verification fails.
    verify_cmd->add_option("--mutate", verify.mutate, "none | fallback-highest")
        ->group(""); // hidden

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitRejected;
    }

    try {
        if (*info_cmd) return info.run();
        if (*count_cmd) return count.run();
        if (*convert_cmd) return convert.run();
        if (*weight_cmd) return weight.run();
        if (*verify_cmd) return verify.run();
    } catch (const ferrers::RejectedInput& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitRejected;
    } catch (const ferrers::InvariantViolation& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInvariant;
    } catch (const ferrers::ResourceLimit& e) {
        std::cerr << "resource limit: " << e.what() << "\n";
        return kExitResource;
    }
    return kExitOk;
}
