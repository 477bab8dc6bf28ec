#include <random>
#include <set>

#include "doctest.h"
#include "ferrers/oracles.hpp"
#include "ferrers/partition_gen.hpp"
#include "ferrers/spanning.hpp"
#include "ferrers/text_format.hpp"

using namespace ferrers;

namespace {

// The marked-up shape (6,5,5,2) used throughout: R at (2,3),(3,2),(4,2) and
// C at (1,4),(2,3),(4,2),(3,5),(1,6).
const RcConfiguration kWorkedConfig{{3, 2, 2}, {4, 2, 1, 3, 1}};

const SpanningTree kWorkedTree = SpanningTree::of(
    {{1, 3}, {1, 4}, {1, 6}, {2, 2}, {2, 3}, {3, 2}, {3, 5}, {4, 1}, {4, 2}});

} // namespace

TEST_SUITE_BEGIN("spanning");

TEST_CASE("counting formula") {
    CHECK(count_spanning_trees_formula(Diagram::from_row_lengths({1})) == 1);
    CHECK(count_spanning_trees_formula(Diagram::from_row_lengths({2, 2})) == 4);
    CHECK(count_spanning_trees_formula(Diagram::from_row_lengths({6, 5, 5, 2})) == 5400);
}

TEST_CASE("worked example on (6,5,5,2)") {
    const Diagram d = Diagram::from_row_lengths({6, 5, 5, 2});
    REQUIRE(static_cast<bool>(validate_config(d, kWorkedConfig)));
    CHECK(config_to_tree(d, kWorkedConfig) == kWorkedTree);
    CHECK(tree_to_config(d, kWorkedTree) == kWorkedConfig);
}

TEST_CASE("degenerate shapes") {
    const Diagram one = Diagram::from_row_lengths({1});
    const RcConfiguration empty;
    CHECK(config_to_tree(one, empty) == SpanningTree::of({{1, 1}}));
    CHECK(tree_to_config(one, SpanningTree::of({{1, 1}})) == empty);

    // Two rows, one column: the single R forces the only spanning tree.
    const Diagram column = Diagram::from_row_lengths({1, 1});
    const RcConfiguration cfg{{1}, {}};
    CHECK(config_to_tree(column, cfg) == SpanningTree::of({{1, 1}, {2, 1}}));
    CHECK(tree_to_config(column, SpanningTree::of({{1, 1}, {2, 1}})) == cfg);
}

TEST_CASE("validators") {
    const Diagram d = Diagram::from_row_lengths({6, 5, 5, 2});
    CHECK_FALSE(validate_config(d, RcConfiguration{{3, 2}, {4, 2, 1, 3, 1}}).ok); // missing R
    CHECK_FALSE(validate_config(d, RcConfiguration{{3, 2, 3}, {4, 2, 1, 3, 1}}).ok); // R outside row 4
    CHECK_FALSE(validate_config(d, RcConfiguration{{3, 2, 2}, {4, 2, 1, 3, 2}}).ok); // C outside col 6

    CHECK_FALSE(validate_tree(d, SpanningTree::of({{1, 1}})).ok); // wrong size
    auto cyclic = kWorkedTree.edges;
    cyclic[0] = {3, 1}; // closes the cycle r3-c1-r4-c2-r3
    CHECK_FALSE(validate_tree(d, SpanningTree::of(cyclic)).ok);
    auto outside = kWorkedTree.edges;
    outside[0] = {4, 3};
    CHECK_FALSE(validate_tree(d, SpanningTree::of(outside)).ok);

    CHECK_THROWS_AS(config_to_tree(d, RcConfiguration{{3, 2}, {4, 2, 1, 3, 1}}), RejectedInput);
    CHECK_THROWS_AS(tree_to_config(d, SpanningTree::of({{1, 1}})), RejectedInput);
}

TEST_CASE("config enumeration is lexicographic and complete") {
    const Diagram one = Diagram::from_row_lengths({1});
    ConfigEnumerator en(one);
    RcConfiguration cfg;
    REQUIRE(en.next(cfg));
    CHECK(cfg == RcConfiguration{});
    CHECK_FALSE(en.next(cfg));

    const Diagram k22 = Diagram::from_row_lengths({2, 2});
    std::vector<RcConfiguration> all;
    for_each_config(k22, [&](const RcConfiguration& c) { all.push_back(c); });
    REQUIRE(all.size() == 4);
    CHECK(all[0] == RcConfiguration{{1}, {1}});
    CHECK(all[1] == RcConfiguration{{1}, {2}});
    CHECK(all[2] == RcConfiguration{{2}, {1}});
    CHECK(all[3] == RcConfiguration{{2}, {2}});

    long long streamed = 0;
    for_each_config(Diagram::from_row_lengths({6, 5, 5, 2}),
                    [&](const RcConfiguration&) { ++streamed; });
    CHECK(streamed == 5400);
}

TEST_CASE("bijectivity on all shapes with at most 9 cells") {
    for (const auto& lengths : partitions_up_to(9)) {
        const Diagram d = Diagram::from_row_lengths(lengths);
        const auto trees = enumerate_spanning_trees(d);
        std::set<SpanningTree> converted;
        for_each_config(d, [&](const RcConfiguration& cfg) {
            const SpanningTree t = config_to_tree(d, cfg);
            REQUIRE(tree_to_config(d, t) == cfg);
            REQUIRE(converted.insert(t).second);
        });
        REQUIRE(converted.size() == trees.size());
        REQUIRE(std::set<SpanningTree>(trees.begin(), trees.end()) == converted);
        for (const SpanningTree& t : trees) {
            REQUIRE(config_to_tree(d, tree_to_config(d, t)) == t);
        }
    }
}

TEST_CASE("prune and leaf orders do not matter") {
    std::mt19937_64 rng(2024);
    int trials = 0;
    for (const auto& lengths : partitions_up_to(9)) {
        const Diagram d = Diagram::from_row_lengths(lengths);
        for (int k = 0; k < 6; ++k) {
            RcConfiguration cfg;
            for (int a = 2; a <= d.rows(); ++a) {
                cfg.r_cols.push_back(
                    std::uniform_int_distribution<int>(1, d.row_length(a))(rng));
            }
            for (int b = 2; b <= d.cols(); ++b) {
                cfg.c_rows.push_back(
                    std::uniform_int_distribution<int>(1, d.col_length(b))(rng));
            }
            const SpanningTree canonical = config_to_tree(d, cfg);
            std::mt19937_64 prune_rng(rng());
            REQUIRE(config_to_tree(d, cfg, prune_rng) == canonical);
            std::mt19937_64 leaf_rng(rng());
            REQUIRE(tree_to_config(d, canonical, leaf_rng) == cfg);
            ++trials;
        }
    }
    CHECK(trials >= 100);
}

TEST_CASE("weights") {
    const Diagram one = Diagram::from_row_lengths({1});
    const WeightVector w1{{7}, {3}};
    CHECK(weighted_tree_sum_formula(one, w1) == 21);
    CHECK(tree_weight(one, SpanningTree::of({{1, 1}}), w1) == 21);
    CHECK(config_weight(one, RcConfiguration{}, w1) == 21);

    const Diagram k22 = Diagram::from_row_lengths({2, 2});
    const WeightVector w2{{1, 2}, {3, 4}};
    CHECK(weighted_tree_sum_formula(k22, w2) == 504);
    BigInt total = 0;
    for (const SpanningTree& t : enumerate_spanning_trees(k22)) {
        total += tree_weight(k22, t, w2);
    }
    CHECK(total == 504);
    CHECK(weighted_kirchhoff(k22, w2) == 504);

    const Diagram d = Diagram::from_row_lengths({6, 5, 5, 2});
    const WeightVector ones{{1, 1, 1, 1}, {1, 1, 1, 1, 1, 1}};
    CHECK(weighted_tree_sum_formula(d, ones) == 5400);

    const WeightVector mixed{{1, 2, 3, 4}, {1, 1, 2, 2, 3, 3}};
    CHECK(tree_weight(d, kWorkedTree, mixed) == config_weight(d, kWorkedConfig, mixed));

    CHECK_THROWS_AS(weighted_tree_sum_formula(d, w2), RejectedInput);
}

TEST_CASE("weight preservation across shapes with at most 8 cells") {
    std::mt19937_64 rng(99);
    std::uniform_int_distribution<int> dist(1, 5);
    for (const auto& lengths : partitions_up_to(8)) {
        const Diagram d = Diagram::from_row_lengths(lengths);
        WeightVector w;
        for (int a = 0; a < d.rows(); ++a) w.x.emplace_back(dist(rng));
        for (int b = 0; b < d.cols(); ++b) w.y.emplace_back(dist(rng));
        BigInt total = 0;
        for_each_config(d, [&](const RcConfiguration& cfg) {
            const SpanningTree t = config_to_tree(d, cfg);
            const BigInt tw = tree_weight(d, t, w);
            REQUIRE(tw == config_weight(d, cfg, w));
            total += tw;
        });
        REQUIRE(total == weighted_tree_sum_formula(d, w));
        REQUIRE(total == weighted_kirchhoff(d, w));
    }
}

TEST_SUITE_END();
