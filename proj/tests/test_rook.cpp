#include <algorithm>
#include <numeric>
#include <set>

#include "doctest.h"
#include "ferrers/partition_gen.hpp"
#include "ferrers/rook.hpp"

using namespace ferrers;

namespace {

// Independent oracle: try every permutation of columns and keep those fully
// inside the diagram.
std::set<RookPlacement> placements_by_permutation(const Diagram& d) {
    const int n = d.rows();
    std::vector<int> cols(n);
    std::iota(cols.begin(), cols.end(), 1);
    std::set<RookPlacement> out;
    do {
        bool inside = true;
        for (int a = 1; a <= n && inside; ++a) inside = cols[a - 1] <= d.row_length(a);
        if (inside) {
            std::vector<Square> squares;
            for (int a = 1; a <= n; ++a) squares.push_back({a, cols[a - 1]});
            out.insert(RookPlacement::of(std::move(squares)));
        }
    } while (std::next_permutation(cols.begin(), cols.end()));
    return out;
}

// Independent oracle: with row lengths sorted ascending s_1 <= ... <= s_n the
// placement count is the product of (s_i - i + 1), clamped at zero.
unsigned long long count_by_product(const Diagram& d) {
    std::vector<int> sorted = d.row_lengths();
    std::sort(sorted.begin(), sorted.end());
    unsigned long long product = 1;
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        const long long factor = sorted[i] - static_cast<long long>(i);
        if (factor <= 0) return 0;
        product *= static_cast<unsigned long long>(factor);
    }
    return product;
}

} // namespace

TEST_SUITE_BEGIN("rook");

TEST_CASE("golden counts") {
    CHECK(count_rook_placements(Diagram::from_row_lengths({1})) == 1);
    CHECK(count_rook_placements(Diagram::from_row_lengths({2, 2})) == 2);
    CHECK(count_rook_placements(Diagram::from_row_lengths({5, 4, 4, 3, 2})) == 8);
    CHECK(count_rook_placements(Diagram::from_row_lengths({3, 1, 1})) == 0);
}

TEST_CASE("enumeration order and content") {
    const auto two = enumerate_rook_placements(Diagram::from_row_lengths({2, 2}));
    REQUIRE(two.size() == 2);
    // Ordered by the column chosen for the last row first.
    CHECK(two[0] == RookPlacement::of({{1, 2}, {2, 1}}));
    CHECK(two[1] == RookPlacement::of({{1, 1}, {2, 2}}));

    CHECK(enumerate_rook_placements(Diagram::from_row_lengths({3, 1, 1})).empty());
    CHECK_THROWS_AS(enumerate_rook_placements(Diagram::from_row_lengths({3, 2})), RejectedInput);
    CHECK_THROWS_AS(count_rook_placements(Diagram::from_row_lengths({1, 1})), RejectedInput);
}

TEST_CASE("validate_placement") {
    const Diagram d = Diagram::from_row_lengths({5, 4, 4, 3, 2});
    CHECK(static_cast<bool>(
        validate_placement(d, RookPlacement::of({{1, 5}, {2, 3}, {3, 4}, {4, 2}, {5, 1}}))));

    const Diagram k22 = Diagram::from_row_lengths({2, 2});
    const Validation dup = validate_placement(k22, RookPlacement::of({{1, 1}, {2, 1}}));
    CHECK_FALSE(dup.ok);
    CHECK(dup.message.find("column 1") != std::string::npos);

    const Validation missing = validate_placement(k22, RookPlacement::of({{1, 1}}));
    CHECK_FALSE(missing.ok);

    const Validation outside = validate_placement(k22, RookPlacement::of({{1, 1}, {2, 3}}));
    CHECK_FALSE(outside.ok);

    const Validation off_board =
        validate_placement(Diagram::from_row_lengths({3, 1, 1}),
                           RookPlacement::of({{1, 3}, {2, 1}, {3, 2}}));
    CHECK_FALSE(off_board.ok);
    CHECK(off_board.message.find("(3,2)") != std::string::npos);
}

TEST_CASE("agreement with independent oracles") {
    for (int n = 1; n <= 4; ++n) {
        for (const auto& lengths : square_shapes(n)) {
            const Diagram d = Diagram::from_row_lengths(lengths);
            const auto enumerated = enumerate_rook_placements(d);
            const auto brute = placements_by_permutation(d);
            REQUIRE(enumerated.size() == brute.size());
            REQUIRE(std::set<RookPlacement>(enumerated.begin(), enumerated.end()) == brute);
            REQUIRE(count_rook_placements(d) == count_by_product(d));
            for (const auto& p : enumerated) REQUIRE(static_cast<bool>(validate_placement(d, p)));
        }
    }
    const Diagram big = Diagram::from_row_lengths({5, 4, 4, 3, 2});
    CHECK(enumerate_rook_placements(big).size() == placements_by_permutation(big).size());
    CHECK(count_rook_placements(big) == count_by_product(big));
}

TEST_CASE("count invariant under conjugation") {
    for (int n = 1; n <= 4; ++n) {
        for (const auto& lengths : square_shapes(n)) {
            const Diagram d = Diagram::from_row_lengths(lengths);
            REQUIRE(count_rook_placements(d) == count_rook_placements(d.conjugate()));
        }
    }
}

TEST_SUITE_END();
