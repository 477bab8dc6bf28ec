#include "doctest.h"
#include "ferrers/hamiltonian.hpp"
#include "ferrers/oracles.hpp"
#include "ferrers/partition_gen.hpp"
#include "ferrers/text_format.hpp"

using namespace ferrers;

namespace {

HamiltonianPath path_of(const std::string& text) { return text::parse_path(text); }

struct MutationGuard {
    ~MutationGuard() { test_hooks::set_bijection_mutation(BijectionMutation::none); }
};

} // namespace

TEST_SUITE_BEGIN("hamiltonian");

TEST_CASE("worked example on (5,4,4,3,2)") {
    const Diagram d = Diagram::from_row_lengths({5, 4, 4, 3, 2});
    const HamiltonianPath p = path_of("r5 c2 r4 c3 r2 c1 r3 c4 r1 c5");
    REQUIRE(static_cast<bool>(validate_path(d, p)));

    const RookPair pair = path_to_rook_pair(d, p);
    CHECK(pair.a == RookPlacement::of({{5, 1}, {4, 2}, {2, 3}, {3, 4}, {1, 5}}));
    CHECK(pair.b == RookPlacement::of({{5, 2}, {4, 3}, {2, 1}, {3, 4}, {1, 5}}));
    CHECK(rook_pair_to_path(d, pair.a, pair.b) == p);
}

TEST_CASE("small conversions") {
    const Diagram one = Diagram::from_row_lengths({1});
    const RookPair unit = path_to_rook_pair(one, path_of("r1 c1"));
    CHECK(unit.a == RookPlacement::of({{1, 1}}));
    CHECK(unit.b == RookPlacement::of({{1, 1}}));
    CHECK(rook_pair_to_path(one, unit.a, unit.b) == path_of("r1 c1"));

    const Diagram k22 = Diagram::from_row_lengths({2, 2});
    const RookPair diag = path_to_rook_pair(k22, path_of("r1 c1 r2 c2"));
    CHECK(diag.a == RookPlacement::of({{1, 1}, {2, 2}}));
    CHECK(diag.b == RookPlacement::of({{1, 1}, {2, 2}}));

    CHECK(rook_pair_to_path(k22, RookPlacement::of({{1, 2}, {2, 1}}),
                            RookPlacement::of({{1, 1}, {2, 2}})) == path_of("r2 c2 r1 c1"));
}

TEST_CASE("validate_path diagnostics") {
    const Diagram k22 = Diagram::from_row_lengths({2, 2});
    CHECK_FALSE(validate_path(k22, path_of("r1 c1 r1 c2")).ok);       // row repeated
    CHECK_FALSE(validate_path(k22, path_of("r1 c1")).ok);             // too short
    CHECK_FALSE(validate_path(k22, path_of("c1 r1 c2 r2")).ok);       // starts at a column
    CHECK_FALSE(validate_path(k22, path_of("r1 c1 r2 c3")).ok);       // index range
    CHECK_FALSE(validate_path(Diagram::from_row_lengths({2, 1}),
                              path_of("r1 c2 r2 c1")).ok);            // square (2,2) is absent
    CHECK_FALSE(validate_path(Diagram::from_row_lengths({3, 2}),
                              path_of("r1 c1 r2 c2")).ok);            // non-square diagram

    CHECK_THROWS_AS(path_to_rook_pair(k22, path_of("r1 c1 r1 c2")), RejectedInput);
    CHECK_THROWS_AS(path_to_rook_pair(Diagram::from_row_lengths({3, 2}), path_of("r1 c1 r2 c2")),
                    RejectedInput);
    CHECK_THROWS_AS(rook_pair_to_path(k22, RookPlacement::of({{1, 1}, {2, 1}}),
                                      RookPlacement::of({{1, 1}, {2, 2}})),
                    RejectedInput);
}

TEST_CASE("round trips on every square shape up to side 4") {
    for (int n = 1; n <= 4; ++n) {
        for (const auto& lengths : square_shapes(n)) {
            const Diagram d = Diagram::from_row_lengths(lengths);
            for (const HamiltonianPath& p : enumerate_hamiltonian_paths(d)) {
                const RookPair pair = path_to_rook_pair(d, p);
                REQUIRE(rook_pair_to_path(d, pair.a, pair.b) == p);
            }
            const auto placements = enumerate_rook_placements(d);
            for (const RookPlacement& a : placements) {
                for (const RookPlacement& b : placements) {
                    const HamiltonianPath p = rook_pair_to_path(d, a, b);
                    const RookPair back = path_to_rook_pair(d, p);
                    REQUIRE(back.a == a);
                    REQUIRE(back.b == b);
                }
            }
        }
    }
}

TEST_CASE("swap involution") {
    const Diagram one = Diagram::from_row_lengths({1});
    CHECK(swap_ab_path(one, path_of("r1 c1")) == path_of("r1 c1"));

    const Diagram k22 = Diagram::from_row_lengths({2, 2});
    for (const HamiltonianPath& p : enumerate_hamiltonian_paths(k22)) {
        CHECK(swap_ab_path(k22, swap_ab_path(k22, p)) == p);
    }

    const Diagram d = Diagram::from_row_lengths({5, 4, 4, 3, 2});
    const HamiltonianPath p = path_of("r5 c2 r4 c3 r2 c1 r3 c4 r1 c5");
    const HamiltonianPath swapped = swap_ab_path(d, p);
    CHECK(static_cast<bool>(validate_path(d, swapped)));
    CHECK(swap_ab_path(d, swapped) == p);
}

TEST_CASE("transpose") {
    const Diagram one = Diagram::from_row_lengths({1});
    CHECK(transpose_path(one, path_of("r1 c1")) == path_of("r1 c1"));

    const Diagram k22 = Diagram::from_row_lengths({2, 2});
    CHECK(transpose_path(k22, path_of("r1 c1 r2 c2")) == path_of("r2 c2 r1 c1"));

    const Diagram d = Diagram::from_row_lengths({5, 4, 4, 3, 2});
    const Diagram conj = d.conjugate();
    for (const HamiltonianPath& p : enumerate_hamiltonian_paths(d)) {
        const HamiltonianPath flipped = transpose_path(d, p);
        REQUIRE(static_cast<bool>(validate_path(conj, flipped)));
        REQUIRE(transpose_path(conj, flipped) == p);
    }
}

TEST_CASE("mutation hook breaks the bijection detectably") {
    MutationGuard guard;
    const Diagram d = Diagram::from_row_lengths({3, 3, 3});
    const RookPlacement a = RookPlacement::of({{1, 1}, {2, 2}, {3, 3}});
    const RookPlacement b = a;
    const HamiltonianPath honest = rook_pair_to_path(d, a, b);

    test_hooks::set_bijection_mutation(BijectionMutation::fallback_highest);
    bool detected = false;
    try {
        const HamiltonianPath mutated = rook_pair_to_path(d, a, b);
        if (mutated != honest) {
            const RookPair back = path_to_rook_pair(d, mutated);
            detected = (back.a != a) || (back.b != b);
        }
    } catch (const InvariantViolation&) {
        detected = true;
    }
    CHECK(detected);
}

TEST_SUITE_END();
