#include <numeric>

#include "doctest.h"
#include "lcbs/dense.hpp"
#include "lcbs/lcis.hpp"
#include "lcbs/rolling.hpp"
#include "support/instances.hpp"

using namespace lcbs;
using lcbs::testing::running_example;

TEST_CASE("twophase_row_update: first rows of the running example") {
    const std::vector<Symbol> b{1, 2, 3, 5, 6, 4};
    TwoPhaseRowState state(b.size());

    auto row = twophase_row_update(2, 0, b, state);
    CHECK(state.up == std::vector<std::size_t>{0, 1, 0, 0, 0, 0});
    CHECK(state.down2 == std::vector<std::size_t>(6, 0));
    CHECK(row.length == 1);
    CHECK(row.column == 1);
    CHECK(row.phase == Phase::up);
    CHECK(row.matches == 1);

    // Symbol 1 sits left of the earlier 2, so nothing can precede or follow it yet.
    row = twophase_row_update(1, 1, b, state);
    CHECK(state.up == std::vector<std::size_t>{1, 1, 0, 0, 0, 0});
    CHECK(state.down2 == std::vector<std::size_t>(6, 0));
    CHECK(state.up_row[0] == 1);

    row = twophase_row_update(3, 2, b, state);
    CHECK(state.up[2] == 2);
    CHECK(row.length == 2);
}

TEST_CASE("twophase_row_update: falling step writes down2") {
    const std::vector<Symbol> b{5, 3};
    TwoPhaseRowState state(2);
    twophase_row_update(5, 0, b, state);
    const auto row = twophase_row_update(3, 1, b, state);
    CHECK(state.down2 == std::vector<std::size_t>{0, 2});
    CHECK(state.down2_row[1] == 1);
    CHECK(row.phase == Phase::down);
    CHECK(row.length == 2);
}

TEST_CASE("twophase_row_update: state length mismatch") {
    TwoPhaseRowState state(3);
    const std::vector<Symbol> b{1, 2};
    CHECK_THROWS_AS(twophase_row_update(1, 0, b, state), ContractViolation);
}

TEST_CASE("rolling_length on small inputs") {
    const auto ex = rolling_length(running_example());
    CHECK(ex.length == 4);
    REQUIRE(ex.end);
    CHECK(*ex.end == MatchPoint{6, 5, 4});

    const auto none = rolling_length({{1, 2}, {3, 4}});
    CHECK(none.length == 0);
    CHECK_FALSE(none.end);

    std::vector<Symbol> up(12);
    std::iota(up.begin(), up.end(), 1);
    CHECK(rolling_length({up, up}).length == 12);
    CHECK(rolling_length({{5, 5}, {5}}).length == 1);
}

TEST_CASE("rolling_witness on the running example") {
    const auto p = running_example();
    const auto out = rolling_witness(p);
    CHECK(out.length == 4);
    REQUIRE(out.witness);
    CHECK(validate_witness(p, *out.witness).ok);
    CHECK(out.witness->values() == std::vector<Symbol>{1, 3, 5, 4});
    CHECK(out.peak == std::optional<MatchPoint>{MatchPoint{5, 3, 5}});
    CHECK(out.stats.aux_elements == 4 * 6);
}

TEST_CASE("rolling_witness: empty and purely falling chains") {
    const auto empty = rolling_witness({{1}, {2}});
    CHECK(empty.length == 0);
    REQUIRE(empty.witness);
    CHECK(empty.witness->points.empty());

    const SequencePair p{{9, 7, 4, 1}, {9, 8, 7, 1}};
    const auto out = rolling_witness(p);
    CHECK(out.length == 3);
    CHECK(out.witness->peak_pos == std::optional<std::size_t>{0});
    CHECK(validate_witness(p, *out.witness).ok);
}

TEST_CASE("rolling uses four arrays of the shorter length") {
    lcbs::testing::InstanceGen gen(41);
    for (int trial = 0; trial < 100; ++trial) {
        const auto p = gen.pair(60, 6);
        const auto shorter = std::min(p.n(), p.m());
        CHECK(rolling_lcbs(p, false).stats.aux_elements == 4 * shorter);
        CHECK(rolling_lcbs(p, true).stats.aux_elements == 4 * shorter);
    }
}

TEST_CASE("max over the up phase is the LCIS length") {
    lcbs::testing::InstanceGen gen(42);
    for (int trial = 0; trial < 300; ++trial) {
        const auto p = gen.pair(25, gen.pick(std::vector<Symbol>{3, 8, 25}));
        TwoPhaseRowState state(p.m());
        for (std::size_t i = 0; i < p.n(); ++i) twophase_row_update(p.a[i], i, p.b, state);
        std::size_t max_up = 0;
        for (auto u : state.up) max_up = std::max(max_up, u);
        std::size_t lcis = 0;
        for (const auto& e : lcis_tables(p.a, p.b).entries()) lcis = std::max(lcis, e.length);
        CHECK(max_up == lcis);
    }
}

TEST_CASE("appending symbols never shortens the answer") {
    lcbs::testing::InstanceGen gen(43);
    for (int trial = 0; trial < 200; ++trial) {
        auto p = gen.pair(20, 6);
        auto prev = rolling_length(p).length;
        for (int step = 0; step < 4; ++step) {
            (gen.length(0, 1) ? p.a : p.b).push_back(static_cast<Symbol>(gen.length(1, 6)));
            const auto next = rolling_length(p).length;
            CHECK(next >= prev);
            prev = next;
        }
    }
}

TEST_CASE("rolling agrees with dense on every ternary pair up to length 4") {
    for (std::size_t n = 0; n <= 4; ++n) {
        for (std::size_t m = 0; m <= 4; ++m) {
            std::size_t ca = 1, cb = 1;
            for (std::size_t k = 0; k < n; ++k) ca *= 3;
            for (std::size_t k = 0; k < m; ++k) cb *= 3;
            for (std::size_t x = 0; x < ca; ++x) {
                for (std::size_t y = 0; y < cb; ++y) {
                    SequencePair p;
                    for (std::size_t k = 0, v = x; k < n; ++k, v /= 3) p.a.push_back(1 + v % 3);
                    for (std::size_t k = 0, v = y; k < m; ++k, v /= 3) p.b.push_back(1 + v % 3);
                    const auto out = rolling_witness(p);
                    REQUIRE(out.length == dense_lcbs(p, false).length);
                    REQUIRE(validate_witness(p, *out.witness).ok);
                    REQUIRE(out.witness->size() == out.length);
                }
            }
        }
    }
}

TEST_CASE("rolling agrees with dense on random instances up to length 8 and beyond") {
    lcbs::testing::InstanceGen gen(44);
    for (int trial = 0; trial < 2000; ++trial) {
        const auto p = gen.pair(trial < 1500 ? 8 : 60, gen.pick(std::vector<Symbol>{2, 3, 5, 8, 30}));
        const auto out = rolling_witness(p);
        CHECK(out.length == dense_lcbs(p, false).length);
        CHECK(out.witness->size() == out.length);
        CHECK(validate_witness(p, *out.witness).ok);
    }
}
