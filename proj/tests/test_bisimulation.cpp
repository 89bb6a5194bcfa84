/*
 * Copyright 2026 The omegacoalg Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */


#include <doctest.h>

#include "omegacoalg/omegacoalg.hpp"

using namespace omegacoalg;

namespace {

using S = std::string;

const Container kXY = Container::finite({{"x", 1}, {"y", 1}});

Coalgebra<S> cycle(const char* third_label) {
    std::map<S, PValue<S>> g{
        {"s0", {"x", {"s1"}}}, {"s1", {"x", {"s2"}}}, {"s2", {third_label, {"s0"}}}};
    return Coalgebra<S>(kXY, [g](const S& s) { return g.at(s); }, {"s0", "s1", "s2"});
}

std::vector<std::pair<S, S>> full(const std::vector<S>& states) {
    std::vector<std::pair<S, S>> rel;
    for (const auto& s : states) {
        for (const auto& t : states) rel.emplace_back(s, t);
    }
    return rel;
}

}  // namespace

TEST_SUITE("bisimulation") {
    TEST_CASE("the diagonal is a bisimulation") {
        const auto conat = catalog::conat_coalgebra(0);
        Coalgebra<S> loop(catalog::conat_signature(),
                          [](const S&) { return PValue<S>{"S", {"inf"}}; }, {"inf"});
        const auto d = diagonal_bisim(loop);
        REQUIRE(d.entries.size() == 1);
        CHECK(d.entries[0].pair == std::pair<S, S>{"inf", "inf"});
        CHECK(d.entries[0].alpha.label == Label("S"));
        CHECK(d.entries[0].alpha.children == std::vector<std::pair<S, S>>{{"inf", "inf"}});
        CHECK(verify_bisim(loop, d));
        CHECK(verify_bisim(conat, diagonal_bisim(conat)));
        CHECK(verify_bisim(cycle("y"), diagonal_bisim(cycle("y"))));

        Coalgebra<S> empty(kXY, [](const S&) { return PValue<S>{"x", {""}}; }, std::vector<S>{});
        const auto e = diagonal_bisim(empty);
        CHECK(e.entries.empty());
        CHECK(verify_bisim(empty, e));
    }

    TEST_CASE("the full relation on the constant cycle verifies") {
        const auto c = cycle("x");
        const auto w = forced_witness(c, full(c.finite_states()));
        CHECK(w.entries.size() == 9);
        CHECK(verify_bisim(c, w));
        CHECK(coinduction_transfer(c, w, S("s0"), S("s1"), 20));
    }

    TEST_CASE("witnesses with mismatched labels or unrelated children fail") {
        const auto c = cycle("y");
        CHECK_FALSE(verify_bisim(c, forced_witness(c, {{"s0", "s2"}})));
        // (s0, s1) alone: labels agree but the child pair (s1, s2) is missing.
        CHECK_FALSE(verify_bisim(c, forced_witness(c, {{"s0", "s1"}})));

        // A tampered alpha.
        auto w = diagonal_bisim(c);
        w.entries[0].alpha.children[0].second = "s0";
        CHECK_FALSE(verify_bisim(c, w));
    }

    TEST_CASE("coinduction_transfer guards its inputs") {
        const auto c = cycle("y");
        try {
            coinduction_transfer(c, forced_witness(c, {{"s0", "s1"}}), S("s0"), S("s1"), 5);
            FAIL("expected InvalidWitness");
        } catch (const Error& e) {
            CHECK(e.kind() == ErrorKind::InvalidWitness);
        }
        try {
            coinduction_transfer(c, diagonal_bisim(c), S("s0"), S("s1"), 5);
            FAIL("expected PairNotRelated");
        } catch (const Error& e) {
            CHECK(e.kind() == ErrorKind::PairNotRelated);
        }
        CHECK(coinduction_transfer(c, diagonal_bisim(c), S("s2"), S("s2"), 30));
    }

    TEST_CASE("bounded bisimilarity and distinguishing depth") {
        CHECK(bounded_bisim(cycle("x"), S("s0"), S("s1"), 5));
        CHECK_FALSE(bounded_bisim(cycle("y"), S("s0"), S("s1"), 3));
        CHECK(distinguishing_depth(cycle("y"), S("s0"), S("s1"), 10) == std::optional<std::size_t>(2));
        CHECK(distinguishing_depth(cycle("y"), S("s0"), S("s2"), 10) == std::optional<std::size_t>(1));
        CHECK(bounded_bisim(cycle("y"), S("s1"), S("s1"), 40));
        CHECK(bounded_bisim(cycle("y"), S("s0"), S("s1"), 1));
    }

    TEST_CASE("partition refinement") {
        const auto same = partition_refine(cycle("x"));
        CHECK(same.blocks.size() == 1);
        CHECK(same.blocks[0] == std::vector<S>{"s0", "s1", "s2"});

        const auto split = partition_refine(cycle("y"));
        CHECK(split.blocks.size() == 3);
        for (const auto& s : {"s0", "s1", "s2"}) {
            for (const auto& t : {"s0", "s1", "s2"}) {
                CHECK(split.same_block(s, t) == (S(s) == S(t)));
                CHECK(split.same_block(s, t) == bounded_bisim(cycle("y"), S(s), S(t), 3));
            }
        }

        const auto tree = partition_refine(catalog::fig1_coalgebra());
        CHECK(tree.blocks.size() == 2);
        CHECK_FALSE(tree.same_block("t", "u"));

        CHECK(verify_bisim(cycle("x"), witness_from_partition(cycle("x"), same)));
    }

    TEST_CASE("conat states are told apart one layer after the zero") {
        const auto c = catalog::conat_coalgebra(10);
        for (std::size_t k = 0; k <= 10; ++k) {
            CHECK_FALSE(bounded_bisim(c, S("inf"), std::to_string(k), k + 1));
            CHECK(bounded_bisim(c, S("inf"), std::to_string(k), k));
        }
        for (std::size_t k = 0; k <= 10; ++k) {
            for (std::size_t j = 0; j < k; ++j) {
                CHECK(distinguishing_depth(c, std::to_string(k), std::to_string(j), 20) ==
                      std::optional<std::size_t>(j + 1));
            }
        }
        CHECK(partition_refine(c).blocks.size() == 12);
    }

    TEST_CASE("minimize") {
        const auto m = minimize(cycle("x"));
        REQUIRE(m.quotient.finite_states() == std::vector<S>{"s0"});
        CHECK(m.quotient.step("s0") == PValue<S>{"x", {"s0"}});
        for (const auto& s : {"s0", "s1", "s2"}) CHECK(m.representative(s) == "s0");

        const auto tree = minimize(catalog::fig1_coalgebra());
        CHECK(tree.quotient.finite_states().size() == 2);

        const auto y = cycle("y");
        const auto my = minimize(y);
        CHECK(my.quotient.finite_states().size() == 3);
        for (const auto& s : y.finite_states()) {
            CHECK(observationally_equal(unfold(y, s), unfold(my.quotient, my.representative(s)), 30));
        }
    }
}
