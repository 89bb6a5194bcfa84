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
#include "support/corpus.hpp"

using namespace omegacoalg;
using testing::spell;

namespace {

using S = std::string;
const Sort kE{"e"};
const Sort kO{"o"};

// Tree with labels, no container check: used to build ill-sorted inputs.
ApproxTree chain_of(const std::vector<const char*>& labels) {
    ApproxTree t = make_trunc();
    for (auto it = labels.rbegin(); it != labels.rend(); ++it) {
        t = ApproxTree::node_unchecked(*it, {t}, t.depth() + 1);
    }
    return t;
}

// Four states alternating E/O twice round: p0 -> q0 -> p1 -> q1 -> p0.
IndexedCoalgebra<S> double_parity() {
    return IndexedCoalgebra<S>(
        catalog::parity_signature(), {"p0", "q0", "p1", "q1"},
        [](const S& s) { return s[0] == 'p' ? kE : kO; },
        [](const S& s) {
            static const std::map<S, PValue<S>> g{{"p0", {"E", {"q0"}}},
                                                  {"q0", {"O", {"p1"}}},
                                                  {"p1", {"E", {"q1"}}},
                                                  {"q1", {"O", {"p0"}}}};
            return g.at(s);
        });
}

template <class F>
ErrorKind kind_of(F&& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.kind();
    }
    FAIL("no exception");
    return ErrorKind::Validation;
}

}  // namespace

TEST_SUITE("indexed containers") {
    TEST_CASE("declarations are validated") {
        const auto ic = catalog::parity_signature();
        CHECK(ic.labels_at(kE) == std::vector<Label>{"E"});
        CHECK(ic.arity(kE, "E") == 1);
        CHECK(ic.child_sort(kE, "E", 0) == kO);
        CHECK(kind_of([&] { ic.shape(kE, "O"); }) == ErrorKind::UnknownLabel);
        CHECK(kind_of([&] { ic.shape(Sort{"z"}, "O"); }) == ErrorKind::SortMismatch);
        CHECK(kind_of([&] { IndexedContainer({kE, kE}, {}); }) == ErrorKind::Validation);
        CHECK(kind_of([&] { IndexedContainer({kE}, {{kE, {{"E", {kO}}}}}); }) == ErrorKind::Validation);
    }

    TEST_CASE("well_sorted") {
        const auto ic = catalog::parity_signature();
        CHECK(well_sorted(ic, {kE, chain_of({"E", "O"})}));
        CHECK_FALSE(well_sorted(ic, {kE, chain_of({"E", "E"})}));
        CHECK_FALSE(well_sorted(ic, {kO, chain_of({"E"})}));
        CHECK(well_sorted(ic, {kE, make_trunc()}));
        CHECK(well_sorted(ic, {kO, make_trunc()}));
    }

    TEST_CASE("coalgebras are checked against sorts") {
        const auto ic = catalog::parity_signature();
        CHECK(kind_of([&] {
                  IndexedCoalgebra<S>(
                      ic, {"p", "q"}, [](const S& s) { return s == "p" ? kE : kO; },
                      [](const S& s) { return s == "p" ? PValue<S>{"E", {"p"}} : PValue<S>{"O", {"p"}}; });
              }) == ErrorKind::SortMismatch);
        CHECK(kind_of([&] {
                  IndexedCoalgebra<S>(ic, {"p"}, [](const S& s) { return s == "p" ? kE : kO; },
                                      [](const S&) { return PValue<S>{"E", {"q"}}; });
              }) == ErrorKind::UnknownState);
    }

    TEST_CASE("approximation and unfolding at a sort") {
        const auto c = catalog::parity_coalgebra();
        const auto two = iapproximate(c, S("p"), 2);
        CHECK(two.sort == kE);
        CHECK(spell(two.tree) == "E[O[#]]");
        const auto zero = iapproximate(c, S("p"), 0);
        CHECK(zero.sort == kE);
        CHECK(zero.tree.is_trunc());
        CHECK(spell(iunfold(c, S("p")).at(3).tree) == "E[O[E[#]]]");
        for (std::size_t n = 0; n <= 30; ++n) {
            CHECK(well_sorted(c.base(), iapproximate(c, S("p"), n)));
            CHECK(well_sorted(c.base(), iapproximate(c, S("q"), n)));
        }
    }

    TEST_CASE("i_out and i_into") {
        const auto c = catalog::parity_coalgebra();
        const auto& ic = c.base();
        const auto o = i_out(ic, iunfold(c, S("p")));
        CHECK(o.label == Label("E"));
        REQUIRE(o.children.size() == 1);
        CHECK(o.children[0].sort() == kO);
        CHECK(observationally_equal(o.children[0].element(), iunfold(c, S("q")).element(), 5));

        const auto back = i_into(ic, kE, o);
        CHECK(back.sort() == kE);
        CHECK(observationally_equal(back.element(), iunfold(c, S("p")).element(), 20));

        CHECK(kind_of([&] { i_into(ic, kE, PValue<SortedMElement>{"E", {iunfold(c, S("p"))}}); }) ==
              ErrorKind::SortMismatch);
        CHECK(kind_of([&] { i_out(ic, SortedMElement(kO, iunfold(c, S("p")).element())); }) ==
              ErrorKind::UnknownLabel);
    }

    TEST_CASE("bisimilarity respects sorts") {
        const auto c = catalog::parity_coalgebra();
        CHECK(ibounded_bisim(c, S("p"), S("p"), 10));
        CHECK(kind_of([&] { ibounded_bisim(c, S("p"), S("q"), 1); }) == ErrorKind::SortMismatch);

        const auto d = double_parity();
        CHECK(ibounded_bisim(d, S("p0"), S("p1"), 20));
        CHECK(ibounded_bisim(d, S("q0"), S("q1"), 20));
        const auto part = ipartition_refine(d);
        CHECK(part.blocks.size() == 2);
        CHECK(part.same_block("p0", "p1"));
        CHECK_FALSE(part.same_block("p0", "q0"));
    }

    TEST_CASE("sorts split blocks that labels alone would merge") {
        // Same label at two sorts, both loops: observationally identical
        // trees, different sorts.
        const Sort a{"a"};
        const Sort b{"b"};
        IndexedContainer ic({a, b}, {{a, {{"L", {a}}}}, {b, {{"L", {b}}}}});
        IndexedCoalgebra<S> c(
            ic, {"x", "y"}, [&](const S& s) { return s == "x" ? a : b; },
            [](const S& s) { return PValue<S>{"L", {s}}; });
        CHECK(ipartition_refine(c).blocks.size() == 2);
    }

    TEST_CASE("morphism checks") {
        const auto c = catalog::parity_coalgebra();
        std::function<SortedMElement(const S&)> u = [c](const S& s) { return iunfold(c, s); };
        CHECK(i_verify_morphism(c, u, 30));
        CHECK(i_uniqueness_probe(c, u, 30));

        std::function<SortedMElement(const S&)> swapped = [c](const S& s) {
            return iunfold(c, s == "p" ? S("q") : S("p"));
        };
        CHECK_FALSE(i_verify_morphism(c, swapped, 3));
        CHECK(kind_of([&] { i_uniqueness_probe(c, swapped, 3); }) == ErrorKind::NotAMorphism);
    }

    TEST_CASE("the single-sort embedding agrees with the plain operations") {
        const auto plain = catalog::fig1_coalgebra();
        const auto e = embed(plain);
        CHECK(e.base().sorts() == std::vector<Sort>{Sort{"*"}});
        for (const auto& s : plain.finite_states()) {
            CHECK(e.sort_of(s) == Sort{"*"});
            for (std::size_t n = 0; n <= 30; ++n) {
                CHECK(tree_equal(iapproximate(e, s, n).tree, approximate(plain, s, n)));
            }
        }
        CHECK(ipartition_refine(e).blocks == partition_refine(plain).blocks);
    }
}
