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

#include <set>

#include "cli.hpp"
#include "omegacoalg/omegacoalg.hpp"
#include "support/corpus.hpp"

using namespace omegacoalg;
using namespace omegacoalg::testing;

namespace {

io::SpecDocument as_document(const RandomCoalgebra& rc) {
    std::vector<std::string> states;
    std::map<std::string, PValue<std::string>> gamma;
    auto name = [](int s) { return "q" + std::to_string(s); };
    for (std::size_t s = 0; s < rc.gamma.size(); ++s) {
        states.push_back(name(static_cast<int>(s)));
        gamma.emplace(name(static_cast<int>(s)), pmap(name, rc.gamma[s]));
    }
    return {io::make_plain(rc.arities, states, gamma)};
}

}  // namespace

TEST_SUITE("properties") {
    TEST_CASE("approximations match direct unrolling") {
        for (const auto& rc : corpus(60, 1)) {
            for (int s : rc.states()) {
                for (std::size_t n = 0; n <= 5; ++n) {
                    const auto t = approximate(rc.coalgebra, s, n);
                    CHECK(spell(t) == unroll(rc.gamma, s, n));
                    CHECK(t.depth() == n);
                    CHECK(well_formed(rc.container, t));
                }
            }
        }
    }

    TEST_CASE("tree equality matches the agreement table") {
        for (const auto& rc : corpus(60, 2)) {
            const std::size_t depth = 14;
            const auto agree = agreement_table(rc.gamma, depth);
            auto engine = Approximator<int>::of(rc.coalgebra);
            for (int s : rc.states()) {
                for (int t : rc.states()) {
                    for (std::size_t n = 0; n <= depth; ++n) {
                        CHECK(tree_equal(engine->tree(s, n), engine->tree(t, n)) == agree[n][s][t]);
                    }
                }
            }
        }
    }

    TEST_CASE("partition refinement matches the naive fixpoint") {
        for (const auto& rc : corpus(100, 3)) {
            const auto naive = naive_bisimilarity(rc.gamma);
            const auto p = partition_refine(rc.coalgebra);
            const auto w = witness_from_partition(rc.coalgebra, p);
            CHECK(verify_bisim(rc.coalgebra, w));
            for (int s : rc.states()) {
                for (int t : rc.states()) CHECK(p.same_block(s, t) == naive[s][t]);
            }
        }
    }

    TEST_CASE("distinguishing depth is the first disagreement") {
        for (const auto& rc : corpus(60, 4)) {
            const std::size_t depth = 2 * rc.gamma.size() + 1;
            const auto agree = agreement_table(rc.gamma, depth);
            for (int s : rc.states()) {
                for (int t : rc.states()) {
                    std::optional<std::size_t> expected;
                    for (std::size_t n = 0; n <= depth && !expected; ++n) {
                        if (!agree[n][s][t]) expected = n;
                    }
                    CHECK(distinguishing_depth(rc.coalgebra, s, t, depth) == expected);
                }
            }
        }
    }

    TEST_CASE("stage counts follow the recurrence") {
        std::mt19937_64 rng(9);
        for (int i = 0; i < 30; ++i) {
            const auto rc = random_coalgebra(rng, {1, 3, 2});
            std::vector<std::size_t> ar;
            for (const auto& [a, n] : rc.arities) ar.push_back(n);
            for (std::size_t n = 0; n <= 3; ++n) {
                const auto expected = w_count(ar, n);
                if (expected > 5000) continue;
                CHECK(count_w(rc.container, n, 1000000) == expected);
                CHECK(enumerate_w(rc.container, n).size() == expected);
            }
        }
    }

    TEST_CASE("minimization preserves behaviour") {
        for (const auto& rc : corpus(60, 6)) {
            const auto m = minimize(rc.coalgebra);
            const auto naive = naive_bisimilarity(rc.gamma);
            std::set<int> classes;
            for (int s : rc.states()) {
                CHECK(observationally_equal(unfold(rc.coalgebra, s),
                                            unfold(m.quotient, m.representative(s)), 20));
                int first = s;
                for (int t : rc.states()) {
                    if (naive[s][t]) {
                        first = t;
                        break;
                    }
                }
                classes.insert(first);
            }
            CHECK(m.quotient.finite_states().size() == classes.size());
            CHECK(partition_refine(m.quotient).blocks.size() == classes.size());
        }
    }

    TEST_CASE("indexed partition matches a sort-aware fixpoint") {
        for (const auto& ri : indexed_corpus(60, 7)) {
            // The naive deletion fixpoint, with sorts apart from the start.
            const std::size_t n = ri.gamma.size();
            std::vector<std::vector<bool>> rel(n, std::vector<bool>(n));
            for (std::size_t s = 0; s < n; ++s) {
                for (std::size_t t = 0; t < n; ++t) {
                    rel[s][t] = ri.sort_of[s] == ri.sort_of[t] && ri.gamma[s].label == ri.gamma[t].label;
                }
            }
            for (bool changed = true; changed;) {
                changed = false;
                for (std::size_t s = 0; s < n; ++s) {
                    for (std::size_t t = 0; t < n; ++t) {
                        if (!rel[s][t]) continue;
                        for (std::size_t b = 0; b < ri.gamma[s].children.size(); ++b) {
                            if (!rel[ri.gamma[s].children[b]][ri.gamma[t].children[b]]) {
                                rel[s][t] = false;
                                changed = true;
                                break;
                            }
                        }
                    }
                }
            }
            const auto p = ipartition_refine(ri.coalgebra);
            for (std::size_t s = 0; s < n; ++s) {
                for (std::size_t t = 0; t < n; ++t) {
                    CHECK(p.same_block(static_cast<int>(s), static_cast<int>(t)) == rel[s][t]);
                }
            }
        }
    }

    TEST_CASE("indexed operations stay well sorted") {
        for (const auto& ri : indexed_corpus(60, 8)) {
            const auto& ic = ri.container;
            for (int s : ri.coalgebra.states()) {
                for (std::size_t n = 0; n <= 12; ++n) {
                    CHECK(well_sorted(ic, iapproximate(ri.coalgebra, s, n)));
                }
                const auto m = iunfold(ri.coalgebra, s);
                const auto o = i_out(ic, m);
                for (const auto& child : o.children) CHECK(well_sorted(ic, child.at(8)));
                CHECK(well_sorted(ic, i_into(ic, m.sort(), o).at(8)));
            }
        }
    }

    TEST_CASE("the check suite passes on random documents") {
        for (const auto& rc : corpus(25, 10)) {
            for (const auto& line : cli::run_checks(as_document(rc), 15)) {
                CHECK_MESSAGE(line.result.ok, line.name << ": " << line.result.detail);
            }
        }
    }
}
