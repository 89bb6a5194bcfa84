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

#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "omegacoalg/approx_tree.hpp"
#include "omegacoalg/coalgebra.hpp"
#include "omegacoalg/error.hpp"
#include "omegacoalg/mtype.hpp"

namespace omegacoalg {

template <class State, class Hash = std::hash<State>>
struct StatePairHash {
    std::size_t operator()(const std::pair<State, State>& p) const noexcept {
        std::size_t h = Hash{}(p.first);
        return h ^ (Hash{}(p.second) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
    }
};

template <class State, class Eq = std::equal_to<State>>
struct StatePairEq {
    bool operator()(const std::pair<State, State>& a, const std::pair<State, State>& b) const {
        return Eq{}(a.first, b.first) && Eq{}(a.second, b.second);
    }
};

/// A relation on one coalgebra's states together with its coalgebra
/// structure alpha : R -> P(R), one entry per related pair.
template <class State, class Hash = std::hash<State>, class Eq = std::equal_to<State>>
struct BisimWitness {
    using StatePair = std::pair<State, State>;

    struct Entry {
        StatePair pair;
        PValue<StatePair> alpha;
    };

    std::vector<Entry> entries;

    bool relates(const State& s, const State& t) const {
        for (const auto& e : entries) {
            if (Eq{}(e.pair.first, s) && Eq{}(e.pair.second, t)) return true;
        }
        return false;
    }
};

/// Builds the witness for `relation` whose alpha is the only candidate:
/// label of the left state, children paired position by position.
/// The result need not verify; that is verify_bisim's job.
template <class State, class Hash, class Eq>
BisimWitness<State, Hash, Eq> forced_witness(
    const Coalgebra<State, Hash, Eq>& c, const std::vector<std::pair<State, State>>& relation) {
    BisimWitness<State, Hash, Eq> w;
    for (const auto& [s, t] : relation) {
        const auto gs = c.step(s);
        const auto gt = c.step(t);
        PValue<std::pair<State, State>> alpha{gs.label, {}};
        for (std::size_t b = 0; b < gs.children.size() && b < gt.children.size(); ++b) {
            alpha.children.emplace_back(gs.children[b], gt.children[b]);
        }
        w.entries.push_back({{s, t}, std::move(alpha)});
    }
    return w;
}

/// The identity relation with its forced structure.
template <class State, class Hash, class Eq>
BisimWitness<State, Hash, Eq> diagonal_bisim(const Coalgebra<State, Hash, Eq>& c) {
    std::vector<std::pair<State, State>> rel;
    for (const auto& s : c.finite_states()) rel.emplace_back(s, s);
    return forced_witness(c, rel);
}

/// Both projections out of the relation commute with the structure maps:
/// alpha's label is the label of both sides, its children are the pairs of
/// corresponding children, and every such pair is again related.
template <class State, class Hash, class Eq>
CheckResult verify_bisim(const Coalgebra<State, Hash, Eq>& c,
                         const BisimWitness<State, Hash, Eq>& w) {
    using Pair = std::pair<State, State>;
    std::unordered_set<Pair, StatePairHash<State, Hash>, StatePairEq<State, Eq>> related;
    for (const auto& e : w.entries) related.insert(e.pair);

    Eq eq;
    for (std::size_t i = 0; i < w.entries.size(); ++i) {
        const auto& [pair, alpha] = w.entries[i];
        const std::string where = "pair #" + std::to_string(i);
        if (c.is_finite() && (!c.contains(pair.first) || !c.contains(pair.second))) {
            return CheckResult::fail(where + " mentions a state outside the coalgebra");
        }
        const auto gs = c.step(pair.first);
        const auto gt = c.step(pair.second);
        if (alpha.label != gs.label || alpha.label != gt.label) {
            return CheckResult::fail(where + ": labels " + gs.label.to_string() + " / " +
                                     gt.label.to_string() + " / alpha " +
                                     alpha.label.to_string() + " disagree");
        }
        if (alpha.children.size() != gs.children.size()) {
            return CheckResult::fail(where + ": alpha has the wrong arity");
        }
        for (std::size_t b = 0; b < alpha.children.size(); ++b) {
            const auto& child = alpha.children[b];
            if (!eq(child.first, gs.children[b]) || !eq(child.second, gt.children[b])) {
                return CheckResult::fail(where + ", position " + std::to_string(b) +
                                         ": alpha does not project onto gamma");
            }
            if (!related.count(child)) {
                return CheckResult::fail(where + ", position " + std::to_string(b) +
                                         ": child pair is not related");
            }
        }
    }
    return CheckResult::pass();
}

/// Smallest n <= depth at which the approximations of s and t differ.
template <class State, class Hash, class Eq>
std::optional<std::size_t> distinguishing_depth(const Coalgebra<State, Hash, Eq>& c,
                                                const State& s, const State& t,
                                                std::size_t depth) {
    auto engine = Approximator<State, Hash, Eq>::of(c);
    // Agreement at depth n implies agreement below n, so scan upwards.
    for (std::size_t n = 0; n <= depth; ++n) {
        if (!tree_equal(engine->tree(s, n), engine->tree(t, n))) return n;
    }
    return std::nullopt;
}

/// Observational equality of two states up to the given depth.
template <class State, class Hash, class Eq>
bool bounded_bisim(const Coalgebra<State, Hash, Eq>& c, const State& s, const State& t,
                   std::size_t depth) {
    return !distinguishing_depth(c, s, t, depth).has_value();
}

/// Blocks of states, disjoint and covering the enumeration, in order of
/// first occurrence.
template <class State, class Hash = std::hash<State>, class Eq = std::equal_to<State>>
struct Partition {
    std::vector<std::vector<State>> blocks;
    std::unordered_map<State, std::size_t, Hash, Eq> block_of;

    bool same_block(const State& s, const State& t) const {
        return block_of.at(s) == block_of.at(t);
    }
};

namespace detail {

/// Signature refinement: start from `initial` (one key per state), then
/// repeatedly split by (own block, blocks of the children) until the number
/// of blocks stops growing.
template <class State, class Hash, class Eq, class Key>
Partition<State, Hash, Eq> refine(const std::vector<State>& states,
                                  const std::function<PValue<State>(const State&)>& step,
                                  const std::vector<Key>& initial) {
    const std::size_t n = states.size();
    std::unordered_map<State, std::size_t, Hash, Eq> index;
    for (std::size_t i = 0; i < n; ++i) index.emplace(states[i], i);

    std::vector<std::vector<std::size_t>> succ(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (const auto& child : step(states[i]).children) succ[i].push_back(index.at(child));
    }

    std::vector<std::size_t> block(n);
    std::size_t count = 0;
    {
        std::map<Key, std::size_t> ids;
        for (std::size_t i = 0; i < n; ++i) {
            block[i] = ids.emplace(initial[i], ids.size()).first->second;
        }
        count = ids.size();
    }
    while (true) {
        std::map<std::vector<std::size_t>, std::size_t> ids;
        std::vector<std::size_t> next(n);
        for (std::size_t i = 0; i < n; ++i) {
            std::vector<std::size_t> sig{block[i]};
            for (std::size_t j : succ[i]) sig.push_back(block[j]);
            next[i] = ids.emplace(std::move(sig), ids.size()).first->second;
        }
        block = std::move(next);
        if (ids.size() == count) break;
        count = ids.size();
    }

    // Renumber by first occurrence so block order follows the enumeration.
    Partition<State, Hash, Eq> p;
    std::unordered_map<std::size_t, std::size_t> order;
    for (std::size_t i = 0; i < n; ++i) {
        auto [it, fresh] = order.emplace(block[i], p.blocks.size());
        if (fresh) p.blocks.emplace_back();
        p.blocks[it->second].push_back(states[i]);
        p.block_of.emplace(states[i], it->second);
    }
    return p;
}

}  // namespace detail

/// The coarsest bisimulation of a finite coalgebra: initial split by label,
/// then split blocks whose members send some position to different blocks.
template <class State, class Hash, class Eq>
Partition<State, Hash, Eq> partition_refine(const Coalgebra<State, Hash, Eq>& c) {
    const auto& states = c.finite_states();
    std::vector<Label> initial;
    initial.reserve(states.size());
    for (const auto& s : states) initial.push_back(c.step(s).label);
    return detail::refine<State, Hash, Eq>(
        states, [c](const State& s) { return c.step(s); }, initial);
}

/// The full relation "same block", with its forced structure.
template <class State, class Hash, class Eq>
BisimWitness<State, Hash, Eq> witness_from_partition(const Coalgebra<State, Hash, Eq>& c,
                                                     const Partition<State, Hash, Eq>& p) {
    std::vector<std::pair<State, State>> rel;
    for (const auto& b : p.blocks) {
        for (const auto& s : b) {
            for (const auto& t : b) rel.emplace_back(s, t);
        }
    }
    return forced_witness(c, rel);
}

/// Related states of a verified bisimulation have equal unfoldings; this
/// checks it up to `depth`. Throws InvalidWitness or PairNotRelated.
template <class State, class Hash, class Eq>
bool coinduction_transfer(const Coalgebra<State, Hash, Eq>& c,
                          const BisimWitness<State, Hash, Eq>& w, const State& s, const State& t,
                          std::size_t depth) {
    if (auto r = verify_bisim(c, w); !r) throw Error(ErrorKind::InvalidWitness, r.detail);
    if (!w.relates(s, t)) throw Error(ErrorKind::PairNotRelated, "the pair is not in the witness");
    return bounded_bisim(c, s, t, depth);
}

/// Quotient of a finite coalgebra by its coarsest bisimulation. Each block is
/// represented by its first member in enumeration order.
template <class State, class Hash = std::hash<State>, class Eq = std::equal_to<State>>
struct Minimized {
    Coalgebra<State, Hash, Eq> quotient;
    std::function<State(const State&)> representative;
};

template <class State, class Hash, class Eq>
Minimized<State, Hash, Eq> minimize(const Coalgebra<State, Hash, Eq>& c) {
    auto p = std::make_shared<const Partition<State, Hash, Eq>>(partition_refine(c));
    std::vector<State> reps;
    for (const auto& b : p->blocks) reps.push_back(b.front());
    auto rep = [p](const State& s) { return p->blocks[p->block_of.at(s)].front(); };
    Coalgebra<State, Hash, Eq> q(
        c.container(),
        [c, rep](const State& s) {
            auto v = c.step(s);
            for (auto& child : v.children) child = rep(child);
            return v;
        },
        std::move(reps));
    return {std::move(q), rep};
}

}  // namespace omegacoalg
