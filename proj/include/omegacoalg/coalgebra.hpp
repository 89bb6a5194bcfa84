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
#include <memory>
#include <mutex>
#include <optional>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "omegacoalg/approx_tree.hpp"
#include "omegacoalg/config.hpp"
#include "omegacoalg/container.hpp"
#include "omegacoalg/error.hpp"

namespace omegacoalg {

/// A coalgebra (C, gamma) for a container: a state domain and a transition
/// gamma : C -> P(C). The state domain is abstract unless an enumeration is
/// supplied, in which case closure of gamma over it is validated eagerly.
///
/// gamma must be pure. `Hash` / `Eq` only serve memoisation and enumeration
/// lookups, so an identity-based pair is acceptable for states that lack
/// decidable equality.
template <class State, class Hash = std::hash<State>, class Eq = std::equal_to<State>>
class Coalgebra {
public:
    using state_type = State;
    using hasher = Hash;
    using key_equal = Eq;
    using Transition = std::function<PValue<State>(const State&)>;

    Coalgebra(Container c, Transition gamma)
        : impl_(std::make_shared<Impl>(Impl{std::move(c), std::move(gamma), std::nullopt, {}})) {}

    /// Throws Validation on duplicate states and UnknownState when gamma
    /// leaves the enumeration; shape errors propagate from step().
    Coalgebra(Container c, Transition gamma, std::vector<State> states)
        : Coalgebra(std::move(c), std::move(gamma)) {
        auto impl = std::make_shared<Impl>(*impl_);
        for (const auto& s : states) {
            if (!impl->members.insert(s).second) {
                throw Error(ErrorKind::Validation, "duplicate state in enumeration");
            }
        }
        impl->states = std::move(states);
        impl_ = impl;
        for (std::size_t i = 0; i < impl_->states->size(); ++i) {
            const auto v = step((*impl_->states)[i]);
            for (std::size_t b = 0; b < v.children.size(); ++b) {
                if (!impl_->members.count(v.children[b])) {
                    throw Error(ErrorKind::UnknownState,
                                "state #" + std::to_string(i) + " sends position " +
                                    std::to_string(b) + " outside the state enumeration");
                }
            }
        }
    }

    const Container& container() const { return impl_->container; }

    /// gamma(s), checked against the container's arities.
    PValue<State> step(const State& s) const {
        PValue<State> v = impl_->gamma(s);
        check_shape(impl_->container, v);
        return v;
    }

    const std::optional<std::vector<State>>& states() const { return impl_->states; }
    bool is_finite() const { return impl_->states.has_value(); }

    /// Membership in the enumeration. Throws NeedsFiniteStates without one.
    bool contains(const State& s) const {
        require_finite();
        return impl_->members.count(s) > 0;
    }

    /// The enumeration. Throws NeedsFiniteStates without one.
    const std::vector<State>& finite_states() const {
        require_finite();
        return *impl_->states;
    }

private:
    void require_finite() const {
        if (!impl_->states) {
            throw Error(ErrorKind::NeedsFiniteStates, "coalgebra has no state enumeration");
        }
    }

    struct Impl {
        Container container;
        Transition gamma;
        std::optional<std::vector<State>> states;
        std::unordered_set<State, Hash, Eq> members;
    };
    std::shared_ptr<const Impl> impl_;
};

/// Depth-n observations of states, memoised per (state, depth). Evaluation
/// is iterative, so deep requests do not consume native stack. Thread safe.
template <class State, class Hash = std::hash<State>, class Eq = std::equal_to<State>>
class Approximator {
public:
    using Step = std::function<PValue<State>(const State&)>;

    explicit Approximator(Step step) : step_(std::move(step)) {}

    template <class C>
    static std::shared_ptr<Approximator> of(const C& coalgebra) {
        return std::make_shared<Approximator>(
            [coalgebra](const State& s) { return coalgebra.step(s); });
    }

    /// approximate(s, 0) = Trunc;
    /// approximate(s, n + 1) = Node(gamma(s).label, [approximate(child, n)...]).
    ApproxTree tree(const State& s, std::size_t n) {
        check_depth(n);
        std::lock_guard<std::recursive_mutex> lock(mutex_);
        std::vector<std::pair<State, std::size_t>> work{{s, n}};
        while (!work.empty()) {
            auto [x, k] = work.back();
            Entry& e = entry(x);
            if (k < e.by_depth.size() && e.by_depth[k]) {
                work.pop_back();
                continue;
            }
            if (k == 0) {
                store(e, 0, make_trunc());
                work.pop_back();
                continue;
            }
            if (!e.step) e.step = step_(x);
            bool ready = true;
            for (const auto& child : e.step->children) {
                if (!lookup(child, k - 1)) {
                    work.emplace_back(child, k - 1);
                    ready = false;
                }
            }
            if (!ready) continue;
            std::vector<ApproxTree> kids;
            kids.reserve(e.step->children.size());
            for (const auto& child : e.step->children) kids.push_back(*lookup(child, k - 1));
            store(e, k, ApproxTree::node_unchecked(e.step->label, std::move(kids), k));
            work.pop_back();
        }
        return *lookup(s, n);
    }

    /// gamma(s), memoised alongside the trees.
    PValue<State> step(const State& s) {
        std::lock_guard<std::recursive_mutex> lock(mutex_);
        Entry& e = entry(s);
        if (!e.step) e.step = step_(s);
        return *e.step;
    }

private:
    struct Entry {
        std::optional<PValue<State>> step;
        std::vector<std::optional<ApproxTree>> by_depth;
    };

    Entry& entry(const State& s) { return memo_[s]; }

    const ApproxTree* lookup(const State& s, std::size_t k) {
        auto it = memo_.find(s);
        if (it == memo_.end() || k >= it->second.by_depth.size() || !it->second.by_depth[k]) {
            return nullptr;
        }
        return &*it->second.by_depth[k];
    }

    static void store(Entry& e, std::size_t k, ApproxTree t) {
        if (e.by_depth.size() <= k) e.by_depth.resize(k + 1);
        e.by_depth[k] = std::move(t);
    }

    Step step_;
    std::recursive_mutex mutex_;
    std::unordered_map<State, Entry, Hash, Eq> memo_;
};

/// The depth-n observation of state `s`. Throws DepthBoundExceeded.
template <class State, class Hash, class Eq>
ApproxTree approximate(const Coalgebra<State, Hash, Eq>& c, const State& s, std::size_t n) {
    return Approximator<State, Hash, Eq>::of(c)->tree(s, n);
}

}  // namespace omegacoalg
