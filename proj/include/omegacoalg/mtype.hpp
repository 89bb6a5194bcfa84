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

// The final coalgebra of a container, built as the limit of the chain
//
//     1 <- P1 <- P^2 1 <- P^3 1 <- ...
//
// whose stages are ApproxTrees and whose projections are `truncate`.
// Equalities that are propositional in type theory are decided here by
// observation: two elements are considered equal when their approximations
// agree at every depth that was checked. Test names say "observationally".

#include <cstddef>
#include <functional>
#include <memory>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "omegacoalg/approx_tree.hpp"
#include "omegacoalg/chain.hpp"
#include "omegacoalg/coalgebra.hpp"
#include "omegacoalg/config.hpp"
#include "omegacoalg/container.hpp"
#include "omegacoalg/error.hpp"

namespace omegacoalg {

/// The chain W_n = P^n(1) with projection `truncate`.
ChainPtr<ApproxTree> w_chain();

/// An element of the final coalgebra's carrier: a compatible family of
/// approximations, one per depth, evaluated lazily and memoised.
class MElement {
public:
    explicit MElement(LimitElement<ApproxTree> limit) : limit_(std::move(limit)) {}

    /// Hand-built element from a stage generator. Compatibility is the
    /// caller's responsibility; check it with check_compat(m.limit(), d).
    static MElement from_generator(std::function<ApproxTree(std::size_t)> gen,
                                   std::string provenance = "generator");

    /// The depth-n approximation. Throws DepthBoundExceeded.
    ApproxTree at(std::size_t n) const {
        check_depth(n);
        return limit_.at(n);
    }

    const LimitElement<ApproxTree>& limit() const { return limit_; }
    const std::string& provenance() const { return limit_.provenance(); }
    const void* identity() const { return limit_.identity(); }

private:
    LimitElement<ApproxTree> limit_;
};

/// Identity-based hashing so MElements can serve as coalgebra states.
struct MElementIdentityHash {
    std::size_t operator()(const MElement& m) const noexcept {
        return std::hash<const void*>{}(m.identity());
    }
};
struct MElementIdentityEq {
    bool operator()(const MElement& a, const MElement& b) const noexcept {
        return a.identity() == b.identity();
    }
};

/// Equal approximations at every depth n <= depth.
bool observationally_equal(const MElement& a, const MElement& b, std::size_t depth);

/// The destructor L -> P(L): label of stage 1, child b at stage n taken
/// from stage n + 1. Realised as poly_limit_from after shift_forward.
/// Throws LabelDrift on corrupt hand-built input.
PValue<MElement> out(const MElement& m);

/// The constructor P(L) -> L, inverse to `out`: stage 0 is the truncation
/// marker, stage n + 1 is Node(label, [child.at(n)...]). Realised as
/// shift_back after poly_limit_to. Throws UnknownLabel / ArityMismatch.
MElement into(const Container& c, const PValue<MElement>& v);

/// `into` without a container; the caller has validated the shape.
MElement into_unchecked(const PValue<MElement>& v);

/// The unique coalgebra morphism into the final coalgebra, at one state.
template <class State, class Hash, class Eq>
MElement unfold(const Coalgebra<State, Hash, Eq>& c, const State& s) {
    auto engine = Approximator<State, Hash, Eq>::of(c);
    return MElement(LimitElement<ApproxTree>(
        w_chain(), [engine, s](std::size_t n) { return engine->tree(s, n); }, "unfold"));
}

/// unfold as a map on states, with one memo table shared by every element
/// it produces (cheaper than calling `unfold` state by state).
template <class State, class Hash, class Eq>
std::function<MElement(const State&)> unfold_map(const Coalgebra<State, Hash, Eq>& c) {
    auto engine = Approximator<State, Hash, Eq>::of(c);
    return [engine](const State& s) {
        return MElement(LimitElement<ApproxTree>(
            w_chain(), [engine, s](std::size_t n) { return engine->tree(s, n); }, "unfold"));
    };
}

/// The final coalgebra (L, out) of a container.
class FinalCoalgebra {
public:
    using StateCoalgebra = Coalgebra<MElement, MElementIdentityHash, MElementIdentityEq>;

    explicit FinalCoalgebra(Container c) : container_(std::move(c)) {}

    const Container& container() const { return container_; }
    PValue<MElement> out(const MElement& m) const { return omegacoalg::out(m); }
    MElement into(const PValue<MElement>& v) const { return omegacoalg::into(container_, v); }

    /// (L, out) as an ordinary coalgebra over an abstract state domain.
    StateCoalgebra as_coalgebra() const {
        return StateCoalgebra(container_, [](const MElement& m) { return omegacoalg::out(m); });
    }

private:
    Container container_;
};

/// A map from a coalgebra's states into L, claimed to be a morphism. The
/// commuting-square path of a real morphism is replaced by verify_morphism.
template <class State, class Hash = std::hash<State>, class Eq = std::equal_to<State>>
struct MorphismCandidate {
    Coalgebra<State, Hash, Eq> source;
    std::function<MElement(const State&)> map;
};

namespace detail {

template <class State, class Hash, class Eq>
std::vector<State> states_to_check(const Coalgebra<State, Hash, Eq>& c,
                                   const std::vector<State>& samples) {
    if (!samples.empty()) return samples;
    return c.finite_states();
}

}  // namespace detail

/// Checks out(map(s)) == P(map)(gamma(s)) at every stage n <= depth, for
/// every enumerated state (or every sample, when samples are given).
template <class State, class Hash, class Eq>
CheckResult verify_morphism(const MorphismCandidate<State, Hash, Eq>& mc, std::size_t depth,
                            const std::vector<State>& samples = {}) {
    const auto states = detail::states_to_check(mc.source, samples);
    std::unordered_map<State, MElement, Hash, Eq> image;
    auto image_of = [&](const State& s) -> const MElement& {
        auto it = image.find(s);
        if (it == image.end()) it = image.emplace(s, mc.map(s)).first;
        return it->second;
    };
    for (std::size_t i = 0; i < states.size(); ++i) {
        const State& s = states[i];
        const PValue<State> g = mc.source.step(s);
        const std::string where = "state #" + std::to_string(i);
        PValue<MElement> o;
        try {
            o = out(image_of(s));
        } catch (const Error& e) {
            return CheckResult::fail(where + ": " + e.what());
        }
        if (o.label != g.label) {
            return CheckResult::fail(where + ": label " + o.label.to_string() + " != " +
                                     g.label.to_string() + " at stage 0");
        }
        if (o.children.size() != g.children.size()) {
            return CheckResult::fail(where + ": arity differs");
        }
        for (std::size_t n = 0; n <= depth; ++n) {
            for (std::size_t b = 0; b < g.children.size(); ++b) {
                if (!tree_equal(o.children[b].at(n), image_of(g.children[b]).at(n))) {
                    return CheckResult::fail(where + ": position " + std::to_string(b) +
                                             " differs at stage " + std::to_string(n));
                }
            }
        }
    }
    return CheckResult::pass();
}

/// Any verified morphism agrees with unfold: map(s).at(n) == unfold(c, s).at(n)
/// for checked states and n <= depth. Throws NotAMorphism if `mc` fails
/// verify_morphism at the same depth.
template <class State, class Hash, class Eq>
CheckResult uniqueness_probe(const Coalgebra<State, Hash, Eq>& c,
                             const MorphismCandidate<State, Hash, Eq>& mc, std::size_t depth,
                             const std::vector<State>& samples = {}) {
    if (auto r = verify_morphism(mc, depth, samples); !r) {
        throw Error(ErrorKind::NotAMorphism, r.detail);
    }
    const auto states = detail::states_to_check(c, samples);
    auto canonical = unfold_map(c);
    for (std::size_t i = 0; i < states.size(); ++i) {
        const MElement m = mc.map(states[i]);
        const MElement u = canonical(states[i]);
        for (std::size_t n = 0; n <= depth; ++n) {
            if (!tree_equal(m.at(n), u.at(n))) {
                return CheckResult::fail("state #" + std::to_string(i) +
                                         " departs from unfold at stage " + std::to_string(n));
            }
        }
    }
    return CheckResult::pass();
}

}  // namespace omegacoalg
