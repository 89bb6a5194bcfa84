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

// omega-chains X_0 <- X_1 <- X_2 <- ... and their limits.
//
// A limit element is represented intensionally: a generator for the n-th
// component plus a memo cache. Compatibility (project(n, at(n + 1)) == at(n))
// holds by construction for everything this library builds, and can be
// checked to any finite depth with check_compat for hand-built families.
// Stage equality is the chain's decidable `equal`, never a proof object.

#include <cstddef>
#include <functional>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "omegacoalg/container.hpp"
#include "omegacoalg/error.hpp"

namespace omegacoalg {

inline constexpr std::size_t kDefaultVerifyDepth = 16;

/// A chain: per-stage projection plus decidable equality within a stage.
/// Stages share one C++ type; the stage index travels alongside.
template <class Stage>
struct Chain {
    enum class Kind { Base, Shifted, Applied };

    std::function<Stage(std::size_t, const Stage&)> project;
    std::function<bool(const Stage&, const Stage&)> equal;
    std::string name;
    Kind kind = Kind::Base;
};

template <class Stage>
using ChainPtr = std::shared_ptr<const Chain<Stage>>;

/// The chain X' with X'_n = X_{n+1} and pi'_n = pi_{n+1}.
template <class Stage>
ChainPtr<Stage> shifted(ChainPtr<Stage> base) {
    auto c = std::make_shared<Chain<Stage>>();
    c->project = [base](std::size_t n, const Stage& v) { return base->project(n + 1, v); };
    c->equal = base->equal;
    c->name = base->name + "'";
    c->kind = Chain<Stage>::Kind::Shifted;
    return c;
}

/// The chain (PX, P pi): stages are P(X_n), projections act childwise.
template <class Stage>
ChainPtr<PValue<Stage>> applied(ChainPtr<Stage> base) {
    auto c = std::make_shared<Chain<PValue<Stage>>>();
    c->project = [base](std::size_t n, const PValue<Stage>& v) {
        return pmap([&](const Stage& x) { return base->project(n, x); }, v);
    };
    c->equal = [base](const PValue<Stage>& a, const PValue<Stage>& b) {
        if (a.label != b.label || a.children.size() != b.children.size()) return false;
        for (std::size_t i = 0; i < a.children.size(); ++i) {
            if (!base->equal(a.children[i], b.children[i])) return false;
        }
        return true;
    };
    c->name = "P(" + base->name + ")";
    c->kind = Chain<PValue<Stage>>::Kind::Applied;
    return c;
}

/// An element of the limit of a chain. Copies share the memo cache, and
/// concurrent evaluation is safe: fills are idempotent.
template <class Stage>
class LimitElement {
public:
    using Generator = std::function<Stage(std::size_t)>;

    LimitElement(ChainPtr<Stage> chain, Generator gen, std::string provenance = "")
        : impl_(std::make_shared<Impl>(std::move(chain), std::move(gen), std::move(provenance))) {}

    Stage at(std::size_t n) const {
        {
            std::lock_guard<std::mutex> lock(impl_->mutex);
            if (n < impl_->cache.size() && impl_->cache[n]) return *impl_->cache[n];
        }
        Stage v = impl_->gen(n);
        std::lock_guard<std::mutex> lock(impl_->mutex);
        if (impl_->cache.size() <= n) impl_->cache.resize(n + 1);
        if (!impl_->cache[n]) impl_->cache[n] = std::move(v);
        return *impl_->cache[n];
    }

    const ChainPtr<Stage>& chain() const { return impl_->chain; }
    const std::string& provenance() const { return impl_->provenance; }

    /// Address of the shared state; equal for copies of one element.
    const void* identity() const { return impl_.get(); }

private:
    struct Impl {
        Impl(ChainPtr<Stage> c, Generator g, std::string p)
            : chain(std::move(c)), gen(std::move(g)), provenance(std::move(p)) {}
        ChainPtr<Stage> chain;
        Generator gen;
        std::string provenance;
        std::mutex mutex;
        std::vector<std::optional<Stage>> cache;
    };
    std::shared_ptr<Impl> impl_;
};

/// True iff project(n, l.at(n + 1)) equals l.at(n) for every n < upto.
template <class Stage>
bool check_compat(const LimitElement<Stage>& l, std::size_t upto) {
    const auto& ch = *l.chain();
    for (std::size_t n = 0; n < upto; ++n) {
        if (!ch.equal(ch.project(n, l.at(n + 1)), l.at(n))) return false;
    }
    return true;
}

/// True iff both elements agree at every stage n <= depth.
template <class Stage>
bool agree_upto(const LimitElement<Stage>& a, const LimitElement<Stage>& b, std::size_t depth) {
    const auto& ch = *a.chain();
    for (std::size_t n = 0; n <= depth; ++n) {
        if (!ch.equal(a.at(n), b.at(n))) return false;
    }
    return true;
}

/// A cone over a chain with apex type Apex: one leg per stage. The apex
/// domain is abstract, so commutation is verified on `samples` only.
template <class Apex, class Stage>
struct Cone {
    ChainPtr<Stage> chain;
    std::function<Stage(std::size_t, const Apex&)> legs;
    std::vector<Apex> samples;
};

/// Commutation project(n, legs(n + 1, x)) == legs(n, x) for sampled x, n < depth.
template <class Apex, class Stage>
CheckResult check_cone(const Cone<Apex, Stage>& cone, std::size_t depth) {
    const auto& ch = *cone.chain;
    for (std::size_t i = 0; i < cone.samples.size(); ++i) {
        for (std::size_t n = 0; n < depth; ++n) {
            const auto& x = cone.samples[i];
            if (!ch.equal(ch.project(n, cone.legs(n + 1, x)), cone.legs(n, x))) {
                return CheckResult::fail("sample " + std::to_string(i) + " fails at stage " +
                                         std::to_string(n));
            }
        }
    }
    return CheckResult::pass();
}

/// Cones into the chain correspond to maps into its limit. Throws
/// ConeLawViolation if commutation fails on the samples up to `verify_depth`.
template <class Apex, class Stage>
std::function<LimitElement<Stage>(const Apex&)> cone_to_map(
    const Cone<Apex, Stage>& cone, std::size_t verify_depth = kDefaultVerifyDepth) {
    if (auto r = check_cone(cone, verify_depth); !r) {
        throw Error(ErrorKind::ConeLawViolation, r.detail);
    }
    return [chain = cone.chain, legs = cone.legs](const Apex& x) {
        return LimitElement<Stage>(chain, [legs, x](std::size_t n) { return legs(n, x); }, "cone");
    };
}

/// The inverse direction: a map into the limit, read off stage by stage.
template <class Apex, class Stage>
Cone<Apex, Stage> map_to_cone(ChainPtr<Stage> chain,
                              std::function<LimitElement<Stage>(const Apex&)> h,
                              std::vector<Apex> samples = {}) {
    return {std::move(chain), [h](std::size_t n, const Apex& x) { return h(x).at(n); },
            std::move(samples)};
}

/// The n-th element of the unique cochain family starting at x0 with
/// x_{k+1} = step(k, x_k).
template <class T, class Step>
T iterate_cochain(T x0, Step&& step, std::size_t n) {
    for (std::size_t k = 0; k < n; ++k) x0 = step(k, x0);
    return x0;
}

/// Limit of X -> limit of the shifted chain: drop the first component.
template <class Stage>
LimitElement<Stage> shift_forward(const LimitElement<Stage>& l) {
    return LimitElement<Stage>(shifted(l.chain()), [l](std::size_t n) { return l.at(n + 1); },
                               "shift_forward");
}

/// Limit of the shifted chain -> limit of `base`. The first component is
/// forced: it is the projection of the shifted element's first component.
template <class Stage>
LimitElement<Stage> shift_back(const LimitElement<Stage>& shifted_element, ChainPtr<Stage> base) {
    return LimitElement<Stage>(
        base,
        [s = shifted_element, base](std::size_t n) {
            return n == 0 ? base->project(0, s.at(0)) : s.at(n - 1);
        },
        "shift_back");
}

/// alpha : P(lim X) -> lim P(X), stage n being P(p_n) applied to `v`.
/// Zero-arity labels carry no children, hence the explicit base chain.
template <class Stage>
LimitElement<PValue<Stage>> poly_limit_to(const Container& c,
                                          const PValue<LimitElement<Stage>>& v,
                                          ChainPtr<Stage> base) {
    check_shape(c, v);
    return LimitElement<PValue<Stage>>(
        applied(base),
        [v](std::size_t n) {
            return pmap([n](const LimitElement<Stage>& x) { return x.at(n); }, v);
        },
        "poly_limit_to");
}

/// Inverse of alpha. The label of every stage must coincide; a disagreement
/// among the first `verify_depth` stages throws LabelDrift immediately, and
/// any later disagreement throws LabelDrift when the drifting stage is read.
template <class Stage>
PValue<LimitElement<Stage>> poly_limit_from(const Container& c,
                                            const LimitElement<PValue<Stage>>& l,
                                            ChainPtr<Stage> base,
                                            std::size_t verify_depth = kDefaultVerifyDepth) {
    const PValue<Stage> head = l.at(0);
    const std::size_t arity = c.arity(head.label);
    auto stage = [l, label = head.label, arity](std::size_t n) {
        PValue<Stage> v = l.at(n);
        if (v.label != label || v.children.size() != arity) {
            throw Error(ErrorKind::LabelDrift, "stage " + std::to_string(n) + " carries label " +
                                                   v.label.to_string() + ", stage 0 carries " +
                                                   label.to_string());
        }
        return v;
    };
    for (std::size_t n = 0; n <= verify_depth; ++n) stage(n);

    PValue<LimitElement<Stage>> out{head.label, {}};
    out.children.reserve(arity);
    for (std::size_t b = 0; b < arity; ++b) {
        out.children.emplace_back(
            base, [stage, b](std::size_t n) { return stage(n).children[b]; }, "poly_limit_from");
    }
    return out;
}

}  // namespace omegacoalg
