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

// Indexed containers (I, A, B, r): labels available at a sort, arities, and
// the sort r(i, a, b) of each child. Trees and final-coalgebra elements are
// the plain ones, tagged with the sort of their root.

#include <compare>
#include <cstddef>
#include <functional>
#include <map>
#include <memory>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "omegacoalg/approx_tree.hpp"
#include "omegacoalg/bisimulation.hpp"
#include "omegacoalg/coalgebra.hpp"
#include "omegacoalg/container.hpp"
#include "omegacoalg/error.hpp"
#include "omegacoalg/mtype.hpp"

namespace omegacoalg {

struct Sort {
    std::string name;

    friend auto operator<=>(const Sort&, const Sort&) = default;
    friend bool operator==(const Sort&, const Sort&) = default;
};

class IndexedContainer {
public:
    struct Shape {
        Label label;
        std::vector<Sort> child_sorts;  // one per position

        std::size_t arity() const { return child_sorts.size(); }
    };

    /// Throws Validation on duplicate sorts or labels, and when a child sort
    /// is not among `sorts`.
    IndexedContainer(std::vector<Sort> sorts, const std::map<Sort, std::vector<Shape>>& shapes);

    /// A plain container viewed over a single sort. Throws NeedsFiniteLabels.
    static IndexedContainer embed(const Container& c, Sort only = Sort{"*"});

    const std::vector<Sort>& sorts() const { return impl_->sorts; }
    bool has_sort(const Sort& i) const { return impl_->shapes.count(i) > 0; }

    /// Labels available at sort i, in declaration order.
    std::vector<Label> labels_at(const Sort& i) const;

    /// Throws SortMismatch for an unknown sort, UnknownLabel for a label not
    /// available at i.
    const Shape& shape(const Sort& i, const Label& a) const;
    std::size_t arity(const Sort& i, const Label& a) const { return shape(i, a).arity(); }
    const Sort& child_sort(const Sort& i, const Label& a, std::size_t b) const;

private:
    struct Impl {
        std::vector<Sort> sorts;
        std::map<Sort, std::vector<Shape>> shapes;
    };
    std::shared_ptr<const Impl> impl_;
};

/// A depth-n observation with the sort of its root.
struct SortedTree {
    Sort sort;
    ApproxTree tree;
};

/// Labels fit their sorts and every child carries the sort r assigns it.
bool well_sorted(const IndexedContainer& ic, const SortedTree& t);

/// A coalgebra for the indexed polynomial functor over a finite state set.
template <class State, class Hash = std::hash<State>, class Eq = std::equal_to<State>>
class IndexedCoalgebra {
public:
    using Transition = std::function<PValue<State>(const State&)>;

    /// Validates sorts, labels, arities and child sorts of every state.
    IndexedCoalgebra(IndexedContainer base, std::vector<State> states,
                     std::function<Sort(const State&)> sort_of, Transition gamma)
    {
        auto impl = std::make_shared<Impl>(
            Impl{std::move(base), std::move(states), std::move(sort_of), std::move(gamma), {}});
        for (const auto& s : impl->states) {
            if (!impl->members.insert(s).second) {
                throw Error(ErrorKind::Validation, "duplicate state in enumeration");
            }
        }
        impl_ = std::move(impl);
        for (const auto& s : impl_->states) {
            for (const auto& child : step(s).children) {
                if (!impl_->members.count(child)) {
                    throw Error(ErrorKind::UnknownState, "gamma leaves the state enumeration");
                }
            }
        }
    }

    const IndexedContainer& base() const { return impl_->base; }
    const std::vector<State>& states() const { return impl_->states; }
    bool contains(const State& s) const { return impl_->members.count(s) > 0; }
    Sort sort_of(const State& s) const { return impl_->sort_of(s); }

    /// gamma(s), checked against the indexed container.
    PValue<State> step(const State& s) const {
        const Sort i = sort_of(s);
        PValue<State> v = impl_->gamma(s);
        const auto& shape = impl_->base.shape(i, v.label);
        if (v.children.size() != shape.arity()) {
            throw Error(ErrorKind::ArityMismatch,
                        "label " + v.label.to_string() + " at sort " + i.name + " has arity " +
                            std::to_string(shape.arity()) + ", got " +
                            std::to_string(v.children.size()) + " children");
        }
        for (std::size_t b = 0; b < v.children.size(); ++b) {
            if (sort_of(v.children[b]) != shape.child_sorts[b]) {
                throw Error(ErrorKind::SortMismatch,
                            "position " + std::to_string(b) + " below " + v.label.to_string() +
                                " must have sort " + shape.child_sorts[b].name + ", got " +
                                sort_of(v.children[b]).name);
            }
        }
        return v;
    }

private:
    struct Impl {
        IndexedContainer base;
        std::vector<State> states;
        std::function<Sort(const State&)> sort_of;
        Transition gamma;
        std::unordered_set<State, Hash, Eq> members;
    };
    std::shared_ptr<const Impl> impl_;
};

/// Embeds a finite plain coalgebra over the single sort of IndexedContainer::embed.
template <class State, class Hash, class Eq>
IndexedCoalgebra<State, Hash, Eq> embed(const Coalgebra<State, Hash, Eq>& c,
                                        Sort only = Sort{"*"}) {
    return IndexedCoalgebra<State, Hash, Eq>(
        IndexedContainer::embed(c.container(), only), c.finite_states(),
        [only](const State&) { return only; }, [c](const State& s) { return c.step(s); });
}

/// A final-coalgebra element living at a sort.
class SortedMElement {
public:
    SortedMElement(Sort sort, MElement element)
        : sort_(std::move(sort)), element_(std::move(element)) {}

    const Sort& sort() const { return sort_; }
    const MElement& element() const { return element_; }
    SortedTree at(std::size_t n) const { return {sort_, element_.at(n)}; }

private:
    Sort sort_;
    MElement element_;
};

template <class State, class Hash, class Eq>
SortedTree iapproximate(const IndexedCoalgebra<State, Hash, Eq>& c, const State& s,
                        std::size_t n) {
    return {c.sort_of(s), Approximator<State, Hash, Eq>::of(c)->tree(s, n)};
}

template <class State, class Hash, class Eq>
SortedMElement iunfold(const IndexedCoalgebra<State, Hash, Eq>& c, const State& s) {
    auto engine = Approximator<State, Hash, Eq>::of(c);
    return SortedMElement(c.sort_of(s),
                          MElement(LimitElement<ApproxTree>(
                              w_chain(), [engine, s](std::size_t n) { return engine->tree(s, n); },
                              "iunfold")));
}

/// Children sorts follow child_sort. Throws SortMismatch / UnknownLabel when
/// the root label is not available at the element's sort.
PValue<SortedMElement> i_out(const IndexedContainer& ic, const SortedMElement& m);

/// Throws SortMismatch when a child's sort disagrees with child_sort,
/// ArityMismatch / UnknownLabel on shape errors.
SortedMElement i_into(const IndexedContainer& ic, const Sort& sort,
                      const PValue<SortedMElement>& v);

/// Observational equality of two states of the same sort. Throws SortMismatch.
template <class State, class Hash, class Eq>
bool ibounded_bisim(const IndexedCoalgebra<State, Hash, Eq>& c, const State& s, const State& t,
                    std::size_t depth) {
    if (c.sort_of(s) != c.sort_of(t)) {
        throw Error(ErrorKind::SortMismatch,
                    "sorts " + c.sort_of(s).name + " and " + c.sort_of(t).name + " differ");
    }
    auto engine = Approximator<State, Hash, Eq>::of(c);
    for (std::size_t n = 0; n <= depth; ++n) {
        if (!tree_equal(engine->tree(s, n), engine->tree(t, n))) return false;
    }
    return true;
}

/// Partition refinement restricted per sort: the initial split is by
/// (sort, label), after which the plain algorithm runs unchanged.
template <class State, class Hash, class Eq>
Partition<State, Hash, Eq> ipartition_refine(const IndexedCoalgebra<State, Hash, Eq>& c) {
    std::vector<std::pair<Sort, Label>> initial;
    for (const auto& s : c.states()) initial.emplace_back(c.sort_of(s), c.step(s).label);
    return detail::refine<State, Hash, Eq>(
        c.states(), [c](const State& s) { return c.step(s); }, initial);
}

/// Indexed morphism check: images carry the state's sort, and
/// out(map(s)) agrees with P(map)(gamma(s)) at every stage n <= depth.
template <class State, class Hash, class Eq>
CheckResult i_verify_morphism(const IndexedCoalgebra<State, Hash, Eq>& c,
                              const std::function<SortedMElement(const State&)>& map,
                              std::size_t depth) {
    std::unordered_map<State, MElement, Hash, Eq> image;
    for (const auto& s : c.states()) {
        const SortedMElement m = map(s);
        if (m.sort() != c.sort_of(s)) {
            return CheckResult::fail("the image of a state has sort " + m.sort().name +
                                     " instead of " + c.sort_of(s).name);
        }
        image.emplace(s, m.element());
    }
    for (const auto& s : c.states()) {
        const PValue<State> g = c.step(s);
        PValue<SortedMElement> o;
        try {
            o = i_out(c.base(), SortedMElement(c.sort_of(s), image.at(s)));
        } catch (const Error& e) {
            return CheckResult::fail(e.what());
        }
        if (o.label != g.label) return CheckResult::fail("root label differs from gamma");
        for (std::size_t n = 0; n <= depth; ++n) {
            for (std::size_t b = 0; b < g.children.size(); ++b) {
                if (!tree_equal(o.children[b].element().at(n), image.at(g.children[b]).at(n))) {
                    return CheckResult::fail("position " + std::to_string(b) +
                                             " differs at stage " + std::to_string(n));
                }
            }
        }
    }
    return CheckResult::pass();
}

/// Throws NotAMorphism when i_verify_morphism fails.
template <class State, class Hash, class Eq>
CheckResult i_uniqueness_probe(const IndexedCoalgebra<State, Hash, Eq>& c,
                               const std::function<SortedMElement(const State&)>& map,
                               std::size_t depth) {
    if (auto r = i_verify_morphism(c, map, depth); !r) {
        throw Error(ErrorKind::NotAMorphism, r.detail);
    }
    for (const auto& s : c.states()) {
        const SortedMElement m = map(s);
        const SortedMElement u = iunfold(c, s);
        if (!observationally_equal(m.element(), u.element(), depth)) {
            return CheckResult::fail("an image departs from iunfold");
        }
    }
    return CheckResult::pass();
}

}  // namespace omegacoalg
