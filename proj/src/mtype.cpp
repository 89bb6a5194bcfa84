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

#include "omegacoalg/mtype.hpp"

namespace omegacoalg {

ChainPtr<ApproxTree> w_chain() {
    static const ChainPtr<ApproxTree> chain = [] {
        auto c = std::make_shared<Chain<ApproxTree>>();
        c->project = [](std::size_t, const ApproxTree& t) { return truncate(t); };
        c->equal = [](const ApproxTree& a, const ApproxTree& b) { return tree_equal(a, b); };
        c->name = "W";
        return c;
    }();
    return chain;
}

MElement MElement::from_generator(std::function<ApproxTree(std::size_t)> gen,
                                  std::string provenance) {
    return MElement(LimitElement<ApproxTree>(w_chain(), std::move(gen), std::move(provenance)));
}

bool observationally_equal(const MElement& a, const MElement& b, std::size_t depth) {
    for (std::size_t n = 0; n <= depth; ++n) {
        if (!tree_equal(a.at(n), b.at(n))) return false;
    }
    return true;
}

namespace {

// Stage n of the shifted W-chain is a depth-(n + 1) tree, i.e. an element of
// P(W_n); these two views convert between the shifted chain and P(W).

LimitElement<PValue<ApproxTree>> as_applied(const LimitElement<ApproxTree>& shifted_element) {
    return LimitElement<PValue<ApproxTree>>(
        applied(w_chain()),
        [shifted_element](std::size_t n) {
            const ApproxTree t = shifted_element.at(n);
            if (t.is_trunc()) {
                throw Error(ErrorKind::LabelDrift,
                            "stage " + std::to_string(n + 1) + " is a truncation marker");
            }
            return t.as_pvalue();
        },
        shifted_element.provenance());
}

LimitElement<ApproxTree> as_shifted(const LimitElement<PValue<ApproxTree>>& l) {
    return LimitElement<ApproxTree>(
        shifted(w_chain()),
        [l](std::size_t n) {
            PValue<ApproxTree> v = l.at(n);
            return ApproxTree::node_unchecked(std::move(v.label), std::move(v.children), n + 1);
        },
        l.provenance());
}

PValue<MElement> wrap(PValue<LimitElement<ApproxTree>> v) {
    PValue<MElement> out{std::move(v.label), {}};
    out.children.reserve(v.children.size());
    for (auto& c : v.children) out.children.emplace_back(std::move(c));
    return out;
}

}  // namespace

PValue<MElement> out(const MElement& m) {
    const auto view = as_applied(shift_forward(m.limit()));
    const PValue<ApproxTree> head = view.at(0);
    // The arity observed at stage 1 is the one every later stage must repeat.
    const Container observed = Container::predicate(
        [label = head.label](const Label& a) { return a == label; },
        [n = head.children.size()](const Label&) { return n; });
    return wrap(poly_limit_from(observed, view, w_chain()));
}

MElement into_unchecked(const PValue<MElement>& v) {
    PValue<LimitElement<ApproxTree>> limits{v.label, {}};
    limits.children.reserve(v.children.size());
    for (const auto& c : v.children) limits.children.push_back(c.limit());
    const Container shape = Container::predicate(
        [label = v.label](const Label& a) { return a == label; },
        [n = v.children.size()](const Label&) { return n; });
    return MElement(shift_back(as_shifted(poly_limit_to(shape, limits, w_chain())), w_chain()));
}

MElement into(const Container& c, const PValue<MElement>& v) {
    check_shape(c, v);
    return into_unchecked(v);
}

}  // namespace omegacoalg
