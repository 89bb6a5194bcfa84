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

#include "omegacoalg/indexed.hpp"

#include <set>

namespace omegacoalg {

IndexedContainer::IndexedContainer(std::vector<Sort> sorts,
                                   const std::map<Sort, std::vector<Shape>>& shapes) {
    auto impl = std::make_shared<Impl>();
    std::set<Sort> known;
    for (const auto& i : sorts) {
        if (!known.insert(i).second) throw Error(ErrorKind::Validation, "duplicate sort " + i.name);
        impl->shapes[i];
    }
    for (const auto& [i, list] : shapes) {
        if (!known.count(i)) throw Error(ErrorKind::Validation, "labels given for undeclared sort " + i.name);
        std::set<Label> seen;
        for (const auto& shape : list) {
            if (!seen.insert(shape.label).second) {
                throw Error(ErrorKind::Validation,
                            "duplicate label " + shape.label.to_string() + " at sort " + i.name);
            }
            for (const auto& j : shape.child_sorts) {
                if (!known.count(j)) {
                    throw Error(ErrorKind::Validation, "label " + shape.label.to_string() +
                                                           " at sort " + i.name +
                                                           " refers to undeclared sort " + j.name);
                }
            }
        }
        impl->shapes[i] = list;
    }
    impl->sorts = std::move(sorts);
    impl_ = std::move(impl);
}

IndexedContainer IndexedContainer::embed(const Container& c, Sort only) {
    if (!c.labels()) throw Error(ErrorKind::NeedsFiniteLabels, "container has no label enumeration");
    std::vector<Shape> shapes;
    for (const auto& a : *c.labels()) {
        shapes.push_back({a, std::vector<Sort>(c.arity(a), only)});
    }
    return IndexedContainer({only}, {{only, std::move(shapes)}});
}

std::vector<Label> IndexedContainer::labels_at(const Sort& i) const {
    auto it = impl_->shapes.find(i);
    if (it == impl_->shapes.end()) throw Error(ErrorKind::SortMismatch, "unknown sort " + i.name);
    std::vector<Label> out;
    for (const auto& s : it->second) out.push_back(s.label);
    return out;
}

const IndexedContainer::Shape& IndexedContainer::shape(const Sort& i, const Label& a) const {
    auto it = impl_->shapes.find(i);
    if (it == impl_->shapes.end()) throw Error(ErrorKind::SortMismatch, "unknown sort " + i.name);
    for (const auto& s : it->second) {
        if (s.label == a) return s;
    }
    throw Error(ErrorKind::UnknownLabel,
                "label " + a.to_string() + " is not available at sort " + i.name);
}

const Sort& IndexedContainer::child_sort(const Sort& i, const Label& a, std::size_t b) const {
    const auto& s = shape(i, a);
    if (b >= s.arity()) {
        throw Error(ErrorKind::ArityMismatch, "position " + std::to_string(b) + " is out of range for " +
                                                  a.to_string());
    }
    return s.child_sorts[b];
}

bool well_sorted(const IndexedContainer& ic, const SortedTree& t) {
    std::set<std::pair<const void*, Sort>> seen;
    std::vector<std::pair<const ApproxTree*, Sort>> work{{&t.tree, t.sort}};
    while (!work.empty()) {
        auto [x, i] = work.back();
        work.pop_back();
        if (!ic.has_sort(i)) return false;
        if (x->is_trunc()) {
            if (x->depth() != 0) return false;
            continue;
        }
        if (!seen.emplace(x->node(), i).second) continue;
        const IndexedContainer::Shape* shape = nullptr;
        try {
            shape = &ic.shape(i, x->label());
        } catch (const Error&) {
            return false;
        }
        if (shape->arity() != x->children().size()) return false;
        for (std::size_t b = 0; b < shape->arity(); ++b) {
            const auto& ch = x->children()[b];
            if (ch.depth() + 1 != x->depth()) return false;
            work.emplace_back(&ch, shape->child_sorts[b]);
        }
    }
    return true;
}

PValue<SortedMElement> i_out(const IndexedContainer& ic, const SortedMElement& m) {
    PValue<MElement> plain = out(m.element());
    const auto& shape = ic.shape(m.sort(), plain.label);
    if (shape.arity() != plain.children.size()) {
        throw Error(ErrorKind::ArityMismatch, "element does not fit label " +
                                                  plain.label.to_string() + " at sort " +
                                                  m.sort().name);
    }
    PValue<SortedMElement> v{plain.label, {}};
    for (std::size_t b = 0; b < plain.children.size(); ++b) {
        v.children.emplace_back(shape.child_sorts[b], std::move(plain.children[b]));
    }
    return v;
}

SortedMElement i_into(const IndexedContainer& ic, const Sort& sort,
                      const PValue<SortedMElement>& v) {
    const auto& shape = ic.shape(sort, v.label);
    if (shape.arity() != v.children.size()) {
        throw Error(ErrorKind::ArityMismatch, "label " + v.label.to_string() + " at sort " +
                                                  sort.name + " expects " +
                                                  std::to_string(shape.arity()) + " children");
    }
    PValue<MElement> plain{v.label, {}};
    for (std::size_t b = 0; b < v.children.size(); ++b) {
        if (v.children[b].sort() != shape.child_sorts[b]) {
            throw Error(ErrorKind::SortMismatch, "child " + std::to_string(b) + " has sort " +
                                                     v.children[b].sort().name + ", expected " +
                                                     shape.child_sorts[b].name);
        }
        plain.children.push_back(v.children[b].element());
    }
    return SortedMElement(sort, into_unchecked(plain));
}

}  // namespace omegacoalg
