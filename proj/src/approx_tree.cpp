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

#include "omegacoalg/approx_tree.hpp"

#include <unordered_map>
#include <unordered_set>
#include <utility>

#include "omegacoalg/error.hpp"

namespace omegacoalg {

namespace {

struct NodePairHash {
    std::size_t operator()(const std::pair<const void*, const void*>& p) const noexcept {
        auto h = std::hash<const void*>{}(p.first);
        return h ^ (std::hash<const void*>{}(p.second) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
    }
};

}  // namespace

ApproxTree ApproxTree::node_unchecked(Label label, std::vector<ApproxTree> children,
                                      std::size_t depth) {
    ApproxTree t;
    t.depth_ = depth;
    t.node_ = std::make_shared<const Node>(Node{std::move(label), std::move(children)});
    return t;
}

ApproxTree make_trunc() { return ApproxTree{}; }

ApproxTree make_node(const Container& c, const Label& a, std::vector<ApproxTree> children) {
    const std::size_t n = c.arity(a);
    if (children.size() != n) {
        throw Error(ErrorKind::ArityMismatch, "label " + a.to_string() + " expects " +
                                                  std::to_string(n) + " children, got " +
                                                  std::to_string(children.size()));
    }
    std::size_t depth = 0;
    for (std::size_t i = 0; i < children.size(); ++i) {
        if (i == 0) {
            depth = children[i].depth();
        } else if (children[i].depth() != depth) {
            throw Error(ErrorKind::RaggedDepth, "child " + std::to_string(i) + " has depth " +
                                                    std::to_string(children[i].depth()) +
                                                    ", expected " + std::to_string(depth));
        }
    }
    // Zero-arity nodes may sit at any depth >= 1; make_node places them at 1.
    return ApproxTree::node_unchecked(a, std::move(children), depth + 1);
}

ApproxTree make_leaf(const Container& c, const Label& a, std::size_t depth) {
    if (c.arity(a) != 0) {
        throw Error(ErrorKind::ArityMismatch, "label " + a.to_string() + " is not a leaf label");
    }
    if (depth == 0) throw Error(ErrorKind::RaggedDepth, "a node cannot live at depth 0");
    return ApproxTree::node_unchecked(a, {}, depth);
}

ApproxTree truncate(const ApproxTree& t) {
    if (t.is_trunc()) throw Error(ErrorKind::CannotTruncateUnit, "no stage below depth 0");
    if (t.depth() == 1) return make_trunc();

    // Post-order over the shared DAG; each distinct node is truncated once.
    std::unordered_map<const ApproxTree::Node*, ApproxTree> done;
    std::vector<const ApproxTree*> stack{&t};
    while (!stack.empty()) {
        const ApproxTree* cur = stack.back();
        if (done.count(cur->node())) {
            stack.pop_back();
            continue;
        }
        if (cur->depth() == 1) {
            done.emplace(cur->node(), make_trunc());
            stack.pop_back();
            continue;
        }
        bool ready = true;
        for (const auto& ch : cur->children()) {
            if (!done.count(ch.node())) {
                stack.push_back(&ch);
                ready = false;
            }
        }
        if (!ready) continue;
        std::vector<ApproxTree> kids;
        kids.reserve(cur->children().size());
        for (const auto& ch : cur->children()) kids.push_back(done.at(ch.node()));
        done.emplace(cur->node(),
                     ApproxTree::node_unchecked(cur->label(), std::move(kids), cur->depth() - 1));
        stack.pop_back();
    }
    return done.at(t.node());
}

ApproxTree truncate_to(const ApproxTree& t, std::size_t m) {
    if (m > t.depth()) {
        throw Error(ErrorKind::DepthTooLarge, "cannot truncate a depth-" + std::to_string(t.depth()) +
                                                  " tree to depth " + std::to_string(m));
    }
    ApproxTree cur = t;
    while (cur.depth() > m) cur = truncate(cur);
    return cur;
}

bool tree_equal(const ApproxTree& a, const ApproxTree& b) {
    std::unordered_set<std::pair<const void*, const void*>, NodePairHash> seen;
    std::vector<std::pair<const ApproxTree*, const ApproxTree*>> work{{&a, &b}};
    while (!work.empty()) {
        auto [x, y] = work.back();
        work.pop_back();
        if (x->depth() != y->depth() || x->is_trunc() != y->is_trunc()) return false;
        if (x->is_trunc() || x->node() == y->node()) continue;
        if (!seen.emplace(x->node(), y->node()).second) continue;
        if (x->label() != y->label() || x->children().size() != y->children().size()) return false;
        for (std::size_t i = 0; i < x->children().size(); ++i) {
            work.emplace_back(&x->children()[i], &y->children()[i]);
        }
    }
    return true;
}

bool well_formed(const Container& c, const ApproxTree& t) {
    std::unordered_set<const void*> seen;
    std::vector<const ApproxTree*> work{&t};
    while (!work.empty()) {
        const ApproxTree* x = work.back();
        work.pop_back();
        if (x->is_trunc()) {
            if (x->depth() != 0) return false;
            continue;
        }
        if (x->depth() == 0) return false;
        if (!seen.insert(x->node()).second) continue;
        if (!c.contains(x->label()) || c.arity(x->label()) != x->children().size()) return false;
        for (const auto& ch : x->children()) {
            if (ch.depth() + 1 != x->depth()) return false;
            work.push_back(&ch);
        }
    }
    return true;
}

namespace {

const std::vector<Label>& finite_labels(const Container& c) {
    if (!c.labels()) throw Error(ErrorKind::NeedsFiniteLabels, "container has no label enumeration");
    return *c.labels();
}

std::size_t saturating_pow(std::size_t base, std::size_t exp, std::size_t cap) {
    std::size_t r = 1;
    for (std::size_t i = 0; i < exp; ++i) {
        if (base != 0 && r > cap / base) return cap + 1;
        r *= base;
    }
    return r;
}

// Calls `emit` for every tuple in items^k, in lexicographic order.
template <class F>
void for_each_tuple(const std::vector<ApproxTree>& items, std::size_t k, F&& emit) {
    if (k > 0 && items.empty()) return;
    std::vector<std::size_t> idx(k, 0);
    std::vector<ApproxTree> tuple(k);
    while (true) {
        for (std::size_t i = 0; i < k; ++i) tuple[i] = items[idx[i]];
        emit(tuple);
        std::size_t pos = k;
        while (pos > 0) {
            --pos;
            if (++idx[pos] < items.size()) break;
            idx[pos] = 0;
            if (pos == 0) return;
        }
        if (k == 0) return;
    }
}

}  // namespace

std::size_t count_w(const Container& c, std::size_t n, std::size_t cap) {
    const auto& labels = finite_labels(c);
    std::size_t size = 1;
    for (std::size_t d = 0; d < n; ++d) {
        std::size_t next = 0;
        for (const auto& a : labels) {
            next += saturating_pow(size, c.arity(a), cap);
            if (next > cap) return cap + 1;
        }
        size = next;
    }
    return size;
}

std::vector<ApproxTree> enumerate_w(const Container& c, std::size_t n, std::size_t bound) {
    const auto& labels = finite_labels(c);
    if (count_w(c, n, bound) > bound) {
        throw Error(ErrorKind::SizeBoundExceeded,
                    "more than " + std::to_string(bound) + " trees at depth " + std::to_string(n));
    }
    std::vector<ApproxTree> stage{make_trunc()};
    for (std::size_t d = 0; d < n; ++d) {
        std::vector<ApproxTree> next;
        for (const auto& a : labels) {
            for_each_tuple(stage, c.arity(a), [&](const std::vector<ApproxTree>& kids) {
                next.push_back(ApproxTree::node_unchecked(a, kids, d + 1));
            });
        }
        stage = std::move(next);
    }
    return stage;
}

namespace {

void render_into(const ApproxTree& t, std::string& out) {
    if (t.is_trunc()) {
        out += "·";
        return;
    }
    out += t.label().to_string();
    if (t.children().empty()) return;
    const char* sep = t.depth() == 1 ? "," : ", ";
    out += '(';
    for (std::size_t i = 0; i < t.children().size(); ++i) {
        if (i) out += sep;
        render_into(t.children()[i], out);
    }
    out += ')';
}

}  // namespace

std::string render_text(const ApproxTree& t) {
    std::string out;
    render_into(t, out);
    return out;
}

}  // namespace omegacoalg
