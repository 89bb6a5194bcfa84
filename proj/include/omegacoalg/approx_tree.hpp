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
#include <memory>
#include <string>
#include <vector>

#include "omegacoalg/container.hpp"
#include "omegacoalg/label.hpp"

namespace omegacoalg {

/// A depth-n observation of a tree: an element of the n-fold application of
/// the polynomial functor to the unit type. Depth 0 is the truncation marker;
/// a node at depth n + 1 has one child of depth n per position.
///
/// Trees are immutable and share subtrees; copying is O(1).
class ApproxTree {
public:
    struct Node {
        Label label;
        std::vector<ApproxTree> children;
    };

    /// The truncation marker.
    ApproxTree() = default;

    std::size_t depth() const { return depth_; }
    bool is_trunc() const { return node_ == nullptr; }

    /// Requires !is_trunc().
    const Label& label() const { return node_->label; }
    const std::vector<ApproxTree>& children() const { return node_->children; }

    /// Identity of the shared node, null for the truncation marker.
    const Node* node() const { return node_.get(); }

    /// Unchecked constructor; callers guarantee the depth discipline.
    static ApproxTree node_unchecked(Label label, std::vector<ApproxTree> children,
                                     std::size_t depth);

    /// The node viewed as an element of P(W_{n-1}). Requires !is_trunc().
    PValue<ApproxTree> as_pvalue() const { return {label(), children()}; }

private:
    std::size_t depth_ = 0;
    std::shared_ptr<const Node> node_;
};

ApproxTree make_trunc();

/// Throws ArityMismatch or RaggedDepth (children of unequal depth).
ApproxTree make_node(const Container& c, const Label& a, std::vector<ApproxTree> children);

/// A zero-arity node placed at the given stage (depth >= 1). Throws
/// ArityMismatch when `a` has positions, RaggedDepth when depth is 0.
ApproxTree make_leaf(const Container& c, const Label& a, std::size_t depth = 1);

/// The chain projection W_{n+1} -> W_n. Throws CannotTruncateUnit at depth 0.
ApproxTree truncate(const ApproxTree& t);

/// Composite projection down to depth m. Throws DepthTooLarge when m > depth.
ApproxTree truncate_to(const ApproxTree& t, std::size_t m);

/// Structural equality: same depth, same labels, pairwise equal children.
bool tree_equal(const ApproxTree& a, const ApproxTree& b);

/// True iff the ApproxTree invariants hold against `c` (labels known, arity
/// respected, every child one level shallower).
bool well_formed(const Container& c, const ApproxTree& t);

/// Number of depth-n trees, from |W_0| = 1, |W_{n+1}| = sum_a |W_n|^arity(a).
/// Saturates at `cap + 1`. Throws NeedsFiniteLabels.
std::size_t count_w(const Container& c, std::size_t n, std::size_t cap);

inline constexpr std::size_t kDefaultEnumerationBound = 1'000'000;

/// Every depth-n tree over a finite container, without duplicates.
/// Throws NeedsFiniteLabels or SizeBoundExceeded.
std::vector<ApproxTree> enumerate_w(const Container& c, std::size_t n,
                                    std::size_t bound = kDefaultEnumerationBound);

/// Display form: `b(a, b(·,·))`. Nodes whose children are all truncation
/// markers print compactly without spaces.
std::string render_text(const ApproxTree& t);

}  // namespace omegacoalg
