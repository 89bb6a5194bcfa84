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
#include <memory>
#include <optional>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "omegacoalg/error.hpp"
#include "omegacoalg/label.hpp"

namespace omegacoalg {

/// A signature: a domain of labels, each with a finite arity. Positions
/// below a label `a` are the indices `0 .. arity(a) - 1`.
///
/// Containers are cheap handles to immutable shared data.
class Container {
public:
    using ArityFn = std::function<std::size_t(const Label&)>;
    using MembershipFn = std::function<bool(const Label&)>;

    /// Finite signature with an explicit label enumeration, in the given order.
    static Container finite(const std::vector<std::pair<Label, std::size_t>>& arities);

    /// Possibly infinite label domain described by a predicate. No enumeration.
    static Container predicate(MembershipFn contains, ArityFn arity, std::string name = "");

    /// Every label accepted, every label has the same arity (streams: 1).
    static Container uniform(std::size_t arity, std::string name = "");

    bool contains(const Label& a) const;

    /// Throws UnknownLabel when `a` is outside the label domain.
    std::size_t arity(const Label& a) const;

    /// The label enumeration, when the domain is finite.
    const std::optional<std::vector<Label>>& labels() const;
    bool is_finite() const { return labels().has_value(); }

    const std::string& name() const;

private:
    struct Impl;
    explicit Container(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
    std::shared_ptr<const Impl> impl_;
};

/// An element of P(X): a label together with one payload per position.
template <class T>
struct PValue {
    Label label;
    std::vector<T> children;

    std::size_t arity() const { return children.size(); }
};

template <class T>
bool operator==(const PValue<T>& a, const PValue<T>& b) {
    return a.label == b.label && a.children == b.children;
}

/// Functorial action: keeps the label and applies `f` to every child.
template <class T, class F>
auto pmap(F&& f, const PValue<T>& v) -> PValue<std::decay_t<std::invoke_result_t<F&, const T&>>> {
    PValue<std::decay_t<std::invoke_result_t<F&, const T&>>> out{v.label, {}};
    out.children.reserve(v.children.size());
    for (const auto& c : v.children) out.children.push_back(f(c));
    return out;
}

/// Throws UnknownLabel / ArityMismatch unless `v` is well formed over `c`.
template <class T>
void check_shape(const Container& c, const PValue<T>& v) {
    const std::size_t n = c.arity(v.label);
    if (v.children.size() != n) {
        throw Error(ErrorKind::ArityMismatch, "label " + v.label.to_string() + " has arity " +
                                                  std::to_string(n) + " but " +
                                                  std::to_string(v.children.size()) +
                                                  " children were supplied");
    }
}

}  // namespace omegacoalg
