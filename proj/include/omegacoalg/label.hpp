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

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <variant>

namespace omegacoalg {

/// Node label of a tree: an integer, a string, or a pair of labels (the
/// product labels produced by zipping two streams). Totally ordered, hashable.
class Label {
public:
    Label() : value_(std::int64_t{0}) {}
    Label(std::int64_t v) : value_(v) {}           // NOLINT(google-explicit-constructor)
    Label(int v) : value_(std::int64_t{v}) {}      // NOLINT(google-explicit-constructor)
    Label(std::string v) : value_(std::move(v)) {} // NOLINT(google-explicit-constructor)
    Label(const char* v) : value_(std::string(v)) {}  // NOLINT(google-explicit-constructor)

    static Label pair(Label first, Label second);

    bool is_integer() const { return std::holds_alternative<std::int64_t>(value_); }
    bool is_string() const { return std::holds_alternative<std::string>(value_); }
    bool is_pair() const { return std::holds_alternative<PairPtr>(value_); }

    std::int64_t as_integer() const { return std::get<std::int64_t>(value_); }
    const std::string& as_string() const { return std::get<std::string>(value_); }
    const Label& first() const;
    const Label& second() const;

    /// Display form: integers in decimal, strings verbatim, pairs as `(x,y)`.
    std::string to_string() const;

    std::size_t hash() const;

    friend bool operator==(const Label& a, const Label& b);
    friend std::strong_ordering operator<=>(const Label& a, const Label& b);

private:
    struct Pair;
    using PairPtr = std::shared_ptr<const Pair>;
    std::variant<std::int64_t, std::string, PairPtr> value_;
};

struct Label::Pair {
    Label first;
    Label second;
};

}  // namespace omegacoalg

template <>
struct std::hash<omegacoalg::Label> {
    std::size_t operator()(const omegacoalg::Label& l) const noexcept { return l.hash(); }
};
