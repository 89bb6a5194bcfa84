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

#include "omegacoalg/container.hpp"

namespace omegacoalg {

struct Container::Impl {
    MembershipFn contains;
    ArityFn arity;
    std::optional<std::vector<Label>> labels;
    std::string name;
};

Container Container::finite(const std::vector<std::pair<Label, std::size_t>>& arities) {
    auto table = std::make_shared<std::map<Label, std::size_t>>();
    std::vector<Label> order;
    for (const auto& [label, n] : arities) {
        if (!table->emplace(label, n).second) {
            throw Error(ErrorKind::Validation, "duplicate label " + label.to_string());
        }
        order.push_back(label);
    }
    auto impl = std::make_shared<Impl>();
    impl->contains = [table](const Label& a) { return table->count(a) > 0; };
    impl->arity = [table](const Label& a) { return table->at(a); };
    impl->labels = std::move(order);
    return Container(std::move(impl));
}

Container Container::predicate(MembershipFn contains, ArityFn arity, std::string name) {
    auto impl = std::make_shared<Impl>();
    impl->contains = std::move(contains);
    impl->arity = std::move(arity);
    impl->name = std::move(name);
    return Container(std::move(impl));
}

Container Container::uniform(std::size_t arity, std::string name) {
    return predicate([](const Label&) { return true; }, [arity](const Label&) { return arity; },
                     std::move(name));
}

bool Container::contains(const Label& a) const { return impl_->contains(a); }

std::size_t Container::arity(const Label& a) const {
    if (!impl_->contains(a)) {
        throw Error(ErrorKind::UnknownLabel, "label " + a.to_string() + " is not in the signature");
    }
    return impl_->arity(a);
}

const std::optional<std::vector<Label>>& Container::labels() const { return impl_->labels; }

const std::string& Container::name() const { return impl_->name; }

}  // namespace omegacoalg
