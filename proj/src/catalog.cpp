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

#include "omegacoalg/catalog.hpp"

#include <map>
#include <utility>

namespace omegacoalg::catalog {

namespace {

struct ZipState {
    MElement xs;
    MElement ys;
};

struct ZipStateHash {
    std::size_t operator()(const ZipState& z) const noexcept {
        MElementIdentityHash h;
        return h(z.xs) * 31 + h(z.ys);
    }
};

struct ZipStateEq {
    bool operator()(const ZipState& a, const ZipState& b) const noexcept {
        MElementIdentityEq eq;
        return eq(a.xs, b.xs) && eq(a.ys, b.ys);
    }
};

Coalgebra<std::string> finite_coalgebra(
    const Container& c, const std::vector<std::pair<std::string, PValue<std::string>>>& table) {
    auto gamma = std::make_shared<std::map<std::string, PValue<std::string>>>();
    std::vector<std::string> states;
    for (const auto& [s, v] : table) {
        gamma->emplace(s, v);
        states.push_back(s);
    }
    return Coalgebra<std::string>(
        c, [gamma](const std::string& s) { return gamma->at(s); }, std::move(states));
}

}  // namespace

StreamContext StreamContext::over(std::vector<Label> labels) {
    std::vector<std::pair<Label, std::size_t>> arities;
    for (const auto& a : labels) arities.emplace_back(a, 1);
    return {std::move(labels), Container::finite(arities)};
}

StreamContext StreamContext::any() { return {std::nullopt, Container::uniform(1, "stream")}; }

Label head(const MElement& m) { return out(m).label; }

MElement tail(const MElement& m) { return out(m).children.at(0); }

MElement cons(const StreamContext& ctx, const Label& a, const MElement& m) {
    return into(ctx.container, PValue<MElement>{a, {m}});
}

MElement constant_stream(const Label& a) {
    Coalgebra<int> loop(Container::uniform(1, "stream"),
                        [a](const int&) { return PValue<int>{a, {0}}; }, {0});
    return unfold(loop, 0);
}

MElement zip(const MElement& xs, const MElement& ys) {
    Coalgebra<ZipState, ZipStateHash, ZipStateEq> theta(
        Container::uniform(1, "stream"), [](const ZipState& z) {
            return PValue<ZipState>{Label::pair(head(z.xs), head(z.ys)),
                                    {ZipState{tail(z.xs), tail(z.ys)}}};
        });
    return unfold(theta, ZipState{xs, ys});
}

MElement stream_from_function(std::function<Label(std::size_t)> g) {
    Coalgebra<std::size_t> index(Container::uniform(1, "stream"), [g](const std::size_t& k) {
        return PValue<std::size_t>{g(k), {k + 1}};
    });
    return unfold(index, std::size_t{0});
}

std::function<Label(std::size_t)> stream_to_function(const MElement& m) {
    // head(tail^k(m)) is the k-th label on the spine of stage k + 1; reading
    // it there avoids k layers of lazily shifted elements.
    return [m](std::size_t k) {
        ApproxTree t = m.at(k + 1);
        for (std::size_t i = 0; i < k; ++i) t = t.children().at(0);
        return t.label();
    };
}

Coalgebra<std::string> stream_coalgebra() {
    const auto ctx = StreamContext::over({0, 1, 7});
    return finite_coalgebra(ctx.container, {{"alt0", {0, {"alt1"}}},
                                            {"alt1", {1, {"alt0"}}},
                                            {"seven", {7, {"seven"}}}});
}

Container conat_signature() { return Container::finite({{"Z", 0}, {"S", 1}}); }

MElement conat_infinity() {
    Coalgebra<int> loop(conat_signature(), [](const int&) { return PValue<int>{"S", {0}}; }, {0});
    return unfold(loop, 0);
}

MElement conat_of(std::size_t k) {
    Coalgebra<std::size_t> down(conat_signature(), [](const std::size_t& j) {
        return j == 0 ? PValue<std::size_t>{"Z", {}} : PValue<std::size_t>{"S", {j - 1}};
    });
    return unfold(down, k);
}

Coalgebra<std::string> conat_coalgebra(std::size_t max_k) {
    std::vector<std::pair<std::string, PValue<std::string>>> table{{"inf", {"S", {"inf"}}}};
    table.push_back({"0", {"Z", {}}});
    for (std::size_t k = 1; k <= max_k; ++k) {
        table.push_back({std::to_string(k), {"S", {std::to_string(k - 1)}}});
    }
    return finite_coalgebra(conat_signature(), table);
}

Container fig1_signature() { return Container::finite({{"a", 0}, {"b", 2}, {"c", 3}}); }

Coalgebra<std::string> fig1_coalgebra() {
    return finite_coalgebra(fig1_signature(), {{"t", {"b", {"u", "t"}}}, {"u", {"a", {}}}});
}

IndexedContainer parity_signature() {
    const Sort e{"e"};
    const Sort o{"o"};
    return IndexedContainer({e, o}, {{e, {{"E", {o}}}}, {o, {{"O", {e}}}}});
}

IndexedCoalgebra<std::string> parity_coalgebra() {
    return IndexedCoalgebra<std::string>(
        parity_signature(), {"p", "q"},
        [](const std::string& s) { return Sort{s == "p" ? "e" : "o"}; },
        [](const std::string& s) {
            return s == "p" ? PValue<std::string>{"E", {"q"}} : PValue<std::string>{"O", {"p"}};
        });
}

}  // namespace omegacoalg::catalog
