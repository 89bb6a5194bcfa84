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

#include "omegacoalg/spec_io.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

namespace omegacoalg::io {

namespace {

[[noreturn]] void invalid(const std::string& pointer, const std::string& what) {
    throw Error(ErrorKind::Validation, (pointer.empty() ? std::string("/") : pointer) + ": " + what);
}

std::string escape(const std::string& key) {
    std::string out;
    for (char ch : key) {
        if (ch == '~') {
            out += "~0";
        } else if (ch == '/') {
            out += "~1";
        } else {
            out += ch;
        }
    }
    return out;
}

std::string child(const std::string& pointer, const std::string& key) {
    return pointer + "/" + escape(key);
}

std::string child(const std::string& pointer, std::size_t index) {
    return pointer + "/" + std::to_string(index);
}

const json& member(const json& obj, const std::string& key, const std::string& pointer) {
    if (!obj.is_object()) invalid(pointer, "expected an object");
    auto it = obj.find(key);
    if (it == obj.end()) invalid(child(pointer, key), "missing key");
    return *it;
}

void expect_keys(const json& obj, const std::set<std::string>& allowed, const std::string& pointer) {
    if (!obj.is_object()) invalid(pointer, "expected an object");
    for (auto it = obj.begin(); it != obj.end(); ++it) {
        if (!allowed.count(it.key())) invalid(child(pointer, it.key()), "unexpected key");
    }
}

std::size_t natural(const json& j, const std::string& pointer) {
    if (!j.is_number_integer() || j.get<long long>() < 0) {
        invalid(pointer, "expected a non-negative integer");
    }
    return j.get<std::size_t>();
}

std::string text(const json& j, const std::string& pointer) {
    if (!j.is_string()) invalid(pointer, "expected a string");
    return j.get<std::string>();
}

// Object keys name labels by their display form.
std::string label_key(const Label& a) { return a.to_string(); }

std::map<StateName, PValue<StateName>> parse_gamma(
    const json& gamma, const std::vector<StateName>& states, const std::string& pointer,
    const std::function<std::size_t(const StateName&, const Label&, const std::string&)>& arity) {
    if (!gamma.is_object()) invalid(pointer, "expected an object");
    std::set<StateName> known(states.begin(), states.end());
    for (auto it = gamma.begin(); it != gamma.end(); ++it) {
        if (!known.count(it.key())) invalid(child(pointer, it.key()), "not a declared state");
    }
    std::map<StateName, PValue<StateName>> out;
    for (const auto& s : states) {
        const std::string at = child(pointer, s);
        const json& entry = member(gamma, s, pointer);
        expect_keys(entry, {"label", "children"}, at);
        const Label a = label_from_json(member(entry, "label", at), child(at, "label"));
        const std::size_t n = arity(s, a, child(at, "label"));
        const json& kids = member(entry, "children", at);
        const std::string kids_at = child(at, "children");
        if (!kids.is_array()) invalid(kids_at, "expected an array");
        if (kids.size() != n) {
            invalid(kids_at, "label " + a.to_string() + " has arity " + std::to_string(n) +
                                 " but " + std::to_string(kids.size()) + " children were given");
        }
        PValue<StateName> v{a, {}};
        for (std::size_t b = 0; b < kids.size(); ++b) {
            const std::string name = text(kids[b], child(kids_at, b));
            if (!known.count(name)) invalid(child(kids_at, b), "unknown state '" + name + "'");
            v.children.push_back(name);
        }
        out.emplace(s, std::move(v));
    }
    return out;
}

std::vector<StateName> parse_state_list(const json& j, const std::string& pointer) {
    if (!j.is_array()) invalid(pointer, "expected an array of state names");
    std::vector<StateName> out;
    std::set<StateName> seen;
    for (std::size_t i = 0; i < j.size(); ++i) {
        auto s = text(j[i], child(pointer, i));
        if (!seen.insert(s).second) invalid(child(pointer, i), "duplicate state '" + s + "'");
        out.push_back(std::move(s));
    }
    return out;
}

PlainSpec parse_plain(const json& sig, const json& coalg) {
    expect_keys(sig, {"labels", "arity"}, "/signature");
    const json& labels = member(sig, "labels", "/signature");
    if (!labels.is_array()) invalid("/signature/labels", "expected an array");
    const json& arity = member(sig, "arity", "/signature");
    if (!arity.is_object()) invalid("/signature/arity", "expected an object");

    std::vector<std::pair<Label, std::size_t>> arities;
    std::set<std::string> keys;
    for (std::size_t i = 0; i < labels.size(); ++i) {
        const Label a = label_from_json(labels[i], child("/signature/labels", i));
        const std::string key = label_key(a);
        if (!keys.insert(key).second) {
            invalid(child("/signature/labels", i), "duplicate label " + key);
        }
        arities.emplace_back(a, natural(member(arity, key, "/signature/arity"),
                                        child("/signature/arity", key)));
    }
    for (auto it = arity.begin(); it != arity.end(); ++it) {
        if (!keys.count(it.key())) invalid(child("/signature/arity", it.key()), "not a declared label");
    }

    expect_keys(coalg, {"states", "gamma"}, "/coalgebra");
    auto states = parse_state_list(member(coalg, "states", "/coalgebra"), "/coalgebra/states");
    std::map<Label, std::size_t> table(arities.begin(), arities.end());
    auto gamma = parse_gamma(member(coalg, "gamma", "/coalgebra"), states, "/coalgebra/gamma",
                             [&](const StateName&, const Label& a, const std::string& at) {
                                 auto it = table.find(a);
                                 if (it == table.end()) {
                                     invalid(at, "label " + a.to_string() + " is not in the signature");
                                 }
                                 return it->second;
                             });
    return make_plain(std::move(arities), std::move(states), std::move(gamma));
}

IndexedSpec parse_indexed(const json& ix, const json& coalg, const std::string& coalg_at) {
    const json& sorts_j = member(ix, "sorts", "/indexed");
    if (!sorts_j.is_array()) invalid("/indexed/sorts", "expected an array");
    std::vector<Sort> sorts;
    std::set<Sort> known;
    for (std::size_t i = 0; i < sorts_j.size(); ++i) {
        Sort s{text(sorts_j[i], child("/indexed/sorts", i))};
        if (!known.insert(s).second) invalid(child("/indexed/sorts", i), "duplicate sort " + s.name);
        sorts.push_back(std::move(s));
    }

    const json& labels = member(ix, "labels", "/indexed");
    if (!labels.is_object()) invalid("/indexed/labels", "expected an object");
    std::map<Sort, std::vector<IndexedContainer::Shape>> shapes;
    for (const auto& i : sorts) shapes[i];
    for (auto it = labels.begin(); it != labels.end(); ++it) {
        const std::string at = child("/indexed/labels", it.key());
        const Sort i{it.key()};
        if (!known.count(i)) invalid(at, "not a declared sort");
        if (!it->is_object()) invalid(at, "expected an object");
        for (auto lt = it->begin(); lt != it->end(); ++lt) {
            const std::string lat = child(at, lt.key());
            expect_keys(*lt, {"arity", "child_sorts"}, lat);
            const std::size_t n = natural(member(*lt, "arity", lat), child(lat, "arity"));
            const json& cs = member(*lt, "child_sorts", lat);
            const std::string cs_at = child(lat, "child_sorts");
            if (!cs.is_array()) invalid(cs_at, "expected an array");
            if (cs.size() != n) {
                invalid(cs_at, "expected " + std::to_string(n) + " child sorts, got " +
                                   std::to_string(cs.size()));
            }
            IndexedContainer::Shape shape{Label(lt.key()), {}};
            for (std::size_t b = 0; b < cs.size(); ++b) {
                Sort j{text(cs[b], child(cs_at, b))};
                if (!known.count(j)) invalid(child(cs_at, b), "undeclared sort " + j.name);
                shape.child_sorts.push_back(std::move(j));
            }
            shapes[i].push_back(std::move(shape));
        }
    }

    const json& states_j = member(coalg, "states", coalg_at);
    const std::string states_at = child(coalg_at, "states");
    if (!states_j.is_object()) invalid(states_at, "expected an object mapping states to sorts");
    std::vector<StateName> states;
    std::map<StateName, Sort> sort_of;
    for (auto it = states_j.begin(); it != states_j.end(); ++it) {
        Sort i{text(*it, child(states_at, it.key()))};
        if (!known.count(i)) invalid(child(states_at, it.key()), "undeclared sort " + i.name);
        states.push_back(it.key());
        sort_of.emplace(it.key(), std::move(i));
    }

    auto shape_of = [&](const Sort& i, const Label& a) -> const IndexedContainer::Shape* {
        for (const auto& s : shapes.at(i)) {
            if (s.label == a) return &s;
        }
        return nullptr;
    };
    auto gamma = parse_gamma(member(coalg, "gamma", coalg_at), states, child(coalg_at, "gamma"),
                             [&](const StateName& s, const Label& a, const std::string& at) {
                                 const auto* shape = shape_of(sort_of.at(s), a);
                                 if (!shape) {
                                     invalid(at, "label " + a.to_string() +
                                                     " is not available at sort " +
                                                     sort_of.at(s).name);
                                 }
                                 return shape->arity();
                             });
    for (const auto& [s, v] : gamma) {
        const auto* shape = shape_of(sort_of.at(s), v.label);
        for (std::size_t b = 0; b < v.children.size(); ++b) {
            if (sort_of.at(v.children[b]) != shape->child_sorts[b]) {
                invalid(child(child(child(child(coalg_at, "gamma"), s), "children"), b),
                        "sort mismatch: state '" + v.children[b] + "' has sort " +
                            sort_of.at(v.children[b]).name + ", position requires " +
                            shape->child_sorts[b].name);
            }
        }
    }
    return make_indexed(std::move(sorts), std::move(shapes), std::move(states), std::move(sort_of),
                        std::move(gamma));
}

json gamma_to_json(const std::map<StateName, PValue<StateName>>& gamma) {
    json g = json::object();
    for (const auto& [s, v] : gamma) {
        g[s] = {{"label", label_to_json(v.label)}, {"children", v.children}};
    }
    return g;
}

}  // namespace

const std::vector<StateName>& SpecDocument::states() const {
    return is_indexed() ? indexed().states : plain().states;
}

bool SpecDocument::has_state(const StateName& s) const {
    const auto& all = states();
    return std::find(all.begin(), all.end(), s) != all.end();
}

PlainSpec make_plain(std::vector<std::pair<Label, std::size_t>> arities,
                     std::vector<StateName> states, std::map<StateName, PValue<StateName>> gamma) {
    Container c = Container::finite(arities);
    auto table = std::make_shared<const std::map<StateName, PValue<StateName>>>(gamma);
    Coalgebra<StateName> coalg(
        c,
        [table](const StateName& s) {
            auto it = table->find(s);
            if (it == table->end()) throw Error(ErrorKind::UnknownState, "unknown state '" + s + "'");
            return it->second;
        },
        states);
    return {std::move(arities), std::move(c), std::move(states), std::move(gamma), std::move(coalg)};
}

IndexedSpec make_indexed(std::vector<Sort> sorts,
                         std::map<Sort, std::vector<IndexedContainer::Shape>> shapes,
                         std::vector<StateName> states, std::map<StateName, Sort> sort_of,
                         std::map<StateName, PValue<StateName>> gamma) {
    IndexedContainer ic(sorts, shapes);
    auto table = std::make_shared<const std::map<StateName, PValue<StateName>>>(gamma);
    auto sorts_of = std::make_shared<const std::map<StateName, Sort>>(sort_of);
    IndexedCoalgebra<StateName> coalg(
        ic, states,
        [sorts_of](const StateName& s) {
            auto it = sorts_of->find(s);
            if (it == sorts_of->end()) throw Error(ErrorKind::UnknownState, "unknown state '" + s + "'");
            return it->second;
        },
        [table](const StateName& s) {
            auto it = table->find(s);
            if (it == table->end()) throw Error(ErrorKind::UnknownState, "unknown state '" + s + "'");
            return it->second;
        });
    return {std::move(sorts), std::move(shapes), std::move(ic), std::move(states),
            std::move(sort_of), std::move(gamma), std::move(coalg)};
}

json label_to_json(const Label& a) {
    if (a.is_integer()) return a.as_integer();
    if (a.is_string()) return a.as_string();
    return json::array({label_to_json(a.first()), label_to_json(a.second())});
}

Label label_from_json(const json& j, const std::string& pointer) {
    if (j.is_string()) return Label(j.get<std::string>());
    if (j.is_number_integer()) return Label(j.get<std::int64_t>());
    if (j.is_array() && j.size() == 2) {
        return Label::pair(label_from_json(j[0], child(pointer, 0)),
                           label_from_json(j[1], child(pointer, 1)));
    }
    invalid(pointer, "a label must be a string, an integer, or a pair");
}

json tree_to_json(const ApproxTree& t) {
    if (t.is_trunc()) return nullptr;
    json kids = json::array();
    for (const auto& c : t.children()) kids.push_back(tree_to_json(c));
    return {{"label", label_to_json(t.label())}, {"children", std::move(kids)}};
}

SpecDocument parse_spec(const json& doc) {
    if (!doc.is_object()) invalid("", "expected a JSON object");
    expect_keys(doc, {"schema_version", "signature", "indexed", "coalgebra"}, "");
    const json& version = member(doc, "schema_version", "");
    if (!version.is_string() || version.get<std::string>() != "1") {
        invalid("/schema_version", "expected \"1\"");
    }
    const bool has_sig = doc.contains("signature");
    const bool has_ix = doc.contains("indexed");
    if (has_sig == has_ix) invalid("", "exactly one of \"signature\" and \"indexed\" is required");
    if (has_sig) return {parse_plain(doc["signature"], member(doc, "coalgebra", ""))};

    const json& ix = doc["indexed"];
    if (doc.contains("coalgebra")) {
        expect_keys(ix, {"sorts", "labels"}, "/indexed");
        expect_keys(doc["coalgebra"], {"states", "gamma"}, "/coalgebra");
        return {parse_indexed(ix, doc["coalgebra"], "/coalgebra")};
    }
    expect_keys(ix, {"sorts", "labels", "states", "gamma"}, "/indexed");
    return {parse_indexed(ix, ix, "/indexed")};
}

SpecDocument load_spec_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::Validation, "cannot read " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    json doc;
    try {
        doc = json::parse(buf.str());
    } catch (const json::parse_error& e) {
        throw Error(ErrorKind::Validation, path + ": malformed JSON: " + e.what());
    }
    return parse_spec(doc);
}

json to_json(const SpecDocument& spec) {
    json doc = {{"schema_version", "1"}};
    if (!spec.is_indexed()) {
        const auto& p = spec.plain();
        json labels = json::array();
        json arity = json::object();
        for (const auto& [a, n] : p.arities) {
            labels.push_back(label_to_json(a));
            arity[label_key(a)] = n;
        }
        doc["signature"] = {{"labels", labels}, {"arity", arity}};
        doc["coalgebra"] = {{"states", p.states}, {"gamma", gamma_to_json(p.gamma)}};
        return doc;
    }
    const auto& x = spec.indexed();
    json sorts = json::array();
    json labels = json::object();
    for (const auto& i : x.sorts) {
        sorts.push_back(i.name);
        json at = json::object();
        for (const auto& shape : x.shapes.at(i)) {
            json cs = json::array();
            for (const auto& j : shape.child_sorts) cs.push_back(j.name);
            at[label_key(shape.label)] = {{"arity", shape.arity()}, {"child_sorts", cs}};
        }
        labels[i.name] = at;
    }
    json states = json::object();
    for (const auto& [s, i] : x.sort_of) states[s] = i.name;
    doc["indexed"] = {{"sorts", sorts}, {"labels", labels}};
    doc["coalgebra"] = {{"states", states}, {"gamma", gamma_to_json(x.gamma)}};
    return doc;
}

std::vector<std::vector<StateName>> sorted_blocks(const SpecDocument& spec) {
    Partition<StateName> p = spec.is_indexed() ? ipartition_refine(spec.indexed().coalgebra)
                                               : partition_refine(spec.plain().coalgebra);
    for (auto& b : p.blocks) std::sort(b.begin(), b.end());
    std::sort(p.blocks.begin(), p.blocks.end(),
              [](const auto& x, const auto& y) { return x.front() < y.front(); });
    return p.blocks;
}

json blocks_to_json(const std::vector<std::vector<StateName>>& blocks) {
    return {{"blocks", blocks}};
}

SpecDocument minimized(const SpecDocument& spec) {
    const auto blocks = sorted_blocks(spec);
    std::map<StateName, StateName> rep;
    std::vector<StateName> states;
    for (const auto& b : blocks) {
        states.push_back(b.front());
        for (const auto& s : b) rep.emplace(s, b.front());
    }
    auto quotient = [&](const std::map<StateName, PValue<StateName>>& gamma) {
        std::map<StateName, PValue<StateName>> out;
        for (const auto& s : states) {
            PValue<StateName> v = gamma.at(s);
            for (auto& c : v.children) c = rep.at(c);
            out.emplace(s, std::move(v));
        }
        return out;
    };
    if (!spec.is_indexed()) {
        const auto& p = spec.plain();
        return {make_plain(p.arities, states, quotient(p.gamma))};
    }
    const auto& x = spec.indexed();
    std::map<StateName, Sort> sort_of;
    for (const auto& s : states) sort_of.emplace(s, x.sort_of.at(s));
    return {make_indexed(x.sorts, x.shapes, states, std::move(sort_of), quotient(x.gamma))};
}

SpecDocument disjoint_union(const SpecDocument& left, const SpecDocument& right,
                            const std::string& left_prefix, const std::string& right_prefix) {
    if (left.is_indexed() != right.is_indexed() || to_json(left).value("signature", json()) !=
                                                       to_json(right).value("signature", json()) ||
        to_json(left).value("indexed", json()) != to_json(right).value("indexed", json())) {
        throw Error(ErrorKind::Validation, "the two specs use different signatures");
    }
    std::vector<StateName> states;
    std::map<StateName, PValue<StateName>> gamma;
    std::map<StateName, Sort> sort_of;
    auto add = [&](const SpecDocument& d, const std::string& prefix) {
        const auto& g = d.is_indexed() ? d.indexed().gamma : d.plain().gamma;
        for (const auto& s : d.states()) {
            states.push_back(prefix + s);
            PValue<StateName> v = g.at(s);
            for (auto& c : v.children) c = prefix + c;
            gamma.emplace(prefix + s, std::move(v));
            if (d.is_indexed()) sort_of.emplace(prefix + s, d.indexed().sort_of.at(s));
        }
    };
    add(left, left_prefix);
    add(right, right_prefix);
    if (std::set<StateName>(states.begin(), states.end()).size() != states.size()) {
        throw Error(ErrorKind::Validation, "state names collide after prefixing");
    }
    if (!left.is_indexed()) return {make_plain(left.plain().arities, states, std::move(gamma))};
    const auto& x = left.indexed();
    return {make_indexed(x.sorts, x.shapes, states, std::move(sort_of), std::move(gamma))};
}

}  // namespace omegacoalg::io
