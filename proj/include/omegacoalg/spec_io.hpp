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

// JSON spec documents: a signature (plain or indexed) plus a finite
// coalgebra over string-named states.
//
//   {"schema_version": "1",
//    "signature": {"labels": ["a","b"], "arity": {"a": 0, "b": 2}},
//    "coalgebra": {"states": ["t","u"],
//                  "gamma": {"t": {"label": "b", "children": ["u","t"]},
//                            "u": {"label": "a", "children": []}}}}
//
// or, indexed:
//
//   {"schema_version": "1",
//    "indexed": {"sorts": ["e","o"],
//                "labels": {"e": {"E": {"arity": 1, "child_sorts": ["o"]}}, ...}},
//    "coalgebra": {"states": {"p": "e", "q": "o"}, "gamma": {...}}}
//
// The indexed "states"/"gamma" keys may also sit inside "indexed" itself.
// Validation errors carry the JSON pointer of the offending key.

#include <map>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "omegacoalg/approx_tree.hpp"
#include "omegacoalg/bisimulation.hpp"
#include "omegacoalg/coalgebra.hpp"
#include "omegacoalg/container.hpp"
#include "omegacoalg/indexed.hpp"

namespace omegacoalg::io {

using json = nlohmann::json;
using StateName = std::string;

struct PlainSpec {
    std::vector<std::pair<Label, std::size_t>> arities;
    Container container;
    std::vector<StateName> states;
    std::map<StateName, PValue<StateName>> gamma;
    Coalgebra<StateName> coalgebra;
};

struct IndexedSpec {
    std::vector<Sort> sorts;
    std::map<Sort, std::vector<IndexedContainer::Shape>> shapes;
    IndexedContainer container;
    std::vector<StateName> states;
    std::map<StateName, Sort> sort_of;
    std::map<StateName, PValue<StateName>> gamma;
    IndexedCoalgebra<StateName> coalgebra;
};

struct SpecDocument {
    std::variant<PlainSpec, IndexedSpec> body;

    bool is_indexed() const { return std::holds_alternative<IndexedSpec>(body); }
    const PlainSpec& plain() const { return std::get<PlainSpec>(body); }
    const IndexedSpec& indexed() const { return std::get<IndexedSpec>(body); }
    const std::vector<StateName>& states() const;
    bool has_state(const StateName& s) const;
};

/// Throws Error(Validation) naming the offending JSON pointer.
SpecDocument parse_spec(const json& doc);

/// Reads and parses a file. Throws Error(Validation) for unreadable files
/// and malformed JSON too.
SpecDocument load_spec_file(const std::string& path);

/// Canonical form of a document (sorted keys, schema_version "1").
json to_json(const SpecDocument& spec);

PlainSpec make_plain(std::vector<std::pair<Label, std::size_t>> arities,
                     std::vector<StateName> states, std::map<StateName, PValue<StateName>> gamma);
IndexedSpec make_indexed(std::vector<Sort> sorts,
                         std::map<Sort, std::vector<IndexedContainer::Shape>> shapes,
                         std::vector<StateName> states, std::map<StateName, Sort> sort_of,
                         std::map<StateName, PValue<StateName>> gamma);

/// Integers and strings map to JSON scalars, pair labels to 2-element arrays.
json label_to_json(const Label& a);
Label label_from_json(const json& j, const std::string& pointer);

/// Null for the truncation marker, {"label", "children"} for nodes.
json tree_to_json(const ApproxTree& t);

/// Coarsest-bisimulation blocks, states sorted within blocks and blocks
/// sorted by their smallest member.
std::vector<std::vector<StateName>> sorted_blocks(const SpecDocument& spec);
json blocks_to_json(const std::vector<std::vector<StateName>>& blocks);

/// Quotient by the coarsest bisimulation; each block is named after its
/// lexicographically smallest member.
SpecDocument minimized(const SpecDocument& spec);

/// Disjoint union of two plain specs over the same signature; states are
/// renamed to `left_prefix + s` and `right_prefix + s`.
SpecDocument disjoint_union(const SpecDocument& left, const SpecDocument& right,
                            const std::string& left_prefix, const std::string& right_prefix);

}  // namespace omegacoalg::io
