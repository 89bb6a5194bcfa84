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

// Ready-made signatures and elements: streams, conatural numbers, the
// three-label tree signature {a: 0, b: 2, c: 3}, and a two-sorted parity
// signature.

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "omegacoalg/coalgebra.hpp"
#include "omegacoalg/container.hpp"
#include "omegacoalg/indexed.hpp"
#include "omegacoalg/mtype.hpp"

namespace omegacoalg::catalog {

// --- streams ---------------------------------------------------------------

/// Streams over a label domain: every label has exactly one position.
struct StreamContext {
    std::optional<std::vector<Label>> base_labels;
    Container container;

    /// Streams over an explicit finite label set.
    static StreamContext over(std::vector<Label> labels);
    /// Streams over every label (integers, strings, pairs).
    static StreamContext any();
};

Label head(const MElement& m);
MElement tail(const MElement& m);
/// Throws UnknownLabel when `a` is outside the context's label domain.
MElement cons(const StreamContext& ctx, const Label& a, const MElement& m);

/// The stream a, a, a, ...
MElement constant_stream(const Label& a);

/// Streams over the pair labels (x, y), by unfolding
/// (xs, ys) |-> ((head xs, head ys), (tail xs, tail ys)).
MElement zip(const MElement& xs, const MElement& ys);

/// The stream g(0), g(1), g(2), ...
MElement stream_from_function(std::function<Label(std::size_t)> g);

/// k |-> head(tail^k(m)).
std::function<Label(std::size_t)> stream_to_function(const MElement& m);

/// Finite stream coalgebra over labels {0, 1, 7}: `alt0` (0, 1, 0, ...),
/// `alt1` (1, 0, 1, ...) and `seven` (7, 7, ...).
Coalgebra<std::string> stream_coalgebra();

// --- conatural numbers ------------------------------------------------------

/// Labels Z (arity 0) and S (arity 1).
Container conat_signature();

/// S(S(S(...))), never reaching Z.
MElement conat_infinity();

/// S^k(Z).
MElement conat_of(std::size_t k);

/// States `inf` (an S-loop) and "0" .. max_k, where "k" unfolds to S^k(Z).
Coalgebra<std::string> conat_coalgebra(std::size_t max_k);

// --- the three-label tree signature -----------------------------------------

/// Labels a, b, c with arities 0, 2, 3.
Container fig1_signature();

/// States t, u with t -> (b, [u, t]) and u -> (a, []).
Coalgebra<std::string> fig1_coalgebra();

// --- parity (indexed) -------------------------------------------------------

/// Sorts e and o; E at e has one child of sort o, O at o one child of sort e.
IndexedContainer parity_signature();

/// States p : e and q : o with p -> (E, [q]) and q -> (O, [p]).
IndexedCoalgebra<std::string> parity_coalgebra();

}  // namespace omegacoalg::catalog
