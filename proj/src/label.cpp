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

#include "omegacoalg/label.hpp"

#include "omegacoalg/error.hpp"

namespace omegacoalg {

std::string_view to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::ArityMismatch: return "ArityMismatch";
        case ErrorKind::RaggedDepth: return "RaggedDepth";
        case ErrorKind::CannotTruncateUnit: return "CannotTruncateUnit";
        case ErrorKind::DepthTooLarge: return "DepthTooLarge";
        case ErrorKind::NeedsFiniteLabels: return "NeedsFiniteLabels";
        case ErrorKind::SizeBoundExceeded: return "SizeBoundExceeded";
        case ErrorKind::UnknownLabel: return "UnknownLabel";
        case ErrorKind::ConeLawViolation: return "ConeLawViolation";
        case ErrorKind::LabelDrift: return "LabelDrift";
        case ErrorKind::DepthBoundExceeded: return "DepthBoundExceeded";
        case ErrorKind::NotAMorphism: return "NotAMorphism";
        case ErrorKind::NeedsFiniteStates: return "NeedsFiniteStates";
        case ErrorKind::UnknownState: return "UnknownState";
        case ErrorKind::InvalidWitness: return "InvalidWitness";
        case ErrorKind::PairNotRelated: return "PairNotRelated";
        case ErrorKind::SortMismatch: return "SortMismatch";
        case ErrorKind::Validation: return "Validation";
    }
    return "Unknown";
}

Label Label::pair(Label first, Label second) {
    Label l;
    l.value_ = std::make_shared<const Pair>(Pair{std::move(first), std::move(second)});
    return l;
}

const Label& Label::first() const { return std::get<PairPtr>(value_)->first; }
const Label& Label::second() const { return std::get<PairPtr>(value_)->second; }

std::string Label::to_string() const {
    if (is_integer()) return std::to_string(as_integer());
    if (is_string()) return as_string();
    return "(" + first().to_string() + "," + second().to_string() + ")";
}

std::size_t Label::hash() const {
    if (is_integer()) return std::hash<std::int64_t>{}(as_integer());
    if (is_string()) return std::hash<std::string>{}(as_string()) ^ 0x9e3779b97f4a7c15ULL;
    std::size_t h = first().hash();
    h ^= second().hash() + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
}

bool operator==(const Label& a, const Label& b) { return (a <=> b) == 0; }

std::strong_ordering operator<=>(const Label& a, const Label& b) {
    if (a.value_.index() != b.value_.index()) return a.value_.index() <=> b.value_.index();
    if (a.is_integer()) return a.as_integer() <=> b.as_integer();
    if (a.is_string()) return a.as_string().compare(b.as_string()) <=> 0;
    if (auto c = a.first() <=> b.first(); c != 0) return c;
    return a.second() <=> b.second();
}

}  // namespace omegacoalg
