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

#include <stdexcept>
#include <string>
#include <string_view>

namespace omegacoalg {

enum class ErrorKind {
    ArityMismatch,
    RaggedDepth,
    CannotTruncateUnit,
    DepthTooLarge,
    NeedsFiniteLabels,
    SizeBoundExceeded,
    UnknownLabel,
    ConeLawViolation,
    LabelDrift,
    DepthBoundExceeded,
    NotAMorphism,
    NeedsFiniteStates,
    UnknownState,
    InvalidWitness,
    PairNotRelated,
    SortMismatch,
    Validation,
};

std::string_view to_string(ErrorKind kind);

/// Every library failure is reported through this exception; `kind()` is the
/// stable, testable part, `what()` carries a human-readable diagnostic.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

/// Result of a check that can fail without it being an error condition.
struct CheckResult {
    bool ok = true;
    std::string detail;

    explicit operator bool() const noexcept { return ok; }

    static CheckResult pass() { return {}; }
    static CheckResult fail(std::string why) { return {false, std::move(why)}; }
};

}  // namespace omegacoalg
