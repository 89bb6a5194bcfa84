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

// The omegacoalg command line, callable in-process for tests.
//
//   approx   --spec F --state S [--depth N] [--format text|json]
//   bisim    --spec F [--left S --right T] [--algorithm partition|bounded]
//            [--depth N] [--other G]
//   minimize --spec F
//   check    --spec F [--depth N] [--format text|json]
//   demo     stream|conat|fig1|parity [--depth N] [--format text|json]
//
// Exit codes: 0 success (and "bisimilar"), 1 "distinguishable" or a failed
// check, 2 validation or usage error, 3 unknown state.

#include <iosfwd>
#include <string>
#include <vector>

#include "omegacoalg/spec_io.hpp"

namespace omegacoalg::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitNegative = 1;
inline constexpr int kExitInvalid = 2;
inline constexpr int kExitUnknownState = 3;

/// `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Spec documents for the catalog examples; throws Validation for unknown names.
io::SpecDocument demo_spec(const std::string& name);

struct CheckLine {
    std::string name;
    CheckResult result;
};

/// The invariant suite run by `check`.
std::vector<CheckLine> run_checks(const io::SpecDocument& spec, std::size_t depth);

}  // namespace omegacoalg::cli
