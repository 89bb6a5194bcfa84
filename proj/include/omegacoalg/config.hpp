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

namespace omegacoalg {

inline constexpr std::size_t kDefaultMaxDepth = 10'000;

/// Largest depth any approximation may be requested at. Defaults to
/// kDefaultMaxDepth; the OMEGACOALG_MAX_DEPTH environment variable overrides
/// it (read once, on first use).
std::size_t max_depth();

/// Throws DepthBoundExceeded when n > max_depth().
void check_depth(std::size_t n);

}  // namespace omegacoalg
