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

#include "omegacoalg/config.hpp"

#include <charconv>
#include <cstdlib>
#include <cstring>
#include <string>

#include "omegacoalg/error.hpp"

namespace omegacoalg {

std::size_t max_depth() {
    static const std::size_t bound = [] {
        const char* env = std::getenv("OMEGACOALG_MAX_DEPTH");
        if (env == nullptr || *env == '\0') return kDefaultMaxDepth;
        std::size_t v = 0;
        auto [end, ec] = std::from_chars(env, env + std::strlen(env), v);
        if (ec != std::errc{} || *end != '\0') return kDefaultMaxDepth;
        return v;
    }();
    return bound;
}

void check_depth(std::size_t n) {
    if (n > max_depth()) {
        throw Error(ErrorKind::DepthBoundExceeded, "depth " + std::to_string(n) +
                                                       " exceeds the bound " +
                                                       std::to_string(max_depth()));
    }
}

}  // namespace omegacoalg
