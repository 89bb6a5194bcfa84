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

#include "omegacoalg/approx_tree.hpp"
#include "omegacoalg/bisimulation.hpp"
#include "omegacoalg/catalog.hpp"
#include "omegacoalg/chain.hpp"
#include "omegacoalg/coalgebra.hpp"
#include "omegacoalg/config.hpp"
#include "omegacoalg/container.hpp"
#include "omegacoalg/error.hpp"
#include "omegacoalg/indexed.hpp"
#include "omegacoalg/label.hpp"
#include "omegacoalg/mtype.hpp"
