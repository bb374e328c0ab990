/*
 *   Copyright 2026 The troptrans Authors
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

// Umbrella header.

#ifndef TROPTRANS_TROPTRANS_HPP
#define TROPTRANS_TROPTRANS_HPP

#include "bounds.hpp"
#include "digraph.hpp"
#include "error.hpp"
#include "harness.hpp"
#include "io.hpp"
#include "matrix.hpp"
#include "pumping.hpp"
#include "scalar.hpp"
#include "spectral.hpp"
#include "transients.hpp"
#include "weight.hpp"

#endif  // TROPTRANS_TROPTRANS_HPP
