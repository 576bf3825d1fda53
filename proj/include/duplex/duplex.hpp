// Copyright 2026 The Duplex Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

/// @file duplex.hpp
/// @brief Umbrella header: the whole library in one include.

#include "duplex/errors.hpp"
#include "duplex/io.hpp"
#include "duplex/linalg.hpp"
#include "duplex/model.hpp"
#include "duplex/oracle.hpp"
#include "duplex/rational.hpp"
#include "duplex/solve.hpp"
#include "duplex/stats.hpp"
#include "duplex/tableau.hpp"
