// SPDX-License-Identifier: Apache-2.0
//
// lpdamimo: log-periodic slant-polarized MIMO antenna design toolkit
// Copyright (C) 2026 The lpdamimo authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#pragma once

#include "lpdamimo/em_surrogate.hpp"
#include "lpdamimo/error.hpp"
#include "lpdamimo/far_field_pattern.hpp"
#include "lpdamimo/geometry.hpp"
#include "lpdamimo/io.hpp"
#include "lpdamimo/omni.hpp"
#include "lpdamimo/optimizer.hpp"
#include "lpdamimo/pattern_metrics.hpp"
#include "lpdamimo/placement.hpp"
#include "lpdamimo/units.hpp"
