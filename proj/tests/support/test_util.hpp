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

#include <optional>

#include <lpdamimo/error.hpp>

/// Kind of the lpdamimo::Error thrown by fn, or nullopt when nothing was thrown.
template <class F>
std::optional<lpdamimo::ErrorKind> error_kind(F&& fn) {
    try {
        fn();
    } catch (const lpdamimo::Error& e) {
        return e.kind();
    }
    return std::nullopt;
}
