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

#include "lpdamimo/error.hpp"

namespace lpdamimo {

const char* to_string(ErrorKind kind) {
    switch (kind) {
    case ErrorKind::Precondition: return "precondition";
    case ErrorKind::BoundsViolation: return "bounds violation";
    case ErrorKind::SynthesisOverflow: return "synthesis overflow";
    case ErrorKind::UnknownLabel: return "unknown label";
    case ErrorKind::NumericalSingularity: return "numerical singularity";
    case ErrorKind::Parse: return "parse";
    case ErrorKind::Config: return "config";
    case ErrorKind::Io: return "io";
    }
    return "unknown";
}

} // namespace lpdamimo
