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

#include <stdexcept>
#include <string>

namespace lpdamimo {

enum class ErrorKind {
    Precondition,         // invalid argument or violated precondition
    BoundsViolation,      // parameter outside an allowed open interval
    SynthesisOverflow,    // element count would exceed the configured cap
    UnknownLabel,         // fixture or enum label not recognised
    NumericalSingularity, // singular linear system or degenerate dimensions
    Parse,                // malformed input document
    Config,               // missing or invalid configuration key
    Io                    // file system failure
};

const char* to_string(ErrorKind kind);

/// Library error carrying a machine-readable kind. The CLI maps kinds to exit codes.
class Error : public std::runtime_error {
  public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(message), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

  private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& message) { throw Error(kind, message); }

inline void require(bool condition, const std::string& message) {
    if (!condition)
        fail(ErrorKind::Precondition, message);
}

} // namespace lpdamimo
