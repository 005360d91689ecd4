// Copyright 2026 The fermispin Authors
//
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

#include <stdexcept>
#include <string>
#include <vector>

namespace fermispin {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// A precondition on an argument was violated (bad label, negative distance,
/// wrong particle count, ...).
class InvalidArgument : public Error {
  public:
    using Error::Error;
};

/// Three or more fermions are effectively coincident: the Wick normalization
/// trace vanishes and no spin state exists.
class DegenerateConfiguration : public Error {
  public:
    explicit DegenerateConfiguration(const std::string &what, double trace = 0.0)
        : Error(what), trace_(trace) {}

    [[nodiscard]] double trace() const noexcept { return trace_; }

  private:
    double trace_;
};

/// The Gram system of the pair-singlet fit is numerically singular.
class SingularGram : public Error {
  public:
    SingularGram(const std::string &what, std::vector<std::string> dependent)
        : Error(what), dependent_(std::move(dependent)) {}

    /// Names of the basis operators that take part in the near-null direction.
    [[nodiscard]] const std::vector<std::string> &dependent() const noexcept {
        return dependent_;
    }

  private:
    std::vector<std::string> dependent_;
};

/// A scenario document failed to parse or validate.
class SpecError : public Error {
  public:
    SpecError(std::string field, const std::string &message, int line = 0)
        : Error(format(field, message, line)), field_(std::move(field)), message_(message),
          line_(line) {}

    [[nodiscard]] const std::string &field() const noexcept { return field_; }
    /// The diagnostic without field and line decoration.
    [[nodiscard]] const std::string &message() const noexcept { return message_; }
    /// 1-based line in the source document, 0 when unknown.
    [[nodiscard]] int line() const noexcept { return line_; }

  private:
    static std::string format(const std::string &field, const std::string &message,
                              int line) {
        std::string out;
        if (line > 0) {
            out += "line " + std::to_string(line) + ": ";
        }
        if (!field.empty()) {
            out += "field `" + field + "`: ";
        }
        return out + message;
    }

    std::string field_;
    std::string message_;
    int line_;
};

} // namespace fermispin
