/*
   Copyright 2026 The bcsys Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace bcsys {

enum class ErrorKind {
    LevelMismatch,
    DomainError,
    NonInvertible,
    NotInGroupoid,
    NotComposable,
    ModeMismatch,
    NotInSpace,
    DegenerateInput,
    DeterminantBoundExceeded,
    InvalidArgument,
    Overflow,
    Inconsistent,
};

constexpr std::string_view to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::LevelMismatch: return "LevelMismatch";
        case ErrorKind::DomainError: return "DomainError";
        case ErrorKind::NonInvertible: return "NonInvertible";
        case ErrorKind::NotInGroupoid: return "NotInGroupoid";
        case ErrorKind::NotComposable: return "NotComposable";
        case ErrorKind::ModeMismatch: return "ModeMismatch";
        case ErrorKind::NotInSpace: return "NotInSpace";
        case ErrorKind::DegenerateInput: return "DegenerateInput";
        case ErrorKind::DeterminantBoundExceeded: return "DeterminantBoundExceeded";
        case ErrorKind::InvalidArgument: return "InvalidArgument";
        case ErrorKind::Overflow: return "Overflow";
        case ErrorKind::Inconsistent: return "Inconsistent";
    }
    return "Unknown";
}

/// Every failure raised by the library. `kind()` is what callers dispatch on;
/// the message is for humans.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

}  // namespace bcsys
