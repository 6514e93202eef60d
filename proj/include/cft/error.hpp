/*
   Copyright 2026 The cft Authors

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

#ifndef CFT_ERROR_HPP
#define CFT_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace cft {

enum class ErrorKind {
    InvalidArgument,
    EmptyInput,
    DegenerateExtension,
    NotInField,
    NotAGenerator,
    NotAlgebraicInteger,
    GeneratorSearchExhausted,
    VerificationFailed,
    DivisionByZero,
    PrecisionUnreachable,
    LatticePoint,
    IndexCollision,
    DenominatorVanishes,
    UnsupportedDiscriminant,
    LevelMismatch,
    RecognitionFailed,
    SeparationTooTight,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Every failure raised by the library carries one of the kinds above so the
/// CLI can map it to an exit code and embed it in a report.
class Error : public std::runtime_error {
  public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

  private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

}  // namespace cft

#endif  // CFT_ERROR_HPP
