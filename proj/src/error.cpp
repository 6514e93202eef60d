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

#include "cft/error.hpp"

namespace cft {

std::string_view to_string(ErrorKind kind) noexcept {
    switch (kind) {
        case ErrorKind::InvalidArgument: return "InvalidArgument";
        case ErrorKind::EmptyInput: return "EmptyInput";
        case ErrorKind::DegenerateExtension: return "DegenerateExtension";
        case ErrorKind::NotInField: return "NotInField";
        case ErrorKind::NotAGenerator: return "NotAGenerator";
        case ErrorKind::NotAlgebraicInteger: return "NotAlgebraicInteger";
        case ErrorKind::GeneratorSearchExhausted: return "GeneratorSearchExhausted";
        case ErrorKind::VerificationFailed: return "VerificationFailed";
        case ErrorKind::DivisionByZero: return "DivisionByZero";
        case ErrorKind::PrecisionUnreachable: return "PrecisionUnreachable";
        case ErrorKind::LatticePoint: return "LatticePoint";
        case ErrorKind::IndexCollision: return "IndexCollision";
        case ErrorKind::DenominatorVanishes: return "DenominatorVanishes";
        case ErrorKind::UnsupportedDiscriminant: return "UnsupportedDiscriminant";
        case ErrorKind::LevelMismatch: return "LevelMismatch";
        case ErrorKind::RecognitionFailed: return "RecognitionFailed";
        case ErrorKind::SeparationTooTight: return "SeparationTooTight";
    }
    return "Unknown";
}

}  // namespace cft
