/*
   Copyright 2026 The avc authors

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

#include "avc/error.hpp"

namespace avc {

const char* error_code_name(ErrorCode c) {
    switch (c) {
        case ErrorCode::NonPrimeCharacteristic: return "NonPrimeCharacteristic";
        case ErrorCode::FieldTooLarge: return "FieldTooLarge";
        case ErrorCode::DivisionByZero: return "DivisionByZero";
        case ErrorCode::MixedFields: return "MixedFields";
        case ErrorCode::ZeroPolynomial: return "ZeroPolynomial";
        case ErrorCode::ArityMismatch: return "ArityMismatch";
        case ErrorCode::ExponentOutOfBox: return "ExponentOutOfBox";
        case ErrorCode::DuplicatePoint: return "DuplicatePoint";
        case ErrorCode::RankDeficient: return "RankDeficient";
        case ErrorCode::LengthMismatch: return "LengthMismatch";
        case ErrorCode::NotDivisorClosed: return "NotDivisorClosed";
        case ErrorCode::NoCaseApplies: return "NoCaseApplies";
        case ErrorCode::MethodArityMismatch: return "MethodArityMismatch";
        case ErrorCode::RadiusInfeasible: return "RadiusInfeasible";
        case ErrorCode::ListOverflow: return "ListOverflow";
        case ErrorCode::PlanMismatch: return "PlanMismatch";
        case ErrorCode::InternalNoKernel: return "InternalNoKernel";
        case ErrorCode::Internal: return "Internal";
    }
    return "Unknown";
}

}  // namespace avc
