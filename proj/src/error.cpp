/*
 * Copyright 2026 The gmtrend Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 *
 */

#include "gmtrend/error.hpp"

namespace gmtrend {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::NonIncreasingEpochs: return "NonIncreasingEpochs";
    case ErrorCode::ShapeMismatch: return "ShapeMismatch";
    case ErrorCode::NonFiniteValue: return "NonFiniteValue";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::InvalidConfig: return "InvalidConfig";
    case ErrorCode::SeriesTooShort: return "SeriesTooShort";
    case ErrorCode::NegativeTime: return "NegativeTime";
    case ErrorCode::NonPositiveTime: return "NonPositiveTime";
    case ErrorCode::AlphaNotPD: return "AlphaNotPD";
    case ErrorCode::EpochBeyondHorizon: return "EpochBeyondHorizon";
    case ErrorCode::TooFewIncrements: return "TooFewIncrements";
    case ErrorCode::NotSymmetric: return "NotSymmetric";
    case ErrorCode::NoConvergence: return "NoConvergence";
    case ErrorCode::BadTimes: return "BadTimes";
    case ErrorCode::ZeroEndpoint: return "ZeroEndpoint";
    case ErrorCode::Underdetermined: return "Underdetermined";
    case ErrorCode::RankDeficientDesign: return "RankDeficientDesign";
    case ErrorCode::DegenerateDenominator: return "DegenerateDenominator";
    case ErrorCode::AnchorMismatch: return "AnchorMismatch";
    case ErrorCode::BadCount: return "BadCount";
    case ErrorCode::MalformedInput: return "MalformedInput";
    case ErrorCode::IoFailure: return "IoFailure";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

}  // namespace gmtrend
