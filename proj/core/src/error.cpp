// Copyright 2026 The splitshower Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "splitshower/error.hpp"

namespace splitshower {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::WireOutOfRange: return "WireOutOfRange";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::InvalidGate: return "InvalidGate";
    case ErrorCode::InvalidState: return "InvalidState";
    case ErrorCode::EmptyKeepSet: return "EmptyKeepSet";
    case ErrorCode::ZeroShots: return "ZeroShots";
    case ErrorCode::OutOfRange: return "OutOfRange";
    case ErrorCode::ParameterDomain: return "ParameterDomain";
    case ErrorCode::InvalidDensityMatrix: return "InvalidDensityMatrix";
    case ErrorCode::DivergentEndpoint: return "DivergentEndpoint";
    case ErrorCode::TopologyParamMismatch: return "TopologyParamMismatch";
    case ErrorCode::ArccosDomain: return "ArccosDomain";
    case ErrorCode::CalibrationInfeasible: return "CalibrationInfeasible";
    case ErrorCode::EmptyDataset: return "EmptyDataset";
    case ErrorCode::EmptyInput: return "EmptyInput";
    case ErrorCode::NonFiniteMomentum: return "NonFiniteMomentum";
    case ErrorCode::InsufficientConstituents: return "InsufficientConstituents";
    case ErrorCode::ZeroJetPt: return "ZeroJetPt";
    case ErrorCode::PairModeArity: return "PairModeArity";
    case ErrorCode::TooManyQubits: return "TooManyQubits";
    case ErrorCode::DegenerateBins: return "DegenerateBins";
    case ErrorCode::Io: return "Io";
    case ErrorCode::Parse: return "Parse";
  }
  return "Unknown";
}

}  // namespace splitshower
