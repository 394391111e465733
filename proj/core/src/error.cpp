// SPDX-License-Identifier: Apache-2.0
#include "boolrev/error.hpp"

namespace boolrev {

std::string_view errorCodeName(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::kSyntax: return "SyntaxError";
    case ErrorCode::kUnknownVariable: return "UnknownVariable";
    case ErrorCode::kTooManyVariables: return "TooManyVariables";
    case ErrorCode::kDualRoleRegulator: return "DualRoleRegulator";
    case ErrorCode::kDegenerateFunction: return "DegenerateFunction";
    case ErrorCode::kConstantFunction: return "ConstantFunction";
    case ErrorCode::kDuplicateTarget: return "DuplicateTarget";
    case ErrorCode::kUndeclaredRegulator: return "UndeclaredRegulator";
    case ErrorCode::kInconsistentFacts: return "InconsistentFacts";
    case ErrorCode::kUnknownNodeColumn: return "UnknownNodeColumn";
    case ErrorCode::kNonBinaryCell: return "NonBinaryCell";
    case ErrorCode::kDuplicateProfileTimePair: return "DuplicateProfileTimePair";
    case ErrorCode::kDuplicateProfile: return "DuplicateProfile";
    case ErrorCode::kUnknownNode: return "UnknownNode";
    case ErrorCode::kValueOutOfRange: return "ValueOutOfRange";
    case ErrorCode::kInvalidModel: return "InvalidModel";
    case ErrorCode::kInvalidRepair: return "InvalidRepair";
    case ErrorCode::kExhausted: return "Exhausted";
    case ErrorCode::kTooLarge: return "TooLarge";
    case ErrorCode::kUnknownNodeInProfile: return "UnknownNodeInProfile";
    case ErrorCode::kUnrealizableProfile: return "UnrealizableProfile";
    case ErrorCode::kNoRepairFound: return "NoRepairFound";
    case ErrorCode::kGuardOverflow: return "GuardOverflow";
    case ErrorCode::kNoAdmissibleSite: return "NoAdmissibleSite";
    case ErrorCode::kTimeout: return "Timeout";
    case ErrorCode::kIo: return "IoError";
    case ErrorCode::kUsage: return "UsageError";
  }
  return "Error";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(message), code_(code) {}

}  // namespace boolrev
