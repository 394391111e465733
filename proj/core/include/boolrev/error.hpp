// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace boolrev {

enum class ErrorCode {
  kSyntax,
  kUnknownVariable,
  kTooManyVariables,
  kDualRoleRegulator,
  kDegenerateFunction,
  kConstantFunction,
  kDuplicateTarget,
  kUndeclaredRegulator,
  kInconsistentFacts,
  kUnknownNodeColumn,
  kNonBinaryCell,
  kDuplicateProfileTimePair,
  kDuplicateProfile,
  kUnknownNode,
  kValueOutOfRange,
  kInvalidModel,
  kInvalidRepair,
  kExhausted,
  kTooLarge,
  kUnknownNodeInProfile,
  kUnrealizableProfile,
  kNoRepairFound,
  kGuardOverflow,
  kNoAdmissibleSite,
  kTimeout,
  kIo,
  kUsage,
};

std::string_view errorCodeName(ErrorCode code) noexcept;

/// Every failure raised by the library. `code()` identifies the failure class;
/// the message is meant for humans.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace boolrev
