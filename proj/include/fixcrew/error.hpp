// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 fixcrew contributors

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace fixcrew {

enum class ErrorCode {
    // filesystem / inputs
    UnreadablePath,
    SnapshotMissing,
    // knowledge graph
    NoExtractorAvailable,
    ParseFailure,
    EmptyQuery,
    ScorerFailure,
    UnknownEntity,
    // navigation
    NoIdentifierFound,
    AmbiguousIdentifier,
    BackendUnavailable,
    PositionOutOfRange,
    Timeout,
    // file index
    InvalidGlob,
    InvalidPattern,
    // patching
    NoBlocksFound,
    MalformedBlock,
    NoAcceptableMatch,
    AmbiguousExactMatch,
    MalformedDiff,
    DiffApplyFailure,
    // sandbox
    SandboxUnavailable,
    SpawnFailure,
    // orchestration
    EmptyContext,
    PermissionDenied,
    ProviderFailure,
    ReproductionNotConfirmed,
    BudgetExhausted,
    AllCandidatesRejected,
    // cli
    UsageError,
    ConfigError,
};

std::string_view error_code_name(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(std::string(error_code_name(code)) + ": " + message), code_(code) {}

    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

} // namespace fixcrew
