// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 fixcrew contributors

#include "fixcrew/error.hpp"

namespace fixcrew {

std::string_view error_code_name(ErrorCode code) {
    switch (code) {
    case ErrorCode::UnreadablePath: return "UnreadablePath";
    case ErrorCode::SnapshotMissing: return "SnapshotMissing";
    case ErrorCode::NoExtractorAvailable: return "NoExtractorAvailable";
    case ErrorCode::ParseFailure: return "ParseFailure";
    case ErrorCode::EmptyQuery: return "EmptyQuery";
    case ErrorCode::ScorerFailure: return "ScorerFailure";
    case ErrorCode::UnknownEntity: return "UnknownEntity";
    case ErrorCode::NoIdentifierFound: return "NoIdentifierFound";
    case ErrorCode::AmbiguousIdentifier: return "AmbiguousIdentifier";
    case ErrorCode::BackendUnavailable: return "BackendUnavailable";
    case ErrorCode::PositionOutOfRange: return "PositionOutOfRange";
    case ErrorCode::Timeout: return "Timeout";
    case ErrorCode::InvalidGlob: return "InvalidGlob";
    case ErrorCode::InvalidPattern: return "InvalidPattern";
    case ErrorCode::NoBlocksFound: return "NoBlocksFound";
    case ErrorCode::MalformedBlock: return "MalformedBlock";
    case ErrorCode::NoAcceptableMatch: return "NoAcceptableMatch";
    case ErrorCode::AmbiguousExactMatch: return "AmbiguousExactMatch";
    case ErrorCode::MalformedDiff: return "MalformedDiff";
    case ErrorCode::DiffApplyFailure: return "DiffApplyFailure";
    case ErrorCode::SandboxUnavailable: return "SandboxUnavailable";
    case ErrorCode::SpawnFailure: return "SpawnFailure";
    case ErrorCode::EmptyContext: return "EmptyContext";
    case ErrorCode::PermissionDenied: return "PermissionDenied";
    case ErrorCode::ProviderFailure: return "ProviderFailure";
    case ErrorCode::ReproductionNotConfirmed: return "ReproductionNotConfirmed";
    case ErrorCode::BudgetExhausted: return "BudgetExhausted";
    case ErrorCode::AllCandidatesRejected: return "AllCandidatesRejected";
    case ErrorCode::UsageError: return "UsageError";
    case ErrorCode::ConfigError: return "ConfigError";
    }
    return "UnknownError";
}

} // namespace fixcrew
