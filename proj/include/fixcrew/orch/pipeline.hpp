// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 fixcrew contributors

#pragma once

#include "fixcrew/ckg/graph.hpp"
#include "fixcrew/gate/gate.hpp"
#include "fixcrew/nav/snapshot.hpp"
#include "fixcrew/orch/context.hpp"
#include "fixcrew/orch/provider.hpp"
#include "fixcrew/orch/trace.hpp"
#include "fixcrew/patch/apply.hpp"
#include "fixcrew/sandbox/runner.hpp"

#include <chrono>
#include <string>

namespace fixcrew::orch {

struct Budget {
    int max_iterations = 10; // Programmer <-> Tester round trips
    int max_resets = 1;
    int n_candidates = 4;
    double wall_clock_seconds = 600.0;
    ContextBudget context;
};

struct IssueTask {
    std::string title;
    std::string body;
    Budget budget;
};

enum class RouteKind { Dynamic, Static };

struct Route {
    RouteKind kind = RouteKind::Static;
    std::string rationale;
};

struct Solution {
    patch::PatchSet diff;
    Route route;
    TraceLog trace;
    bool resolved = false;
};

struct PipelineDeps {
    const ckg::KnowledgeGraph* graph = nullptr;
    nav::DiagnosticsBackend* diagnostics = nullptr;
    CompletionProvider* provider = nullptr;
    sandbox::Runner* runner = nullptr;
    sandbox::Workspace* workspace = nullptr;
    std::vector<std::string> interpreter = {"python3"};
    patch::ApplyOptions apply;
    sandbox::ExecLimits exec_limits;
};

// Drives the six-role flow over one issue: Searcher context, Planner route,
// then either the Reproducer/Programmer/Tester loop or the Editor's
// multi-candidate vote. Every tool touch is permission-checked against the
// standard matrix and appended to the trace.
class Pipeline {
public:
    explicit Pipeline(PipelineDeps deps);

    ContextBundle search_context(const IssueTask& task);

    // Strict parse of the provider's classification; one retry, then the
    // static route wins by default.
    Route plan_route(const IssueTask& task, const ContextBundle& context);

    // Reproduce, patch behind the gate, re-test; resets allowed within
    // budget. Unresolved on budget exhaustion. Throws
    // Error{ReproductionNotConfirmed} when the script passes on buggy code.
    Solution run_dynamic(const IssueTask& task, const ContextBundle& context);

    // One provider call for n candidates; gate-check each, pool structural
    // twins, largest pool wins (earliest candidate breaks ties). Throws
    // Error{AllCandidatesRejected} when nothing survives.
    Solution run_static(const IssueTask& task, const ContextBundle& context);

    // Full flow with rerouting: an unconfirmed reproduction falls back to
    // the static route instead of failing the task.
    Solution solve(const IssueTask& task);

    const TraceLog& trace() const { return trace_; }

private:
    std::string ask(AgentRole role, const std::string& system, const std::string& context,
                    std::vector<ProviderTurn>& history);
    bool gate_and_write(AgentRole role, const patch::BatchResult& batch, std::string& feedback);
    std::chrono::steady_clock::time_point deadline(const IssueTask& task) const;

    PipelineDeps deps_;
    const PermissionMatrix& matrix_;
    TraceLog trace_;
    std::chrono::steady_clock::time_point started_;
};

// Candidate splitting and structural fingerprints, exposed for tests.
std::vector<std::string> split_candidates(const std::string& provider_text);
std::string structural_fingerprint(const std::string& path, const std::string& content);

} // namespace fixcrew::orch
