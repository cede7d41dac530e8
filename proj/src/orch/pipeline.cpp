// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 fixcrew contributors

#include "fixcrew/orch/pipeline.hpp"

#include "fixcrew/ckg/extractor.hpp"
#include "fixcrew/error.hpp"
#include "fixcrew/hash.hpp"
#include "fixcrew/patch/edit_block.hpp"
#include "fixcrew/text.hpp"

#include <algorithm>
#include <map>

namespace fixcrew::orch {

namespace {

const char* kPlannerSystem =
    "You route bug reports. Reply with exactly one word: dynamic when the issue can be "
    "demonstrated by running code (a failing script, test or traceback), static otherwise.";

const char* kReproducerSystem =
    "Write a standalone script that demonstrates the reported issue. The script must exit "
    "nonzero while the bug is present and exit zero once it is fixed. Reply with only the "
    "script, in a fenced code block.";

const char* kProgrammerSystem =
    "Fix the issue by editing files. Describe each edit as a conflict-marker block:\n"
    "path/to/file\n"
    "<<<<<<< SEARCH\n"
    "exact current lines\n"
    "=======\n"
    "replacement lines\n"
    ">>>>>>> REPLACE\n"
    "Do not use line numbers. Reply RESET_REPOSITORY alone to discard all edits so far.";

const char* kEditorSystem =
    "Propose several independent candidate fixes for the issue. Start each with a line "
    "'### Candidate N' and describe its edits as conflict-marker blocks (path line, "
    "<<<<<<< SEARCH, current lines, =======, replacement lines, >>>>>>> REPLACE).";

// First fenced block if any, else the whole text.
std::string extract_script(const std::string& response) {
    auto split = text::split_lines(response);
    const auto& lines = split.lines;
    std::optional<std::size_t> fence_start;
    for (std::size_t i = 0; i < lines.size(); ++i) {
        if (!text::starts_with(text::trim(lines[i]), "```"))
            continue;
        if (!fence_start) {
            fence_start = i;
        } else {
            std::string out;
            for (std::size_t j = *fence_start + 1; j < i; ++j)
                out += lines[j] + "\n";
            return out;
        }
    }
    return response;
}

bool contains_word(const std::string& haystack, const std::string& word) {
    std::string folded = text::to_lower(haystack);
    std::size_t pos = 0;
    while ((pos = folded.find(word, pos)) != std::string::npos) {
        bool left_ok = pos == 0 || !text::is_identifier_char(folded[pos - 1]);
        std::size_t end = pos + word.size();
        bool right_ok = end >= folded.size() || !text::is_identifier_char(folded[end]);
        if (left_ok && right_ok)
            return true;
        pos = end;
    }
    return false;
}

std::string tail_of(const std::string& s, std::size_t max_bytes = 4000) {
    if (s.size() <= max_bytes)
        return s;
    return "..." + s.substr(s.size() - max_bytes);
}

std::string describe_execution(const sandbox::ExecutionResult& result) {
    std::string out = "exit code " + std::to_string(result.exit_code);
    if (result.timed_out)
        out += " (timed out)";
    if (!result.stdout_text.empty())
        out += "\nstdout:\n" + tail_of(result.stdout_text);
    if (!result.stderr_text.empty())
        out += "\nstderr:\n" + tail_of(result.stderr_text);
    return out;
}

} // namespace

std::vector<std::string> split_candidates(const std::string& provider_text) {
    auto split = text::split_lines(provider_text);
    const auto& lines = split.lines;
    std::vector<std::string> sections;
    std::optional<std::size_t> start;
    auto flush = [&](std::size_t end) {
        if (!start)
            return;
        std::string out;
        for (std::size_t i = *start; i < end; ++i)
            out += lines[i] + "\n";
        sections.push_back(std::move(out));
    };
    for (std::size_t i = 0; i < lines.size(); ++i) {
        std::string_view t = text::trim(lines[i]);
        std::size_t hashes = 0;
        while (hashes < t.size() && t[hashes] == '#')
            ++hashes;
        if (hashes > 0 && contains_word(std::string(t.substr(hashes)), "candidate")) {
            flush(i);
            start = i + 1;
        }
    }
    flush(lines.size());
    return sections;
}

std::string structural_fingerprint(const std::string& path, const std::string& content) {
    for (const ckg::Extractor* e : ckg::shipped_extractors()) {
        if (e->handles(path)) {
            std::uint64_t h = kFnvOffset;
            for (const auto& token : e->normalized_tokens(content)) {
                h = fnv1a64(token, h);
                h = fnv1a64(std::string_view("\x1f", 1), h);
            }
            return to_hex(h);
        }
    }
    // no grammar for this file type: collapse whitespace per line
    std::uint64_t h = kFnvOffset;
    for (const auto& line : text::split_lines(content).lines) {
        std::string norm = text::normalize_whitespace(line);
        if (norm.empty())
            continue;
        h = fnv1a64(norm, h);
        h = fnv1a64(std::string_view("\n", 1), h);
    }
    return to_hex(h);
}

Pipeline::Pipeline(PipelineDeps deps)
    : deps_(std::move(deps)), matrix_(PermissionMatrix::standard()),
      started_(std::chrono::steady_clock::now()) {}

std::chrono::steady_clock::time_point Pipeline::deadline(const IssueTask& task) const {
    return started_ + std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                          std::chrono::duration<double>(task.budget.wall_clock_seconds));
}

std::string Pipeline::ask(AgentRole role, const std::string& system, const std::string& context,
                          std::vector<ProviderTurn>& history) {
    CompletionRequest request;
    request.role = role;
    request.system = system;
    request.context = context;
    request.history = history;
    std::string response = deps_.provider->complete(request);
    trace_.role_event(role, "completion", response, "provider round trip");
    history.push_back({"assistant", response});
    return response;
}

ContextBundle Pipeline::search_context(const IssueTask& task) {
    nav::FileSnapshot snapshot = nav::FileSnapshot::from_directory(deps_.workspace->root());
    return orch::search_context(task.title, task.body, *deps_.graph, snapshot, matrix_, trace_,
                                task.budget.context);
}

Route Pipeline::plan_route(const IssueTask& task, const ContextBundle& context) {
    std::string prompt = "Issue: " + task.title + "\n\n" + task.body + "\n\n" + context.render();
    std::vector<ProviderTurn> history;
    for (int attempt = 0; attempt < 2; ++attempt) {
        std::string answer = ask(AgentRole::Planner, kPlannerSystem, prompt, history);
        bool dynamic = contains_word(answer, "dynamic");
        bool statik = contains_word(answer, "static");
        if (dynamic != statik) {
            Route route{dynamic ? RouteKind::Dynamic : RouteKind::Static, answer};
            trace_.role_event(AgentRole::Planner, "route",
                              answer, dynamic ? "dynamic" : "static");
            return route;
        }
        history.push_back({"user", "Answer with exactly one word: dynamic or static."});
    }
    trace_.event("route_fallback", "unparseable classification, defaulting to static");
    return Route{RouteKind::Static, "fallback: classification unparseable"};
}

bool Pipeline::gate_and_write(AgentRole role, const patch::BatchResult& batch,
                              std::string& feedback) {
    gate::DiagnosticsGate gate(*deps_.diagnostics);
    for (const auto& edit : batch.files) {
        gate::GateVerdict verdict = gate.evaluate_contents(edit.path, edit.original, edit.updated);
        if (!verdict.accepted) {
            std::string why = verdict.reason;
            for (const auto& d : verdict.new_diagnostics) {
                if (d.severity < nav::Severity::Error)
                    continue;
                why += (why.empty() ? "" : "; ") + d.path + ":" + std::to_string(d.line) + " " +
                       std::string(nav::severity_name(d.severity)) + " " + d.message;
            }
            trace_.tool_use(role, Tool::CodeEditing, "gate_rejected", edit.diff.to_string(), why,
                            false);
            feedback = "The edit to " + edit.path +
                       " introduces new problems and was rejected:\n" + why;
            return false;
        }
    }
    // all gates passed: the patch may touch the tree
    for (const auto& edit : batch.files) {
        deps_.workspace->write_file(edit.path, edit.updated);
        trace_.tool_use(role, Tool::CodeEditing, "write", edit.updated,
                        edit.path + " (" + std::to_string(edit.diff.hunks.size()) + " hunks)");
    }
    return true;
}

Solution Pipeline::run_dynamic(const IssueTask& task, const ContextBundle& context) {
    std::string issue_prompt =
        "Issue: " + task.title + "\n\n" + task.body + "\n\n" + context.render();

    // Reproducer writes the script.
    std::vector<ProviderTurn> repro_history;
    std::string script =
        extract_script(ask(AgentRole::Reproducer, kReproducerSystem, issue_prompt, repro_history));

    // Tester confirms the reproduction: it must fail on the buggy tree.
    matrix_.enforce(AgentRole::Tester, Tool::ReproductionScriptExecution);
    auto confirmation =
        sandbox::run_reproduction(*deps_.runner, *deps_.workspace, script, deps_.interpreter,
                                  deps_.exec_limits);
    trace_.tool_use(AgentRole::Tester, Tool::ReproductionScriptExecution, "confirm_reproduction",
                    script, describe_execution(confirmation), confirmation.exit_code != 0);
    if (confirmation.exit_code == 0)
        throw Error(ErrorCode::ReproductionNotConfirmed,
                    "reproduction script passes on the unmodified tree");

    std::string tester_feedback = describe_execution(confirmation);
    std::vector<ProviderTurn> programmer_history;
    int resets_used = 0;

    for (int iteration = 1; iteration <= task.budget.max_iterations; ++iteration) {
        if (std::chrono::steady_clock::now() > deadline(task)) {
            trace_.event("budget_exhausted", "wall clock ceiling reached", false);
            break;
        }
        std::string prompt = issue_prompt + "\n\nLatest test run:\n" + tester_feedback;
        std::string response =
            ask(AgentRole::Programmer, kProgrammerSystem, prompt, programmer_history);

        if (text::trim(response) == "RESET_REPOSITORY") {
            if (resets_used >= task.budget.max_resets) {
                tester_feedback = "Reset budget exhausted; continue from the current state.";
                programmer_history.push_back({"user", tester_feedback});
                continue;
            }
            matrix_.enforce(AgentRole::Programmer, Tool::ResetRepository);
            deps_.workspace->reset();
            ++resets_used;
            trace_.tool_use(AgentRole::Programmer, Tool::ResetRepository, "reset", "",
                            "workspace restored to pristine");
            tester_feedback = "Repository was reset to its original state.";
            programmer_history.push_back({"user", tester_feedback});
            continue;
        }

        auto parsed = patch::parse_edit_blocks(response);
        if (parsed.blocks.empty()) {
            std::string why = "no edit blocks parsed";
            for (const auto& issue : parsed.issues)
                why += "; line " + std::to_string(issue.line) + ": " + issue.reason;
            trace_.role_event(AgentRole::Programmer, "no_edit_blocks", response, why, false);
            tester_feedback = why;
            programmer_history.push_back({"user", why});
            continue;
        }

        matrix_.enforce(AgentRole::Programmer, Tool::CodeEditing);
        patch::BatchResult batch;
        try {
            batch = patch::apply_blocks(
                [this](const std::string& p) -> std::optional<std::string> {
                    if (!deps_.workspace->file_exists(p))
                        return std::nullopt;
                    return deps_.workspace->read_file(p);
                },
                parsed.blocks, deps_.apply);
        } catch (const Error& e) {
            trace_.tool_use(AgentRole::Programmer, Tool::CodeEditing, "apply_failed", response,
                            e.what(), false);
            tester_feedback = std::string("Your edit could not be applied: ") + e.what();
            programmer_history.push_back({"user", tester_feedback});
            continue;
        }

        std::string gate_feedback;
        if (!gate_and_write(AgentRole::Programmer, batch, gate_feedback)) {
            tester_feedback = gate_feedback;
            programmer_history.push_back({"user", gate_feedback});
            continue;
        }

        matrix_.enforce(AgentRole::Tester, Tool::ReproductionScriptExecution);
        auto run = sandbox::run_reproduction(*deps_.runner, *deps_.workspace, script,
                                             deps_.interpreter, deps_.exec_limits);
        trace_.tool_use(AgentRole::Tester, Tool::ReproductionScriptExecution, "verify", script,
                        describe_execution(run), run.exit_code == 0);

        if (run.exit_code == 0) {
            Solution solution;
            solution.diff = deps_.workspace->solution_diff(deps_.apply.diff_context);
            solution.route = {RouteKind::Dynamic, "reproduction confirmed and now passing"};
            solution.resolved = true;
            trace_.event("resolved", "reproduction passes after patch");
            solution.trace = trace_;
            return solution;
        }
        tester_feedback = describe_execution(run);
        programmer_history.push_back({"user", "Still failing:\n" + tester_feedback});
    }

    trace_.event("budget_exhausted", "iteration budget spent without a passing reproduction",
                 false);
    Solution solution;
    solution.diff = deps_.workspace->solution_diff(deps_.apply.diff_context);
    solution.route = {RouteKind::Dynamic, "budget exhausted"};
    solution.resolved = false;
    solution.trace = trace_;
    return solution;
}

Solution Pipeline::run_static(const IssueTask& task, const ContextBundle& context) {
    std::string prompt = "Issue: " + task.title + "\n\n" + task.body + "\n\n" + context.render() +
                         "\nPropose " + std::to_string(task.budget.n_candidates) +
                         " candidate fixes.";
    std::vector<ProviderTurn> history;
    std::string response = ask(AgentRole::Editor, kEditorSystem, prompt, history);

    auto sections = split_candidates(response);
    if (sections.empty())
        sections.push_back(response); // a single unlabeled candidate

    struct Survivor {
        std::size_t index;
        patch::BatchResult batch;
        std::string fingerprint;
    };
    std::vector<Survivor> survivors;
    gate::DiagnosticsGate gate(*deps_.diagnostics);

    matrix_.enforce(AgentRole::Editor, Tool::CodeEditing);
    for (std::size_t ci = 0; ci < sections.size(); ++ci) {
        auto parsed = patch::parse_edit_blocks(sections[ci]);
        if (parsed.blocks.empty()) {
            trace_.tool_use(AgentRole::Editor, Tool::CodeEditing,
                            "candidate_" + std::to_string(ci + 1), sections[ci],
                            "no edit blocks", false);
            continue;
        }
        patch::BatchResult batch;
        try {
            batch = patch::apply_blocks(
                [this](const std::string& p) -> std::optional<std::string> {
                    if (!deps_.workspace->file_exists(p))
                        return std::nullopt;
                    return deps_.workspace->read_file(p);
                },
                parsed.blocks, deps_.apply);
        } catch (const Error& e) {
            trace_.tool_use(AgentRole::Editor, Tool::CodeEditing,
                            "candidate_" + std::to_string(ci + 1), sections[ci], e.what(), false);
            continue;
        }
        bool accepted = true;
        std::string why;
        for (const auto& edit : batch.files) {
            auto verdict = gate.evaluate_contents(edit.path, edit.original, edit.updated);
            if (!verdict.accepted) {
                accepted = false;
                why = verdict.reason;
                for (const auto& d : verdict.new_diagnostics)
                    if (d.severity >= nav::Severity::Error)
                        why += (why.empty() ? "" : "; ") + d.message;
                break;
            }
        }
        if (!accepted) {
            trace_.tool_use(AgentRole::Editor, Tool::CodeEditing,
                            "candidate_" + std::to_string(ci + 1), sections[ci],
                            "gate rejected: " + why, false);
            continue;
        }

        // structural fingerprint across every touched file
        std::uint64_t pooled = kFnvOffset;
        std::vector<const patch::FileEdit*> ordered;
        for (const auto& edit : batch.files)
            ordered.push_back(&edit);
        std::sort(ordered.begin(), ordered.end(),
                  [](const auto* a, const auto* b) { return a->path < b->path; });
        for (const auto* edit : ordered) {
            pooled = fnv1a64(edit->path, pooled);
            pooled = fnv1a64(structural_fingerprint(edit->path, edit->updated), pooled);
        }
        trace_.tool_use(AgentRole::Editor, Tool::CodeEditing,
                        "candidate_" + std::to_string(ci + 1), sections[ci],
                        "gate accepted, fingerprint " + to_hex(pooled));
        survivors.push_back({ci, std::move(batch), to_hex(pooled)});
    }

    if (survivors.empty())
        throw Error(ErrorCode::AllCandidatesRejected,
                    "no candidate produced an applicable, gate-clean patch");

    // vote: pool structurally identical candidates; the largest pool wins
    // and its earliest member represents it
    std::map<std::string, std::pair<int, std::size_t>> pools; // fp -> votes, earliest index
    for (const auto& s : survivors) {
        auto [it, inserted] = pools.try_emplace(s.fingerprint, 0, s.index);
        ++it->second.first;
        it->second.second = std::min(it->second.second, s.index);
    }
    int best_votes = -1;
    std::size_t best_index = 0;
    for (const auto& [fp, info] : pools) {
        if (info.first > best_votes || (info.first == best_votes && info.second < best_index)) {
            best_votes = info.first;
            best_index = info.second;
        }
    }
    const Survivor* winner = nullptr;
    for (const auto& s : survivors)
        if (s.index == best_index)
            winner = &s;

    trace_.event("vote", "candidate " + std::to_string(winner->index + 1) + " wins with " +
                             std::to_string(best_votes) + " structural votes");

    for (const auto& edit : winner->batch.files) {
        deps_.workspace->write_file(edit.path, edit.updated);
        trace_.tool_use(AgentRole::Editor, Tool::CodeEditing, "write", edit.updated, edit.path);
    }

    Solution solution;
    solution.diff = deps_.workspace->solution_diff(deps_.apply.diff_context);
    solution.route = {RouteKind::Static,
                      "vote: " + std::to_string(best_votes) + " of " +
                          std::to_string(survivors.size()) + " surviving candidates agree"};
    solution.resolved = true;
    solution.trace = trace_;
    return solution;
}

Solution Pipeline::solve(const IssueTask& task) {
    trace_.event("task", task.title);

    ContextBundle context;
    try {
        context = search_context(task);
    } catch (const Error& e) {
        if (e.code() != ErrorCode::EmptyContext)
            throw;
        trace_.event("empty_context", e.what(), false);
    }

    Route route = plan_route(task, context);

    auto finish_unresolved = [this](RouteKind kind, const std::string& why) {
        Solution solution;
        solution.route = {kind, why};
        solution.resolved = false;
        solution.diff = deps_.workspace->solution_diff(deps_.apply.diff_context);
        solution.trace = trace_;
        return solution;
    };

    if (route.kind == RouteKind::Dynamic) {
        try {
            return run_dynamic(task, context);
        } catch (const Error& e) {
            if (e.code() != ErrorCode::ReproductionNotConfirmed)
                throw;
            trace_.event("reroute", std::string("to static: ") + e.what(), false);
        }
    }
    try {
        return run_static(task, context);
    } catch (const Error& e) {
        if (e.code() != ErrorCode::AllCandidatesRejected)
            throw;
        trace_.event("all_candidates_rejected", e.what(), false);
        return finish_unresolved(RouteKind::Static, e.what());
    }
}

} // namespace fixcrew::orch
