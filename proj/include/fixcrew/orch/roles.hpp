// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 fixcrew contributors

#pragma once

#include <array>
#include <optional>
#include <string_view>

namespace fixcrew::orch {

enum class AgentRole { Searcher, Planner, Reproducer, Programmer, Tester, Editor };

enum class Tool {
    CKG,
    LSP,
    GeneralFileIndexing,
    GeneralBashCommand,
    CodeEditing,
    ResetRepository,
    ReproductionScriptExecution,
};

inline constexpr std::array<AgentRole, 6> kAllRoles = {
    AgentRole::Searcher,   AgentRole::Planner, AgentRole::Reproducer,
    AgentRole::Programmer, AgentRole::Tester,  AgentRole::Editor,
};

inline constexpr std::array<Tool, 7> kAllTools = {
    Tool::CKG,
    Tool::LSP,
    Tool::GeneralFileIndexing,
    Tool::GeneralBashCommand,
    Tool::CodeEditing,
    Tool::ResetRepository,
    Tool::ReproductionScriptExecution,
};

std::string_view role_name(AgentRole role);
std::string_view tool_name(Tool tool);
std::optional<AgentRole> role_from(std::string_view name);
std::optional<Tool> tool_from(std::string_view name);

// Which tools each role may touch. The retrieval tools (CKG, LSP, file
// indexing, bash) go to everyone except the Editor; editing is Programmer
// and Editor only; repository reset is the Programmer's alone; reproduction
// scripts run only under the Reproducer and Tester.
class PermissionMatrix {
public:
    static const PermissionMatrix& standard();

    bool allows(AgentRole role, Tool tool) const {
        return grants_[static_cast<std::size_t>(role)][static_cast<std::size_t>(tool)];
    }

    // Throws Error{PermissionDenied} naming the role and tool.
    void enforce(AgentRole role, Tool tool) const;

private:
    std::array<std::array<bool, 7>, 6> grants_{};
};

} // namespace fixcrew::orch
