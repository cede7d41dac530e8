// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 fixcrew contributors

#include "fixcrew/orch/roles.hpp"

#include "fixcrew/error.hpp"

namespace fixcrew::orch {

std::string_view role_name(AgentRole role) {
    switch (role) {
    case AgentRole::Searcher: return "Searcher";
    case AgentRole::Planner: return "Planner";
    case AgentRole::Reproducer: return "Reproducer";
    case AgentRole::Programmer: return "Programmer";
    case AgentRole::Tester: return "Tester";
    case AgentRole::Editor: return "Editor";
    }
    return "?";
}

std::string_view tool_name(Tool tool) {
    switch (tool) {
    case Tool::CKG: return "CKG";
    case Tool::LSP: return "LSP";
    case Tool::GeneralFileIndexing: return "GeneralFileIndexing";
    case Tool::GeneralBashCommand: return "GeneralBashCommand";
    case Tool::CodeEditing: return "CodeEditing";
    case Tool::ResetRepository: return "ResetRepository";
    case Tool::ReproductionScriptExecution: return "ReproductionScriptExecution";
    }
    return "?";
}

std::optional<AgentRole> role_from(std::string_view name) {
    for (AgentRole r : kAllRoles)
        if (role_name(r) == name)
            return r;
    return std::nullopt;
}

std::optional<Tool> tool_from(std::string_view name) {
    for (Tool t : kAllTools)
        if (tool_name(t) == name)
            return t;
    return std::nullopt;
}

const PermissionMatrix& PermissionMatrix::standard() {
    static const PermissionMatrix matrix = [] {
        PermissionMatrix m;
        auto grant = [&m](AgentRole role, Tool tool) {
            m.grants_[static_cast<std::size_t>(role)][static_cast<std::size_t>(tool)] = true;
        };
        for (AgentRole role : {AgentRole::Searcher, AgentRole::Planner, AgentRole::Reproducer,
                               AgentRole::Programmer, AgentRole::Tester}) {
            grant(role, Tool::CKG);
            grant(role, Tool::LSP);
            grant(role, Tool::GeneralFileIndexing);
            grant(role, Tool::GeneralBashCommand);
        }
        grant(AgentRole::Programmer, Tool::CodeEditing);
        grant(AgentRole::Editor, Tool::CodeEditing);
        grant(AgentRole::Programmer, Tool::ResetRepository);
        grant(AgentRole::Reproducer, Tool::ReproductionScriptExecution);
        grant(AgentRole::Tester, Tool::ReproductionScriptExecution);
        return m;
    }();
    return matrix;
}

void PermissionMatrix::enforce(AgentRole role, Tool tool) const {
    if (!allows(role, tool))
        throw Error(ErrorCode::PermissionDenied, std::string(role_name(role)) +
                                                     " may not use " + std::string(tool_name(tool)));
}

} // namespace fixcrew::orch
