// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 fixcrew contributors

#include "fixcrew/ckg/extractor.hpp"

namespace fixcrew::ckg {

const Extractor* go_extractor();
const Extractor* python_extractor();

std::vector<std::string> Extractor::normalized_tokens(std::string_view content) const {
    auto code = lex_code(content, rules());
    std::vector<std::string> out;
    out.reserve(code.size());
    for (const auto& t : code)
        out.push_back(std::to_string(static_cast<int>(t.kind)) + ":" + t.text);
    return out;
}

const std::vector<const Extractor*>& shipped_extractors() {
    static const std::vector<const Extractor*> all = {go_extractor(), python_extractor()};
    return all;
}

const Extractor* extractor_for_language(std::string_view language) {
    for (const Extractor* e : shipped_extractors())
        if (e->language() == language)
            return e;
    return nullptr;
}

} // namespace fixcrew::ckg
