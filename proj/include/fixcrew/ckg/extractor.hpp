// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 fixcrew contributors

#pragma once

#include "fixcrew/ckg/graph.hpp"
#include "fixcrew/ckg/lexer.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace fixcrew::ckg {

// Declarations found in one file, before cross-file resolution. Parents are
// indices into the same vector; -1 parents to the file itself.
struct LocalEntity {
    EntityKind kind = EntityKind::Function;
    std::string name;
    long start_line = 1;
    long end_line = 1;
    std::string signature;
    std::string doc;
    int parent = -1;
};

struct NameSite {
    int src = -1; // local entity index the site occurs in
    std::string name;
    long line = 0;
};

struct ImportSite {
    std::string module; // language-flavoured module/package path
    long line = 0;
};

struct FileParse {
    std::vector<LocalEntity> entities;
    std::vector<NameSite> calls;
    std::vector<NameSite> references;
    std::vector<NameSite> inherits; // class -> base name
    std::vector<ImportSite> imports;
};

class Extractor {
public:
    virtual ~Extractor() = default;
    virtual std::string_view language() const = 0;
    virtual bool handles(std::string_view rel_path) const = 0;
    virtual const LexerRules& rules() const = 0;
    virtual FileParse parse(std::string_view content) const = 0;

    // Token fingerprint with comments and layout elided, for structural
    // equivalence checks. Indentation-structured languages keep a marker per
    // logical line since layout is semantic there.
    virtual std::vector<std::string> normalized_tokens(std::string_view content) const;

    // Maps a module path from an import statement to candidate repo-relative
    // paths; used to resolve Imports edges against indexed files.
    virtual bool import_matches(std::string_view module, std::string_view importer_path,
                                std::string_view candidate_path) const = 0;
};

const std::vector<const Extractor*>& shipped_extractors();
const Extractor* extractor_for_language(std::string_view language);

} // namespace fixcrew::ckg
