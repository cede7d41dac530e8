// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 fixcrew contributors

#pragma once

#include "fixcrew/nav/snapshot.hpp"
#include "fixcrew/nav/types.hpp"

#include <vector>

namespace fixcrew::nav {

struct ResolveOptions {
    long nearby_radius = 3;
};

// Records which tiers ran, so tests can observe the cascade short-circuit.
struct ResolveTrace {
    std::vector<ResolveTier> attempted;
};

// Tier cascade: the stated line, then lines within the radius, then the
// opened files in browse order. The first tier with a unique hit wins.
// Pure in (hint, snapshot, options).
//
// Throws Error{NoIdentifierFound} when every tier comes up empty and
// Error{AmbiguousIdentifier} when a tier sees several equally-near
// identifiers and the hint named none.
ResolvedPosition resolve_position(const PositionHint& hint, const FileSnapshot& snapshot,
                                  const ResolveOptions& options = {},
                                  ResolveTrace* trace = nullptr);

} // namespace fixcrew::nav
