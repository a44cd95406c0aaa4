#pragma once

#include <string>

#include "flagrec/complex.hpp"
#include "flagrec/generate.hpp"
#include "flagrec/graph.hpp"
#include "flagrec/reconstruct.hpp"
#include "flagrec/verify.hpp"

namespace flagrec {

// Wire formats. Graph: {"vertices":["a",...],"edges":[["a","b"],...]}.
// Boundary instance: {"boundary":["u1",...],"dist":[[0,1,...],...]} with
// row/column order matching "boundary". Reports and stats are flat objects.
// Parsing throws Error with ParseError/BadLabel/InconsistentMatrix codes.

// External labels must match [A-Za-z0-9][A-Za-z0-9_-]*; the leading-underscore
// namespace is reserved for fresh interior vertices.
bool valid_external_label(std::string_view label);

std::string graph_to_json(const Graph& g);
Graph graph_from_json(const std::string& text, bool require_external_labels = true);

std::string instance_to_json(const BoundaryInstance& instance);
BoundaryInstance instance_from_json(const std::string& text, bool require_external_labels = true);

std::string report_to_json(const ClassReport& report);
std::string stats_to_json(const ReconstructionStats& stats);

std::string genspec_to_json(const GenSpec& spec);
GenSpec genspec_from_json(const std::string& text);

}  // namespace flagrec
