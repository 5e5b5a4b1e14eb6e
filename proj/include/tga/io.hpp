#pragma once

#include <string>

#include "tga/general_graph.hpp"
#include "tga/node_set.hpp"
#include "tga/subcode.hpp"
#include "tga/tanner_graph.hpp"

namespace tga {

/// MacKay alist format: "n m", "max_col max_row", per-variable degrees,
/// per-check degrees, then 1-based neighbor lists (zero-padded rows are
/// accepted and written). Structural inconsistencies raise ParseError with
/// the offending line number.
TannerGraph load_alist(const std::string& path);
void save_alist(const TannerGraph& g, const std::string& path);

/// Plain text edge list, one "u v" pair per line, 0-based node indices.
/// Node count is 1 + the largest index mentioned unless the optional first
/// line "nodes N" raises it.
GeneralGraph load_edge_list(const std::string& path);
void save_edge_list(const GeneralGraph& g, const std::string& path);

/// Sub-code spec: first line "rho k", then k generator rows as 0/1 strings
/// of length rho (leftmost character = coordinate 0).
SubCode load_subcode(const std::string& path);
void save_subcode(const SubCode& s, const std::string& path);

/// Trapping-set sidecar: one variable index per line.
NodeSet load_node_set(const std::string& path);
void save_node_set(const NodeSet& s, const std::string& path);

}  // namespace tga
