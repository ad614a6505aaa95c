#pragma once

#include <string>

#include "croots/solver.hpp"

namespace croots {

/// Result JSON with exact decimal dumps of the dyadic centers and radii:
/// {"success": bool, "epsilon": str, "clusters": [{"center_re": str,
///  "center_im": str, "radius": str, "multiplicity": int}], "stats": {...}}
std::string report_to_json(const ClusterReport& report);

/// Parses JSON produced by report_to_json; round-trips exactly.
ClusterReport report_from_json(const std::string& text);

bool reports_equal(const ClusterReport& a, const ClusterReport& b);

}  // namespace croots
