#pragma once

#include <string>

#include "sweepline/analysis.hpp"
#include "sweepline/graph.hpp"
#include "sweepline/routing.hpp"

namespace sweepline {

/// {"n", "origin", "setting", "k", "edges": [[u, v, w], ...], "selections": [[apex, cone, subcone, target], ...]}
std::string graph_to_json(const SpannerGraph& graph);

/// "u,v,weight" rows with a header line.
std::string graph_to_csv(const SpannerGraph& graph);

std::string report_to_json(const StretchReport& report);

std::string route_to_json(const RoutePath& route);

}  // namespace sweepline
