#include "sweepline/serialize.hpp"

#include <cmath>
#include <cstdio>

#include <json.hpp>

namespace sweepline {

using nlohmann::json;

std::string graph_to_json(const SpannerGraph& graph) {
  json doc;
  doc["n"] = graph.vertex_count();
  doc["origin"] = graph.origin() == GraphOrigin::SweepLine ? "sweep_line" : "visibility";
  doc["setting"] = std::string(to_string(graph.setting()));
  doc["k"] = graph.cone_count();
  doc["edges"] = json::array();
  for (const auto& [u, v] : graph.edges()) {
    double w = 0.0;
    for (const Neighbor& nb : graph.neighbors(u)) {
      if (nb.vertex == v) w = nb.weight;
    }
    doc["edges"].push_back({u, v, w});
  }
  doc["selections"] = json::array();
  for (const Selection& s : graph.selections()) {
    doc["selections"].push_back({s.apex, s.cone, s.subcone, s.target});
  }
  return doc.dump() + "\n";
}

std::string graph_to_csv(const SpannerGraph& graph) {
  std::string out = "u,v,weight\n";
  char line[96];
  for (VertexId u = 0; u < graph.vertex_count(); ++u) {
    for (const Neighbor& nb : graph.neighbors(u)) {
      if (nb.vertex < u) continue;
      std::snprintf(line, sizeof line, "%zu,%zu,%.17g\n", u, nb.vertex, nb.weight);
      out += line;
    }
  }
  return out;
}

std::string report_to_json(const StretchReport& r) {
  json doc{{"baseline", std::string(to_string(r.baseline))},
           {"max_stretch", r.max_stretch},
           {"witness", {r.witness.first, r.witness.second}},
           {"max_direct_stretch", r.max_direct_stretch},
           {"direct_witness", {r.direct_witness.first, r.direct_witness.second}},
           {"theoretical_bound", r.theoretical_bound},
           {"per_pair_count", r.per_pair_count},
           {"direct_pair_count", r.direct_pair_count},
           {"pass", r.pass}};
  // JSON has no infinity; a disconnected pair is reported as null.
  if (!std::isfinite(r.max_stretch)) doc["max_stretch"] = nullptr;
  if (!std::isfinite(r.max_direct_stretch)) doc["max_direct_stretch"] = nullptr;
  return doc.dump(2) + "\n";
}

std::string route_to_json(const RoutePath& route) {
  json doc{{"vertices", route.vertices},
           {"total_length", route.total_length},
           {"hop_count", route.hop_count}};
  return doc.dump() + "\n";
}

}  // namespace sweepline
