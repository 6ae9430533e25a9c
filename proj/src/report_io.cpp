#include "rigidity/report_io.hpp"

#include <cstdio>
#include <stdexcept>

namespace rigidity {

using nlohmann::ordered_json;

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string quoted = "\"";
  for (char c : s) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  return quoted + "\"";
}

std::string runtime_text(double ms) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", ms);
  return buf;
}

ordered_json edges_json(std::span<const Edge> edges) {
  ordered_json out = ordered_json::array();
  for (const Edge& e : edges) out.push_back({e.u, e.v});
  return out;
}

std::vector<Edge> edges_from_json(const ordered_json& j) {
  std::vector<Edge> edges;
  for (const auto& pair : j) {
    if (!pair.is_array() || pair.size() != 2) throw std::invalid_argument("edge must be [u, v]");
    edges.emplace_back(pair[0].get<Vertex>(), pair[1].get<Vertex>());
  }
  return edges;
}

ordered_json relation_json(const StressRelation& r) {
  ordered_json out;
  out["kind"] = r.kind == StressRelation::Kind::equal ? "equal"
                : r.kind == StressRelation::Kind::le  ? "le"
                                                      : "le_plus";
  out["offset"] = r.offset;
  return out;
}

ordered_json graph_json(const Graph& g) {
  ordered_json out;
  out["vertex_count"] = g.vertex_count();
  out["edges"] = edges_json(g.edges());
  return out;
}

}  // namespace

ordered_json report_to_json(const BoundReport& r) {
  ordered_json j;
  j["graph_id"] = r.graph_id;
  j["vertex_count"] = r.vertex_count;
  j["edge_count"] = r.edge_count;
  j["rank"] = r.rank;
  j["stress"] = r.stress;
  j["z_value"] = to_string(r.z_value);
  j["theorem_bound"] = to_string(r.theorem_bound);
  j["satisfied"] = r.satisfied;
  j["oracle_agreement"] = r.oracle_agreement;
  j["runtime_ms"] = r.runtime_ms ? ordered_json(*r.runtime_ms) : ordered_json(nullptr);
  j["check"] = std::string(to_string(r.check));
  j["gap"] = to_string(r.gap());
  return j;
}

std::string report_csv_header() {
  return "graph_id,vertex_count,edge_count,rank,stress,z_value,theorem_bound,satisfied,"
         "oracle_agreement,runtime_ms";
}

std::string report_csv_row(const BoundReport& r) {
  std::string row = csv_field(r.graph_id);
  for (std::size_t x : {r.vertex_count, r.edge_count, r.rank, r.stress}) row += "," + std::to_string(x);
  row += "," + to_string(r.z_value) + "," + to_string(r.theorem_bound);
  row += r.satisfied ? ",true" : ",false";
  row += r.oracle_agreement ? ",true" : ",false";
  row += ",";
  if (r.runtime_ms) row += runtime_text(*r.runtime_ms);
  return row;
}

void write_reports(std::ostream& out, std::span<const BoundReport> reports, ReportFormat format) {
  switch (format) {
    case ReportFormat::json:
      for (const auto& r : reports) out << report_to_json(r).dump() << '\n';
      break;
    case ReportFormat::csv:
      out << report_csv_header() << '\n';
      for (const auto& r : reports) out << report_csv_row(r) << '\n';
      break;
    case ReportFormat::text:
      for (const auto& r : reports) {
        out << (r.graph_id.empty() ? "graph" : r.graph_id) << ": " << to_string(r.check)
            << " |V|=" << r.vertex_count << " |E|=" << r.edge_count << " rank=" << r.rank
            << " stress=" << r.stress << " bound=" << to_string(r.theorem_bound)
            << " gap=" << to_string(r.gap()) << (r.satisfied ? " satisfied" : " VIOLATED")
            << (r.oracle_agreement ? "" : " ORACLE-MISMATCH");
        if (r.runtime_ms) out << " time=" << runtime_text(*r.runtime_ms) << "ms";
        out << '\n';
      }
      break;
  }
}

ordered_json step_to_json(const ReductionStep& step) {
  ordered_json j;
  j["kind"] = std::string(to_string(step.kind));
  j["rule"] = step.rule;
  j["removed_vertices"] = step.removed_vertices;
  j["removed_edges"] = edges_json(step.removed_edges);
  j["added_edges"] = edges_json(step.added_edges);
  j["relation"] = relation_json(step.relation);
  j["stress_before"] = step.stress_before ? ordered_json(*step.stress_before) : ordered_json(nullptr);
  j["stress_after"] = step.stress_after ? ordered_json(*step.stress_after) : ordered_json(nullptr);
  return j;
}

ReductionStep step_from_json(const ordered_json& j) {
  try {
    ReductionStep step;
    auto kind = parse_reduction_kind(j.at("kind").get<std::string>());
    if (!kind) throw std::invalid_argument("unknown reduction kind");
    step.kind = *kind;
    step.rule = j.value("rule", std::string{});
    step.removed_vertices = j.at("removed_vertices").get<std::vector<Vertex>>();
    step.removed_edges = edges_from_json(j.at("removed_edges"));
    step.added_edges = edges_from_json(j.at("added_edges"));
    const auto& rel = j.at("relation");
    const auto rel_kind = rel.at("kind").get<std::string>();
    const int offset = rel.value("offset", 0);
    if (rel_kind == "equal") {
      step.relation = StressRelation::equal();
    } else if (rel_kind == "le") {
      step.relation = StressRelation::le();
    } else if (rel_kind == "le_plus") {
      step.relation = StressRelation::le_plus(offset);
    } else {
      throw std::invalid_argument("unknown relation " + rel_kind);
    }
    if (j.contains("stress_before") && !j["stress_before"].is_null())
      step.stress_before = j["stress_before"].get<long long>();
    if (j.contains("stress_after") && !j["stress_after"].is_null())
      step.stress_after = j["stress_after"].get<long long>();
    return step;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("reduction step: ") + e.what());
  }
}

ordered_json trace_to_json(const ReductionTrace& trace) {
  ordered_json j;
  j["initial_graph"] = graph_json(trace.initial_graph);
  ordered_json steps = ordered_json::array();
  for (const auto& step : trace.steps) steps.push_back(step_to_json(step));
  j["steps"] = std::move(steps);
  j["final_graph"] = graph_json(trace.final_graph);
  j["accumulated_relation"] = relation_json(trace.accumulated);
  return j;
}

ordered_json certificate_to_json(const StressCertificate& cert) {
  ordered_json j;
  j["max_degree"] = cert.max_degree;
  j["z_bound"] = to_string(cert.z_bound);
  j["initial_stress"] = cert.initial_stress;
  j["final_stress"] = cert.final_stress;
  j["offset"] = cert.offset;
  ordered_json zs = ordered_json::array();
  for (const auto& z : cert.z_values) zs.push_back(to_string(z));
  j["z_values"] = std::move(zs);
  j["trace"] = trace_to_json(cert.trace);
  return j;
}

}  // namespace rigidity
