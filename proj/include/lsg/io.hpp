#pragma once

#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "lsg/error.hpp"
#include "lsg/families.hpp"
#include "lsg/graph.hpp"
#include "lsg/report.hpp"
#include "lsg/resolving.hpp"

namespace lsg {

/// A graph with optional per-vertex display labels, as exchanged on disk.
struct GraphDocument {
  Graph graph;
  std::vector<std::string> labels;

  std::optional<Vertex> find_label(const std::string& label) const {
    for (Vertex v = 0; v < labels.size(); ++v) {
      if (labels[v] == label) return v;
    }
    return std::nullopt;
  }
};

inline GraphDocument to_document(const LabeledGraph& g) {
  return {g.graph(), g.label_strings()};
}

/// {"vertex_count": N, "labels": [...], "edges": [[u,v], ...]} with u < v in
/// lexicographic order.
inline nlohmann::json to_json(const GraphDocument& doc) {
  nlohmann::json edges = nlohmann::json::array();
  for (auto [u, v] : doc.graph.edges()) edges.push_back({u, v});
  return {{"vertex_count", doc.graph.vertex_count()}, {"labels", doc.labels}, {"edges", edges}};
}

inline GraphDocument graph_from_json(const nlohmann::json& j) {
  try {
    GraphDocument doc;
    const auto n = j.at("vertex_count").get<std::size_t>();
    EdgeList edges;
    for (const auto& e : j.at("edges")) {
      if (!e.is_array() || e.size() != 2) throw Error(ErrorKind::BadInput, "edge must be [u, v]");
      edges.emplace_back(e[0].get<Vertex>(), e[1].get<Vertex>());
    }
    doc.graph = build_graph(n, edges);
    if (j.contains("labels")) doc.labels = j.at("labels").get<std::vector<std::string>>();
    if (!doc.labels.empty() && doc.labels.size() != n) {
      throw Error(ErrorKind::BadInput, "labels array length differs from vertex_count");
    }
    return doc;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::BadInput, std::string("malformed graph JSON: ") + e.what());
  }
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::BadInput, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline nlohmann::json parse_json(const std::string& text, const std::string& what) {
  try {
    return nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::BadInput, what + ": " + e.what());
  }
}

/// A JSON array of vertex ids, or of label strings resolved through doc.labels.
inline VertexSet set_from_json(const nlohmann::json& j, const GraphDocument& doc) {
  if (!j.is_array()) throw Error(ErrorKind::BadInput, "vertex set must be a JSON array");
  std::vector<Vertex> members;
  for (const auto& item : j) {
    if (item.is_number_integer()) {
      auto id = item.get<long long>();
      if (id < 0) throw Error(ErrorKind::OutOfRange, "negative vertex id");
      members.push_back(static_cast<Vertex>(id));
    } else if (item.is_string()) {
      auto v = doc.find_label(item.get<std::string>());
      if (!v) throw Error(ErrorKind::BadInput, "unknown label " + item.get<std::string>());
      members.push_back(*v);
    } else {
      throw Error(ErrorKind::BadInput, "vertex set entries must be ids or label strings");
    }
  }
  return VertexSet(std::move(members), doc.graph.vertex_count());
}

inline std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  return out;
}

/// Undirected DOT, nodes in id order.
inline std::string to_dot(const GraphDocument& doc) {
  std::ostringstream os;
  os << "graph {\n";
  for (Vertex v = 0; v < doc.graph.vertex_count(); ++v) {
    os << "  " << v;
    if (v < doc.labels.size()) os << " [label=\"" << dot_escape(doc.labels[v]) << "\"]";
    os << ";\n";
  }
  for (auto [u, v] : doc.graph.edges()) os << "  " << u << " -- " << v << ";\n";
  os << "}\n";
  return os.str();
}

inline nlohmann::json to_json(const ComputedValue& c) {
  nlohmann::json j;
  j["requested"] = c.requested;
  j["value"] = c.value ? nlohmann::json(*c.value) : nlohmann::json(nullptr);
  if (c.certificate) {
    j["certificate"] = std::vector<Vertex>(c.certificate->begin(), c.certificate->end());
  }
  nlohmann::json refs = nlohmann::json::array();
  for (auto [card, count] : c.refutations) refs.push_back({{"cardinality", card}, {"examined", count}});
  j["refutations"] = refs;
  j["evaluations"] = c.evaluations;
  if (c.bounds) j["bounds"] = {c.bounds->first, c.bounds->second};
  if (!c.note.empty()) j["note"] = c.note;
  return j;
}

inline nlohmann::json to_json(const ParameterReport& r, bool timings = false) {
  nlohmann::json j;
  j["n"] = r.params.n;
  j["m"] = r.params.m;
  j["k"] = r.params.k;
  j["variant"] = to_string(r.variant);
  j["order"] = r.order;
  j["formula"] = {{"beta", r.formula.beta}, {"psi", r.formula.psi}, {"sdim", r.formula.sdim}};
  j["twin_lower_bound"] = r.twin_bound;
  if (r.beta.requested) j["beta"] = to_json(r.beta);
  if (r.psi.requested) j["psi"] = to_json(r.psi);
  if (r.sdim.requested) j["sdim"] = to_json(r.sdim);
  j["sdim_vertex_cover"] =
      r.sdim_vertex_cover ? nlohmann::json(*r.sdim_vertex_cover) : nlohmann::json(nullptr);
  nlohmann::json ws = nlohmann::json::array();
  for (const auto& w : r.witnesses) {
    nlohmann::json wj = {{"name", w.name},      {"kind", to_string(w.kind)},
                         {"expected", w.should_pass}, {"passed", w.passed},
                         {"size", w.size},      {"expected_size", w.expected_size}};
    if (w.violation) wj["violation"] = {w.violation->first, w.violation->second};
    ws.push_back(wj);
  }
  j["witnesses"] = ws;
  j["witnesses_ok"] = r.witnesses_ok();
  j["mismatches"] = r.mismatches();
  if (timings) {
    j["ms"] = {{"total", r.ms}, {"beta", r.beta.ms}, {"psi", r.psi.ms}, {"sdim", r.sdim.ms}};
  }
  return j;
}

}  // namespace lsg
