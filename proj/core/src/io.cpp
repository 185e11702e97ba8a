#include "torelli/io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace torelli {

namespace {

using Json = nlohmann::ordered_json;

long long get_int(const Json &j, const char *key, const char *where) {
  if (!j.contains(key) || !j[key].is_number_integer())
    throw std::runtime_error(std::string("graph JSON: ") + where + " needs integer field '" +
                             key + "'");
  return j[key].get<long long>();
}

} // namespace

WeightedCycle parse_graph_json(const std::string &text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error &e) {
    throw std::runtime_error(std::string("malformed JSON: ") + e.what());
  }
  if (!j.is_object()) throw std::runtime_error("graph JSON: top level must be an object");

  WeightedCycle w;
  w.graph.surface_genus = (int)get_int(j, "surface_genus", "top level");
  if (!j.contains("vertices") || !j["vertices"].is_array())
    throw std::runtime_error("graph JSON: missing 'vertices' array");
  if (!j.contains("edges") || !j["edges"].is_array())
    throw std::runtime_error("graph JSON: missing 'edges' array");

  for (const auto &vj : j["vertices"])
    w.graph.vertices.push_back(
        {(int)get_int(vj, "id", "vertex"), (int)get_int(vj, "genus", "vertex")});

  for (const auto &ej : j["edges"]) {
    OrientedDualGraph::Edge e;
    e.id = (int)get_int(ej, "id", "edge");
    e.tail = (int)get_int(ej, "tail", "edge");
    e.head = (int)get_int(ej, "head", "edge");
    if (!ej.contains("label") || !ej["label"].is_array())
      throw std::runtime_error("graph JSON: edge " + std::to_string(e.id) +
                               " needs a 'label' array");
    for (const auto &x : ej["label"]) {
      if (!x.is_number_integer())
        throw std::runtime_error("graph JSON: edge " + std::to_string(e.id) +
                                 " label entries must be integers");
      e.label.push_back(x.get<long long>());
    }
    w.graph.edges.push_back(std::move(e));
  }

  w.weights.assign(w.graph.edges.size(), Rat(0));
  if (j.contains("weights")) {
    if (!j["weights"].is_object())
      throw std::runtime_error("graph JSON: 'weights' must be an object keyed by edge id");
    for (const auto &[key, val] : j["weights"].items()) {
      int id;
      try {
        id = std::stoi(key);
      } catch (const std::exception &) {
        throw std::runtime_error("graph JSON: weight key '" + key + "' is not an edge id");
      }
      int idx = w.graph.edge_index(id);
      if (idx < 0)
        throw std::runtime_error("graph JSON: weight for unknown edge id " + key);
      if (!val.is_string())
        throw std::runtime_error("graph JSON: weight for edge " + key +
                                 " must be a string \"p/q\"");
      w.weights[idx] = Rat::parse(val.get<std::string>());
    }
  }
  return w;
}

WeightedCycle load_graph_file(const std::string &path, bool run_validate) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("file not found: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  WeightedCycle w = parse_graph_json(buf.str());
  if (run_validate) {
    auto violations = validate(w);
    if (!violations.empty()) {
      std::string msg = "graph fails validation:";
      for (const auto &v : violations) msg += "\n  " + v.invariant + ": " + v.detail;
      throw std::runtime_error(msg);
    }
  }
  return w;
}

std::string graph_to_json(const WeightedCycle &w) {
  Json j;
  j["surface_genus"] = w.graph.surface_genus;
  j["vertices"] = Json::array();
  for (const auto &v : w.graph.vertices)
    j["vertices"].push_back(Json{{"id", v.id}, {"genus", v.region_genus}});
  j["edges"] = Json::array();
  for (const auto &e : w.graph.edges) {
    Json ej{{"id", e.id}, {"tail", e.tail}, {"head", e.head}};
    ej["label"] = e.label;
    j["edges"].push_back(std::move(ej));
  }
  Json weights = Json::object();
  for (size_t i = 0; i < w.graph.edges.size(); ++i)
    weights[std::to_string(w.graph.edges[i].id)] = w.weights[i].str();
  j["weights"] = std::move(weights);
  return j.dump(2);
}

std::string export_dot(const WeightedCycle &w) {
  std::ostringstream out;
  out << "digraph multicurve {\n";
  for (const auto &v : w.graph.vertices)
    out << "  v" << v.id << " [label=\"v" << v.id << ": g=" << v.region_genus << "\"];\n";
  for (size_t i = 0; i < w.graph.edges.size(); ++i) {
    const auto &e = w.graph.edges[i];
    out << "  v" << e.tail << " -> v" << e.head << " [label=\"e" << e.id
        << ": w=" << w.weights[i].str() << ", [";
    for (size_t k = 0; k < e.label.size(); ++k) {
      if (k) out << ",";
      out << e.label[k];
    }
    out << "]\"];\n";
  }
  out << "}\n";
  return out.str();
}

std::string export_dot(const QuotientTree &t) {
  std::ostringstream out;
  out << "graph quotient_tree {\n";
  for (size_t i = 0; i < t.nodes.size(); ++i)
    out << "  n" << i << " [label=\"" << t.nodes[i].pair.str()
        << " W=" << t.nodes[i].pair.total() << "\"];\n";
  for (size_t i = 0; i < t.nodes.size(); ++i)
    for (int c : t.nodes[i].children) out << "  n" << i << " -- n" << c << ";\n";
  out << "}\n";
  return out.str();
}

std::string export_dot(const TwoCellBoundary &b) {
  std::ostringstream out;
  out << "graph two_cell {\n";
  for (size_t i = 0; i < b.corner_weights.size(); ++i) {
    out << "  c" << i << " [label=\"W=" << b.corner_W[i].str() << " (";
    for (size_t k = 0; k < b.corner_weights[i].size(); ++k) {
      if (k) out << ",";
      out << b.corner_weights[i][k].str();
    }
    out << ")\"];\n";
  }
  size_t n = b.corner_weights.size();
  for (size_t i = 0; i < n; ++i) {
    out << "  c" << i << " -- c" << (i + 1) % n << " [label=\"";
    for (size_t k = 0; k < b.side_zero_edges[i].size(); ++k) {
      if (k) out << ",";
      out << "e" << b.side_zero_edges[i][k] << "=0";
    }
    out << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

} // namespace torelli
