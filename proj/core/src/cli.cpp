#include "torelli/cli.hpp"

#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "torelli/io.hpp"

namespace torelli {

namespace {

using Json = nlohmann::ordered_json;

IntVec parse_int_list(const std::string &text) {
  IntVec out;
  std::istringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    size_t pos = 0;
    long long v;
    try {
      v = std::stoll(item, &pos);
    } catch (const std::exception &) {
      throw std::invalid_argument("bad integer list entry '" + item + "'");
    }
    if (pos != item.size())
      throw std::invalid_argument("bad integer list entry '" + item + "'");
    out.push_back(v);
  }
  if (out.empty()) throw std::invalid_argument("empty integer list");
  return out;
}

HomologyClass parse_class(const std::string &text) {
  IntVec coords = parse_int_list(text);
  if (coords.size() % 2 != 0)
    throw std::invalid_argument("class length must be 2g, got " +
                                std::to_string(coords.size()));
  int genus = (int)coords.size() / 2;
  return HomologyClass(genus, std::move(coords));
}

std::string weights_line(const RatVec &w) {
  std::string s = "(";
  for (size_t i = 0; i < w.size(); ++i) {
    if (i) s += ",";
    s += w[i].str();
  }
  return s + ")";
}

Json weights_json(const RatVec &w) {
  Json a = Json::array();
  for (const Rat &x : w) a.push_back(x.str());
  return a;
}

Json edge_order_json(const OrientedDualGraph &g) {
  Json a = Json::array();
  for (const auto &e : g.edges) a.push_back(e.id);
  return a;
}

// The target class: --class when given, otherwise the class of the file's
// weights (which must then be integral).
HomologyClass target_class(const WeightedCycle &w, const std::string &cls) {
  if (!cls.empty()) return parse_class(cls);
  return integral_homology_class(w);
}

struct Report {
  bool json = false;
  Json j;
  std::ostringstream text;

  std::string finish() { return json ? j.dump(2) + "\n" : text.str(); }
};

int cmd_validate(const std::string &path, Report &r) {
  WeightedCycle w = load_graph_file(path, false);
  auto violations = validate(w);
  r.j["command"] = "validate";
  r.j["ok"] = violations.empty();
  Json vj = Json::array();
  for (const auto &v : violations)
    vj.push_back(Json{{"invariant", v.invariant}, {"detail", v.detail}});
  r.j["violations"] = std::move(vj);
  if (violations.empty()) {
    r.text << "ok\n";
    return 0;
  }
  for (const auto &v : violations) r.text << "violation: " << v.invariant << ": " << v.detail << "\n";
  return 1;
}

int cmd_recurrent(const std::string &path, Report &r) {
  WeightedCycle w = load_graph_file(path);
  bool reduced = is_reduced(w);
  r.j["command"] = "recurrent";
  r.j["recurrent"] = reduced;
  r.text << "recurrent: " << (reduced ? "true" : "false") << "\n";
  if (!reduced) {
    auto sinks = sink_subsurfaces(w.graph, w.support());
    Json sj = Json::array();
    for (const auto &u : sinks) {
      sj.push_back(u);
      r.text << "sink subsurface: {";
      for (size_t i = 0; i < u.size(); ++i) r.text << (i ? "," : "") << u[i];
      r.text << "}\n";
    }
    r.j["sink_subsurfaces"] = std::move(sj);
  }
  return 0;
}

int cmd_drain(const std::string &path, Report &r) {
  WeightedCycle w = load_graph_file(path);
  int steps = 0;
  Rat before = weight_W(w);
  WeightedCycle drained = drain(w, &steps);
  r.j["command"] = "drain";
  r.j["steps"] = steps;
  r.j["W_before"] = before.str();
  r.j["W_after"] = weight_W(drained).str();
  r.j["result"] = Json::parse(graph_to_json(drained));
  r.text << "steps: " << steps << "\n";
  r.text << "W: " << before.str() << " -> " << weight_W(drained).str() << "\n";
  r.text << graph_to_json(drained) << "\n";
  return 0;
}

int cmd_cell(const std::string &sub, const std::string &path, const std::string &cls,
             bool dot, Report &r) {
  WeightedCycle w = load_graph_file(path);
  r.j["command"] = "cell " + sub;
  if (sub == "dim") {
    int d = cell_dimension(w.graph);
    r.j["dimension"] = d;
    r.text << "dimension: " << d << "\n";
    return 0;
  }
  HomologyClass x = target_class(w, cls);
  bool basepoint_usable = !w.support().empty() && homology_class(w) == [&] {
    RatVec rx(x.coords.size());
    for (size_t i = 0; i < rx.size(); ++i) rx[i] = Rat(x.coords[i]);
    return rx;
  }();
  CellPolytope cell = basepoint_usable ? make_cell(w, x) : make_cell(w.graph, x);
  if (sub == "vertices") {
    auto verts = cell_vertices(cell);
    r.j["edge_order"] = edge_order_json(w.graph);
    Json vj = Json::array();
    for (const auto &v : verts) {
      vj.push_back(weights_json(v));
      r.text << weights_line(v) << "\n";
    }
    r.j["vertices"] = std::move(vj);
    return 0;
  }
  if (sub == "triangulate") {
    auto simplices = canonical_triangulation(cell);
    r.j["edge_order"] = edge_order_json(w.graph);
    Json sj = Json::array();
    for (const auto &s : simplices) {
      Json verts = Json::array();
      r.text << "simplex:";
      for (const auto &v : s.vertex_weights) {
        verts.push_back(weights_json(v));
        r.text << " " << weights_line(v);
      }
      r.text << "\n";
      sj.push_back(std::move(verts));
    }
    r.j["simplices"] = std::move(sj);
    return 0;
  }
  // boundary
  auto b = two_cell_boundary(cell);
  if (dot) {
    r.text << export_dot(b);
    r.j["dot"] = export_dot(b);
    return 0;
  }
  r.j["edge_order"] = edge_order_json(w.graph);
  Json cj = Json::array(), sj = Json::array();
  for (size_t i = 0; i < b.corner_weights.size(); ++i) {
    cj.push_back(Json{{"weights", weights_json(b.corner_weights[i])},
                      {"W", b.corner_W[i].str()}});
    r.text << "corner " << weights_line(b.corner_weights[i]) << " W=" << b.corner_W[i].str()
           << "\n";
    Json zeros = Json::array();
    r.text << "  side:";
    for (int id : b.side_zero_edges[i]) {
      zeros.push_back(id);
      r.text << " e" << id << "=0";
    }
    r.text << "\n";
    sj.push_back(std::move(zeros));
  }
  r.j["corners"] = std::move(cj);
  r.j["sides"] = std::move(sj);
  return 0;
}

int cmd_genus2_orbit(const std::string &slope, Report &r) {
  Slope s = Slope::parse(slope);
  r.j["command"] = "genus2 orbit";
  r.j["slope"] = s.str();
  r.j["orbit"] = orbit_name(slope_orbit(s));
  r.text << "orbit: " << orbit_name(slope_orbit(s)) << "\n";
  return 0;
}

int cmd_genus2_descend(long long p, long long q, Report &r) {
  WeightPair start(p, q);
  auto path = euclidean_descent(start);
  r.j["command"] = "genus2 descend";
  Json pj = Json::array(), wj = Json::array();
  pj.push_back(Json::array({start.p, start.q}));
  wj.push_back(start.total());
  r.text << start.str() << " W=" << start.total() << "\n";
  for (const auto &wp : path) {
    pj.push_back(Json::array({wp.p, wp.q}));
    wj.push_back(wp.total());
    r.text << wp.str() << " W=" << wp.total() << "\n";
  }
  r.j["path"] = std::move(pj);
  r.j["W"] = std::move(wj);
  return 0;
}

int cmd_genus2_path(const std::string &s1s, const std::string &s2s, Report &r) {
  Slope s1 = Slope::parse(s1s), s2 = Slope::parse(s2s);
  auto word = farey_tree_path(s1, s2);
  r.j["command"] = "genus2 path";
  Json lj = Json::array();
  r.text << "word:";
  if (word.empty()) r.text << " (empty)";
  for (const auto &l : word) {
    lj.push_back(Json::array({l.twist_slope.str(), l.exponent}));
    r.text << " T(" << l.twist_slope.str() << ")^" << l.exponent;
  }
  r.text << "\n";
  r.j["letters"] = std::move(lj);
  return 0;
}

int cmd_genus2_tree(long long max_w, Report &r) {
  QuotientTree t = quotient_tree(max_w);
  r.j["command"] = "genus2 tree";
  Json nj = Json::array();
  for (const auto &n : t.nodes)
    nj.push_back(Json{{"pair", Json::array({n.pair.p, n.pair.q})}, {"parent", n.parent}});
  r.j["nodes"] = std::move(nj);
  r.j["dot"] = export_dot(t);
  r.text << export_dot(t);
  return 0;
}

int cmd_torelli(const std::string &word_text, Report &r) {
  TwistWord w = parse_twist_word(word_text);
  bool t = is_torelli(w);
  r.j["command"] = "torelli";
  r.j["word"] = w.str();
  r.j["torelli"] = t;
  r.text << "torelli: " << (t ? "true" : "false") << "\n";
  return 0;
}

int cmd_lantern(const std::vector<std::string> &classes, Report &r) {
  std::vector<HomologyClass> h;
  for (const auto &c : classes) h.push_back(parse_class(c));
  bool ok = lantern_matrix_check(h[0], h[1], h[2], h[3], h[4], h[5], h[6]);
  r.j["command"] = "lantern";
  r.j["lantern"] = ok;
  r.text << "lantern: " << (ok ? "true" : "false") << "\n";
  return 0;
}

int cmd_pointpush(const std::string &gamma_s, const std::string &absolute_s, long long arc,
                  Report &r) {
  HomologyClass gamma = parse_class(gamma_s);
  HomologyClass absolute = parse_class(absolute_s);
  RelativeClass rc{absolute.genus, absolute, arc};
  RelativeClass pushed = point_push(gamma, rc);
  r.j["command"] = "pointpush";
  r.j["absolute"] = pushed.absolute.coords;
  r.j["arc"] = pushed.arc_coefficient;
  r.text << "absolute: " << pushed.absolute.str() << "\n";
  r.text << "arc: " << pushed.arc_coefficient << "\n";
  return 0;
}

} // namespace

CommandResult run_command(const std::vector<std::string> &args) {
  CLI::App app{"exact multicurve, cycle-complex and genus-2 slope computations"};
  app.require_subcommand(1);
  app.fallthrough();
  bool json = false;
  app.add_flag("--json", json, "machine-readable report");

  std::string path, cls, word_text, slope1, slope2, gamma_s, absolute_s;
  std::vector<std::string> lantern_classes(7);
  long long p = 0, q = 0, max_w = 1, arc = 0;
  bool dot = false;

  auto *validate_cmd = app.add_subcommand("validate", "check graph invariants");
  validate_cmd->add_option("file", path, "graph JSON file")->required();

  auto *recurrent_cmd = app.add_subcommand("recurrent", "recurrence of the weighted support");
  recurrent_cmd->add_option("file", path, "graph JSON file")->required();

  auto *drain_cmd = app.add_subcommand("drain", "drain to a reduced multicurve");
  drain_cmd->add_option("file", path, "graph JSON file")->required();

  auto *cell_cmd = app.add_subcommand("cell", "cell polytope computations");
  cell_cmd->require_subcommand(1);
  for (const char *sub : {"dim", "vertices", "triangulate", "boundary"}) {
    auto *sc = cell_cmd->add_subcommand(sub);
    sc->add_option("file", path, "graph JSON file")->required();
    sc->add_option("--class", cls, "target class, comma-separated integers");
    if (std::string(sub) == "boundary") sc->add_flag("--dot", dot, "DOT output");
  }

  auto *genus2_cmd = app.add_subcommand("genus2", "4-punctured-sphere slope model");
  genus2_cmd->require_subcommand(1);
  auto *orbit_cmd = genus2_cmd->add_subcommand("orbit", "orbit class of a slope");
  orbit_cmd->add_option("slope", slope1, "slope p/q")->required();
  auto *descend_cmd = genus2_cmd->add_subcommand("descend", "Euclidean descent to {1,0}");
  descend_cmd->add_option("p", p)->required();
  descend_cmd->add_option("q", q)->required();
  auto *path_cmd = genus2_cmd->add_subcommand("path", "separating-twist word between slopes");
  path_cmd->add_option("s1", slope1, "slope p/q")->required();
  path_cmd->add_option("s2", slope2, "slope p/q")->required();
  auto *tree_cmd = genus2_cmd->add_subcommand("tree", "quotient tree, DOT output");
  tree_cmd->add_option("--max-w", max_w, "maximum W value")->required();

  auto *torelli_cmd = app.add_subcommand("torelli", "Torelli membership of a twist word");
  torelli_cmd->add_option("--word", word_text, "word, e.g. \"T[0,0,0,0,0,0]^1\"")->required();

  auto *lantern_cmd = app.add_subcommand("lantern", "lantern relation matrix check");
  const char *names[7] = {"--a", "--b", "--c", "--d", "--x", "--y", "--z"};
  for (int i = 0; i < 7; ++i)
    lantern_cmd->add_option(names[i], lantern_classes[i], "class, comma-separated integers")
        ->required();

  auto *pointpush_cmd = app.add_subcommand("pointpush", "point-pushing on relative homology");
  pointpush_cmd->add_option("--gamma", gamma_s, "loop class")->required();
  pointpush_cmd->add_option("--absolute", absolute_s, "absolute part")->required();
  pointpush_cmd->add_option("--arc", arc, "arc coefficient")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp &e) {
    return {0, app.help()};
  } catch (const CLI::ParseError &e) {
    return {2, std::string("usage error: ") + e.what() + "\n"};
  }

  Report r;
  r.json = json;
  int code = 0;
  try {
    if (*validate_cmd) code = cmd_validate(path, r);
    else if (*recurrent_cmd) code = cmd_recurrent(path, r);
    else if (*drain_cmd) code = cmd_drain(path, r);
    else if (*cell_cmd) {
      std::string sub = cell_cmd->get_subcommands().front()->get_name();
      code = cmd_cell(sub, path, cls, dot, r);
    } else if (*orbit_cmd) code = cmd_genus2_orbit(slope1, r);
    else if (*descend_cmd) code = cmd_genus2_descend(p, q, r);
    else if (*path_cmd) code = cmd_genus2_path(slope1, slope2, r);
    else if (*tree_cmd) code = cmd_genus2_tree(max_w, r);
    else if (*torelli_cmd) code = cmd_torelli(word_text, r);
    else if (*lantern_cmd) code = cmd_lantern(lantern_classes, r);
    else if (*pointpush_cmd) code = cmd_pointpush(gamma_s, absolute_s, arc, r);
    else return {2, "usage error: unknown command\n"};
  } catch (const std::exception &e) {
    if (json) {
      Json err{{"error", e.what()}};
      return {1, err.dump(2) + "\n"};
    }
    return {1, std::string("error: ") + e.what() + "\n"};
  }
  return {code, r.finish()};
}

} // namespace torelli
