#include "torelli/dual_graph.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

namespace torelli {

int OrientedDualGraph::vertex_index(int id) const {
  for (size_t i = 0; i < vertices.size(); ++i)
    if (vertices[i].id == id) return (int)i;
  return -1;
}

int OrientedDualGraph::edge_index(int id) const {
  for (size_t i = 0; i < edges.size(); ++i)
    if (edges[i].id == id) return (int)i;
  return -1;
}

int OrientedDualGraph::degree(int vertex_id) const {
  int d = 0;
  for (const auto &e : edges) {
    if (e.tail == vertex_id) ++d;
    if (e.head == vertex_id) ++d;
  }
  return d;
}

std::set<int> OrientedDualGraph::all_edge_ids() const {
  std::set<int> s;
  for (const auto &e : edges) s.insert(e.id);
  return s;
}

Rat WeightedCycle::weight_of(int edge_id) const {
  int i = graph.edge_index(edge_id);
  if (i < 0) throw std::invalid_argument("weight_of: unknown edge id");
  return weights[i];
}

std::set<int> WeightedCycle::support() const {
  std::set<int> s;
  for (size_t i = 0; i < graph.edges.size(); ++i)
    if (weights[i].is_positive()) s.insert(graph.edges[i].id);
  return s;
}

namespace {

bool well_formed(const OrientedDualGraph &g, std::vector<Violation> &out) {
  bool ok = true;
  if (g.surface_genus < 2) {
    out.push_back({"surface genus", "surface genus must be >= 2, got " +
                                        std::to_string(g.surface_genus)});
    ok = false;
  }
  std::set<int> vids, eids;
  for (const auto &v : g.vertices) {
    if (!vids.insert(v.id).second) {
      out.push_back({"duplicate id", "vertex " + std::to_string(v.id) + " repeated"});
      ok = false;
    }
    if (v.region_genus < 0) {
      out.push_back({"region genus", "vertex " + std::to_string(v.id) + " has negative genus"});
      ok = false;
    }
  }
  for (const auto &e : g.edges) {
    if (!eids.insert(e.id).second) {
      out.push_back({"duplicate id", "edge " + std::to_string(e.id) + " repeated"});
      ok = false;
    }
    if (!vids.count(e.tail) || !vids.count(e.head)) {
      out.push_back({"dangling edge", "edge " + std::to_string(e.id) +
                                          " has an endpoint that is not a vertex"});
      ok = false;
    }
    if (e.label.size() != (size_t)(2 * g.surface_genus)) {
      out.push_back({"label length", "edge " + std::to_string(e.id) +
                                         ": label length must be 2g = " +
                                         std::to_string(2 * g.surface_genus) + ", got " +
                                         std::to_string(e.label.size())});
      ok = false;
    }
  }
  if (g.vertices.empty()) {
    out.push_back({"empty graph", "graph has no vertices"});
    ok = false;
  }
  return ok;
}

bool underlying_connected(const OrientedDualGraph &g) {
  if (g.vertices.empty()) return false;
  std::map<int, std::vector<int>> adj;
  for (const auto &v : g.vertices) adj[v.id];
  for (const auto &e : g.edges) {
    adj[e.tail].push_back(e.head);
    adj[e.head].push_back(e.tail);
  }
  std::vector<int> stack{g.vertices.front().id};
  std::set<int> seen{g.vertices.front().id};
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int n : adj[v])
      if (seen.insert(n).second) stack.push_back(n);
  }
  return seen.size() == g.vertices.size();
}

// Tarjan over the support subgraph; returns component index per vertex id.
std::map<int, int> strongly_connected_components(const OrientedDualGraph &g,
                                                 const std::set<int> &support) {
  std::map<int, std::vector<int>> succ;
  for (const auto &v : g.vertices) succ[v.id];
  for (const auto &e : g.edges)
    if (support.count(e.id)) succ[e.tail].push_back(e.head);

  std::map<int, int> index, low, comp;
  std::vector<int> stack;
  std::set<int> on_stack;
  int counter = 0, comps = 0;

  // Iterative Tarjan to keep deep corpora off the call stack.
  struct Frame {
    int v;
    size_t next;
  };
  for (const auto &vv : g.vertices) {
    if (index.count(vv.id)) continue;
    std::vector<Frame> frames{{vv.id, 0}};
    index[vv.id] = low[vv.id] = counter++;
    stack.push_back(vv.id);
    on_stack.insert(vv.id);
    while (!frames.empty()) {
      Frame &f = frames.back();
      if (f.next < succ[f.v].size()) {
        int w = succ[f.v][f.next++];
        if (!index.count(w)) {
          index[w] = low[w] = counter++;
          stack.push_back(w);
          on_stack.insert(w);
          frames.push_back({w, 0});
        } else if (on_stack.count(w)) {
          low[f.v] = std::min(low[f.v], index[w]);
        }
      } else {
        if (low[f.v] == index[f.v]) {
          int w;
          do {
            w = stack.back();
            stack.pop_back();
            on_stack.erase(w);
            comp[w] = comps;
          } while (w != f.v);
          ++comps;
        }
        int v = f.v;
        frames.pop_back();
        if (!frames.empty()) low[frames.back().v] = std::min(low[frames.back().v], low[v]);
      }
    }
  }
  return comp;
}

} // namespace

std::vector<Violation> validate(const OrientedDualGraph &g) {
  std::vector<Violation> out;
  if (!well_formed(g, out)) return out; // structural breakage masks the rest

  if (!underlying_connected(g))
    out.push_back({"disconnected", "underlying graph is not connected"});

  // per-vertex relation: sum of entering labels equals sum of exiting labels
  for (const auto &v : g.vertices) {
    IntVec acc(2 * g.surface_genus, 0);
    for (const auto &e : g.edges) {
      if (e.head == v.id)
        for (size_t k = 0; k < acc.size(); ++k) acc[k] = checked_add(acc[k], e.label[k]);
      if (e.tail == v.id)
        for (size_t k = 0; k < acc.size(); ++k) acc[k] = checked_add(acc[k], -e.label[k]);
    }
    if (std::any_of(acc.begin(), acc.end(), [](long long x) { return x != 0; }))
      out.push_back({"region boundary not null-homologous",
                     "vertex " + std::to_string(v.id) + ": entering and exiting labels differ"});
  }

  long long total = 0;
  for (const auto &v : g.vertices) {
    long long contribution = 2 - 2LL * v.region_genus - g.degree(v.id);
    total += contribution;
    if (contribution > -1) {
      const char *kind = "disk or annulus region";
      if (v.region_genus == 0 && g.degree(v.id) == 2) kind = "annulus region";
      if (v.region_genus == 0 && g.degree(v.id) == 1) kind = "disk region";
      out.push_back({kind, "vertex " + std::to_string(v.id) + ": genus " +
                               std::to_string(v.region_genus) + ", degree " +
                               std::to_string(g.degree(v.id))});
    }
  }
  if (total != 2 - 2LL * g.surface_genus)
    out.push_back({"Euler characteristic",
                   "vertex contributions sum to " + std::to_string(total) + ", expected " +
                       std::to_string(2 - 2LL * g.surface_genus)});
  return out;
}

std::vector<Violation> validate(const WeightedCycle &w) {
  std::vector<Violation> out = validate(w.graph);
  if (w.weights.size() != w.graph.edges.size())
    out.push_back({"weights", "weight vector length does not match edge count"});
  else
    for (size_t i = 0; i < w.weights.size(); ++i)
      if (w.weights[i].sign() < 0)
        out.push_back({"negative weight",
                       "edge " + std::to_string(w.graph.edges[i].id) + ": weight " +
                           w.weights[i].str()});
  return out;
}

bool is_recurrent(const OrientedDualGraph &g, const std::set<int> &support) {
  if (support.empty()) throw std::invalid_argument("is_recurrent: empty support");
  auto comp = strongly_connected_components(g, support);
  for (const auto &e : g.edges)
    if (support.count(e.id) && comp.at(e.tail) != comp.at(e.head)) return false;
  return true;
}

bool is_recurrent(const OrientedDualGraph &g) { return is_recurrent(g, g.all_edge_ids()); }

std::vector<std::vector<int>> sink_subsurfaces(const OrientedDualGraph &g,
                                               const std::set<int> &support) {
  int n = (int)g.vertices.size();
  std::vector<std::vector<int>> out;
  if (n > 24) throw std::invalid_argument("sink_subsurfaces: too many vertices for enumeration");
  for (unsigned long mask = 1; n > 1 && mask + 1 < (1UL << n); ++mask) {
    auto inside = [&](int vid) {
      for (int i = 0; i < n; ++i)
        if (g.vertices[i].id == vid) return (mask >> i) & 1UL;
      return 0UL;
    };
    bool closed = true, has_entering = false;
    for (const auto &e : g.edges) {
      if (!support.count(e.id)) continue;
      bool t = inside(e.tail), h = inside(e.head);
      if (t && !h) { closed = false; break; }
      if (!t && h) has_entering = true;
    }
    if (closed && has_entering) {
      std::vector<int> u;
      for (int i = 0; i < n; ++i)
        if ((mask >> i) & 1UL) u.push_back(g.vertices[i].id);
      std::sort(u.begin(), u.end());
      out.push_back(std::move(u));
    }
  }
  std::sort(out.begin(), out.end(), [](const auto &a, const auto &b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return out;
}

bool is_reduced(const WeightedCycle &w) {
  auto s = w.support();
  if (s.empty()) return true; // empty multicurve
  return is_recurrent(w.graph, s);
}

RatVec homology_class(const WeightedCycle &w) {
  RatVec acc(2 * w.graph.surface_genus, Rat(0));
  for (size_t i = 0; i < w.graph.edges.size(); ++i)
    for (size_t k = 0; k < acc.size(); ++k)
      acc[k] += w.weights[i] * Rat(w.graph.edges[i].label[k]);
  return acc;
}

HomologyClass integral_homology_class(const WeightedCycle &w) {
  RatVec h = homology_class(w);
  IntVec c(h.size());
  for (size_t i = 0; i < h.size(); ++i) c[i] = h[i].as_integer();
  return HomologyClass(w.graph.surface_genus, std::move(c));
}

WeightedCycle contract_zero_edges(const WeightedCycle &w) {
  const auto &g = w.graph;
  // Union-find over vertex ids; genus bookkeeping handles chains of merges
  // (an edge between distinct vertices may become a self-loop after an
  // earlier merge, in which case it adds a handle).
  std::map<int, int> parent;
  std::map<int, int> genus;
  for (const auto &v : g.vertices) {
    parent[v.id] = v.id;
    genus[v.id] = v.region_genus;
  }
  std::function<int(int)> find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (size_t i = 0; i < g.edges.size(); ++i) {
    if (!w.weights[i].is_zero()) continue;
    int a = find(g.edges[i].tail), b = find(g.edges[i].head);
    if (a == b) {
      genus[a] += 1; // zero self-loop: handle
    } else {
      parent[b] = a;
      genus[a] += genus[b];
    }
  }

  WeightedCycle out;
  out.graph.surface_genus = g.surface_genus;
  std::set<int> reps;
  for (const auto &v : g.vertices) reps.insert(find(v.id));
  for (int r : reps) out.graph.vertices.push_back({r, genus[r]});
  for (size_t i = 0; i < g.edges.size(); ++i) {
    if (w.weights[i].is_zero()) continue;
    OrientedDualGraph::Edge e = g.edges[i];
    e.tail = find(e.tail);
    e.head = find(e.head);
    out.graph.edges.push_back(std::move(e));
    out.weights.push_back(w.weights[i]);
  }
  return out;
}

WeightedCycle drain(const WeightedCycle &input, int *steps_out) {
  bool nonzero = false;
  for (const Rat &x : homology_class(input))
    if (!x.is_zero()) { nonzero = true; break; }
  if (!nonzero)
    throw std::invalid_argument(
        "drain: homology class is zero; draining would annihilate all edges");

  WeightedCycle w = contract_zero_edges(input);
  int steps = 0;
  while (!w.graph.edges.empty() && !is_recurrent(w.graph, w.graph.all_edge_ids())) {
    auto sinks = sink_subsurfaces(w.graph, w.graph.all_edge_ids());
    // Combined boundary multiplicity of all sink subsurfaces.
    std::vector<long long> d(w.graph.edges.size(), 0);
    for (const auto &u : sinks) {
      std::set<int> us(u.begin(), u.end());
      for (size_t i = 0; i < w.graph.edges.size(); ++i) {
        bool t = us.count(w.graph.edges[i].tail), h = us.count(w.graph.edges[i].head);
        if (h && !t) d[i] += 1;
      }
    }
    // Largest t with all weights still nonnegative; at least one edge hits 0.
    bool first = true;
    Rat t;
    for (size_t i = 0; i < d.size(); ++i) {
      if (d[i] == 0) continue;
      Rat cand = w.weights[i] / Rat(d[i]);
      if (first || cand < t) { t = cand; first = false; }
    }
    if (first)
      throw std::logic_error("drain: non-recurrent support without drainable boundary");
    for (size_t i = 0; i < d.size(); ++i)
      if (d[i] != 0) w.weights[i] -= t * Rat(d[i]);
    w = contract_zero_edges(w);
    ++steps;
  }
  if (steps_out) *steps_out = steps;
  return w;
}

} // namespace torelli
