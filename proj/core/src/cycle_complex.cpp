#include "torelli/cycle_complex.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace torelli {

namespace {

// Inequality normal . l >= rhs over the potential parameters
// (l(v_1), ..., l(v_{n-1})), with l(v_0) pinned to 0.
struct Ineq {
  RatVec normal;
  Rat rhs;
};

struct ParamSpace {
  std::vector<int> param_vertex; // vertex ids owning a coordinate
  std::map<int, int> coord;      // vertex id -> coordinate, -1 for v0

  explicit ParamSpace(const OrientedDualGraph &g) {
    for (size_t i = 0; i < g.vertices.size(); ++i) {
      if (i == 0) {
        coord[g.vertices[i].id] = -1;
      } else {
        coord[g.vertices[i].id] = (int)param_vertex.size();
        param_vertex.push_back(g.vertices[i].id);
      }
    }
  }

  int dim() const { return (int)param_vertex.size(); }
};

Rat dot(const RatVec &a, const RatVec &b) {
  Rat acc(0);
  for (size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
  return acc;
}

// Edge constraint rows; self-loops yield constant constraints which are
// checked directly against the basepoint.
std::vector<Ineq> edge_inequalities(const CellPolytope &cell, const ParamSpace &ps,
                                    bool *feasible) {
  std::vector<Ineq> rows;
  *feasible = true;
  for (size_t i = 0; i < cell.graph.edges.size(); ++i) {
    const auto &e = cell.graph.edges[i];
    if (e.head == e.tail) {
      if (cell.basepoint[i].sign() < 0) *feasible = false;
      continue;
    }
    RatVec n(ps.dim(), Rat(0));
    int hc = ps.coord.at(e.head), tc = ps.coord.at(e.tail);
    if (hc >= 0) n[hc] += Rat(1);
    if (tc >= 0) n[tc] -= Rat(1);
    rows.push_back({std::move(n), -cell.basepoint[i]});
  }
  return rows;
}

// All extreme points of {l : rows} by exhaustive tight-subset enumeration.
std::vector<RatVec> enumerate_polytope_vertices(const std::vector<Ineq> &rows, int dim) {
  std::vector<RatVec> verts;
  if (dim == 0) {
    bool ok = true;
    for (const auto &r : rows)
      if (Rat(0) < r.rhs) ok = false;
    if (ok) verts.push_back({});
    return verts;
  }
  int m = (int)rows.size();
  if (m < dim) return verts;
  std::vector<int> pick(dim);
  std::vector<bool> used;
  // iterate over all dim-subsets of rows
  std::vector<int> idx(dim);
  for (int i = 0; i < dim; ++i) idx[i] = i;
  for (;;) {
    RatMat a(dim, dim);
    RatVec b(dim);
    for (int r = 0; r < dim; ++r) {
      for (int c = 0; c < dim; ++c) a.at(r, c) = rows[idx[r]].normal[c];
      b[r] = rows[idx[r]].rhs;
    }
    RatMat acopy = a;
    if (rat_rank(acopy) == dim) {
      auto sol = rat_solve(a, b);
      if (sol) {
        bool ok = true;
        for (const auto &r : rows)
          if (dot(r.normal, *sol) < r.rhs) { ok = false; break; }
        if (ok) verts.push_back(*sol);
      }
    }
    // next combination
    int i = dim - 1;
    while (i >= 0 && idx[i] == m - dim + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < dim; ++j) idx[j] = idx[j - 1] + 1;
  }
  std::sort(verts.begin(), verts.end(), [](const RatVec &x, const RatVec &y) {
    for (size_t i = 0; i < x.size(); ++i) {
      if (x[i] < y[i]) return true;
      if (y[i] < x[i]) return false;
    }
    return false;
  });
  verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
  return verts;
}

RatVec params_to_weights(const CellPolytope &cell, const ParamSpace &ps, const RatVec &l) {
  RatVec w(cell.basepoint);
  for (size_t i = 0; i < cell.graph.edges.size(); ++i) {
    const auto &e = cell.graph.edges[i];
    int hc = ps.coord.at(e.head), tc = ps.coord.at(e.tail);
    if (hc >= 0) w[i] += l[hc];
    if (tc >= 0) w[i] -= l[tc];
  }
  return w;
}

int affine_rank(const std::vector<RatVec> &points) {
  if (points.empty()) return -1;
  int dim = (int)points[0].size();
  RatMat m((int)points.size() - 1, dim);
  for (size_t i = 1; i < points.size(); ++i)
    for (int j = 0; j < dim; ++j) m.at((int)i - 1, j) = points[i][j] - points[0][j];
  return rat_rank(m);
}

} // namespace

CellPolytope make_cell(const OrientedDualGraph &g, const HomologyClass &x) {
  if (g.edges.empty() || !is_recurrent(g, g.all_edge_ids()))
    throw std::invalid_argument("make_cell: graph is not recurrent, cell would not be compact");
  if (x.genus != g.surface_genus)
    throw std::invalid_argument("make_cell: class genus does not match surface genus");

  // label matrix: 2g x |edges|
  int n = 2 * g.surface_genus, m = (int)g.edges.size();
  IntMat labels(n, m);
  for (int j = 0; j < m; ++j)
    for (int i = 0; i < n; ++i) labels.at(i, j) = g.edges[j].label[i];

  auto res = hermite_solve(labels, x.coords);
  CellPolytope cell;
  cell.graph = g;
  cell.target = x;
  if (res.status == IntSolveStatus::Solved) {
    cell.basepoint.assign(res.solution.begin(), res.solution.end());
    cell.integral_basepoint = true;
    return cell;
  }
  if (res.status == IntSolveStatus::NoRationalSolution)
    throw std::invalid_argument("make_cell: infeasible class (no rational weighting)");

  RatMat ra(n, m);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < m; ++j) ra.at(i, j) = Rat(labels.at(i, j));
  RatVec rb(n);
  for (int i = 0; i < n; ++i) rb[i] = Rat(x.coords[i]);
  auto sol = rat_solve(ra, rb);
  if (!sol) throw std::invalid_argument("make_cell: infeasible class (no rational weighting)");
  cell.basepoint = *sol;
  cell.integral_basepoint = false;
  return cell;
}

CellPolytope make_cell(const WeightedCycle &w, const HomologyClass &x) {
  if (w.graph.edges.empty() || !is_recurrent(w.graph, w.graph.all_edge_ids()))
    throw std::invalid_argument("make_cell: graph is not recurrent, cell would not be compact");
  RatVec h = homology_class(w);
  for (size_t i = 0; i < h.size(); ++i)
    if (h[i] != Rat(x.coords[i]))
      throw std::invalid_argument("make_cell: basepoint weights do not represent the class");
  CellPolytope cell;
  cell.graph = w.graph;
  cell.target = x;
  cell.basepoint = w.weights;
  cell.integral_basepoint =
      std::all_of(w.weights.begin(), w.weights.end(), [](const Rat &r) { return r.is_integer(); });
  return cell;
}

Rat weight_W(const WeightedCycle &w) {
  Rat acc(0);
  for (const Rat &x : w.weights) acc += x;
  return acc;
}

int cell_dimension(const OrientedDualGraph &g) {
  if (g.edges.empty() || !is_recurrent(g, g.all_edge_ids()))
    throw std::invalid_argument(
        "cell_dimension: graph is not recurrent, cell would not be compact");
  return (int)g.vertices.size() - 1;
}

std::vector<RatVec> cell_vertices(const CellPolytope &cell) {
  ParamSpace ps(cell.graph);
  bool feasible = true;
  auto rows = edge_inequalities(cell, ps, &feasible);
  std::vector<RatVec> out;
  if (feasible) {
    for (const RatVec &l : enumerate_polytope_vertices(rows, ps.dim()))
      out.push_back(params_to_weights(cell, ps, l));
  }
  if (out.empty())
    throw std::invalid_argument(
        "cell_vertices: infeasible class (no nonnegative weighting on this graph)");
  std::sort(out.begin(), out.end(), [](const RatVec &x, const RatVec &y) {
    for (size_t i = 0; i < x.size(); ++i) {
      if (x[i] < y[i]) return true;
      if (y[i] < x[i]) return false;
    }
    return false;
  });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<RatVec> cell_vertices(const OrientedDualGraph &g, const HomologyClass &x) {
  return cell_vertices(make_cell(g, x));
}

bool in_Cx(const WeightedCycle &w, const HomologyClass &x) {
  if (!x.is_primitive())
    throw std::invalid_argument("in_Cx: class must be primitive");
  RatVec h = homology_class(w);
  for (size_t i = 0; i < h.size(); ++i)
    if (h[i] != Rat(x.coords[i]))
      throw std::invalid_argument("in_Cx: weighting does not represent the class");
  return weight_W(w) == Rat(1);
}

WeightedCycle pinch(const WeightedCycle &w, int vertex_id, int e1_id, int e2_id,
                    PinchSide side, const Rat &t) {
  const auto &g = w.graph;
  if (e1_id == e2_id) throw std::invalid_argument("pinch: the two edges must be distinct");
  int vi = g.vertex_index(vertex_id);
  int i1 = g.edge_index(e1_id), i2 = g.edge_index(e2_id);
  if (vi < 0 || i1 < 0 || i2 < 0)
    throw std::invalid_argument("pinch: unknown vertex or edge id");
  const auto &v = g.vertices[vi];
  auto attaches = [&](const OrientedDualGraph::Edge &e) {
    return side == PinchSide::Entering ? e.head == vertex_id : e.tail == vertex_id;
  };
  if (!attaches(g.edges[i1]) || !attaches(g.edges[i2]))
    throw std::invalid_argument(side == PinchSide::Entering
                                    ? "pinch: both edges must enter the vertex"
                                    : "pinch: both edges must exit the vertex");
  if (v.region_genus == 0 && g.degree(vertex_id) == 3)
    throw std::invalid_argument("pinch: region is a pair of pants");
  if (!t.is_positive())
    throw std::invalid_argument("pinch: t must be positive");
  if (!(t < w.weights[i1]) || !(t < w.weights[i2]))
    throw std::invalid_argument("pinch: t must be smaller than both pinched weights");

  WeightedCycle out = w;
  int new_vid = 0, new_eid = 0;
  for (const auto &vv : g.vertices) new_vid = std::max(new_vid, vv.id + 1);
  for (const auto &ee : g.edges) new_eid = std::max(new_eid, ee.id + 1);
  out.graph.vertices.push_back({new_vid, 0});

  IntVec label(2 * g.surface_genus);
  for (size_t k = 0; k < label.size(); ++k)
    label[k] = checked_add(g.edges[i1].label[k], g.edges[i2].label[k]);

  if (side == PinchSide::Entering) {
    out.graph.edges[i1].head = new_vid;
    out.graph.edges[i2].head = new_vid;
    out.graph.edges.push_back({new_eid, new_vid, vertex_id, std::move(label)});
  } else {
    out.graph.edges[i1].tail = new_vid;
    out.graph.edges[i2].tail = new_vid;
    out.graph.edges.push_back({new_eid, vertex_id, new_vid, std::move(label)});
  }
  out.weights[i1] -= t;
  out.weights[i2] -= t;
  out.weights.push_back(t);
  return out;
}

bool is_P_edge(const OrientedDualGraph &g) {
  if (g.vertices.size() != 2)
    throw std::invalid_argument("is_P_edge: graph must have exactly two vertices");
  for (const auto &v : g.vertices)
    if (v.region_genus == 0 && g.degree(v.id) == 3) return true;
  return false;
}

WeightedCycle traverse_edge(const WeightedCycle &w, int region_id) {
  const auto &g = w.graph;
  if (g.vertices.size() != 2)
    throw std::invalid_argument("traverse_edge: graph must have exactly two vertices");
  if (g.vertex_index(region_id) < 0)
    throw std::invalid_argument("traverse_edge: unknown region id");

  // boundary direction of the chosen region: +1 on exiting edges, -1 on
  // entering edges, 0 on self-loops
  std::vector<int> dir(g.edges.size(), 0);
  for (size_t i = 0; i < g.edges.size(); ++i) {
    const auto &e = g.edges[i];
    if (e.tail == e.head) continue;
    if (e.tail == region_id) dir[i] += 1;
    if (e.head == region_id) dir[i] -= 1;
  }

  bool found = false;
  Rat t;
  for (size_t i = 0; i < dir.size(); ++i) {
    if (dir[i] >= 0) continue;
    if (!found || w.weights[i] < t) { t = w.weights[i]; found = true; }
  }
  if (!found || !t.is_positive())
    throw std::invalid_argument("traverse_edge: direction infeasible, no weight decreases");

  WeightedCycle moved = w;
  for (size_t i = 0; i < dir.size(); ++i)
    if (dir[i] != 0) moved.weights[i] += t * Rat(dir[i]);
  return contract_zero_edges(moved);
}

TwoCellBoundary two_cell_boundary(const CellPolytope &cell) {
  if (cell.graph.vertices.size() != 3)
    throw std::invalid_argument("two_cell_boundary: graph must have exactly three vertices");
  ParamSpace ps(cell.graph);
  bool feasible = true;
  auto rows = edge_inequalities(cell, ps, &feasible);
  if (!feasible)
    throw std::invalid_argument("two_cell_boundary: infeasible class");
  auto lverts = enumerate_polytope_vertices(rows, ps.dim());
  if ((int)lverts.size() < 3 || affine_rank(lverts) < 2)
    throw std::invalid_argument("two_cell_boundary: degenerate (lower-dimensional) polytope");

  // cyclic order around the exact centroid
  RatVec c(2, Rat(0));
  for (const auto &p : lverts) { c[0] += p[0]; c[1] += p[1]; }
  Rat inv = Rat(1, (long long)lverts.size());
  c[0] *= inv;
  c[1] *= inv;
  auto half = [&](const RatVec &p) {
    Rat dx = p[0] - c[0], dy = p[1] - c[1];
    return (dy > Rat(0) || (dy == Rat(0) && dx > Rat(0))) ? 0 : 1;
  };
  std::sort(lverts.begin(), lverts.end(), [&](const RatVec &p, const RatVec &q) {
    int hp = half(p), hq = half(q);
    if (hp != hq) return hp < hq;
    Rat cross = (p[0] - c[0]) * (q[1] - c[1]) - (p[1] - c[1]) * (q[0] - c[0]);
    return cross > Rat(0);
  });

  TwoCellBoundary out;
  for (const auto &l : lverts) {
    RatVec wv = params_to_weights(cell, ps, l);
    Rat total(0);
    for (const Rat &x : wv) total += x;
    out.corner_weights.push_back(std::move(wv));
    out.corner_W.push_back(total);
  }
  // rotate so the lexicographically smallest corner comes first
  size_t best = 0;
  for (size_t i = 1; i < out.corner_weights.size(); ++i) {
    const auto &a = out.corner_weights[i], &b = out.corner_weights[best];
    for (size_t k = 0; k < a.size(); ++k) {
      if (a[k] < b[k]) { best = i; break; }
      if (b[k] < a[k]) break;
    }
  }
  std::rotate(out.corner_weights.begin(), out.corner_weights.begin() + best,
              out.corner_weights.end());
  std::rotate(out.corner_W.begin(), out.corner_W.begin() + best, out.corner_W.end());

  size_t k = out.corner_weights.size();
  for (size_t i = 0; i < k; ++i) {
    const auto &a = out.corner_weights[i];
    const auto &b = out.corner_weights[(i + 1) % k];
    std::vector<int> zeros;
    for (size_t j = 0; j < a.size(); ++j)
      if (a[j].is_zero() && b[j].is_zero()) zeros.push_back(cell.graph.edges[j].id);
    out.side_zero_edges.push_back(std::move(zeros));
  }
  return out;
}

TwoCellBoundary two_cell_boundary(const OrientedDualGraph &g, const HomologyClass &x) {
  return two_cell_boundary(make_cell(g, x));
}

namespace {

struct Chamber {
  std::vector<Ineq> rows;
  std::vector<RatVec> verts;
};

} // namespace

std::vector<CellSimplex> canonical_triangulation(const CellPolytope &cell) {
  if (!cell.integral_basepoint)
    throw std::invalid_argument(
        "canonical_triangulation: no integral basepoint, integer coincidence offsets undefined");
  ParamSpace ps(cell.graph);
  bool feasible = true;
  auto rows = edge_inequalities(cell, ps, &feasible);
  if (!feasible)
    throw std::invalid_argument("canonical_triangulation: infeasible class");
  auto lverts = enumerate_polytope_vertices(rows, ps.dim());
  if (lverts.empty())
    throw std::invalid_argument("canonical_triangulation: infeasible class");
  int dim = ps.dim();
  if (affine_rank(lverts) < dim)
    throw std::invalid_argument(
        "canonical_triangulation: degenerate cell (no strictly positive weighting)");

  std::vector<Chamber> chambers{{rows, lverts}};

  // Coincidence hyperplanes: potential difference of two graph vertices
  // equal to an integer.  Offsets are bounded by the cell's extreme
  // values of that difference.
  int nv = (int)cell.graph.vertices.size();
  for (int ui = 0; ui < nv; ++ui) {
    for (int vi = ui + 1; vi < nv; ++vi) {
      RatVec normal(dim, Rat(0));
      int uc = ps.coord.at(cell.graph.vertices[ui].id);
      int vc = ps.coord.at(cell.graph.vertices[vi].id);
      if (uc >= 0) normal[uc] += Rat(1);
      if (vc >= 0) normal[vc] -= Rat(1);
      Rat lo, hi;
      for (size_t i = 0; i < lverts.size(); ++i) {
        Rat val = dot(normal, lverts[i]);
        if (i == 0) { lo = hi = val; }
        if (val < lo) lo = val;
        if (hi < val) hi = val;
      }
      for (long long k = lo.ceil(); Rat(k) <= hi; ++k) {
        if (Rat(k) <= lo || Rat(k) >= hi) continue; // touches only the boundary
        std::vector<Chamber> next;
        for (auto &ch : chambers) {
          bool has_below = false, has_above = false;
          for (const auto &p : ch.verts) {
            Rat s = dot(normal, p) - Rat(k);
            if (s.sign() < 0) has_below = true;
            if (s.sign() > 0) has_above = true;
          }
          if (!has_below || !has_above) {
            next.push_back(std::move(ch));
            continue;
          }
          RatVec neg(normal.size());
          for (size_t i = 0; i < normal.size(); ++i) neg[i] = -normal[i];
          Chamber above{ch.rows, {}}, below{ch.rows, {}};
          above.rows.push_back({normal, Rat(k)});
          below.rows.push_back({neg, Rat(-k)});
          above.verts = enumerate_polytope_vertices(above.rows, dim);
          below.verts = enumerate_polytope_vertices(below.rows, dim);
          next.push_back(std::move(above));
          next.push_back(std::move(below));
        }
        chambers = std::move(next);
      }
    }
  }

  std::vector<CellSimplex> out;
  for (const auto &ch : chambers) {
    if ((int)ch.verts.size() != dim + 1)
      throw std::logic_error("canonical_triangulation: chamber is not a simplex");
    CellSimplex s;
    for (const auto &l : ch.verts) {
      RatVec wv = params_to_weights(cell, ps, l);
      for (const Rat &x : wv)
        if (!x.is_integer())
          throw std::logic_error("canonical_triangulation: non-integral simplex vertex");
      s.vertex_weights.push_back(std::move(wv));
    }
    std::sort(s.vertex_weights.begin(), s.vertex_weights.end(),
              [](const RatVec &x, const RatVec &y) {
                for (size_t i = 0; i < x.size(); ++i) {
                  if (x[i] < y[i]) return true;
                  if (y[i] < x[i]) return false;
                }
                return false;
              });
    out.push_back(std::move(s));
  }
  std::sort(out.begin(), out.end(), [](const CellSimplex &a, const CellSimplex &b) {
    for (size_t i = 0; i < a.vertex_weights.size() && i < b.vertex_weights.size(); ++i)
      for (size_t k = 0; k < a.vertex_weights[i].size(); ++k) {
        if (a.vertex_weights[i][k] < b.vertex_weights[i][k]) return true;
        if (b.vertex_weights[i][k] < a.vertex_weights[i][k]) return false;
      }
    return false;
  });
  return out;
}

std::vector<CellSimplex> canonical_triangulation(const OrientedDualGraph &g,
                                                 const HomologyClass &x) {
  return canonical_triangulation(make_cell(g, x));
}

} // namespace torelli
