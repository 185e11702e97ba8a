#pragma once

#include "torelli/dual_graph.hpp"

namespace torelli {

// One compact cell of the cycle complex: all nonnegative weightings of a
// recurrent graph representing a fixed integral class x.  The cell is
// parametrized by a potential per vertex, modulo global constants:
//
//   weight(e) = basepoint(e) + potential(head e) - potential(tail e)
//
// The basepoint solves sum_e weight(e) * label(e) = x and need not be
// nonnegative itself.  When an integral basepoint exists the extreme
// points of the cell are integral, because the potential constraints form
// a totally unimodular system.
struct CellPolytope {
  OrientedDualGraph graph;
  HomologyClass target;
  RatVec basepoint; // parallel to graph.edges
  bool integral_basepoint = false;
};

// Builds the cell for (g, x), solving for a basepoint (integral if
// possible).  Throws if g is not recurrent or no rational weighting
// represents x.
CellPolytope make_cell(const OrientedDualGraph &g, const HomologyClass &x);

// Uses w's weights as the basepoint; their class must equal x exactly.
CellPolytope make_cell(const WeightedCycle &w, const HomologyClass &x);

// Total weight W = sum of edge weights; linear on every cell.
Rat weight_W(const WeightedCycle &w);

// Cell dimension: one less than the number of graph vertices.  Equals the
// affine dimension of the cell whenever a strictly positive weighting
// exists.  Throws on a non-recurrent graph (the cell would not be
// compact).
int cell_dimension(const OrientedDualGraph &g);

// All extreme points of the cell, as weight vectors parallel to
// graph.edges, sorted lexicographically.  Exact rational vertex
// enumeration over tight constraint subsets.  Throws if the cell is
// empty.
std::vector<RatVec> cell_vertices(const CellPolytope &cell);
std::vector<RatVec> cell_vertices(const OrientedDualGraph &g, const HomologyClass &x);

// Membership in C_x = W^{-1}(1): requires x primitive and h(w) = x.
bool in_Cx(const WeightedCycle &w, const HomologyClass &x);

enum class PinchSide { Entering, Exiting };

// Pinches segments of length t of two edges meeting v (both entering or
// both exiting) into a new pair-of-pants vertex of degree 3.  Preserves
// validity and recurrence; refuses to pinch at a pair of pants.
WeightedCycle pinch(const WeightedCycle &w, int vertex_id, int e1_id, int e2_id,
                    PinchSide side, const Rat &t);

// True iff the 2-vertex graph has a pair-of-pants region (genus 0,
// degree 3).  Throws unless the graph has exactly two vertices.
bool is_P_edge(const OrientedDualGraph &g);

// Walks from one end of a 1-cell (2-vertex graph) to the other: adds
// t * boundary(region) for the unique t > 0 at which the first weight
// reaches zero, then contracts the vanished edges.
WeightedCycle traverse_edge(const WeightedCycle &w, int region_id);

// Boundary walk of a 2-dimensional cell on a 3-vertex graph: 0-cells in
// cyclic order, with the edge ids whose weights vanish along each side.
struct TwoCellBoundary {
  std::vector<RatVec> corner_weights;          // cyclic order
  std::vector<Rat> corner_W;                   // W at each corner
  std::vector<std::vector<int>> side_zero_edges; // between corner i and i+1
};

TwoCellBoundary two_cell_boundary(const CellPolytope &cell);
TwoCellBoundary two_cell_boundary(const OrientedDualGraph &g, const HomologyClass &x);

// Canonical simplicial subdivision of a cell, cut by the hyperplanes
// where two graph vertices have the same circle position (integer-offset
// potential differences).  Every simplex vertex is an integral weighting.
// Requires an integral basepoint and a non-degenerate cell.
struct CellSimplex {
  std::vector<RatVec> vertex_weights; // dim + 1 weightings, all integral
};

std::vector<CellSimplex> canonical_triangulation(const CellPolytope &cell);
std::vector<CellSimplex> canonical_triangulation(const OrientedDualGraph &g,
                                                 const HomologyClass &x);

} // namespace torelli
