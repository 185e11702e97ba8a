#pragma once

#include <set>
#include <string>
#include <vector>

#include "torelli/homology.hpp"

namespace torelli {

// Directed multigraph dual to an oriented multicurve on a closed surface:
// vertices are complementary regions (with their genus), edges are the
// curves, directed by the transverse orientation, each labeled with the
// curve's homology class.  Vertex and edge ids are arbitrary integers and
// are stable across serialization.
struct OrientedDualGraph {
  struct Vertex {
    int id = 0;
    int region_genus = 0;
  };
  struct Edge {
    int id = 0;
    int tail = 0;
    int head = 0;
    IntVec label; // length 2 * surface_genus
  };

  int surface_genus = 2;
  std::vector<Vertex> vertices;
  std::vector<Edge> edges;

  int vertex_index(int id) const; // -1 if absent
  int edge_index(int id) const;

  // Edge endpoints per vertex, self-loops counted twice.
  int degree(int vertex_id) const;

  std::set<int> all_edge_ids() const;
};

// A point of an orthant of the multicurve space: the graph together with
// one nonnegative rational weight per edge (parallel to graph.edges).
struct WeightedCycle {
  OrientedDualGraph graph;
  RatVec weights;

  Rat weight_of(int edge_id) const;
  std::set<int> support() const; // ids of positive-weight edges
};

struct Violation {
  std::string invariant; // short name, e.g. "annulus region"
  std::string detail;    // names the offending vertex/edge
};

// Checks the four structural invariants (connectedness, null-homologous
// region boundaries, Euler consistency, no disk/annulus regions) plus
// basic well-formedness.  Violations are returned, not thrown.
std::vector<Violation> validate(const OrientedDualGraph &g);
std::vector<Violation> validate(const WeightedCycle &w); // adds weight checks

// True iff every support edge has head and tail in one strongly connected
// component of the support subgraph, i.e. lies on a directed cycle.
// Throws on empty support.
bool is_recurrent(const OrientedDualGraph &g, const std::set<int> &support);
bool is_recurrent(const OrientedDualGraph &g); // full edge set

// All nonempty proper vertex sets U with no support edge leaving U and at
// least one support edge entering U.  Each such U is a subsurface whose
// oriented boundary is a nonempty submulticurve; the list is empty iff
// the support subgraph is recurrent.  Sets are vertex-id lists, ordered
// by size then lexicographically.
std::vector<std::vector<int>> sink_subsurfaces(const OrientedDualGraph &g,
                                               const std::set<int> &support);

// Reduced multicurve: recurrent on the positive-weight support.  The
// empty support is reduced by convention.
bool is_reduced(const WeightedCycle &w);

// Sum of weight(e) * label(e), as exact rationals.
RatVec homology_class(const WeightedCycle &w);

// The same class, required to be integral.
HomologyClass integral_homology_class(const WeightedCycle &w);

// Removes every zero-weight edge.  Distinct endpoints merge with region
// genera adding; removing a zero self-loop raises its vertex's genus by
// one.  Euler consistency is preserved.
WeightedCycle contract_zero_edges(const WeightedCycle &w);

// Draining: repeatedly subtracts the combined boundary of all sink
// subsurfaces until the support is recurrent, contracting edges whose
// weight reaches zero.  Preserves the homology class exactly and
// terminates in at most |edges| iterations.  Requires a valid graph and a
// nonzero homology class.
WeightedCycle drain(const WeightedCycle &w, int *steps_out = nullptr);

} // namespace torelli
