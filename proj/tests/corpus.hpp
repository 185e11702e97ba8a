#pragma once

#include <random>
#include <vector>

#include "torelli/cycle_complex.hpp"

// Shared generators and independent oracles for the unit and acceptance
// suites.  All randomness is seeded from TORELLI_CYCLES_SEED (default
// 20250810) for reproducibility.

namespace corpus {

using torelli::HomologyClass;
using torelli::OrientedDualGraph;
using torelli::WeightedCycle;

unsigned long seed_from_env();

// Valid graph (all four invariants) whose edge set is a union of closed
// walks, so the full support is recurrent.  Weights are positive
// integers.  When require_primitive is set, regenerates until the
// weighted class is primitive.
WeightedCycle random_recurrent_cycle(std::mt19937 &rng, bool require_primitive);

// Valid graph with no recurrence guarantee: random connected multigraph,
// labels drawn from the circulation space of the underlying graph,
// nonnegative integer weights, nonzero class.
WeightedCycle random_valid_cycle(std::mt19937 &rng);

// The genus-2 theta graph: regions R0, R1, edges a (label a1) and
// b (label a2) from R0 to R1 and c (label a1+a2) back, weights (p, q, r).
WeightedCycle make_theta(long long p, long long q, long long r);

// 2-vertex genus-3 graph with two edges each way (labels a1, a2 both
// ways), a W-plateau 1-cell; weights (w1, w2, w3, w4).
WeightedCycle make_plateau(long long w1, long long w2, long long w3, long long w4);

// --- independent oracles -------------------------------------------------

// Edge lies on a directed cycle of the support subgraph: depth-first
// search for a path from head back to tail.
bool edge_on_cycle_oracle(const OrientedDualGraph &g, const std::set<int> &support,
                          int edge_id);

// Affine dimension of the potential parametrization: rank of the
// |edges| x |vertices| incidence matrix over Q.
int incidence_rank_oracle(const OrientedDualGraph &g);

// Continued-fraction quotients of p/q (p >= q >= 1) by repeated division;
// their sum counts the subtractive Euclidean steps down to {1,0}.
std::vector<long long> cf_quotients(long long p, long long q);

bool cycles_equal(const WeightedCycle &a, const WeightedCycle &b);

} // namespace corpus
