#pragma once

#include <string>

#include "torelli/cycle_complex.hpp"
#include "torelli/genus2.hpp"

namespace torelli {

// Graph JSON schema:
//   { "surface_genus": g,
//     "vertices": [{"id": 0, "genus": 0}, ...],
//     "edges":    [{"id": 0, "tail": 0, "head": 1, "label": [ints]}, ...],
//     "weights":  {"0": "p/q", ...} }
// Weights are exact rationals serialized as strings; a missing entry or a
// missing "weights" object means weight zero.
WeightedCycle parse_graph_json(const std::string &text);

// Reads and parses a graph file.  With run_validate set, throws on any
// invariant violation, naming each failed invariant.
WeightedCycle load_graph_file(const std::string &path, bool run_validate = true);

// Deterministic serialization; parse(graph_to_json(w)) == w.
std::string graph_to_json(const WeightedCycle &w);

std::string export_dot(const WeightedCycle &w);
std::string export_dot(const QuotientTree &t);
std::string export_dot(const TwoCellBoundary &b);

} // namespace torelli
