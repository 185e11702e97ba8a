#include <doctest.h>

#include <random>

#include "corpus.hpp"
#include "torelli/dual_graph.hpp"

using namespace torelli;

namespace {

bool has_violation(const std::vector<Violation> &vs, const std::string &name) {
  for (const auto &v : vs)
    if (v.invariant.find(name) != std::string::npos) return true;
  return false;
}

} // namespace

TEST_CASE("validate accepts the genus-2 theta graph") {
  auto theta = corpus::make_theta(2, 1, 1);
  CHECK(validate(theta).empty());
}

TEST_CASE("validate rejects annulus regions") {
  // a genus-0 vertex of degree 2
  OrientedDualGraph g;
  g.surface_genus = 2;
  g.vertices = {{0, 0}, {1, 1}};
  g.edges = {{0, 0, 1, {0, 0, 0, 0}}, {1, 1, 0, {0, 0, 0, 0}}};
  auto vs = validate(g);
  CHECK(has_violation(vs, "annulus region"));
}

TEST_CASE("validate rejects unbalanced region boundaries") {
  auto theta = corpus::make_theta(1, 1, 1);
  theta.graph.edges[2].label = {1, 0, 0, 0}; // breaks in-sum = out-sum at both vertices
  auto vs = validate(theta.graph);
  CHECK(has_violation(vs, "region boundary not null-homologous"));
}

TEST_CASE("validate rejects Euler mismatch and disconnection") {
  auto theta = corpus::make_theta(1, 1, 1);
  theta.graph.surface_genus = 3;
  theta.graph.edges[0].label = {1, 0, 0, 0, 0, 0};
  theta.graph.edges[1].label = {0, 0, 1, 0, 0, 0};
  theta.graph.edges[2].label = {1, 0, 1, 0, 0, 0};
  CHECK(has_violation(validate(theta.graph), "Euler characteristic"));

  OrientedDualGraph g;
  g.surface_genus = 2;
  g.vertices = {{0, 1}, {1, 1}};
  g.edges = {{0, 0, 0, {0, 0, 0, 0}}, {1, 1, 1, {0, 0, 0, 0}}};
  CHECK(has_violation(validate(g), "disconnected"));
}

TEST_CASE("validate flags negative weights and label length") {
  auto theta = corpus::make_theta(1, 1, 1);
  theta.weights[0] = Rat(-1);
  CHECK(has_violation(validate(theta), "negative weight"));

  auto bad = corpus::make_theta(1, 1, 1);
  bad.graph.edges[0].label = {1, 0, 0};
  CHECK(has_violation(validate(bad.graph), "label length"));
}

TEST_CASE("is_recurrent basic shapes") {
  // one vertex, one self-loop
  OrientedDualGraph loop;
  loop.surface_genus = 2;
  loop.vertices = {{0, 1}};
  loop.edges = {{0, 0, 0, {1, 0, 0, 0}}};
  CHECK(is_recurrent(loop));

  // theta: two edges one way, one back
  auto theta = corpus::make_theta(1, 1, 1);
  CHECK(is_recurrent(theta.graph));

  // both edges the same way: the head vertex absorbs
  OrientedDualGraph sink;
  sink.surface_genus = 2;
  sink.vertices = {{0, 0}, {1, 0}};
  sink.edges = {{0, 0, 1, {1, 0, 0, 0}}, {1, 0, 1, {-1, 0, 0, 0}}};
  CHECK(!is_recurrent(sink));
  CHECK(sink_subsurfaces(sink, sink.all_edge_ids()) == std::vector<std::vector<int>>{{1}});

  CHECK_THROWS_AS(is_recurrent(theta.graph, {}), std::invalid_argument);
}

TEST_CASE("sink_subsurfaces on a three-vertex chain") {
  OrientedDualGraph chain;
  chain.surface_genus = 2;
  chain.vertices = {{0, 1}, {1, 1}, {2, 1}};
  chain.edges = {{0, 0, 1, {0, 0, 0, 0}}, {1, 1, 2, {0, 0, 0, 0}}};
  auto sinks = sink_subsurfaces(chain, chain.all_edge_ids());
  std::vector<std::vector<int>> expected{{2}, {1, 2}};
  CHECK(sinks == expected);

  auto theta = corpus::make_theta(1, 1, 1);
  CHECK(sink_subsurfaces(theta.graph, theta.graph.all_edge_ids()).empty());
}

TEST_CASE("recurrence equals absence of sink subsurfaces equals the cycle oracle") {
  std::mt19937 rng(corpus::seed_from_env());
  for (int i = 0; i < 120; ++i) {
    auto w = corpus::random_valid_cycle(rng);
    auto support = w.graph.all_edge_ids();
    bool r1 = is_recurrent(w.graph, support);
    bool r2 = sink_subsurfaces(w.graph, support).empty();
    bool r3 = true;
    for (const auto &e : w.graph.edges)
      r3 = r3 && corpus::edge_on_cycle_oracle(w.graph, support, e.id);
    CHECK(r1 == r2);
    CHECK(r1 == r3);
  }
}

TEST_CASE("is_reduced follows the positive support") {
  auto theta = corpus::make_theta(2, 1, 1);
  CHECK(is_reduced(theta));

  // support {a, b} only: both edges point the same way
  CHECK(!is_reduced(corpus::make_theta(2, 1, 0)));

  // empty support is reduced by convention
  CHECK(is_reduced(corpus::make_theta(0, 0, 0)));
}

TEST_CASE("homology_class evaluation") {
  auto theta = corpus::make_theta(2, 3, 0);
  RatVec h = homology_class(theta);
  CHECK(h == RatVec{Rat(2), Rat(0), Rat(3), Rat(0)});
  CHECK(integral_homology_class(theta) == HomologyClass(2, {2, 0, 3, 0}));

  auto zero = corpus::make_theta(0, 0, 0);
  for (const Rat &x : homology_class(zero)) CHECK(x.is_zero());

  auto frac = corpus::make_theta(1, 1, 0);
  frac.weights[0] = Rat(1, 2);
  CHECK_THROWS_AS(integral_homology_class(frac), std::domain_error);
}

TEST_CASE("contract_zero_edges merges regions and adds handles") {
  // zero edge between distinct genus-0 vertices of degree 3 each
  auto theta = corpus::make_theta(2, 1, 0);
  auto contracted = contract_zero_edges(theta);
  REQUIRE(contracted.graph.vertices.size() == 1);
  CHECK(contracted.graph.vertices[0].region_genus == 0);
  CHECK(contracted.graph.degree(contracted.graph.vertices[0].id) == 4);
  CHECK(contracted.graph.edges.size() == 2);

  // no zero weights: unchanged
  auto full = corpus::make_theta(2, 1, 1);
  CHECK(corpus::cycles_equal(contract_zero_edges(full), full));

  // zero self-loop at a genus-0 degree-3 vertex: becomes genus 1, degree 1
  OrientedDualGraph g;
  g.surface_genus = 2;
  g.vertices = {{0, 0}, {1, 1}};
  g.edges = {{0, 0, 0, {0, 0, 0, 0}}, {1, 0, 1, {1, 0, 0, 0}}};
  WeightedCycle w{g, {Rat(0), Rat(1)}};
  CHECK(g.degree(0) == 3);
  auto c = contract_zero_edges(w);
  REQUIRE(c.graph.vertices.size() == 2);
  CHECK(c.graph.vertices[0].region_genus == 1); // was 0, gained a handle
  CHECK(c.graph.degree(0) == 1);

  // Euler total is preserved by contraction
  std::mt19937 rng(77);
  for (int i = 0; i < 60; ++i) {
    auto rc = corpus::random_valid_cycle(rng);
    for (auto &wt : rc.weights)
      if (rng() % 3 == 0) wt = Rat(0);
    auto after = contract_zero_edges(rc);
    long long before_total = 0, after_total = 0;
    for (const auto &v : rc.graph.vertices)
      before_total += 2 - 2LL * v.region_genus - rc.graph.degree(v.id);
    for (const auto &v : after.graph.vertices)
      after_total += 2 - 2LL * v.region_genus - after.graph.degree(v.id);
    CHECK(before_total == after_total);
  }
}

TEST_CASE("drain: worked example with parallel opposite labels") {
  // two vertices, both edges a -> b, labels u and -u, weights (2, 1)
  OrientedDualGraph g;
  g.surface_genus = 2;
  g.vertices = {{0, 1}, {1, 1}};
  g.edges = {{0, 0, 1, {1, 0, 0, 0}}, {1, 0, 1, {-1, 0, 0, 0}}};
  WeightedCycle w{g, {Rat(2), Rat(1)}};

  RatVec before = homology_class(w);
  int steps = 0;
  auto drained = drain(w, &steps);
  CHECK(steps == 1);
  REQUIRE(drained.graph.vertices.size() == 1);
  REQUIRE(drained.graph.edges.size() == 1);
  CHECK(drained.graph.edges[0].tail == drained.graph.edges[0].head);
  CHECK(drained.weights[0] == Rat(1));
  CHECK(drained.graph.edges[0].label == IntVec{1, 0, 0, 0});
  CHECK(homology_class(drained) == before);
}

TEST_CASE("drain: reduced input is returned unchanged") {
  auto theta = corpus::make_theta(2, 1, 1);
  CHECK(corpus::cycles_equal(drain(theta), theta));
}

TEST_CASE("drain rejects the zero class") {
  OrientedDualGraph g;
  g.surface_genus = 2;
  g.vertices = {{0, 1}, {1, 1}};
  g.edges = {{0, 0, 1, {1, 0, 0, 0}}, {1, 0, 1, {-1, 0, 0, 0}}};
  WeightedCycle w{g, {Rat(1), Rat(1)}};
  CHECK_THROWS_AS(drain(w), std::invalid_argument);
}

TEST_CASE("drain properties over the random corpus") {
  std::mt19937 rng(corpus::seed_from_env() + 1);
  for (int i = 0; i < 120; ++i) {
    auto w = corpus::random_valid_cycle(rng);
    RatVec before = homology_class(w);
    int steps = 0;
    auto drained = drain(w, &steps);
    CHECK(is_reduced(drained));
    CHECK(homology_class(drained) == before);
    CHECK(steps <= (int)w.graph.edges.size());
    CHECK(corpus::cycles_equal(drain(drained), drained)); // idempotent
  }
}
