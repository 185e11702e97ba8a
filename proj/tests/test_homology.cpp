#include <doctest.h>

#include <random>

#include "torelli/homology.hpp"

using namespace torelli;

namespace {

HomologyClass cls(std::initializer_list<long long> coords) {
  IntVec v(coords);
  int g = (int)v.size() / 2;
  return HomologyClass(g, std::move(v));
}

HomologyClass random_class(std::mt19937 &rng, int genus, int bound) {
  IntVec v(2 * genus);
  for (auto &x : v) x = (long long)(rng() % (2 * bound + 1)) - bound;
  return HomologyClass(genus, std::move(v));
}

} // namespace

TEST_CASE("intersection form basis values") {
  auto a1 = HomologyClass::basis(2, 0), b1 = HomologyClass::basis(2, 1);
  CHECK(intersection_form(a1, b1) == 1);
  CHECK(intersection_form(b1, a1) == -1);
  CHECK(intersection_form(a1, a1) == 0);
  // <a1+b2, b1+a2> = 1 + (-1) = 0, expanded bilinearly by hand
  CHECK(intersection_form(cls({1, 0, 0, 1}), cls({0, 1, 1, 0})) == 0);
  CHECK_THROWS_AS(intersection_form(a1, HomologyClass::basis(3, 0)), std::invalid_argument);
}

TEST_CASE("intersection form is bilinear and antisymmetric") {
  std::mt19937 rng(7);
  for (int i = 0; i < 200; ++i) {
    auto u = random_class(rng, 3, 4), v = random_class(rng, 3, 4), w = random_class(rng, 3, 4);
    CHECK(intersection_form(u, v) == -intersection_form(v, u));
    CHECK(intersection_form(u + w, v) == intersection_form(u, v) + intersection_form(w, v));
    CHECK(intersection_form(u, u) == 0);
  }
}

TEST_CASE("transvection basics") {
  // zero class gives the identity
  CHECK(transvection(HomologyClass::zero(2)).is_identity());

  // genus 1, c = a1: a1 fixed, b1 -> a1 + b1
  auto t = transvection(cls({1, 0}));
  CHECK(t.apply(cls({1, 0})) == cls({1, 0}));
  CHECK(t.apply(cls({0, 1})) == cls({1, 1}));
  CHECK(t.satisfies_symplectic_relation());

  // a class crossing c once is moved
  auto c = cls({1, 0, 0, 0, 0, 0});
  auto v = cls({0, 1, 0, 0, 0, 0});
  CHECK(intersection_form(c, v) == 1);
  CHECK(transvection(c).apply(v) != v);
}

TEST_CASE("transvection is symplectic, identity only for zero class") {
  std::mt19937 rng(11);
  for (int i = 0; i < 150; ++i) {
    auto c = random_class(rng, 3, 3);
    auto t = transvection(c);
    CHECK(t.satisfies_symplectic_relation());
    CHECK(t.is_identity() == c.is_zero());
  }
}

TEST_CASE("word_action composition and inverses") {
  CHECK(word_action(TwistWord{}).is_identity());

  auto c = cls({1, 0, 0, 1});
  TwistWord inverse_pair{{{c, 1}, {c, -1}}};
  CHECK(word_action(inverse_pair).is_identity());

  // (T_{a1})^2 on genus 1: b1 -> b1 + 2 a1, the squared transvection
  TwistWord sq{{{cls({1, 0}), 2}}};
  CHECK(word_action(sq).apply(cls({0, 1})) == cls({2, 1}));
  auto direct = mul(transvection(cls({1, 0})).mat, transvection(cls({1, 0})).mat);
  CHECK(word_action(sq).mat == direct);

  TwistWord mixed{{{cls({1, 0}), 1}, {cls({0, 1}), 2}}};
  CHECK_THROWS_AS(word_action(TwistWord{{{cls({1, 0}), 1}, {cls({1, 0, 0, 0}), 1}}}),
                  std::invalid_argument);
  CHECK(word_action(mixed).satisfies_symplectic_relation());
}

TEST_CASE("word_action power agrees with repeated multiplication") {
  std::mt19937 rng(23);
  for (int i = 0; i < 100; ++i) {
    auto c = random_class(rng, 2, 2);
    long long e = (long long)(rng() % 7) - 3;
    if (e == 0) continue;
    TwistWord w{{{c, e}}};
    IntMat acc = IntMat::identity(4);
    IntMat step = e > 0 ? transvection(c).mat : word_action(TwistWord{{{c, -1}}}).mat;
    for (long long k = 0; k < std::abs(e); ++k) acc = mul(step, acc);
    CHECK(word_action(w).mat == acc);
  }
}

TEST_CASE("is_torelli on the generating families") {
  // separating twist: class zero
  TwistWord sep{{{HomologyClass::zero(3), 1}}};
  CHECK(is_torelli(sep));

  // bounding pair word with equal nonzero classes
  auto c = cls({1, 0, 1, 0, 0, 0});
  TwistWord bp{{{c, 1}, {c, -1}}};
  CHECK(is_torelli(bp));

  // a single nonseparating twist acts nontrivially
  TwistWord ns{{{cls({1, 0, 0, 0, 0, 0}), 1}}};
  CHECK(!is_torelli(ns));
}

TEST_CASE("bounding_pair_action contract and errors") {
  auto a1 = HomologyClass::basis(3, 0);
  CHECK(bounding_pair_action(a1, a1).is_identity());

  auto sum = cls({1, 0, 1, 0, 0, 0});
  CHECK(bounding_pair_action(sum, sum).is_identity());

  CHECK_THROWS_WITH_AS(bounding_pair_action(a1, HomologyClass::basis(3, 2)),
                       "bounding_pair_action: not a bounding pair at homology level",
                       std::invalid_argument);
  CHECK_THROWS_WITH_AS(bounding_pair_action(HomologyClass::zero(3), HomologyClass::zero(3)),
                       "bounding_pair_action: separating classes, not a bounding pair",
                       std::invalid_argument);
}

TEST_CASE("lantern relation at homology level") {
  auto z = HomologyClass::zero(3);
  CHECK(lantern_matrix_check(z, z, z, z, z, z, z));

  auto a = cls({1, 0, 0, 0, 0, 0});
  auto b = cls({0, 0, 1, 0, 0, 0});
  auto c = HomologyClass::zero(3);
  auto d = cls({-1, 0, -1, 0, 0, 0});
  auto x = a + b, y = b + c, zz = a + c;
  CHECK(lantern_matrix_check(a, b, c, d, x, y, zz));

  // oracle: in this configuration all classes span an isotropic subspace,
  // so both sides are I plus the sum of the twist nilpotents
  auto nil = [](const HomologyClass &h) {
    IntMat m = transvection(h).mat;
    for (int i = 0; i < 6; ++i) m.at(i, i) -= 1;
    return m;
  };
  IntMat lhs = IntMat::identity(6), rhs = IntMat::identity(6);
  for (const auto &h : {x, y, zz})
    for (int i = 0; i < 6; ++i)
      for (int j = 0; j < 6; ++j) lhs.at(i, j) += nil(h).at(i, j);
  for (const auto &h : {a, b, c, d})
    for (int i = 0; i < 6; ++i)
      for (int j = 0; j < 6; ++j) rhs.at(i, j) += nil(h).at(i, j);
  CHECK(lhs == rhs);
  CHECK(word_action(TwistWord{{{x, 1}, {y, 1}, {zz, 1}}}).mat == lhs);

  // violating x = a + b is a configuration error
  CHECK_THROWS_AS(lantern_matrix_check(a, b, c, d, a, y, zz), std::invalid_argument);
  // genus 2 is rejected
  auto g2 = HomologyClass::zero(2);
  CHECK_THROWS_AS(lantern_matrix_check(g2, g2, g2, g2, g2, g2, g2), std::invalid_argument);
}

TEST_CASE("lantern check is invariant under negating all classes") {
  std::mt19937 rng(31);
  for (int i = 0; i < 60; ++i) {
    auto a = random_class(rng, 3, 2), b = random_class(rng, 3, 2);
    auto c = random_class(rng, 3, 2);
    auto d = -(a + b + c);
    auto x = a + b, y = b + c, z = a + c;
    bool plus = lantern_matrix_check(a, b, c, d, x, y, z);
    bool minus = lantern_matrix_check(-a, -b, -c, -d, -x, -y, -z);
    CHECK(plus == minus);
  }
}

TEST_CASE("word_reduce free reduction") {
  auto u = cls({1, 0, 0, 1});
  TwistWord w{{{u, 1}, {u, -1}}};
  CHECK(word_reduce(w).empty());

  TwistWord merge{{{u, 2}, {u, -1}}};
  auto r = word_reduce(merge);
  REQUIRE(r.letters.size() == 1);
  CHECK(r.letters[0].exponent == 1);

  // only literally adjacent letters cancel; no commutation
  auto v = cls({0, 1, 0, 0});
  TwistWord telescoping{{{u, 1}, {v, 1}, {u, -1}}};
  CHECK(word_reduce(telescoping).letters.size() == 3);

  // reduction preserves the action
  std::mt19937 rng(41);
  for (int i = 0; i < 60; ++i) {
    TwistWord rand_word;
    int len = 1 + (int)(rng() % 6);
    for (int k = 0; k < len; ++k) {
      long long e = (long long)(rng() % 5) - 2;
      rand_word.letters.push_back({random_class(rng, 2, 2), e});
    }
    CHECK(word_action(word_reduce(rand_word)).mat == word_action(rand_word).mat);
  }
}

TEST_CASE("point_push formula and homomorphism property") {
  auto gamma = cls({1, 0, 0, 0});
  RelativeClass eps{2, HomologyClass::zero(2), 1};

  // zero loop: unchanged
  CHECK(point_push(HomologyClass::zero(2), eps) == eps);
  // absolute classes (m = 0) are fixed
  RelativeClass absolute{2, gamma, 0};
  CHECK(point_push(cls({0, 1, 1, 0}), absolute) == absolute);
  // the arc class picks up gamma
  auto pushed = point_push(gamma, eps);
  CHECK(pushed.absolute == gamma);
  CHECK(pushed.arc_coefficient == 1);

  CHECK_THROWS_AS(point_push(cls({1, 0}), eps), std::invalid_argument);

  std::mt19937 rng(53);
  for (int i = 0; i < 100; ++i) {
    auto g1 = random_class(rng, 2, 3), g2 = random_class(rng, 2, 3);
    RelativeClass w{2, random_class(rng, 2, 3), (long long)(rng() % 5) - 2};
    CHECK(point_push(g1, point_push(g2, w)) == point_push(g1 + g2, w));
  }
}

TEST_CASE("point_push is the identity map exactly for the zero loop") {
  std::mt19937 rng(59);
  for (int i = 0; i < 100; ++i) {
    auto gamma = random_class(rng, 2, 2);
    RelativeClass eps{2, HomologyClass::zero(2), 1};
    bool fixes_everything = point_push(gamma, eps) == eps;
    CHECK(fixes_everything == gamma.is_zero());
  }
}

TEST_CASE("twist word text format") {
  TwistWord w = parse_twist_word("T[0,0,0,0,0,0]^1");
  REQUIRE(w.letters.size() == 1);
  CHECK(w.letters[0].is_separating());
  CHECK(w.letters[0].curve_class.genus == 3);

  TwistWord two = parse_twist_word("T[1,0,0,0]^2 T[0,1,0,0]^-1");
  REQUIRE(two.letters.size() == 2);
  CHECK(two.letters[0].exponent == 2);
  CHECK(two.letters[1].exponent == -1);
  CHECK(!two.letters[0].is_separating());

  CHECK(parse_twist_word(two.str()).letters.size() == 2); // round trip
  CHECK(parse_twist_word("").empty());

  CHECK_THROWS_AS(parse_twist_word("T[1,0,0]^1"), std::invalid_argument); // odd length
  CHECK_THROWS_AS(parse_twist_word("T[1,0]^0"), std::invalid_argument);   // zero exponent
  CHECK_THROWS_AS(parse_twist_word("T[1,0]"), std::invalid_argument);     // missing exponent
  CHECK_THROWS_AS(parse_twist_word("S[1,0]^1"), std::invalid_argument);
  CHECK_THROWS_AS(parse_twist_word("T[a,b]^1"), std::invalid_argument);
}
