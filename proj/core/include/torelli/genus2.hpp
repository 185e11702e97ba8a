#pragma once

#include <string>
#include <vector>

#include "torelli/homology.hpp"

namespace torelli {

// Reduced slope p/q in Q union {infinity}, classifying curves on the
// 4-punctured sphere.  Canonical form: gcd(p,q) = 1 and q > 0, with
// infinity stored as 1/0.
struct Slope {
  long long p = 0;
  long long q = 1;

  Slope() = default;
  Slope(long long pp, long long qq);

  static Slope infinity() { return Slope(1, 0); }

  friend bool operator==(const Slope &a, const Slope &b) { return a.p == b.p && a.q == b.q; }
  friend bool operator!=(const Slope &a, const Slope &b) { return !(a == b); }
  friend bool operator<(const Slope &a, const Slope &b) {
    return a.p != b.p ? a.p < b.p : a.q < b.q;
  }

  std::string str() const { return std::to_string(p) + "/" + std::to_string(q); }
  static Slope parse(const std::string &text); // "p/q" or "p"
};

// Element of PSL(2,Z): determinant +1, stored up to global sign with the
// first nonzero entry positive.
struct SlopeMatrix {
  long long a = 1, b = 0, c = 0, d = 1;

  SlopeMatrix() = default;
  SlopeMatrix(long long aa, long long bb, long long cc, long long dd);

  static SlopeMatrix identity() { return SlopeMatrix(); }
  SlopeMatrix inverse() const { return SlopeMatrix(d, -b, -c, a); }

  friend bool operator==(const SlopeMatrix &x, const SlopeMatrix &y) {
    return x.a == y.a && x.b == y.b && x.c == y.c && x.d == y.d;
  }
};

SlopeMatrix mul(const SlopeMatrix &x, const SlopeMatrix &y);

// The three orbits of the level-2 congruence group on slopes, named by
// the residues of (p, q) mod 2.  O10 is the separating class; O01 is the
// class along which W decreases.
enum class SlopeOrbit { O01, O10, O11 };

const char *orbit_name(SlopeOrbit o);

SlopeOrbit slope_orbit(const Slope &s);

// Action of a Dehn twist along a curve of slope s on slopes: the doubled
// parabolic v -> v + 2 det(s|v) s, so the twist along 1/0 takes 0/1 to
// 2/1.  Always a level-2 matrix fixing s.
SlopeMatrix twist_on_slopes(const Slope &s);

// Moebius action on slopes; gcd is preserved.
Slope mat2_apply(const SlopeMatrix &m, const Slope &s);

// Congruent to +-identity mod 2.
bool level2_member(const SlopeMatrix &m);

// Unordered coprime pair {p, q}, a vertex of the quotient tree.  Stored
// with p >= q.
struct WeightPair {
  long long p = 1, q = 0;

  WeightPair() = default;
  WeightPair(long long pp, long long qq);

  long long total() const { return p + q; } // the W value
  bool is_root() const { return p == 1 && q == 0; }

  friend bool operator==(const WeightPair &x, const WeightPair &y) {
    return x.p == y.p && x.q == y.q;
  }
  friend bool operator<(const WeightPair &x, const WeightPair &y) {
    return x.p != y.p ? x.p < y.p : x.q < y.q;
  }

  std::string str() const { return "{" + std::to_string(p) + "," + std::to_string(q) + "}"; }
};

// Path from {p,q} down to the root {1,0}, one subtraction of the smaller
// weight from the larger per step.  W strictly decreases along the path.
// Throws on a non-coprime pair.
std::vector<WeightPair> euclidean_descent(const WeightPair &w);

// The quotient tree on coprime weight pairs with p + q <= max_w, rooted
// at {1,0}; children of {p,q} are {p+q,q} and {p+q,p}.
struct QuotientTree {
  struct Node {
    WeightPair pair;
    int parent = -1; // index; -1 for the root
    std::vector<int> children;
  };
  std::vector<Node> nodes; // nodes[0] is the root
};

QuotientTree quotient_tree(long long max_w);

// A twist word (slope, exponent), leftmost letter acting first.
struct SlopeTwistLetter {
  Slope twist_slope;
  long long exponent = 1;
};

// Word of twists along separating (O10) slopes whose composite takes s1
// to s2.  Both inputs must lie in orbit O01.
std::vector<SlopeTwistLetter> farey_tree_path(const Slope &s1, const Slope &s2);

// Genus-2 stabilizer check: T_a^i T_b^j T_c^k with [a] = a1, [b] = a2,
// [c] = a1 + a2 acts trivially on homology iff i = j = k = 0.
bool stabilizer_homology_check(long long i, long long j, long long k);

} // namespace torelli
