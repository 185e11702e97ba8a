#pragma once

#include <string>
#include <vector>

#include "torelli/linalg.hpp"

namespace torelli {

// Integer class in H1 of a closed genus-g surface, written in the ordered
// symplectic basis (a1, b1, ..., ag, bg) with <a_i, b_i> = +1.
struct HomologyClass {
  int genus = 0;
  IntVec coords; // length 2 * genus

  HomologyClass() = default;
  HomologyClass(int g, IntVec c);

  static HomologyClass zero(int g) { return HomologyClass(g, IntVec(2 * g, 0)); }
  // Basis vectors: a_i has index 2i, b_i has index 2i+1 (0-based i).
  static HomologyClass basis(int g, int index);

  bool is_zero() const;
  bool is_primitive() const; // gcd of coordinates is 1

  friend bool operator==(const HomologyClass &x, const HomologyClass &y) {
    return x.genus == y.genus && x.coords == y.coords;
  }
  friend bool operator!=(const HomologyClass &x, const HomologyClass &y) { return !(x == y); }

  HomologyClass operator+(const HomologyClass &o) const;
  HomologyClass operator-() const;
  HomologyClass scaled(long long k) const;

  std::string str() const; // "[c0,c1,...]"
};

// Integer 2g x 2g matrix preserving the standard symplectic form.
struct SymplecticMatrix {
  int genus = 0;
  IntMat mat;

  static SymplecticMatrix identity(int g) { return {g, IntMat::identity(2 * g)}; }
  bool is_identity() const { return mat == IntMat::identity(2 * genus); }
  // M^T J M == J, checked by explicit multiplication.
  bool satisfies_symplectic_relation() const;

  HomologyClass apply(const HomologyClass &v) const;

  friend bool operator==(const SymplecticMatrix &x, const SymplecticMatrix &y) {
    return x.genus == y.genus && x.mat == y.mat;
  }
};

// Formal product of Dehn twists.  Each letter carries only the homology
// class of its curve; a zero class means the curve separates.
struct TwistLetter {
  HomologyClass curve_class;
  long long exponent = 1;

  bool is_separating() const { return curve_class.is_zero(); }
};

struct TwistWord {
  std::vector<TwistLetter> letters;

  bool empty() const { return letters.empty(); }
  // All letters must share one genus; throws on mismatch.  Returns 0 for
  // the empty word (genus-free identity).
  int common_genus() const;

  std::string str() const; // text format: T[c0,...]^e separated by spaces
};

// Element of H1(S', P) for the capped genus-(g-1) surface S' with two
// marked points: an absolute part from H1(S') plus a multiple of the arc
// class joining the marked points.
struct RelativeClass {
  int genus = 0;              // genus of S'
  HomologyClass absolute;     // image of H1(S')
  long long arc_coefficient = 0;

  friend bool operator==(const RelativeClass &x, const RelativeClass &y) {
    return x.genus == y.genus && x.absolute == y.absolute &&
           x.arc_coefficient == y.arc_coefficient;
  }
};

// The standard symplectic matrix J (pairs a_i with b_i).
IntMat symplectic_form(int genus);

// u^T J v.  Bilinear and antisymmetric; <a_i, b_i> = +1.
long long intersection_form(const HomologyClass &u, const HomologyClass &v);

// Matrix of the twist action v -> v + <c, v> c.  With the basis convention
// above, the twist along a1 sends b1 to a1 + b1.  Always symplectic;
// identity exactly when c = 0.
SymplecticMatrix transvection(const HomologyClass &c);

// Product of transvection(c_i)^{e_i} with the leftmost letter acting
// first, i.e. as matrices M_n * ... * M_1.
SymplecticMatrix word_action(const TwistWord &w);

// True iff the word acts trivially on H1, the defining property of the
// Torelli group.
bool is_torelli(const TwistWord &w);

// Action of the bounding pair word T_c T_d^{-1}.  Requires c == d != 0;
// the result is always the identity matrix.
SymplecticMatrix bounding_pair_action(const HomologyClass &c, const HomologyClass &d);

// Checks the homological lantern constraints (a+b+c+d = 0, x = a+b,
// y = b+c, z = a+c, genus >= 3) and then compares the actions of
// T_x T_y T_z and T_a T_b T_c T_d as matrices.
bool lantern_matrix_check(const HomologyClass &a, const HomologyClass &b,
                          const HomologyClass &c, const HomologyClass &d,
                          const HomologyClass &x, const HomologyClass &y,
                          const HomologyClass &z);

// Free reduction: merges adjacent letters with equal curve class and drops
// zero exponents.  No commutation rules are applied.
TwistWord word_reduce(const TwistWord &w);

// Point-pushing along gamma on relative homology:
// (absolute, m) -> (absolute + m * gamma, m).
RelativeClass point_push(const HomologyClass &gamma, const RelativeClass &w);

// Parses the text format "T[c0,c1,...]^e ...", whitespace separated.
// Rejects odd-length coordinate lists and zero exponents.
TwistWord parse_twist_word(const std::string &text);

} // namespace torelli
