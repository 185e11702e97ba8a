#pragma once

#include <optional>
#include <vector>

#include "torelli/rational.hpp"

namespace torelli {

using IntVec = std::vector<long long>;
using RatVec = std::vector<Rat>;

long long checked_add(long long a, long long b);
long long checked_mul(long long a, long long b);

// Dense integer matrix, row-major.  Sizes in this library stay tiny
// (2g x |edges| and smaller), so everything is exact 64-bit with overflow
// checks rather than arbitrary precision.
struct IntMat {
  int rows = 0;
  int cols = 0;
  std::vector<long long> a;

  IntMat() = default;
  IntMat(int r, int c) : rows(r), cols(c), a((size_t)r * c, 0) {}

  long long &at(int r, int c) { return a[(size_t)r * cols + c]; }
  long long at(int r, int c) const { return a[(size_t)r * cols + c]; }

  static IntMat identity(int n);

  friend bool operator==(const IntMat &x, const IntMat &y) {
    return x.rows == y.rows && x.cols == y.cols && x.a == y.a;
  }
};

IntMat mul(const IntMat &x, const IntMat &y);
IntVec mul(const IntMat &m, const IntVec &v);

// Rational matrix for the exact solvers.
struct RatMat {
  int rows = 0;
  int cols = 0;
  std::vector<Rat> a;

  RatMat() = default;
  RatMat(int r, int c) : rows(r), cols(c), a((size_t)r * c) {}

  Rat &at(int r, int c) { return a[(size_t)r * cols + c]; }
  const Rat &at(int r, int c) const { return a[(size_t)r * cols + c]; }
};

// Rank over Q by Gaussian elimination, exact.
int rat_rank(RatMat m);

// One particular solution of A x = b over Q, or nullopt if inconsistent.
std::optional<RatVec> rat_solve(RatMat a, RatVec b);

enum class IntSolveStatus { Solved, NoRationalSolution, NoIntegerSolution };

struct IntSolveResult {
  IntSolveStatus status;
  IntVec solution; // valid when status == Solved
};

// One integer solution of A x = b via column Hermite reduction.
// Distinguishes "no solution at all" from "rational but not integral".
IntSolveResult hermite_solve(IntMat a, const IntVec &b);

} // namespace torelli
