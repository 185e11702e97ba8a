#include "torelli/linalg.hpp"

#include <cstdlib>
#include <stdexcept>

namespace torelli {

long long checked_add(long long a, long long b) {
  long long r;
  if (__builtin_add_overflow(a, b, &r))
    throw std::overflow_error("integer overflow in addition");
  return r;
}

long long checked_mul(long long a, long long b) {
  long long r;
  if (__builtin_mul_overflow(a, b, &r))
    throw std::overflow_error("integer overflow in multiplication");
  return r;
}

IntMat IntMat::identity(int n) {
  IntMat m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMat mul(const IntMat &x, const IntMat &y) {
  if (x.cols != y.rows) throw std::invalid_argument("IntMat mul: shape mismatch");
  IntMat r(x.rows, y.cols);
  for (int i = 0; i < x.rows; ++i)
    for (int k = 0; k < x.cols; ++k) {
      long long xik = x.at(i, k);
      if (xik == 0) continue;
      for (int j = 0; j < y.cols; ++j)
        r.at(i, j) = checked_add(r.at(i, j), checked_mul(xik, y.at(k, j)));
    }
  return r;
}

IntVec mul(const IntMat &m, const IntVec &v) {
  if ((size_t)m.cols != v.size()) throw std::invalid_argument("IntMat mul: shape mismatch");
  IntVec r(m.rows, 0);
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j)
      if (m.at(i, j) != 0)
        r[i] = checked_add(r[i], checked_mul(m.at(i, j), v[j]));
  return r;
}

int rat_rank(RatMat m) {
  int rank = 0;
  for (int col = 0; col < m.cols && rank < m.rows; ++col) {
    int pivot = -1;
    for (int r = rank; r < m.rows; ++r)
      if (!m.at(r, col).is_zero()) { pivot = r; break; }
    if (pivot < 0) continue;
    for (int j = 0; j < m.cols; ++j) std::swap(m.at(pivot, j), m.at(rank, j));
    Rat inv = Rat(1) / m.at(rank, col);
    for (int j = col; j < m.cols; ++j) m.at(rank, j) *= inv;
    for (int r = 0; r < m.rows; ++r) {
      if (r == rank || m.at(r, col).is_zero()) continue;
      Rat f = m.at(r, col);
      for (int j = col; j < m.cols; ++j) m.at(r, j) -= f * m.at(rank, j);
    }
    ++rank;
  }
  return rank;
}

std::optional<RatVec> rat_solve(RatMat a, RatVec b) {
  if ((size_t)a.rows != b.size()) throw std::invalid_argument("rat_solve: shape mismatch");
  std::vector<int> pivot_col(a.rows, -1);
  int rank = 0;
  for (int col = 0; col < a.cols && rank < a.rows; ++col) {
    int pivot = -1;
    for (int r = rank; r < a.rows; ++r)
      if (!a.at(r, col).is_zero()) { pivot = r; break; }
    if (pivot < 0) continue;
    for (int j = 0; j < a.cols; ++j) std::swap(a.at(pivot, j), a.at(rank, j));
    std::swap(b[pivot], b[rank]);
    Rat inv = Rat(1) / a.at(rank, col);
    for (int j = col; j < a.cols; ++j) a.at(rank, j) *= inv;
    b[rank] *= inv;
    for (int r = 0; r < a.rows; ++r) {
      if (r == rank || a.at(r, col).is_zero()) continue;
      Rat f = a.at(r, col);
      for (int j = col; j < a.cols; ++j) a.at(r, j) -= f * a.at(rank, j);
      b[r] -= f * b[rank];
    }
    pivot_col[rank] = col;
    ++rank;
  }
  for (int r = rank; r < a.rows; ++r)
    if (!b[r].is_zero()) return std::nullopt;
  RatVec x(a.cols, Rat(0));
  for (int r = 0; r < rank; ++r) x[pivot_col[r]] = b[r];
  return x;
}

namespace {

// Subtract q * column src from column dst, in both the working matrix and
// the accumulated unimodular transform.
void col_axpy(IntMat &m, IntMat &u, int dst, int src, long long q) {
  if (q == 0) return;
  for (int r = 0; r < m.rows; ++r)
    m.at(r, dst) = checked_add(m.at(r, dst), checked_mul(-q, m.at(r, src)));
  for (int r = 0; r < u.rows; ++r)
    u.at(r, dst) = checked_add(u.at(r, dst), checked_mul(-q, u.at(r, src)));
}

void col_swap(IntMat &m, IntMat &u, int i, int j) {
  if (i == j) return;
  for (int r = 0; r < m.rows; ++r) std::swap(m.at(r, i), m.at(r, j));
  for (int r = 0; r < u.rows; ++r) std::swap(u.at(r, i), u.at(r, j));
}

void col_negate(IntMat &m, IntMat &u, int j) {
  for (int r = 0; r < m.rows; ++r) m.at(r, j) = checked_mul(-1, m.at(r, j));
  for (int r = 0; r < u.rows; ++r) u.at(r, j) = checked_mul(-1, u.at(r, j));
}

} // namespace

IntSolveResult hermite_solve(IntMat a, const IntVec &b) {
  if ((size_t)a.rows != b.size()) throw std::invalid_argument("hermite_solve: shape mismatch");
  const int n = a.cols;
  IntMat u = IntMat::identity(n);

  // Column echelon form: after processing row r with pivot column c,
  // a.at(r, j) == 0 for all j > c, and pivot columns are 0..k-1.
  std::vector<std::pair<int, int>> pivots; // (row, col)
  int col = 0;
  for (int row = 0; row < a.rows && col < n; ++row) {
    for (;;) {
      int best = -1;
      for (int j = col; j < n; ++j) {
        if (a.at(row, j) == 0) continue;
        if (best < 0 || std::llabs(a.at(row, j)) < std::llabs(a.at(row, best)))
          best = j;
      }
      if (best < 0) break; // row is zero from col on
      col_swap(a, u, col, best);
      bool done = true;
      for (int j = col + 1; j < n; ++j) {
        if (a.at(row, j) == 0) continue;
        long long q = a.at(row, j) / a.at(row, col);
        col_axpy(a, u, j, col, q);
        if (a.at(row, j) != 0) done = false;
      }
      if (done) break;
    }
    if (col < n && a.at(row, col) != 0) {
      if (a.at(row, col) < 0) col_negate(a, u, col);
      pivots.emplace_back(row, col);
      ++col;
    }
  }

  // Forward substitution over the pivot rows; every other row is a pure
  // consistency constraint on the already-determined components.
  IntVec y(n, 0);
  size_t next_pivot = 0;
  for (int row = 0; row < a.rows; ++row) {
    __int128 residual = b[row];
    int limit = (next_pivot < pivots.size() && pivots[next_pivot].first == row)
                    ? pivots[next_pivot].second
                    : (int)pivots.size();
    for (int j = 0; j < limit && j < n; ++j)
      residual -= (__int128)a.at(row, j) * y[j];
    if (next_pivot < pivots.size() && pivots[next_pivot].first == row) {
      int c = pivots[next_pivot].second;
      long long p = a.at(row, c);
      if (residual % p != 0) {
        // Integrally stuck; rational solvability is decided by the caller.
        return {IntSolveStatus::NoIntegerSolution, {}};
      }
      __int128 q = residual / p;
      if (q > INT64_MAX || q < INT64_MIN)
        throw std::overflow_error("hermite_solve: overflow");
      y[c] = (long long)q;
      ++next_pivot;
    } else if (residual != 0) {
      return {IntSolveStatus::NoRationalSolution, {}};
    }
  }
  return {IntSolveStatus::Solved, mul(u, y)};
}

} // namespace torelli
