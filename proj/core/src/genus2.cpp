#include "torelli/genus2.hpp"

#include <cstdlib>
#include <map>
#include <numeric>
#include <stdexcept>

namespace torelli {

Slope::Slope(long long pp, long long qq) : p(pp), q(qq) {
  if (p == 0 && q == 0) throw std::invalid_argument("Slope: 0/0 is not a slope");
  long long g = std::gcd(std::llabs(p), std::llabs(q));
  if (g > 1) { p /= g; q /= g; }
  if (q < 0 || (q == 0 && p < 0)) { p = -p; q = -q; }
}

Slope Slope::parse(const std::string &text) {
  auto slash = text.find('/');
  auto to_ll = [](const std::string &s) {
    size_t pos = 0;
    long long v = std::stoll(s, &pos);
    if (pos != s.size() || s.empty()) throw std::invalid_argument("Slope::parse: bad integer");
    return v;
  };
  try {
    if (slash == std::string::npos) return Slope(to_ll(text), 1);
    return Slope(to_ll(text.substr(0, slash)), to_ll(text.substr(slash + 1)));
  } catch (const std::invalid_argument &) {
    throw std::invalid_argument("Slope::parse: malformed slope '" + text + "'");
  } catch (const std::out_of_range &) {
    throw std::invalid_argument("Slope::parse: slope out of range '" + text + "'");
  }
}

SlopeMatrix::SlopeMatrix(long long aa, long long bb, long long cc, long long dd)
    : a(aa), b(bb), c(cc), d(dd) {
  __int128 det = (__int128)a * d - (__int128)b * c;
  if (det != 1) throw std::invalid_argument("SlopeMatrix: determinant must be 1");
  long long *entries[4] = {&a, &b, &c, &d};
  for (auto *e : entries) {
    if (*e == 0) continue;
    if (*e < 0)
      for (auto *f : entries) *f = -*f;
    break;
  }
}

SlopeMatrix mul(const SlopeMatrix &x, const SlopeMatrix &y) {
  return SlopeMatrix(checked_add(checked_mul(x.a, y.a), checked_mul(x.b, y.c)),
                     checked_add(checked_mul(x.a, y.b), checked_mul(x.b, y.d)),
                     checked_add(checked_mul(x.c, y.a), checked_mul(x.d, y.c)),
                     checked_add(checked_mul(x.c, y.b), checked_mul(x.d, y.d)));
}

const char *orbit_name(SlopeOrbit o) {
  switch (o) {
  case SlopeOrbit::O01: return "O01";
  case SlopeOrbit::O10: return "O10";
  default: return "O11";
  }
}

SlopeOrbit slope_orbit(const Slope &s) {
  bool podd = (s.p % 2 + 2) % 2 == 1;
  bool qodd = (s.q % 2 + 2) % 2 == 1;
  if (!podd && qodd) return SlopeOrbit::O01;
  if (podd && !qodd) return SlopeOrbit::O10;
  return SlopeOrbit::O11; // (0,0) mod 2 is impossible for reduced slopes
}

SlopeMatrix twist_on_slopes(const Slope &s) {
  // I + 2 s (s^T J): fixes s, determinant one, congruent to I mod 2
  return SlopeMatrix(checked_add(1, checked_mul(-2, checked_mul(s.p, s.q))),
                     checked_mul(2, checked_mul(s.p, s.p)),
                     checked_mul(-2, checked_mul(s.q, s.q)),
                     checked_add(1, checked_mul(2, checked_mul(s.p, s.q))));
}

Slope mat2_apply(const SlopeMatrix &m, const Slope &s) {
  return Slope(checked_add(checked_mul(m.a, s.p), checked_mul(m.b, s.q)),
               checked_add(checked_mul(m.c, s.p), checked_mul(m.d, s.q)));
}

bool level2_member(const SlopeMatrix &m) {
  return std::llabs(m.a) % 2 == 1 && std::llabs(m.d) % 2 == 1 && m.b % 2 == 0 && m.c % 2 == 0;
}

WeightPair::WeightPair(long long pp, long long qq) : p(pp), q(qq) {
  if (p < 0 || q < 0) throw std::invalid_argument("WeightPair: weights must be nonnegative");
  if (p == 0 && q == 0) throw std::invalid_argument("WeightPair: weights must not both be zero");
  if (p < q) std::swap(p, q);
}

std::vector<WeightPair> euclidean_descent(const WeightPair &w) {
  if (std::gcd(w.p, w.q) != 1)
    throw std::invalid_argument("euclidean_descent: pair is not coprime, class not primitive");
  std::vector<WeightPair> path;
  WeightPair cur = w;
  while (!cur.is_root()) {
    cur = WeightPair(cur.p - cur.q, cur.q);
    path.push_back(cur);
  }
  return path;
}

QuotientTree quotient_tree(long long max_w) {
  if (max_w < 1) throw std::invalid_argument("quotient_tree: max_w must be >= 1");
  QuotientTree tree;
  tree.nodes.push_back({WeightPair(1, 0), -1, {}});
  for (size_t i = 0; i < tree.nodes.size(); ++i) {
    WeightPair wp = tree.nodes[i].pair;
    std::vector<WeightPair> kids;
    if (wp.q >= 1) kids.push_back(WeightPair(wp.p + wp.q, wp.q)); // degenerate at the root
    if (wp.p != wp.q) kids.push_back(WeightPair(wp.p + wp.q, wp.p));
    for (const WeightPair &k : kids) {
      if (k.total() > max_w) continue;
      tree.nodes[i].children.push_back((int)tree.nodes.size());
      tree.nodes.push_back({k, (int)i, {}});
    }
  }
  return tree;
}

namespace {

// Word (in application order) of O10-slope twists taking u down to 0/1.
// Alternates between twisting along 1/0, which shifts p by multiples of
// 2q, and twisting along a Farey neighbor of u in O10, which strictly
// shrinks q.
std::vector<SlopeTwistLetter> reduce_to_base(Slope u) {
  std::vector<SlopeTwistLetter> word;
  const Slope base(0, 1);
  while (u != base) {
    if (std::llabs(u.p) > u.q || u.q == 1) {
      // twist along 1/0: p -> p + 2nq; pick n landing p in (-q, q]
      long long q2 = 2 * u.q;
      long long r = ((u.p % q2) + q2) % q2; // in [0, 2q)
      if (r > u.q) r -= q2;                 // in (-q, q]
      long long n = (r - u.p) / q2;
      if (n != 0) {
        // det((1,0) | u) = q, so one twist power adds 2q to p
        word.push_back({Slope::infinity(), n});
        u = Slope(r, u.q);
      }
      if (u == base) break;
      if (std::llabs(u.p) >= u.q)
        throw std::logic_error("farey_tree_path: reduction stalled");
    }
    // Farey neighbor s = (a, b) of u with a*q - b*p = 1, b even nonzero,
    // |b| < q; twisting along it shrinks q to the least odd residue
    // mod 2|b|.
    long long p = u.p, q = u.q;
    long long b0 = -1, a0 = -1;
    {
      // extended euclid: find (a, b) with a*q - b*p = 1
      long long old_r = q, r = p, old_s = 1, s = 0, old_t = 0, t = 1;
      while (r != 0) {
        long long quot = old_r / r;
        long long tmp;
        tmp = old_r - quot * r; old_r = r; r = tmp;
        tmp = old_s - quot * s; old_s = s; s = tmp;
        tmp = old_t - quot * t; old_t = t; t = tmp;
      }
      // old_r = +-gcd = +-1; a*q - b*p = 1 with a = old_s/old_r, b = -old_t/old_r
      a0 = old_s * old_r;
      b0 = -old_t * old_r;
    }
    // shift (a, b) -> (a + n p, b + n q) to make b even and |b| < q
    long long b = ((b0 % q) + q) % q;
    long long shift = (b - b0) / q;
    if (b % 2 != 0) { b -= q; shift -= 1; } // q odd flips parity
    long long a = a0 + shift * p;
    if (b == 0 || std::llabs(b) >= q) throw std::logic_error("farey_tree_path: bad neighbor");
    Slope s(a, b);
    long long det = a * q - b * p; // +-1
    // twist power n sends q -> q + 2 n det b; aim for least odd residue
    long long b2 = 2 * std::llabs(b);
    long long qr = ((q % b2) + b2) % b2;
    if (qr > std::llabs(b)) qr -= b2;
    long long steps = (qr - q) / (2 * b * det); // n with q + 2 n det b = qr
    if (steps == 0) throw std::logic_error("farey_tree_path: no progress");
    word.push_back({s, steps});
    u = Slope(p + 2 * steps * det * a, q + 2 * steps * det * b);
  }
  return word;
}

SlopeMatrix word_matrix(const std::vector<SlopeTwistLetter> &word) {
  SlopeMatrix acc;
  for (const auto &l : word) {
    SlopeMatrix t = twist_on_slopes(l.twist_slope);
    if (l.exponent < 0) t = t.inverse();
    for (long long k = 0; k < std::llabs(l.exponent); ++k) acc = mul(t, acc);
  }
  return acc;
}

} // namespace

std::vector<SlopeTwistLetter> farey_tree_path(const Slope &s1, const Slope &s2) {
  if (slope_orbit(s1) != SlopeOrbit::O01 || slope_orbit(s2) != SlopeOrbit::O01)
    throw std::invalid_argument(
        "farey_tree_path: both slopes must lie in orbit O01, orbits are invariant");
  std::vector<SlopeTwistLetter> down1 = reduce_to_base(s1);
  std::vector<SlopeTwistLetter> down2 = reduce_to_base(s2);
  std::vector<SlopeTwistLetter> word = down1;
  for (auto it = down2.rbegin(); it != down2.rend(); ++it)
    word.push_back({it->twist_slope, -it->exponent});
  // merge adjacent letters along the same slope
  std::vector<SlopeTwistLetter> out;
  for (const auto &l : word) {
    if (l.exponent == 0) continue;
    if (!out.empty() && out.back().twist_slope == l.twist_slope) {
      out.back().exponent += l.exponent;
      if (out.back().exponent == 0) out.pop_back();
    } else {
      out.push_back(l);
    }
  }
  // contract: the composite really moves s1 to s2
  if (mat2_apply(word_matrix(out), s1) != s2)
    throw std::logic_error("farey_tree_path: synthesized word does not map s1 to s2");
  return out;
}

bool stabilizer_homology_check(long long i, long long j, long long k) {
  HomologyClass a = HomologyClass::basis(2, 0);      // a1
  HomologyClass b = HomologyClass::basis(2, 2);      // a2
  HomologyClass c = a + b;                           // a1 + a2
  TwistWord w;
  if (i != 0) w.letters.push_back({a, i});
  if (j != 0) w.letters.push_back({b, j});
  if (k != 0) w.letters.push_back({c, k});
  return is_torelli(w);
}

} // namespace torelli
