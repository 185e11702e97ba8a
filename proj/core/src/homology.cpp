#include "torelli/homology.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace torelli {

HomologyClass::HomologyClass(int g, IntVec c) : genus(g), coords(std::move(c)) {
  if (genus <= 0) throw std::invalid_argument("HomologyClass: genus must be positive");
  if (coords.size() != (size_t)(2 * genus))
    throw std::invalid_argument("HomologyClass: coordinate length must be 2*genus");
}

HomologyClass HomologyClass::basis(int g, int index) {
  if (index < 0 || index >= 2 * g) throw std::invalid_argument("HomologyClass::basis: bad index");
  IntVec c(2 * g, 0);
  c[index] = 1;
  return HomologyClass(g, std::move(c));
}

bool HomologyClass::is_zero() const {
  for (long long v : coords)
    if (v != 0) return false;
  return true;
}

bool HomologyClass::is_primitive() const {
  long long g = 0;
  for (long long v : coords) g = std::gcd(g, v);
  return g == 1;
}

HomologyClass HomologyClass::operator+(const HomologyClass &o) const {
  if (genus != o.genus) throw std::invalid_argument("HomologyClass: genus mismatch");
  IntVec c(coords.size());
  for (size_t i = 0; i < c.size(); ++i) c[i] = checked_add(coords[i], o.coords[i]);
  return HomologyClass(genus, std::move(c));
}

HomologyClass HomologyClass::operator-() const { return scaled(-1); }

HomologyClass HomologyClass::scaled(long long k) const {
  IntVec c(coords.size());
  for (size_t i = 0; i < c.size(); ++i) c[i] = checked_mul(coords[i], k);
  return HomologyClass(genus, std::move(c));
}

std::string HomologyClass::str() const {
  std::string s = "[";
  for (size_t i = 0; i < coords.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(coords[i]);
  }
  return s + "]";
}

IntMat symplectic_form(int genus) {
  IntMat j(2 * genus, 2 * genus);
  for (int i = 0; i < genus; ++i) {
    j.at(2 * i, 2 * i + 1) = 1;
    j.at(2 * i + 1, 2 * i) = -1;
  }
  return j;
}

bool SymplecticMatrix::satisfies_symplectic_relation() const {
  IntMat j = symplectic_form(genus);
  IntMat mt(2 * genus, 2 * genus);
  for (int r = 0; r < 2 * genus; ++r)
    for (int c = 0; c < 2 * genus; ++c) mt.at(r, c) = mat.at(c, r);
  return mul(mul(mt, j), mat) == j;
}

HomologyClass SymplecticMatrix::apply(const HomologyClass &v) const {
  if (v.genus != genus) throw std::invalid_argument("SymplecticMatrix::apply: genus mismatch");
  return HomologyClass(genus, mul(mat, v.coords));
}

long long intersection_form(const HomologyClass &u, const HomologyClass &v) {
  if (u.genus != v.genus)
    throw std::invalid_argument("intersection_form: genus mismatch");
  long long acc = 0;
  for (int i = 0; i < u.genus; ++i) {
    acc = checked_add(acc, checked_mul(u.coords[2 * i], v.coords[2 * i + 1]));
    acc = checked_add(acc, -checked_mul(u.coords[2 * i + 1], v.coords[2 * i]));
  }
  return acc;
}

namespace {

// Nilpotent part N of the twist: N v = <c, v> c, so N^2 = 0 and the
// twist power T_c^e is exactly I + e N.
IntMat twist_nilpotent(const HomologyClass &c) {
  int n = 2 * c.genus;
  IntMat j = symplectic_form(c.genus);
  // row vector (c^T J)_k
  IntVec cj(n, 0);
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      cj[k] = checked_add(cj[k], checked_mul(c.coords[i], j.at(i, k)));
  IntMat m(n, n);
  for (int r = 0; r < n; ++r)
    for (int k = 0; k < n; ++k) m.at(r, k) = checked_mul(c.coords[r], cj[k]);
  return m;
}

IntMat twist_power(const HomologyClass &c, long long e) {
  IntMat m = twist_nilpotent(c);
  int n = 2 * c.genus;
  for (int r = 0; r < n; ++r)
    for (int k = 0; k < n; ++k) m.at(r, k) = checked_mul(m.at(r, k), e);
  for (int i = 0; i < n; ++i) m.at(i, i) = checked_add(m.at(i, i), 1);
  return m;
}

} // namespace

SymplecticMatrix transvection(const HomologyClass &c) {
  return {c.genus, twist_power(c, 1)};
}

int TwistWord::common_genus() const {
  if (letters.empty()) return 0;
  int g = letters.front().curve_class.genus;
  for (const auto &l : letters)
    if (l.curve_class.genus != g)
      throw std::invalid_argument("TwistWord: genus mismatch among letters");
  return g;
}

std::string TwistWord::str() const {
  std::string s;
  for (const auto &l : letters) {
    if (!s.empty()) s += " ";
    s += "T" + l.curve_class.str() + "^" + std::to_string(l.exponent);
  }
  return s;
}

SymplecticMatrix word_action(const TwistWord &w) {
  int g = w.common_genus();
  if (g == 0) return SymplecticMatrix::identity(1); // empty word; genus-free identity
  IntMat acc = IntMat::identity(2 * g);
  // leftmost letter acts first: acc = M_n ... M_1
  for (const auto &l : w.letters) acc = mul(twist_power(l.curve_class, l.exponent), acc);
  return {g, acc};
}

bool is_torelli(const TwistWord &w) { return word_action(w).is_identity(); }

SymplecticMatrix bounding_pair_action(const HomologyClass &c, const HomologyClass &d) {
  if (c.is_zero() && d.is_zero())
    throw std::invalid_argument("bounding_pair_action: separating classes, not a bounding pair");
  if (!(c == d))
    throw std::invalid_argument("bounding_pair_action: not a bounding pair at homology level");
  TwistWord w{{{c, 1}, {d, -1}}};
  return word_action(w);
}

bool lantern_matrix_check(const HomologyClass &a, const HomologyClass &b,
                          const HomologyClass &c, const HomologyClass &d,
                          const HomologyClass &x, const HomologyClass &y,
                          const HomologyClass &z) {
  int g = a.genus;
  for (const HomologyClass *h : {&b, &c, &d, &x, &y, &z})
    if (h->genus != g) throw std::invalid_argument("lantern_matrix_check: genus mismatch");
  if (g < 3) throw std::invalid_argument("lantern_matrix_check: requires genus >= 3");
  if (!(a + b + c + d == HomologyClass::zero(g)) || !(x == a + b) || !(y == b + c) ||
      !(z == a + c))
    throw std::invalid_argument("lantern_matrix_check: not a lantern configuration");
  TwistWord lhs{{{x, 1}, {y, 1}, {z, 1}}};
  TwistWord rhs{{{a, 1}, {b, 1}, {c, 1}, {d, 1}}};
  return word_action(lhs) == word_action(rhs);
}

TwistWord word_reduce(const TwistWord &w) {
  TwistWord out;
  for (const auto &l : w.letters) {
    if (l.exponent == 0) continue;
    if (!out.letters.empty() && out.letters.back().curve_class == l.curve_class) {
      out.letters.back().exponent = checked_add(out.letters.back().exponent, l.exponent);
      if (out.letters.back().exponent == 0) out.letters.pop_back();
    } else {
      out.letters.push_back(l);
    }
  }
  return out;
}

RelativeClass point_push(const HomologyClass &gamma, const RelativeClass &w) {
  if (gamma.genus != w.genus)
    throw std::invalid_argument("point_push: genus mismatch");
  return {w.genus, w.absolute + gamma.scaled(w.arc_coefficient), w.arc_coefficient};
}

TwistWord parse_twist_word(const std::string &text) {
  TwistWord w;
  std::istringstream in(text);
  std::string tok;
  while (in >> tok) {
    if (tok.size() < 2 || tok[0] != 'T' || tok[1] != '[')
      throw std::invalid_argument("parse_twist_word: expected T[...]^e, got '" + tok + "'");
    auto close = tok.find(']');
    if (close == std::string::npos)
      throw std::invalid_argument("parse_twist_word: missing ']' in '" + tok + "'");
    if (close + 1 >= tok.size() || tok[close + 1] != '^')
      throw std::invalid_argument("parse_twist_word: missing exponent in '" + tok + "'");

    IntVec coords;
    std::string body = tok.substr(2, close - 2);
    if (!body.empty()) {
      std::istringstream cs(body);
      std::string item;
      while (std::getline(cs, item, ',')) {
        size_t pos = 0;
        long long v;
        try {
          v = std::stoll(item, &pos);
        } catch (const std::exception &) {
          throw std::invalid_argument("parse_twist_word: bad coordinate '" + item + "'");
        }
        if (pos != item.size())
          throw std::invalid_argument("parse_twist_word: bad coordinate '" + item + "'");
        coords.push_back(v);
      }
    }
    if (coords.empty() || coords.size() % 2 != 0)
      throw std::invalid_argument("parse_twist_word: label length must be 2g, got " +
                                  std::to_string(coords.size()));

    std::string es = tok.substr(close + 2);
    size_t pos = 0;
    long long e;
    try {
      e = std::stoll(es, &pos);
    } catch (const std::exception &) {
      throw std::invalid_argument("parse_twist_word: bad exponent '" + es + "'");
    }
    if (pos != es.size())
      throw std::invalid_argument("parse_twist_word: bad exponent '" + es + "'");
    if (e == 0) throw std::invalid_argument("parse_twist_word: exponent must be nonzero");

    int genus = (int)coords.size() / 2;
    w.letters.push_back({HomologyClass(genus, std::move(coords)), e});
  }
  return w;
}

} // namespace torelli
