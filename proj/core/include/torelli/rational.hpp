#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace torelli {

// Exact rational number on 64-bit numerator/denominator.  Always stored
// reduced with denominator > 0.  Intermediate products go through 128-bit
// arithmetic; anything that would not fit back into 64 bits throws
// std::overflow_error instead of wrapping.  All weight and coordinate
// arithmetic in this library runs on this type; floating point is never
// used for cell or homology data.
class Rat {
public:
  Rat() : num_(0), den_(1) {}
  Rat(long long n) : num_(n), den_(1) {}
  Rat(long long n, long long d) : num_(n), den_(d) { normalize(); }

  long long num() const { return num_; }
  long long den() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  bool is_integer() const { return den_ == 1; }
  bool is_nonnegative() const { return num_ >= 0; }
  bool is_positive() const { return num_ > 0; }

  // Integer value; throws if not an integer.
  long long as_integer() const {
    if (den_ != 1)
      throw std::domain_error("Rat::as_integer: " + str() + " is not an integer");
    return num_;
  }

  long long floor() const {
    if (num_ >= 0) return num_ / den_;
    return (long long)(-((-(__int128)num_ + den_ - 1) / den_));
  }
  long long ceil() const { return -(-*this).floor(); }

  Rat operator-() const { return Rat(checked(-(__int128)num_), den_, already_reduced_tag{}); }

  friend Rat operator+(const Rat &a, const Rat &b) {
    __int128 n = (__int128)a.num_ * b.den_ + (__int128)b.num_ * a.den_;
    __int128 d = (__int128)a.den_ * b.den_;
    return Rat::from128(n, d);
  }
  friend Rat operator-(const Rat &a, const Rat &b) { return a + (-b); }
  friend Rat operator*(const Rat &a, const Rat &b) {
    return Rat::from128((__int128)a.num_ * b.num_, (__int128)a.den_ * b.den_);
  }
  friend Rat operator/(const Rat &a, const Rat &b) {
    if (b.num_ == 0) throw std::domain_error("Rat: division by zero");
    return Rat::from128((__int128)a.num_ * b.den_, (__int128)a.den_ * b.num_);
  }

  Rat &operator+=(const Rat &o) { return *this = *this + o; }
  Rat &operator-=(const Rat &o) { return *this = *this - o; }
  Rat &operator*=(const Rat &o) { return *this = *this * o; }
  Rat &operator/=(const Rat &o) { return *this = *this / o; }

  friend bool operator==(const Rat &a, const Rat &b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Rat &a, const Rat &b) { return !(a == b); }
  friend bool operator<(const Rat &a, const Rat &b) {
    return (__int128)a.num_ * b.den_ < (__int128)b.num_ * a.den_;
  }
  friend bool operator>(const Rat &a, const Rat &b) { return b < a; }
  friend bool operator<=(const Rat &a, const Rat &b) { return !(b < a); }
  friend bool operator>=(const Rat &a, const Rat &b) { return !(a < b); }

  int sign() const { return num_ > 0 ? 1 : num_ < 0 ? -1 : 0; }

  // "p" when integral, "p/q" otherwise.
  std::string str() const {
    std::string s = std::to_string(num_);
    if (den_ != 1) s += "/" + std::to_string(den_);
    return s;
  }

  // Parses "p" or "p/q".  Exact; never goes through floating point.
  static Rat parse(const std::string &text) {
    auto slash = text.find('/');
    try {
      if (slash == std::string::npos)
        return Rat(parse_ll(text));
      return Rat(parse_ll(text.substr(0, slash)), parse_ll(text.substr(slash + 1)));
    } catch (const std::invalid_argument &) {
      throw std::invalid_argument("Rat::parse: malformed rational '" + text + "'");
    } catch (const std::out_of_range &) {
      throw std::invalid_argument("Rat::parse: rational out of range '" + text + "'");
    }
  }

private:
  struct already_reduced_tag {};
  Rat(long long n, long long d, already_reduced_tag) : num_(n), den_(d) {}

  static long long parse_ll(const std::string &s) {
    size_t pos = 0;
    long long v = std::stoll(s, &pos);
    if (pos != s.size() || s.empty())
      throw std::invalid_argument("trailing characters");
    return v;
  }

  static long long checked(__int128 v) {
    if (v > INT64_MAX || v < INT64_MIN)
      throw std::overflow_error("Rat: 64-bit overflow");
    return (long long)v;
  }

  static Rat from128(__int128 n, __int128 d) {
    if (d == 0) throw std::domain_error("Rat: zero denominator");
    if (d < 0) { n = -n; d = -d; }
    __int128 g = gcd128(n < 0 ? -n : n, d);
    if (g > 1) { n /= g; d /= g; }
    return Rat(checked(n), checked(d), already_reduced_tag{});
  }

  static __int128 gcd128(__int128 a, __int128 b) {
    while (b != 0) { __int128 t = a % b; a = b; b = t; }
    return a == 0 ? 1 : a;
  }

  void normalize() {
    if (den_ == 0) throw std::domain_error("Rat: zero denominator");
    if (den_ < 0) {
      num_ = checked(-(__int128)num_);
      den_ = checked(-(__int128)den_);
    }
    long long g = std::gcd(num_ < 0 ? -num_ : num_, den_);
    if (g > 1) { num_ /= g; den_ /= g; }
  }

  long long num_;
  long long den_;
};

inline Rat abs(const Rat &r) { return r.sign() < 0 ? -r : r; }

} // namespace torelli
