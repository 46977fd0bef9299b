#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

namespace delpezzo {

using Integer = mpz_class;

/// Exact rational number kept in lowest terms with a positive denominator.
/// Zero is stored as 0/1, so structural equality is value equality.
class Rat {
 public:
  Rat() : num_(0), den_(1) {}
  Rat(long n) : num_(n), den_(1) {}  // NOLINT(google-explicit-constructor)
  Rat(int n) : num_(n), den_(1) {}   // NOLINT(google-explicit-constructor)
  explicit Rat(Integer n) : num_(std::move(n)), den_(1) {}
  Rat(Integer num, Integer den);
  Rat(long num, long den) : Rat(Integer(num), Integer(den)) {}

  /// Parses "p", "-p" or "p/q" in decimal. Throws InputError on anything else.
  static Rat parse(std::string_view text);

  const Integer& num() const { return num_; }
  const Integer& den() const { return den_; }

  int sign() const { return sgn(num_); }
  bool is_zero() const { return num_ == 0; }
  bool is_integer() const { return den_ == 1; }

  Rat inverse() const;
  Rat abs() const;

  /// Always "p/q", including integers ("3/1") and zero ("0/1").
  std::string to_string() const;

  Rat& operator+=(const Rat& o);
  Rat& operator-=(const Rat& o);
  Rat& operator*=(const Rat& o);
  Rat& operator/=(const Rat& o);

  friend Rat operator+(Rat a, const Rat& b) { return a += b; }
  friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
  friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
  friend Rat operator/(Rat a, const Rat& b) { return a /= b; }
  friend Rat operator-(const Rat& a) {
    Rat r = a;
    r.num_ = -r.num_;
    return r;
  }

  friend bool operator==(const Rat& a, const Rat& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rat& a, const Rat& b);

  friend std::ostream& operator<<(std::ostream& os, const Rat& r) {
    return os << r.to_string();
  }

 private:
  void canonicalize();

  Integer num_;
  Integer den_;
};

inline bool is_zero(const Rat& x) { return x.is_zero(); }
inline Rat inverse(const Rat& x) { return x.inverse(); }

/// Residue of x in F_p. Throws InputError unless both numerator and
/// denominator are prime to p.
std::uint32_t reduce_mod(const Rat& x, std::uint32_t p);

}  // namespace delpezzo
