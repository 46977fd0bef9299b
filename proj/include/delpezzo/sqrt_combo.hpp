#pragma once

#include <cstdint>
#include <map>
#include <ostream>
#include <set>
#include <string>
#include <vector>

#include "delpezzo/number_theory.hpp"
#include "delpezzo/rat.hpp"

namespace delpezzo {

class SignCharacter;

/// An element Σ c_m·√m of a multiquadratic extension of Q.
///
/// Keys are square-free integers, 1 is the rational part, and for m < 0 the
/// symbol √m means i·√|m|. With that convention √m·√n for m, n < 0 carries an
/// extra factor -1. No stored coefficient is zero, so two values are equal
/// exactly when their term maps are equal.
class SqrtCombo {
 public:
  using Terms = std::map<Integer, Rat>;

  SqrtCombo() = default;
  SqrtCombo(const Rat& q);  // NOLINT(google-explicit-constructor)
  SqrtCombo(long n) : SqrtCombo(Rat(n)) {}  // NOLINT(google-explicit-constructor)
  SqrtCombo(int n) : SqrtCombo(Rat(n)) {}   // NOLINT(google-explicit-constructor)

  /// c·√m. m must be square-free; checked by factoring.
  static SqrtCombo term(const Rat& c, const Integer& m);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_rational() const;
  /// Rational part (coefficient of √1).
  Rat rational_part() const;
  /// Coefficient of the smallest key, the "leading" one; zero for 0.
  Rat leading_coefficient() const;

  /// Square-class generators (-1 and primes) dividing some key.
  std::vector<Integer> generators() const;

  SqrtCombo& operator+=(const SqrtCombo& o);
  SqrtCombo& operator-=(const SqrtCombo& o);
  SqrtCombo& operator*=(const SqrtCombo& o);

  friend SqrtCombo operator+(SqrtCombo a, const SqrtCombo& b) { return a += b; }
  friend SqrtCombo operator-(SqrtCombo a, const SqrtCombo& b) { return a -= b; }
  friend SqrtCombo operator*(const SqrtCombo& a, const SqrtCombo& b);
  friend SqrtCombo operator-(const SqrtCombo& a);
  friend bool operator==(const SqrtCombo& a, const SqrtCombo& b) = default;
  friend SqrtCombo apply_character(const SignCharacter& chi, const SqrtCombo& x);
  friend SqrtCombo sqrt_of_rational(const Rat& q, std::uint64_t bound);

  /// "c1*sqrt(m1) + c2*sqrt(m2)" with coefficients as "p/q"; "0" for zero.
  std::string to_string() const;
  friend std::ostream& operator<<(std::ostream& os, const SqrtCombo& x) {
    return os << x.to_string();
  }

 private:
  void add_term(const Integer& m, const Rat& c);

  Terms terms_;
};

SqrtCombo add(const SqrtCombo& x, const SqrtCombo& y);
SqrtCombo mul(const SqrtCombo& x, const SqrtCombo& y);

/// Multiplicative inverse via the norm: x times all its nontrivial
/// conjugates is rational. Throws std::domain_error on zero.
SqrtCombo invert(const SqrtCombo& x);

inline bool is_zero(const SqrtCombo& x) { return x.is_zero(); }
inline SqrtCombo inverse(const SqrtCombo& x) { return invert(x); }

/// The root of q (≠ 0) whose single coefficient is positive:
/// √(a/b) = (1/b)·√(ab), then square factors are pulled out.
SqrtCombo sqrt_of_rational(const Rat& q, std::uint64_t bound = kDefaultFactorBound);

/// A ±1-valued character on square classes; it negates √g for each
/// generator g (-1 or a prime) in its flipped set. As an automorphism of the
/// multiquadratic field this is a Galois element.
class SignCharacter {
 public:
  SignCharacter() = default;
  explicit SignCharacter(std::set<Integer> flipped);

  const std::set<Integer>& flipped() const { return flipped_; }
  bool is_identity() const { return flipped_.empty(); }

  /// χ(m) for square-free m.
  int value(const Integer& m) const;

  /// Composition; flipped sets combine by symmetric difference.
  SignCharacter compose(const SignCharacter& other) const;

  friend bool operator==(const SignCharacter&, const SignCharacter&) = default;
  friend auto operator<=>(const SignCharacter& a, const SignCharacter& b) {
    return a.flipped_ <=> b.flipped_;
  }

  std::string to_string() const;

 private:
  std::set<Integer> flipped_;
};

SqrtCombo apply_character(const SignCharacter& chi, const SqrtCombo& x);

/// All 2^k characters on the given generators, ordered by bitmask over the
/// ascending generator list.
std::vector<SignCharacter> character_group(const std::vector<Integer>& generators);

/// Closure of the given characters under composition (includes identity).
std::vector<SignCharacter> generated_subgroup(const std::vector<SignCharacter>& gens);

}  // namespace delpezzo
