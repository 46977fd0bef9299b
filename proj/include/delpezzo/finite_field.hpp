#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "delpezzo/rat.hpp"

namespace delpezzo {

/// A finite field F_{p^f} named by its characteristic and degree.
struct FieldSpec {
  std::uint32_t p = 0;
  unsigned f = 1;

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

/// F_{p^f} realised as F_p[x]/(g) where g is the least monic irreducible of
/// degree f, ordering candidates by their coefficient tuple (c_{f-1}, ..., c_0).
///
/// An element is encoded as the integer Σ c_j·p^j of its polynomial-basis
/// coordinates, so 0 and 1 are the field's zero and one and F_p sits inside
/// as the encodings 0..p-1.
class GaloisField {
 public:
  using Element = std::uint32_t;

  GaloisField(std::uint32_t p, unsigned f);
  explicit GaloisField(FieldSpec spec) : GaloisField(spec.p, spec.f) {}

  std::uint32_t characteristic() const { return p_; }
  unsigned degree() const { return f_; }
  std::uint64_t order() const { return q_; }
  FieldSpec spec() const { return {p_, f_}; }

  /// Monic modulus, coefficients low to high (size f + 1).
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }

  Element add(Element a, Element b) const {
    if (f_ == 1) return static_cast<Element>((std::uint64_t{a} + b) % p_);
    if (!add_table_.empty()) return add_table_[std::size_t{a} * q_ + b];
    return add_slow(a, b);
  }
  Element neg(Element a) const;
  Element sub(Element a, Element b) const { return add(a, neg(b)); }
  Element mul(Element a, Element b) const {
    if (f_ == 1) return static_cast<Element>((std::uint64_t{a} * b) % p_);
    if (!mul_table_.empty()) return mul_table_[std::size_t{a} * q_ + b];
    return mul_slow(a, b);
  }
  Element pow(Element a, std::uint64_t e) const;

  /// Image of an integer in the prime field.
  Element from_int(long long n) const;
  /// Image of a p-integral unit rational; throws InputError otherwise.
  Element from_rat(const Rat& x) const;

  std::vector<std::uint32_t> coefficients(Element a) const;
  Element from_coefficients(const std::vector<std::uint32_t>& coeffs) const;

 private:
  Element add_slow(Element a, Element b) const;
  Element mul_slow(Element a, Element b) const;

  std::uint32_t p_;
  unsigned f_;
  std::uint64_t q_;
  std::vector<std::uint32_t> modulus_;
  std::vector<Element> add_table_;
  std::vector<Element> mul_table_;
};

/// True iff the monic polynomial (coefficients low to high) is irreducible over F_p.
bool is_irreducible(const std::vector<std::uint32_t>& monic, std::uint32_t p);

/// Least monic irreducible of degree f over F_p in the order described on GaloisField.
std::vector<std::uint32_t> least_irreducible(std::uint32_t p, unsigned f);

/// A vector over F_{p^f}; used for projective witnesses.
struct FFVector {
  FieldSpec field;
  std::vector<GaloisField::Element> coords;

  friend bool operator==(const FFVector&, const FFVector&) = default;
};

/// Each coordinate as its polynomial-basis coefficient list, e.g. "[[1,0],[2,1]]".
std::string to_string(const FFVector& v);

}  // namespace delpezzo
