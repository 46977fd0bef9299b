#include "delpezzo/finite_field.hpp"

#include <limits>
#include <sstream>

#include "delpezzo/errors.hpp"
#include "delpezzo/number_theory.hpp"

namespace delpezzo {

namespace {

constexpr std::uint64_t kTableOrderLimit = 1024;

using Poly = std::vector<std::uint32_t>;  // low to high, trimmed

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
  std::uint64_t result = 1;
  std::uint64_t base = a % p;
  std::uint64_t e = p - 2;
  while (e > 0) {
    if (e & 1U) result = result * base % p;
    base = base * base % p;
    e >>= 1U;
  }
  return static_cast<std::uint32_t>(result);
}

Poly poly_mod(Poly a, const Poly& m, std::uint32_t p) {
  trim(a);
  const std::size_t dm = m.size() - 1;
  const std::uint64_t lead_inv = inv_mod(m.back(), p);
  while (a.size() > dm) {
    const std::size_t shift = a.size() - 1 - dm;
    const std::uint64_t c = a.back() * lead_inv % p;
    for (std::size_t i = 0; i <= dm; ++i) {
      a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + (p - c) * m[i] % p) % p);
    }
    trim(a);
  }
  return a;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& m, std::uint32_t p) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) {
      out[i + j] = static_cast<std::uint32_t>((out[i + j] + std::uint64_t{a[i]} * b[j]) % p);
    }
  }
  return poly_mod(std::move(out), m, p);
}

Poly poly_powmod(Poly base, std::uint64_t e, const Poly& m, std::uint32_t p) {
  Poly result{1};
  base = poly_mod(std::move(base), m, p);
  while (e > 0) {
    if (e & 1U) result = poly_mulmod(result, base, m, p);
    base = poly_mulmod(base, base, m, p);
    e >>= 1U;
  }
  return result;
}

Poly poly_gcd(Poly a, Poly b, std::uint32_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = poly_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

}  // namespace

bool is_irreducible(const std::vector<std::uint32_t>& monic, std::uint32_t p) {
  const std::size_t n = monic.size() - 1;
  if (n == 0) return false;
  if (n == 1) return true;
  // Ben-Or: g is irreducible iff gcd(x^{p^i} - x, g) = 1 for 1 ≤ i ≤ n/2.
  Poly h{0, 1};
  for (std::size_t i = 1; i <= n / 2; ++i) {
    h = poly_powmod(h, p, monic, p);
    Poly diff = h;
    if (diff.size() < 2) diff.resize(2, 0);
    diff[1] = (diff[1] + p - 1) % p;
    trim(diff);
    if (diff.empty()) return false;
    const Poly g = poly_gcd(monic, diff, p);
    if (g.size() > 1) return false;
  }
  return true;
}

std::vector<std::uint32_t> least_irreducible(std::uint32_t p, unsigned f) {
  std::uint64_t count = 1;
  for (unsigned i = 0; i < f; ++i) count *= p;
  for (std::uint64_t t = 0; t < count; ++t) {
    Poly g(f + 1, 0);
    std::uint64_t rest = t;
    for (unsigned i = 0; i < f; ++i) {
      g[i] = static_cast<std::uint32_t>(rest % p);
      rest /= p;
    }
    g[f] = 1;
    if (is_irreducible(g, p)) return g;
  }
  throw VerificationFailure("no irreducible polynomial of degree " + std::to_string(f));
}

GaloisField::GaloisField(std::uint32_t p, unsigned f) : p_(p), f_(f), q_(1) {
  if (!is_prime(p)) throw InputError("field characteristic " + std::to_string(p) + " is not prime");
  if (f == 0) throw InputError("field degree must be positive");
  for (unsigned i = 0; i < f; ++i) {
    q_ *= p;
    if (q_ > std::numeric_limits<Element>::max()) {
      throw BudgetExceeded("field order " + std::to_string(p) + "^" + std::to_string(f) +
                           " does not fit the 32-bit element encoding");
    }
  }
  modulus_ = f == 1 ? Poly{0, 1} : least_irreducible(p, f);
  if (f > 1 && q_ <= kTableOrderLimit) {
    add_table_.resize(q_ * q_);
    mul_table_.resize(q_ * q_);
    for (Element a = 0; a < q_; ++a) {
      for (Element b = 0; b < q_; ++b) {
        add_table_[std::size_t{a} * q_ + b] = add_slow(a, b);
        mul_table_[std::size_t{a} * q_ + b] = mul_slow(a, b);
      }
    }
  }
}

GaloisField::Element GaloisField::add_slow(Element a, Element b) const {
  Element out = 0;
  Element scale = 1;
  for (unsigned i = 0; i < f_; ++i) {
    out += ((a % p_ + b % p_) % p_) * scale;
    a /= p_;
    b /= p_;
    scale *= p_;
  }
  return out;
}

GaloisField::Element GaloisField::mul_slow(Element a, Element b) const {
  if (f_ == 1) return static_cast<Element>((std::uint64_t{a} * b) % p_);
  Poly pa = coefficients(a);
  Poly pb = coefficients(b);
  trim(pa);
  trim(pb);
  Poly prod = poly_mulmod(pa, pb, modulus_, p_);
  prod.resize(f_, 0);
  return from_coefficients(prod);
}

GaloisField::Element GaloisField::neg(Element a) const {
  if (f_ == 1) return a == 0 ? 0 : p_ - a;
  Element out = 0;
  Element scale = 1;
  for (unsigned i = 0; i < f_; ++i) {
    const Element c = a % p_;
    out += (c == 0 ? 0 : p_ - c) * scale;
    a /= p_;
    scale *= p_;
  }
  return out;
}

GaloisField::Element GaloisField::pow(Element a, std::uint64_t e) const {
  Element result = 1;
  while (e > 0) {
    if (e & 1U) result = mul(result, a);
    a = mul(a, a);
    e >>= 1U;
  }
  return result;
}

GaloisField::Element GaloisField::from_int(long long n) const {
  return static_cast<Element>(floor_mod(n, p_));
}

GaloisField::Element GaloisField::from_rat(const Rat& x) const { return reduce_mod(x, p_); }

std::vector<std::uint32_t> GaloisField::coefficients(Element a) const {
  std::vector<std::uint32_t> out(f_);
  for (unsigned i = 0; i < f_; ++i) {
    out[i] = a % p_;
    a /= p_;
  }
  return out;
}

GaloisField::Element GaloisField::from_coefficients(const std::vector<std::uint32_t>& coeffs) const {
  Element out = 0;
  Element scale = 1;
  for (unsigned i = 0; i < f_; ++i) {
    const std::uint32_t c = i < coeffs.size() ? coeffs[i] % p_ : 0;
    out += c * scale;
    scale *= p_;
  }
  return out;
}

std::string to_string(const FFVector& v) {
  GaloisField::Element p = v.field.p;
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < v.coords.size(); ++i) {
    if (i > 0) os << ",";
    os << "[";
    GaloisField::Element a = v.coords[i];
    for (unsigned j = 0; j < v.field.f; ++j) {
      if (j > 0) os << ",";
      os << a % p;
      a /= p;
    }
    os << "]";
  }
  os << "]";
  return os.str();
}

}  // namespace delpezzo
