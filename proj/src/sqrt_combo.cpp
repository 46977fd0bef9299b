#include "delpezzo/sqrt_combo.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "delpezzo/errors.hpp"

namespace delpezzo {

namespace {

// √m·√n = coeff·√s with s = m·n/g², g = gcd(|m|, |n|).
struct RadicalProduct {
  Integer coeff;
  Integer radicand;
};

RadicalProduct multiply_radicals(const Integer& m, const Integer& n) {
  Integer g;
  mpz_gcd(g.get_mpz_t(), m.get_mpz_t(), n.get_mpz_t());
  Integer s = m * n;
  mpz_divexact(s.get_mpz_t(), s.get_mpz_t(), g.get_mpz_t());
  mpz_divexact(s.get_mpz_t(), s.get_mpz_t(), g.get_mpz_t());
  if (sgn(m) < 0 && sgn(n) < 0) g = -g;
  return {g, s};
}

}  // namespace

SqrtCombo::SqrtCombo(const Rat& q) {
  if (!q.is_zero()) terms_.emplace(Integer(1), q);
}

SqrtCombo SqrtCombo::term(const Rat& c, const Integer& m) {
  if (m == 0) throw InputError("radicand must be nonzero");
  if (squarefree_decompose(m).square_root != 1) {
    throw InputError("radicand " + m.get_str() + " is not square-free");
  }
  SqrtCombo x;
  x.add_term(m, c);
  return x;
}

void SqrtCombo::add_term(const Integer& m, const Rat& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

bool SqrtCombo::is_rational() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 1);
}

Rat SqrtCombo::rational_part() const {
  const auto it = terms_.find(Integer(1));
  return it == terms_.end() ? Rat() : it->second;
}

Rat SqrtCombo::leading_coefficient() const {
  return terms_.empty() ? Rat() : terms_.begin()->second;
}

std::vector<Integer> SqrtCombo::generators() const {
  std::set<Integer> gens;
  for (const auto& [m, c] : terms_) {
    for (auto& g : squarefree_generators(m)) gens.insert(std::move(g));
  }
  return {gens.begin(), gens.end()};
}

SqrtCombo& SqrtCombo::operator+=(const SqrtCombo& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

SqrtCombo& SqrtCombo::operator-=(const SqrtCombo& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

SqrtCombo operator*(const SqrtCombo& a, const SqrtCombo& b) {
  SqrtCombo out;
  for (const auto& [m, c] : a.terms_) {
    for (const auto& [n, d] : b.terms_) {
      const auto prod = multiply_radicals(m, n);
      out.add_term(prod.radicand, c * d * Rat(prod.coeff));
    }
  }
  return out;
}

SqrtCombo& SqrtCombo::operator*=(const SqrtCombo& o) { return *this = *this * o; }

SqrtCombo operator-(const SqrtCombo& a) {
  SqrtCombo out = a;
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

std::string SqrtCombo::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << c.to_string();
    if (m != 1) os << "*sqrt(" << m.get_str() << ")";
  }
  return os.str();
}

SqrtCombo add(const SqrtCombo& x, const SqrtCombo& y) { return x + y; }
SqrtCombo mul(const SqrtCombo& x, const SqrtCombo& y) { return x * y; }

SqrtCombo invert(const SqrtCombo& x) {
  if (x.is_zero()) throw std::domain_error("inverse of zero");
  if (x.is_rational()) return SqrtCombo(x.rational_part().inverse());
  const auto group = character_group(x.generators());
  SqrtCombo conjugates(1);
  for (const auto& chi : group) {
    if (!chi.is_identity()) conjugates *= apply_character(chi, x);
  }
  const SqrtCombo norm = x * conjugates;
  if (!norm.is_rational() || norm.is_zero()) {
    throw VerificationFailure("norm of " + x.to_string() + " is not a nonzero rational");
  }
  return conjugates * SqrtCombo(norm.rational_part().inverse());
}

SqrtCombo sqrt_of_rational(const Rat& q, std::uint64_t bound) {
  if (q.is_zero()) throw InputError("sqrt_of_rational: zero input");
  // √(a/b) = √(ab)/b
  const auto split = squarefree_decompose(q.num() * q.den(), bound);
  SqrtCombo x;
  x.add_term(split.squarefree, Rat(split.square_root, q.den()));
  return x;
}

SignCharacter::SignCharacter(std::set<Integer> flipped) : flipped_(std::move(flipped)) {
  for (const auto& g : flipped_) {
    if (g == -1) continue;
    if (g < 2 || !g.fits_ulong_p() || !is_prime(g.get_ui())) {
      throw InputError("character generator " + g.get_str() + " is neither -1 nor a prime");
    }
  }
}

int SignCharacter::value(const Integer& m) const {
  int v = 1;
  for (const auto& g : flipped_) {
    const bool divides = g == -1 ? sgn(m) < 0 : mpz_divisible_p(m.get_mpz_t(), g.get_mpz_t()) != 0;
    if (divides) v = -v;
  }
  return v;
}

SignCharacter SignCharacter::compose(const SignCharacter& other) const {
  std::set<Integer> out;
  std::set_symmetric_difference(flipped_.begin(), flipped_.end(), other.flipped_.begin(),
                                other.flipped_.end(), std::inserter(out, out.begin()));
  return SignCharacter(std::move(out));
}

std::string SignCharacter::to_string() const {
  std::string s = "flip{";
  bool first = true;
  for (const auto& g : flipped_) {
    if (!first) s += ",";
    first = false;
    s += g.get_str();
  }
  return s + "}";
}

SqrtCombo apply_character(const SignCharacter& chi, const SqrtCombo& x) {
  if (chi.is_identity()) return x;
  SqrtCombo out = x;
  for (auto& [m, c] : out.terms_) {
    if (chi.value(m) < 0) c = -c;
  }
  return out;
}

std::vector<SignCharacter> character_group(const std::vector<Integer>& generators) {
  std::vector<Integer> gens = generators;
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  if (gens.size() > 20) throw RefusalError("character group on more than 20 generators");
  std::vector<SignCharacter> out;
  const std::size_t count = std::size_t{1} << gens.size();
  out.reserve(count);
  for (std::size_t mask = 0; mask < count; ++mask) {
    std::set<Integer> flipped;
    for (std::size_t i = 0; i < gens.size(); ++i) {
      if ((mask >> i) & 1U) flipped.insert(gens[i]);
    }
    out.emplace_back(std::move(flipped));
  }
  return out;
}

std::vector<SignCharacter> generated_subgroup(const std::vector<SignCharacter>& gens) {
  std::set<SignCharacter> group{SignCharacter()};
  for (const auto& g : gens) {
    std::set<SignCharacter> next = group;
    for (const auto& h : group) next.insert(h.compose(g));
    group = std::move(next);
  }
  return {group.begin(), group.end()};
}

}  // namespace delpezzo
