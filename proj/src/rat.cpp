#include "delpezzo/rat.hpp"

#include <cctype>

#include "delpezzo/errors.hpp"

namespace delpezzo {

Rat::Rat(Integer num, Integer den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_ == 0) throw InputError("rational with zero denominator");
  canonicalize();
}

void Rat::canonicalize() {
  if (num_ == 0) {
    den_ = 1;
    return;
  }
  if (den_ < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  Integer g;
  mpz_gcd(g.get_mpz_t(), num_.get_mpz_t(), den_.get_mpz_t());
  if (g != 1) {
    mpz_divexact(num_.get_mpz_t(), num_.get_mpz_t(), g.get_mpz_t());
    mpz_divexact(den_.get_mpz_t(), den_.get_mpz_t(), g.get_mpz_t());
  }
}

namespace {

Integer parse_integer(std::string_view s, std::string_view whole) {
  std::size_t i = 0;
  if (!s.empty() && (s[0] == '-' || s[0] == '+')) i = 1;
  if (i == s.size()) throw InputError("malformed rational: '" + std::string(whole) + "'");
  for (std::size_t k = i; k < s.size(); ++k) {
    if (!std::isdigit(static_cast<unsigned char>(s[k]))) {
      throw InputError("malformed rational: '" + std::string(whole) + "'");
    }
  }
  std::string digits(s.substr(s[0] == '+' ? 1 : 0));
  return Integer(digits, 10);
}

}  // namespace

Rat Rat::parse(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rat(parse_integer(text, text));
  Integer den = parse_integer(text.substr(slash + 1), text);
  if (den == 0) throw InputError("malformed rational: zero denominator in '" + std::string(text) + "'");
  return Rat(parse_integer(text.substr(0, slash), text), std::move(den));
}

Rat Rat::inverse() const {
  if (num_ == 0) throw std::domain_error("inverse of zero rational");
  return Rat(den_, num_);
}

Rat Rat::abs() const { return sign() < 0 ? -*this : *this; }

std::string Rat::to_string() const { return num_.get_str() + "/" + den_.get_str(); }

Rat& Rat::operator+=(const Rat& o) {
  num_ = num_ * o.den_ + o.num_ * den_;
  den_ *= o.den_;
  canonicalize();
  return *this;
}

Rat& Rat::operator-=(const Rat& o) {
  num_ = num_ * o.den_ - o.num_ * den_;
  den_ *= o.den_;
  canonicalize();
  return *this;
}

Rat& Rat::operator*=(const Rat& o) {
  num_ *= o.num_;
  den_ *= o.den_;
  canonicalize();
  return *this;
}

Rat& Rat::operator/=(const Rat& o) {
  if (o.num_ == 0) throw std::domain_error("division by zero rational");
  num_ *= o.den_;
  den_ *= o.num_;
  canonicalize();
  return *this;
}

std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
  const int c = cmp(Integer(a.num_ * b.den_), Integer(b.num_ * a.den_));
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::uint32_t reduce_mod(const Rat& x, std::uint32_t p) {
  const Integer modulus(static_cast<unsigned long>(p));
  Integer n = x.num() % modulus;
  if (n < 0) n += modulus;
  Integer d = x.den() % modulus;
  if (n == 0 || d == 0) {
    throw InputError("coefficient " + x.to_string() + " is not a unit mod " + std::to_string(p));
  }
  Integer dinv;
  mpz_invert(dinv.get_mpz_t(), d.get_mpz_t(), modulus.get_mpz_t());
  Integer r = (n * dinv) % modulus;
  return static_cast<std::uint32_t>(r.get_ui());
}

}  // namespace delpezzo
