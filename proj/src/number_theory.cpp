#include "delpezzo/number_theory.hpp"

#include <string>

#include "delpezzo/errors.hpp"

namespace delpezzo {

std::vector<PrimePower> factor(const Integer& n, std::uint64_t bound) {
  if (n == 0) throw InputError("cannot factor zero");
  Integer rest = abs(n);
  std::vector<PrimePower> out;
  auto strip = [&](unsigned long d) {
    unsigned e = 0;
    while (mpz_divisible_ui_p(rest.get_mpz_t(), d) != 0) {
      mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), d);
      ++e;
    }
    if (e > 0) out.push_back({Integer(d), e});
  };
  strip(2);
  for (std::uint64_t d = 3; d <= bound; d += 2) {
    if (Integer(static_cast<unsigned long>(d)) * static_cast<unsigned long>(d) > rest) break;
    strip(static_cast<unsigned long>(d));
  }
  if (rest > 1) {
    const Integer b(static_cast<unsigned long>(bound));
    if (rest >= b * b) {
      throw UnfactorableError("unfactorable input: cofactor " + rest.get_str() +
                              " exceeds trial-division bound " + std::to_string(bound));
    }
    out.push_back({rest, 1});
  }
  return out;
}

SquarefreeSplit squarefree_decompose(const Integer& n, std::uint64_t bound) {
  if (n == 0) throw InputError("squarefree_decompose: zero input");
  Integer c = 1;
  Integer m = sgn(n) < 0 ? -1 : 1;
  for (const auto& [p, e] : factor(n, bound)) {
    Integer pk;
    mpz_pow_ui(pk.get_mpz_t(), p.get_mpz_t(), e / 2);
    c *= pk;
    if (e % 2 == 1) m *= p;
  }
  return {c, m};
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

std::vector<Integer> squarefree_generators(const Integer& m, std::uint64_t bound) {
  std::vector<Integer> gens;
  if (sgn(m) < 0) gens.emplace_back(-1);
  for (const auto& pp : factor(m, bound)) gens.push_back(pp.prime);
  return gens;
}

}  // namespace delpezzo
