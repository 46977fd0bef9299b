#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "delpezzo/rat.hpp"

namespace delpezzo {

/// Trial divisors are tried up to this bound. A cofactor left over after
/// the scan is accepted as prime only when it is below bound², otherwise
/// the input is refused with UnfactorableError.
inline constexpr std::uint64_t kDefaultFactorBound = 1'000'000;

struct PrimePower {
  Integer prime;
  unsigned exponent;
};

/// Prime factorization of |n| (n ≠ 0), primes ascending. |n| = 1 gives {}.
std::vector<PrimePower> factor(const Integer& n, std::uint64_t bound = kDefaultFactorBound);

struct SquarefreeSplit {
  Integer square_root;  ///< c > 0
  Integer squarefree;   ///< m, same sign as n
};

/// Writes n = c²·m with m square-free and sign(m) = sign(n).
SquarefreeSplit squarefree_decompose(const Integer& n,
                                     std::uint64_t bound = kDefaultFactorBound);

bool is_prime(std::uint64_t n);

/// Square-class generators of a square-free m: -1 if m < 0, then its primes.
std::vector<Integer> squarefree_generators(const Integer& m,
                                           std::uint64_t bound = kDefaultFactorBound);

/// Non-negative residue of a mod m (m > 0).
inline long long floor_mod(long long a, long long m) {
  const long long r = a % m;
  return r < 0 ? r + m : r;
}

}  // namespace delpezzo
