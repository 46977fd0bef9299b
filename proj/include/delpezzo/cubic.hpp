#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "delpezzo/finite_field.hpp"
#include "delpezzo/number_theory.hpp"
#include "delpezzo/projective_search.hpp"
#include "delpezzo/quadform.hpp"
#include "delpezzo/rat.hpp"

namespace delpezzo {

/// a₀T₀³ + a₁T₁³ + a₂T₂³ + a₃T₃³ = 0 with nonzero rational coefficients.
class DiagCubic {
 public:
  explicit DiagCubic(std::array<Rat, 4> coeffs);
  const std::array<Rat, 4>& coeffs() const { return coeffs_; }

 private:
  std::array<Rat, 4> coeffs_;
};

/// The local model T₀³ + pT₁³ + p²T₂³ − aT₃³ = 0 together with the bound on
/// residue degrees examined for extensions.
struct LocalSpec {
  std::uint32_t p = 0;
  long long a = 0;
  unsigned fmax = 10;
};

/// Throws InputError unless p is prime, p ∤ a and fmax ≥ 1.
void validate(const LocalSpec& spec);

/// Every prime exponent of q is divisible by 3.
bool is_cube_rational(const Rat& q, std::uint64_t bound = kDefaultFactorBound);

/// None of the three ratios a_m a_n / (a_p a_q) over the partitions of
/// {0,1,2,3} into pairs is a rational cube.
bool segre_criterion(const DiagCubic& cubic, std::uint64_t bound = kDefaultFactorBound);

/// Whether a (prime to p) is a cube in F_{p^f}: always when 3 ∤ p^f − 1,
/// otherwise iff a^((p^f − 1)/3) = 1.
bool cube_in_ff(long long a, std::uint32_t p, unsigned f);

struct LocalInsolubility {
  bool criterion_holds = false;    ///< p ≡ 1 mod 3 and a is not a cube mod p
  std::uint64_t primitive_solutions_mod_p3 = 0;
  bool oracle_agrees = false;      ///< criterion_holds == (no primitive solution mod p³)
};

/// Criterion plus the exhaustive mod-p³ cross-check. The check runs over
/// p⁹ triples and is refused above the budget.
LocalInsolubility qp_insoluble(const LocalSpec& spec,
                               std::uint64_t budget = kDefaultSearchBudget,
                               ScanMode mode = ScanMode::kParallel);

/// Number of primitive 4-tuples mod p³ solving the local equation. The
/// fourth coordinate is counted through a table of cube roots mod p³.
std::uint64_t count_primitive_solutions_mod_p3_serial(std::uint32_t p, long long a);
std::uint64_t count_primitive_solutions_mod_p3_parallel(std::uint32_t p, long long a);

struct ExtensionInsolubility {
  struct Degree {
    unsigned f;
    bool a_is_cube;
  };
  std::vector<Degree> degrees;  ///< every f ≤ fmax with 3 ∤ f
  bool holds = false;           ///< a stays a non-cube at every listed f
};

/// Residue-field cube tests over all residue degrees f ≤ fmax prime to 3.
/// A ramification index prime to 3 leaves the valuation pattern intact, so
/// these tests settle every extension of degree prime to 3 with f ≤ fmax.
ExtensionInsolubility prime_to_3_insoluble(const LocalSpec& spec);

/// Least projective point of the reduced cubic over F_{p^f} in the
/// ProjectiveSearch order. Coefficients must be p-units.
std::optional<FFVector> ff_point_exists(const DiagCubic& cubic, FieldSpec field,
                                        std::uint64_t budget = kDefaultSearchBudget,
                                        ScanMode mode = ScanMode::kParallel);

}  // namespace delpezzo
