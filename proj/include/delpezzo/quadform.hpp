#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <vector>

#include "delpezzo/finite_field.hpp"
#include "delpezzo/projective_search.hpp"
#include "delpezzo/rat.hpp"
#include "delpezzo/sqrt_combo.hpp"

namespace delpezzo {

/// Σ a_i·x_i² with nonzero rational a_i.
class DiagQF {
 public:
  explicit DiagQF(std::vector<Rat> coeffs);

  const std::vector<Rat>& coeffs() const { return coeffs_; }
  std::size_t rank() const { return coeffs_.size(); }

 private:
  std::vector<Rat> coeffs_;
};

SqrtCombo evaluate(const DiagQF& q, std::span<const SqrtCombo> v);

/// Σ a_i·u_i·v_i; no factor 2, so orthogonality is vanishing and
/// bilinear(q, v, v) == evaluate(q, v).
SqrtCombo bilinear(const DiagQF& q, std::span<const SqrtCombo> u, std::span<const SqrtCombo> v);

/// Reduction of a rational diagonal form to F_{p^f}; every coefficient must be a p-unit.
DiagonalForm reduce(const DiagQF& q, const GaloisField& field);

enum class ScanMode { kSerial, kParallel };

/// Least common projective zero of q1, q2 over F_{p^f}, p odd.
std::optional<FFVector> find_common_isotropic(const DiagQF& q1, const DiagQF& q2, FieldSpec field,
                                              std::uint64_t budget = kDefaultSearchBudget,
                                              ScanMode mode = ScanMode::kParallel);

struct AmerBrumerReport {
  struct Level {
    unsigned k;           ///< extension degree over the base field
    bool has_common_zero;
    std::optional<FFVector> witness;
  };
  std::vector<Level> levels;  ///< odd k = 1, 3, ... ≤ kmax
  /// false iff some odd k > 1 has a common zero while k = 1 has none.
  bool descent_consistent = true;
};

/// Existence of common isotropic vectors over F_{q^k} for every odd k ≤ kmax.
AmerBrumerReport amer_brumer_check(const DiagQF& q1, const DiagQF& q2, FieldSpec base,
                                   unsigned kmax, std::uint64_t budget = kDefaultSearchBudget);

struct QuadPair {
  DiagQF first;
  DiagQF second;
};

/// A pair of forms in r variables with small random integer coefficients,
/// all prime to p, reproducible from the generator state.
QuadPair random_diagonal_pair(std::mt19937_64& rng, std::size_t r, std::uint32_t p);

struct AmerBrumerTrials {
  std::size_t trials = 0;
  std::size_t inconsistent = 0;
  std::size_t base_zero = 0;        ///< pairs with a common zero over the base field
  std::size_t vacuous = 0;          ///< pairs with no common zero at any tested level
  std::optional<QuadPair> first_failure;
};

/// Randomized descent harness over quaternary pairs.
AmerBrumerTrials run_amer_brumer_trials(FieldSpec base, std::size_t trials, unsigned kmax,
                                        std::uint64_t seed,
                                        std::uint64_t budget = kDefaultSearchBudget);

}  // namespace delpezzo
