#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "delpezzo/finite_field.hpp"

namespace delpezzo {

inline constexpr std::uint64_t kDefaultSearchBudget = 100'000'000;

/// Σ c_i·x_i^degree over a fixed GaloisField.
struct DiagonalForm {
  unsigned degree = 2;
  std::vector<GaloisField::Element> coeffs;
};

/// Exhaustive scan of P^{r-1}(F_q) for common zeros of diagonal forms.
///
/// Candidates are numbered 0..N-1. A projective point is represented by the
/// vector whose last nonzero coordinate is 1; points with last nonzero
/// coordinate at position j come before those at j+1, and within a block the
/// leading coordinates run lexicographically (coordinate 0 most significant).
/// Both scan variants report the globally least zero in that order.
class ProjectiveSearch {
 public:
  /// Throws BudgetExceeded when q^(r-1) > budget.
  ProjectiveSearch(const GaloisField& field, std::vector<DiagonalForm> forms,
                   std::uint64_t budget = kDefaultSearchBudget);

  std::uint64_t candidate_count() const { return count_; }
  std::size_t dimension() const { return r_; }

  std::vector<GaloisField::Element> point_at(std::uint64_t index) const;
  bool is_zero_at(const std::vector<GaloisField::Element>& v) const;

  /// Reference implementation: a single forward loop.
  std::optional<std::uint64_t> first_zero_serial() const;
  /// Chunked OpenMP scan, processed in waves so it can stop early.
  std::optional<std::uint64_t> first_zero_parallel() const;

  /// Number of projective zeros; serial and OpenMP variants.
  std::uint64_t count_zeros_serial() const;
  std::uint64_t count_zeros_parallel() const;

 private:
  /// First zero in [lo, hi), if any.
  std::optional<std::uint64_t> scan(std::uint64_t lo, std::uint64_t hi) const;
  std::uint64_t count_range(std::uint64_t lo, std::uint64_t hi) const;

  const GaloisField& field_;
  std::vector<DiagonalForm> forms_;
  std::size_t r_;
  std::uint64_t q_;
  std::uint64_t count_;
  // terms_[k][i * q + x] = c_{k,i} · x^{d_k}
  std::vector<std::vector<GaloisField::Element>> terms_;
};

/// Candidate count q^(r-1) used by the budget guard, saturating at UINT64_MAX.
std::uint64_t search_cost(std::uint64_t q, std::size_t r);

}  // namespace delpezzo
