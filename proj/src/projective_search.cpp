#include "delpezzo/projective_search.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "delpezzo/errors.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace delpezzo {

namespace {

constexpr std::uint64_t kChunk = 1U << 14U;
constexpr std::uint64_t kTermTableLimit = 1U << 22U;

int thread_count() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

}  // namespace

std::uint64_t search_cost(std::uint64_t q, std::size_t r) {
  std::uint64_t cost = 1;
  for (std::size_t i = 1; i < r; ++i) {
    if (cost > std::numeric_limits<std::uint64_t>::max() / q) {
      return std::numeric_limits<std::uint64_t>::max();
    }
    cost *= q;
  }
  return cost;
}

ProjectiveSearch::ProjectiveSearch(const GaloisField& field, std::vector<DiagonalForm> forms,
                                   std::uint64_t budget)
    : field_(field), forms_(std::move(forms)), r_(0), q_(field.order()), count_(0) {
  if (forms_.empty()) throw InputError("no equations to search");
  r_ = forms_.front().coeffs.size();
  if (r_ == 0) throw InputError("forms in zero variables");
  for (const auto& form : forms_) {
    if (form.coeffs.size() != r_) throw InputError("forms have different numbers of variables");
    if (form.degree == 0) throw InputError("form of degree zero");
  }
  const std::uint64_t cost = search_cost(q_, r_);
  if (cost > budget) {
    throw BudgetExceeded("search over P^" + std::to_string(r_ - 1) + "(F_" + std::to_string(q_) +
                         ") needs " + std::to_string(cost) + " candidates, budget is " +
                         std::to_string(budget));
  }
  // (q^r - 1) / (q - 1) projective points
  std::uint64_t block = 1;
  for (std::size_t j = 0; j < r_; ++j) {
    count_ += block;
    block *= q_;
  }
  if (q_ <= kTermTableLimit) {
    terms_.reserve(forms_.size());
    for (const auto& form : forms_) {
      std::vector<GaloisField::Element> table(r_ * q_);
      for (GaloisField::Element x = 0; x < q_; ++x) {
        const auto xd = field_.pow(x, form.degree);
        for (std::size_t i = 0; i < r_; ++i) table[i * q_ + x] = field_.mul(form.coeffs[i], xd);
      }
      terms_.push_back(std::move(table));
    }
  }
}

std::vector<GaloisField::Element> ProjectiveSearch::point_at(std::uint64_t index) const {
  if (index >= count_) throw InputError("candidate index out of range");
  std::size_t j = 0;
  std::uint64_t block = 1;
  while (index >= block) {
    index -= block;
    block *= q_;
    ++j;
  }
  std::vector<GaloisField::Element> v(r_, 0);
  v[j] = 1;
  for (std::size_t i = j; i-- > 0;) {
    v[i] = static_cast<GaloisField::Element>(index % q_);
    index /= q_;
  }
  return v;
}

bool ProjectiveSearch::is_zero_at(const std::vector<GaloisField::Element>& v) const {
  for (std::size_t k = 0; k < forms_.size(); ++k) {
    GaloisField::Element s = 0;
    if (!terms_.empty()) {
      const auto* t = terms_[k].data();
      for (std::size_t i = 0; i < r_; ++i) s = field_.add(s, t[i * q_ + v[i]]);
    } else {
      for (std::size_t i = 0; i < r_; ++i) {
        s = field_.add(s, field_.mul(forms_[k].coeffs[i], field_.pow(v[i], forms_[k].degree)));
      }
    }
    if (s != 0) return false;
  }
  return true;
}

namespace {

// Advance to the next candidate in enumeration order.
void advance(std::vector<GaloisField::Element>& v, std::size_t& j, std::uint64_t q) {
  for (std::size_t i = j; i-- > 0;) {
    if (++v[i] < q) return;
    v[i] = 0;
  }
  v[j] = 0;
  ++j;
  if (j < v.size()) v[j] = 1;
}

std::size_t block_of(const std::vector<GaloisField::Element>& v) {
  std::size_t j = v.size();
  while (j > 0 && v[j - 1] == 0) --j;
  return j - 1;
}

}  // namespace

std::optional<std::uint64_t> ProjectiveSearch::scan(std::uint64_t lo, std::uint64_t hi) const {
  if (lo >= hi) return std::nullopt;
  auto v = point_at(lo);
  std::size_t j = block_of(v);
  for (std::uint64_t n = lo; n < hi; ++n) {
    if (is_zero_at(v)) return n;
    if (n + 1 < hi) advance(v, j, q_);
  }
  return std::nullopt;
}

std::uint64_t ProjectiveSearch::count_range(std::uint64_t lo, std::uint64_t hi) const {
  if (lo >= hi) return 0;
  auto v = point_at(lo);
  std::size_t j = block_of(v);
  std::uint64_t zeros = 0;
  for (std::uint64_t n = lo; n < hi; ++n) {
    if (is_zero_at(v)) ++zeros;
    if (n + 1 < hi) advance(v, j, q_);
  }
  return zeros;
}

std::optional<std::uint64_t> ProjectiveSearch::first_zero_serial() const {
  return scan(0, count_);
}

std::optional<std::uint64_t> ProjectiveSearch::first_zero_parallel() const {
  const std::uint64_t none = std::numeric_limits<std::uint64_t>::max();
  const auto chunks_per_wave = static_cast<std::int64_t>(4 * thread_count());
  std::uint64_t best = none;
  for (std::uint64_t wave = 0; wave < count_ && best == none;
       wave += kChunk * static_cast<std::uint64_t>(chunks_per_wave)) {
#pragma omp parallel for schedule(dynamic, 1) reduction(min : best)
    for (std::int64_t c = 0; c < chunks_per_wave; ++c) {
      const std::uint64_t lo = wave + static_cast<std::uint64_t>(c) * kChunk;
      const std::uint64_t hi = std::min(lo + kChunk, count_);
      if (const auto hit = scan(lo, hi)) best = std::min(best, *hit);
    }
  }
  if (best == none) return std::nullopt;
  return best;
}

std::uint64_t ProjectiveSearch::count_zeros_serial() const { return count_range(0, count_); }

std::uint64_t ProjectiveSearch::count_zeros_parallel() const {
  const auto chunks = static_cast<std::int64_t>((count_ + kChunk - 1) / kChunk);
  std::uint64_t total = 0;
#pragma omp parallel for schedule(dynamic, 1) reduction(+ : total)
  for (std::int64_t c = 0; c < chunks; ++c) {
    const std::uint64_t lo = static_cast<std::uint64_t>(c) * kChunk;
    total += count_range(lo, std::min(lo + kChunk, count_));
  }
  return total;
}

}  // namespace delpezzo
