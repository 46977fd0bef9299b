#include "delpezzo/quadform.hpp"

#include <string>

#include "delpezzo/errors.hpp"

namespace delpezzo {

DiagQF::DiagQF(std::vector<Rat> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw InputError("quadratic form needs at least one variable");
  for (const auto& c : coeffs_) {
    if (c.is_zero()) throw InputError("diagonal quadratic form with a zero coefficient");
  }
}

SqrtCombo evaluate(const DiagQF& q, std::span<const SqrtCombo> v) {
  if (v.size() != q.rank()) {
    throw InputError("vector of length " + std::to_string(v.size()) + " for a form in " +
                     std::to_string(q.rank()) + " variables");
  }
  SqrtCombo sum;
  for (std::size_t i = 0; i < v.size(); ++i) sum += SqrtCombo(q.coeffs()[i]) * v[i] * v[i];
  return sum;
}

SqrtCombo bilinear(const DiagQF& q, std::span<const SqrtCombo> u, std::span<const SqrtCombo> v) {
  if (u.size() != q.rank() || v.size() != q.rank()) {
    throw InputError("vector length does not match the form");
  }
  SqrtCombo sum;
  for (std::size_t i = 0; i < u.size(); ++i) sum += SqrtCombo(q.coeffs()[i]) * u[i] * v[i];
  return sum;
}

DiagonalForm reduce(const DiagQF& q, const GaloisField& field) {
  DiagonalForm out{2, {}};
  out.coeffs.reserve(q.rank());
  for (const auto& c : q.coeffs()) out.coeffs.push_back(field.from_rat(c));
  return out;
}

std::optional<FFVector> find_common_isotropic(const DiagQF& q1, const DiagQF& q2, FieldSpec spec,
                                              std::uint64_t budget, ScanMode mode) {
  if (spec.p == 2) throw InputError("isotropy search requires odd characteristic");
  if (q1.rank() != q2.rank()) throw InputError("forms have different numbers of variables");
  const GaloisField field(spec);
  const ProjectiveSearch search(field, {reduce(q1, field), reduce(q2, field)}, budget);
  const auto hit =
      mode == ScanMode::kSerial ? search.first_zero_serial() : search.first_zero_parallel();
  if (!hit) return std::nullopt;
  return FFVector{spec, search.point_at(*hit)};
}

AmerBrumerReport amer_brumer_check(const DiagQF& q1, const DiagQF& q2, FieldSpec base,
                                   unsigned kmax, std::uint64_t budget) {
  if (kmax < 1) throw InputError("kmax must be at least 1");
  AmerBrumerReport report;
  for (unsigned k = 1; k <= kmax; k += 2) {
    auto witness = find_common_isotropic(q1, q2, FieldSpec{base.p, base.f * k}, budget);
    report.levels.push_back({k, witness.has_value(), std::move(witness)});
  }
  bool higher = false;
  for (const auto& level : report.levels) {
    if (level.k > 1 && level.has_common_zero) higher = true;
  }
  report.descent_consistent = !higher || report.levels.front().has_common_zero;
  return report;
}

namespace {

Rat random_unit(std::mt19937_64& rng, std::uint32_t p) {
  const long span = 3L * p;
  long n = 0;
  do {
    n = static_cast<long>(rng() % static_cast<std::uint64_t>(2 * span + 1)) - span;
  } while (n == 0 || n % static_cast<long>(p) == 0);
  long d = 1;
  if (rng() % 4 == 0) {
    do {
      d = 2 + static_cast<long>(rng() % (p + 1));
    } while (d % static_cast<long>(p) == 0);
  }
  return Rat(n, d);
}

}  // namespace

QuadPair random_diagonal_pair(std::mt19937_64& rng, std::size_t r, std::uint32_t p) {
  std::vector<Rat> a;
  std::vector<Rat> b;
  for (std::size_t i = 0; i < r; ++i) a.push_back(random_unit(rng, p));
  for (std::size_t i = 0; i < r; ++i) b.push_back(random_unit(rng, p));
  return {DiagQF(std::move(a)), DiagQF(std::move(b))};
}

AmerBrumerTrials run_amer_brumer_trials(FieldSpec base, std::size_t trials, unsigned kmax,
                                        std::uint64_t seed, std::uint64_t budget) {
  std::mt19937_64 rng(seed);
  AmerBrumerTrials out;
  for (std::size_t t = 0; t < trials; ++t) {
    auto pair = random_diagonal_pair(rng, 4, base.p);
    const auto report = amer_brumer_check(pair.first, pair.second, base, kmax, budget);
    ++out.trials;
    if (report.levels.front().has_common_zero) ++out.base_zero;
    bool any = false;
    for (const auto& level : report.levels) any = any || level.has_common_zero;
    if (!any) ++out.vacuous;
    if (!report.descent_consistent) {
      ++out.inconsistent;
      if (!out.first_failure) out.first_failure = std::move(pair);
    }
  }
  return out;
}

}  // namespace delpezzo
