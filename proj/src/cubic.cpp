#include "delpezzo/cubic.hpp"

#include <numeric>
#include <string>

#include "delpezzo/errors.hpp"

namespace delpezzo {

DiagCubic::DiagCubic(std::array<Rat, 4> coeffs) : coeffs_(std::move(coeffs)) {
  for (const auto& c : coeffs_) {
    if (c.is_zero()) throw InputError("diagonal cubic with a zero coefficient");
  }
}

void validate(const LocalSpec& spec) {
  if (!is_prime(spec.p)) throw InputError(std::to_string(spec.p) + " is not prime");
  if (floor_mod(spec.a, spec.p) == 0) {
    throw InputError("a = " + std::to_string(spec.a) + " is not prime to p = " +
                     std::to_string(spec.p));
  }
  if (spec.fmax < 1) throw InputError("fmax must be at least 1");
}

bool is_cube_rational(const Rat& q, std::uint64_t bound) {
  if (q.is_zero()) throw InputError("is_cube_rational: zero input");
  for (const Integer* part : {&q.num(), &q.den()}) {
    for (const auto& pp : factor(*part, bound)) {
      if (pp.exponent % 3 != 0) return false;
    }
  }
  return true;
}

bool segre_criterion(const DiagCubic& cubic, std::uint64_t bound) {
  const auto& a = cubic.coeffs();
  // {0,1 | 2,3}, {0,2 | 1,3}, {0,3 | 1,2}; a ratio and its inverse are cubes together.
  const Rat ratios[] = {a[0] * a[1] / (a[2] * a[3]), a[0] * a[2] / (a[1] * a[3]),
                        a[0] * a[3] / (a[1] * a[2])};
  for (const auto& r : ratios) {
    if (is_cube_rational(r, bound)) return false;
  }
  return true;
}

bool cube_in_ff(long long a, std::uint32_t p, unsigned f) {
  if (!is_prime(p)) throw InputError(std::to_string(p) + " is not prime");
  if (f == 0) throw InputError("field degree must be positive");
  const long long residue = floor_mod(a, p);
  if (residue == 0) throw InputError("cube_in_ff: a must be prime to p");
  Integer q;
  mpz_ui_pow_ui(q.get_mpz_t(), p, f);
  const Integer order = q - 1;
  if (mpz_divisible_ui_p(order.get_mpz_t(), 3) == 0) return true;
  // a lies in F_p, so its power in F_{p^f} is computed mod p.
  Integer e = order / 3;
  Integer r;
  const Integer base(static_cast<long>(residue));
  const Integer mod(static_cast<unsigned long>(p));
  mpz_powm(r.get_mpz_t(), base.get_mpz_t(), e.get_mpz_t(), mod.get_mpz_t());
  return r == 1;
}

namespace {

struct CubeTables {
  std::uint64_t modulus = 0;
  std::vector<std::uint64_t> cube;        // x³ mod p³
  std::vector<std::uint32_t> roots;       // #{x : x³ = t}
  std::vector<std::uint32_t> unit_roots;  // #{x unit : x³ = t}
  std::vector<std::uint64_t> neg_a_cube;  // -a·x³ mod p³
};

CubeTables make_tables(std::uint32_t p, long long a) {
  CubeTables t;
  const std::uint64_t m = std::uint64_t{p} * p * p;
  t.modulus = m;
  t.cube.resize(m);
  t.roots.assign(m, 0);
  t.unit_roots.assign(m, 0);
  t.neg_a_cube.resize(m);
  const std::uint64_t neg_a = static_cast<std::uint64_t>(floor_mod(-a, static_cast<long long>(m)));
  for (std::uint64_t x = 0; x < m; ++x) {
    const std::uint64_t c = x * x % m * x % m;
    t.cube[x] = c;
    ++t.roots[c];
    if (x % p != 0) ++t.unit_roots[c];
    t.neg_a_cube[x] = neg_a * c % m;
  }
  return t;
}

// Primitive solutions with the given T₁; T₀ is counted through the root tables.
std::uint64_t count_for_t1(const CubeTables& t, std::uint32_t p, std::uint64_t t1) {
  const std::uint64_t m = t.modulus;
  const std::uint64_t pp = std::uint64_t{p} * p;
  const std::uint64_t term1 = p * t.cube[t1] % m;
  std::uint64_t count = 0;
  for (std::uint64_t t2 = 0; t2 < m; ++t2) {
    const std::uint64_t s12 = (term1 + pp * t.cube[t2]) % m;
    const bool rest_divisible = t1 % p == 0 && t2 % p == 0;
    for (std::uint64_t t3 = 0; t3 < m; ++t3) {
      // T₀³ ≡ -(pT₁³ + p²T₂³ - aT₃³)
      const std::uint64_t rhs = (s12 + t.neg_a_cube[t3]) % m;
      const std::uint64_t target = rhs == 0 ? 0 : m - rhs;
      count += rest_divisible && t3 % p == 0 ? t.unit_roots[target] : t.roots[target];
    }
  }
  return count;
}

}  // namespace

std::uint64_t count_primitive_solutions_mod_p3_serial(std::uint32_t p, long long a) {
  const auto tables = make_tables(p, a);
  std::uint64_t total = 0;
  for (std::uint64_t t1 = 0; t1 < tables.modulus; ++t1) total += count_for_t1(tables, p, t1);
  return total;
}

std::uint64_t count_primitive_solutions_mod_p3_parallel(std::uint32_t p, long long a) {
  const auto tables = make_tables(p, a);
  const auto m = static_cast<std::int64_t>(tables.modulus);
  std::uint64_t total = 0;
#pragma omp parallel for schedule(dynamic, 1) reduction(+ : total)
  for (std::int64_t t1 = 0; t1 < m; ++t1) {
    total += count_for_t1(tables, p, static_cast<std::uint64_t>(t1));
  }
  return total;
}

LocalInsolubility qp_insoluble(const LocalSpec& spec, std::uint64_t budget, ScanMode mode) {
  validate(spec);
  LocalInsolubility out;
  out.criterion_holds = spec.p % 3 == 1 && !cube_in_ff(spec.a, spec.p, 1);
  const std::uint64_t cost = search_cost(std::uint64_t{spec.p} * spec.p * spec.p, 4);
  if (cost > budget) {
    throw BudgetExceeded("mod-p^3 check needs " + std::to_string(cost) +
                         " triples, budget is " + std::to_string(budget));
  }
  out.primitive_solutions_mod_p3 = mode == ScanMode::kSerial
                                       ? count_primitive_solutions_mod_p3_serial(spec.p, spec.a)
                                       : count_primitive_solutions_mod_p3_parallel(spec.p, spec.a);
  out.oracle_agrees = out.criterion_holds == (out.primitive_solutions_mod_p3 == 0);
  return out;
}

ExtensionInsolubility prime_to_3_insoluble(const LocalSpec& spec) {
  validate(spec);
  ExtensionInsolubility out;
  out.holds = true;
  for (unsigned f = 1; f <= spec.fmax; ++f) {
    if (f % 3 == 0) continue;
    const bool cube = cube_in_ff(spec.a, spec.p, f);
    out.degrees.push_back({f, cube});
    if (cube) out.holds = false;
  }
  return out;
}

std::optional<FFVector> ff_point_exists(const DiagCubic& cubic, FieldSpec spec,
                                        std::uint64_t budget, ScanMode mode) {
  const GaloisField field(spec);
  DiagonalForm form{3, {}};
  for (const auto& c : cubic.coeffs()) form.coeffs.push_back(field.from_rat(c));
  const ProjectiveSearch search(field, {form}, budget);
  const auto hit =
      mode == ScanMode::kSerial ? search.first_zero_serial() : search.first_zero_parallel();
  if (!hit) return std::nullopt;
  return FFVector{spec, search.point_at(*hit)};
}

}  // namespace delpezzo
