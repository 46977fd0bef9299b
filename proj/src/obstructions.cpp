#include "delpezzo/obstructions.hpp"

#include <numeric>

#include "delpezzo/errors.hpp"
#include "delpezzo/number_theory.hpp"

namespace delpezzo {

namespace {

void require_prime(long long ell) {
  if (ell < 2 || !is_prime(static_cast<std::uint64_t>(ell))) {
    throw InputError(std::to_string(ell) + " is not prime");
  }
}

// Γ·(Γ+K) for Γ = nG.
Integer intersection_with_adjoint(const PicRankOneSurface& s, long long n) {
  return Integer(static_cast<long>(n)) * Integer(static_cast<long>(n + s.k_mult)) *
         Integer(static_cast<long>(s.gen_sq));
}

long long to_ll(const Integer& x) {
  if (!x.fits_slong_p()) throw RefusalError("intersection number overflows 64 bits");
  return x.get_si();
}

}  // namespace

void validate(const PicRankOneSurface& s) {
  if (s.gen_sq == 0) throw InputError("generator self-intersection must be nonzero");
}

long long adjunction_genus(const PicRankOneSurface& s, long long n) {
  validate(s);
  if (n == 0) throw InputError("adjunction_genus: n must be nonzero");
  const Integer twice = intersection_with_adjoint(s, n);
  if (mpz_even_p(twice.get_mpz_t()) == 0) {
    throw InputError("Γ·(Γ+K) is odd; surface data is inconsistent");
  }
  return 1 + to_ll(twice / 2);
}

ParityResult parity_obstruction(const PicRankOneSurface& s, long long n, long long ell) {
  validate(s);
  require_prime(ell);
  const Integer twice = intersection_with_adjoint(s, n);
  if (mpz_even_p(twice.get_mpz_t()) == 0) {
    throw InputError("Γ·(Γ+K) is odd; surface data is inconsistent");
  }
  const long long half = to_ll(twice / 2);
  const long long residue = floor_mod(half, ell);
  return {half, residue, residue == 0};
}

EulerCongruence euler_char_congruence(long long chi, long long r, long long ell) {
  require_prime(ell);
  const long long residue = floor_mod(floor_mod(r, ell) * floor_mod(chi, ell), ell);
  return {residue, residue != 0};
}

GenusGap genus_gap_parity(long long p_a, long long p_g) {
  if (p_g < 0) throw InputError("geometric genus is negative");
  if (p_a < p_g) throw InputError("arithmetic genus below geometric genus");
  const long long delta = p_a - p_g;
  return {delta, delta % 2 != 0};
}

RostAudit rost_audit(const DegreeFormulaInstance& inst) {
  require_prime(inst.p);
  if (inst.n_x <= 0 || inst.n_y <= 0) throw InputError("indices must be positive");
  if (inst.deg_q < 0 || inst.deg_r < 0) throw InputError("degrees must be non-negative");
  if (floor_mod(inst.deg_q, inst.p) == 0) {
    throw InputError("deg q is divisible by p; the degree hypothesis fails");
  }
  if (floor_mod(inst.eta_y, inst.p) == 0) throw InputError("η(Y) must be nonzero mod p");
  RostAudit out;
  out.eta_ypp = floor_mod(floor_mod(inst.deg_q, inst.p) * floor_mod(inst.eta_y, inst.p), inst.p);
  // η(Y'') = deg r · η(X) and η(Y'') ≠ 0, so deg r cannot vanish mod p.
  const bool forced = out.eta_ypp != 0;
  out.deg_r_constraint = forced ? "prime to p" : "unconstrained";
  out.deg_r_consistent = !forced || floor_mod(inst.deg_r, inst.p) != 0;
  // A dominant map of degree prime to p makes pBr k → pBr k(Y'') injective,
  // which the split Severi-Brauer class rules out.
  out.contradiction_with_brauer_injectivity = forced;
  return out;
}

IndexResult index_ff(const std::vector<DiagonalEquation>& equations, FieldSpec base, unsigned kmax,
                     std::uint64_t budget) {
  if (equations.empty()) throw InputError("index_ff: empty equation list");
  if (kmax < 1) throw InputError("kmax must be at least 1");
  IndexResult out{0, {}};
  for (unsigned k = 1; k <= kmax; ++k) {
    const GaloisField field(base.p, base.f * k);
    std::vector<DiagonalForm> forms;
    for (const auto& eq : equations) {
      DiagonalForm form{eq.degree, {}};
      for (const auto& c : eq.coeffs) form.coeffs.push_back(field.from_rat(c));
      forms.push_back(std::move(form));
    }
    const ProjectiveSearch search(field, std::move(forms), budget);
    if (search.first_zero_parallel()) {
      out.degrees_with_point.push_back(k);
      out.index = std::gcd(out.index, static_cast<long long>(k));
      if (out.index == 1) break;
    }
  }
  return out;
}

}  // namespace delpezzo
