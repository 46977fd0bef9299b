#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "delpezzo/finite_field.hpp"
#include "delpezzo/projective_search.hpp"
#include "delpezzo/rat.hpp"

namespace delpezzo {

/// A surface with Pic = Z·G, described by G·G and the multiple λ with K = λ·G.
struct PicRankOneSurface {
  long long gen_sq = 0;
  long long k_mult = 0;

  /// del Pezzo surface of degree d with G = K.
  static PicRankOneSurface del_pezzo(long long degree) { return {degree, 1}; }
  /// Quartic K3 surface with G = H.
  static PicRankOneSurface k3_quartic() { return {4, 0}; }
};

void validate(const PicRankOneSurface& s);

/// p_a(nG) = 1 + n(n + λ)·G²/2. Throws InputError for n = 0 or a non-integral result.
long long adjunction_genus(const PicRankOneSurface& s, long long n);

struct ParityResult {
  long long half_intersection;  ///< (Γ·(Γ+K))/2
  long long residue;            ///< modulo ℓ
  bool fires;                   ///< residue == 0
};

/// (Γ·(Γ+K))/2 mod ℓ for Γ = nG. An odd Γ·(Γ+K) is rejected as bad input.
ParityResult parity_obstruction(const PicRankOneSurface& s, long long n, long long ell);

struct EulerCongruence {
  long long residue;  ///< r·χ mod ℓ
  bool unit;
};

EulerCongruence euler_char_congruence(long long chi, long long r, long long ell);

struct GenusGap {
  long long delta;
  bool odd;
};

/// δ = p_a − p_g. Requires p_a ≥ p_g ≥ 0.
GenusGap genus_gap_parity(long long p_a, long long p_g);

/// Inputs to the mod-p bookkeeping of the degree formula. η values are
/// supplied, not computed.
struct DegreeFormulaInstance {
  long long p = 3;
  long long n_x = 3;
  long long n_y = 3;
  long long eta_y = 1;
  long long deg_q = 1;
  long long deg_r = 1;
};

struct RostAudit {
  long long eta_ypp;          ///< deg q · η(Y) mod p
  std::string deg_r_constraint;  ///< "prime to p" or "unconstrained"
  bool deg_r_consistent;      ///< the supplied deg r satisfies the constraint
  bool contradiction_with_brauer_injectivity;
};

RostAudit rost_audit(const DegreeFormulaInstance& inst);

/// A diagonal equation Σ c_i x_i^degree = 0 with rational coefficients.
struct DiagonalEquation {
  unsigned degree = 2;
  std::vector<Rat> coeffs;
};

struct IndexResult {
  long long index;                   ///< gcd of degrees with a point; 0 if none found
  std::vector<unsigned> degrees_with_point;  ///< those scanned before stopping
};

/// gcd of {k ≤ kmax : the system has a projective zero over F_{q^k}}, q = p^f.
/// Degrees are scanned upward and the scan stops once the gcd is 1.
IndexResult index_ff(const std::vector<DiagonalEquation>& equations, FieldSpec base, unsigned kmax,
                     std::uint64_t budget = kDefaultSearchBudget);

}  // namespace delpezzo
