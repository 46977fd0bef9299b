#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "delpezzo/linalg.hpp"
#include "delpezzo/quadform.hpp"
#include "delpezzo/rat.hpp"
#include "delpezzo/sqrt_combo.hpp"

namespace delpezzo {

/// The surface X = {Σ a_i T_i² = 0, Σ b_i T_i² = 0} ⊂ P⁴.
/// All a_i are required nonzero; rescale or swap the forms beforehand.
class QuadricPencil {
 public:
  QuadricPencil(std::array<Rat, 5> a, std::array<Rat, 5> b);

  const std::array<Rat, 5>& a() const { return a_; }
  const std::array<Rat, 5>& b() const { return b_; }
  DiagQF first() const { return DiagQF({a_.begin(), a_.end()}); }
  DiagQF second() const { return DiagQF({b_.begin(), b_.end()}); }

 private:
  std::array<Rat, 5> a_;
  std::array<Rat, 5> b_;
};

/// (1,1,1,1,1) / (2,3,5,7,11).
QuadricPencil reference_pencil();

using Point4 = std::array<SqrtCombo, 5>;

/// The line of P⁴ spanned by two points.
struct LineP4 {
  Point4 p;
  Point4 q;
};

/// Sign choice (ε₀, ε₁, ε₂, δ) as a 4-bit index: bit i set means the i-th
/// sign is -1, with δ in bit 3. Index 0 is (+,+,+,+).
struct SignChoice {
  std::array<int, 3> eps;
  int delta;

  static SignChoice from_index(std::size_t index);
  std::size_t index() const;
};

struct LineSystem {
  std::vector<LineP4> lines;               ///< 16 lines indexed by SignChoice
  std::vector<std::vector<int>> gram;      ///< intersection numbers, diagonal -1
  std::vector<Integer> generators;         ///< square classes of all radicands
};

using DijMatrix = std::array<std::array<Rat, 5>, 5>;

/// d_ij = a_i b_j - a_j b_i.
DijMatrix pencil_dij(const QuadricPencil& pencil);

/// All d_ij ≠ 0 for i < j.
bool is_smooth(const QuadricPencil& pencil);

/// The six rational radicands of the closed line formula, before taking roots.
struct LineRadicands {
  std::array<Rat, 3> first;   ///< under the roots of the point (…, 1, 0)
  std::array<Rat, 3> second;  ///< under the roots of the point (…, 0, 1)
};
LineRadicands line_radicands(const QuadricPencil& pencil);

/// Builds the 16 lines, checks each lies on X and that they are pairwise
/// distinct (VerificationFailure otherwise), and fills the Gram matrix.
/// Throws InputError if the pencil is not smooth.
LineSystem sixteen_lines(const QuadricPencil& pencil);

/// Same 2-dimensional span.
bool line_equal(const LineP4& l1, const LineP4& l2);

/// 1 if two distinct lines meet, 0 if disjoint. Throws InputError on equal lines.
int line_incidence(const LineP4& l1, const LineP4& l2);

LineP4 apply_character(const SignCharacter& chi, const LineP4& line);

/// Permutation of the 16 line indices induced by each character.
/// Throws InputError if chars is not a group and VerificationFailure if an
/// image is not one of the lines.
std::vector<std::vector<std::size_t>> galois_permutations(const LineSystem& system,
                                                          const std::vector<SignCharacter>& chars);

/// Orbits, each sorted, ordered by least element.
std::vector<std::vector<std::size_t>> galois_orbits(const LineSystem& system,
                                                    const std::vector<SignCharacter>& chars);

/// Rank of the invariant part of Q¹⁶/ker(gram): rank(gram · R), R the
/// averaging operator of the permutation action.
std::size_t invariant_picard_rank(const LineSystem& system, const std::vector<SignCharacter>& chars);

struct AnticanonicalCheck {
  bool ok = false;
  std::vector<Rat> representative;  ///< coefficients on the 16 line classes
  Rat self_intersection;
};

/// Looks for h in the span of the lines with h·L_i = 1 for all i and h·h = 4.
AnticanonicalCheck verify_anticanonical(const std::vector<std::vector<int>>& gram);
inline AnticanonicalCheck verify_anticanonical(const LineSystem& s) {
  return verify_anticanonical(s.gram);
}

}  // namespace delpezzo
