#include "delpezzo/dp4.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "delpezzo/errors.hpp"

namespace delpezzo {

QuadricPencil::QuadricPencil(std::array<Rat, 5> a, std::array<Rat, 5> b)
    : a_(std::move(a)), b_(std::move(b)) {
  for (const auto& x : a_) {
    if (x.is_zero()) throw InputError("pencil normalization requires every a_i to be nonzero");
  }
}

QuadricPencil reference_pencil() {
  return QuadricPencil({Rat(1), Rat(1), Rat(1), Rat(1), Rat(1)},
                       {Rat(2), Rat(3), Rat(5), Rat(7), Rat(11)});
}

SignChoice SignChoice::from_index(std::size_t index) {
  auto sign = [&](unsigned bit) { return ((index >> bit) & 1U) != 0 ? -1 : 1; };
  return {{sign(0), sign(1), sign(2)}, sign(3)};
}

std::size_t SignChoice::index() const {
  std::size_t out = 0;
  for (unsigned i = 0; i < 3; ++i) {
    if (eps[i] < 0) out |= std::size_t{1} << i;
  }
  if (delta < 0) out |= 8U;
  return out;
}

DijMatrix pencil_dij(const QuadricPencil& pencil) {
  DijMatrix d;
  for (std::size_t i = 0; i < 5; ++i) {
    for (std::size_t j = 0; j < 5; ++j) {
      d[i][j] = pencil.a()[i] * pencil.b()[j] - pencil.a()[j] * pencil.b()[i];
    }
  }
  return d;
}

bool is_smooth(const QuadricPencil& pencil) {
  const auto d = pencil_dij(pencil);
  for (std::size_t i = 0; i < 5; ++i) {
    for (std::size_t j = i + 1; j < 5; ++j) {
      if (d[i][j].is_zero()) return false;
    }
  }
  return true;
}

LineRadicands line_radicands(const QuadricPencil& pencil) {
  const auto d = pencil_dij(pencil);
  LineRadicands r;
  r.first[0] = d[1][3] * d[2][3] * d[0][4] / (d[0][1] * d[2][0] * d[3][4]);
  r.first[1] = d[2][3] * d[0][3] * d[1][4] / (d[1][2] * d[0][1] * d[3][4]);
  r.first[2] = d[0][3] * d[1][3] * d[2][4] / (d[2][0] * d[1][2] * d[3][4]);
  r.second[0] = d[1][4] * d[2][4] * d[0][3] / (d[0][1] * d[2][0] * d[4][3]);
  r.second[1] = d[2][4] * d[0][4] * d[1][3] / (d[1][2] * d[0][1] * d[4][3]);
  r.second[2] = d[0][4] * d[1][4] * d[2][3] / (d[2][0] * d[1][2] * d[4][3]);
  return r;
}

namespace {

Matrix<SqrtCombo> stack(const LineP4& l1, const LineP4& l2) {
  Matrix<SqrtCombo> m;
  for (const Point4* pt : {&l1.p, &l1.q, &l2.p, &l2.q}) m.emplace_back(pt->begin(), pt->end());
  return m;
}

void require_on_surface(const QuadricPencil& pencil, const LineP4& line, std::size_t index) {
  const DiagQF forms[] = {pencil.first(), pencil.second()};
  for (const auto& form : forms) {
    if (!evaluate(form, line.p).is_zero() || !evaluate(form, line.q).is_zero() ||
        !bilinear(form, line.p, line.q).is_zero()) {
      throw VerificationFailure("line " + std::to_string(index) + " does not lie on the surface");
    }
  }
}

}  // namespace

bool line_equal(const LineP4& l1, const LineP4& l2) { return matrix_rank(stack(l1, l2)) == 2; }

int line_incidence(const LineP4& l1, const LineP4& l2) {
  const auto rank = matrix_rank(stack(l1, l2));
  if (rank <= 2) throw InputError("incidence of a line with itself");
  return rank <= 3 ? 1 : 0;
}

LineSystem sixteen_lines(const QuadricPencil& pencil) {
  if (!is_smooth(pencil)) throw InputError("pencil is not smooth: some d_ij vanishes");
  const auto rad = line_radicands(pencil);
  std::array<SqrtCombo, 3> u;
  std::array<SqrtCombo, 3> v;
  for (std::size_t i = 0; i < 3; ++i) {
    u[i] = sqrt_of_rational(rad.first[i]);
    v[i] = sqrt_of_rational(rad.second[i]);
  }

  // The roots are only defined up to sign; fix the signs of the second point
  // against the first so the two points are orthogonal for both forms. The
  // admissible patterns come in a ± pair, so the first sign is pinned to +.
  std::vector<std::array<int, 3>> admissible;
  for (int s1 : {1, -1}) {
    for (int s2 : {1, -1}) {
      const std::array<int, 3> s{1, s1, s2};
      SqrtCombo pa;
      SqrtCombo pb;
      for (std::size_t i = 0; i < 3; ++i) {
        const SqrtCombo prod = u[i] * v[i] * SqrtCombo(s[i]);
        pa += SqrtCombo(pencil.a()[i]) * prod;
        pb += SqrtCombo(pencil.b()[i]) * prod;
      }
      if (pa.is_zero() && pb.is_zero()) admissible.push_back(s);
    }
  }
  if (admissible.size() != 1) {
    throw VerificationFailure("expected one orthogonal sign pattern, found " +
                              std::to_string(admissible.size()));
  }
  const auto sigma = admissible.front();

  LineSystem system;
  for (std::size_t index = 0; index < 16; ++index) {
    const auto choice = SignChoice::from_index(index);
    LineP4 line;
    for (std::size_t i = 0; i < 3; ++i) {
      line.p[i] = u[i] * SqrtCombo(choice.eps[i]);
      line.q[i] = v[i] * SqrtCombo(choice.delta * choice.eps[i] * sigma[i]);
    }
    line.p[3] = SqrtCombo(1);
    line.p[4] = SqrtCombo();
    line.q[3] = SqrtCombo();
    line.q[4] = SqrtCombo(1);
    require_on_surface(pencil, line, index);
    system.lines.push_back(std::move(line));
  }

  const std::size_t n = system.lines.size();
  system.gram.assign(n, std::vector<int>(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    system.gram[i][i] = -1;
    for (std::size_t j = i + 1; j < n; ++j) {
      const auto rank = matrix_rank(stack(system.lines[i], system.lines[j]));
      if (rank <= 2) {
        throw VerificationFailure("lines " + std::to_string(i) + " and " + std::to_string(j) +
                                  " coincide");
      }
      system.gram[i][j] = system.gram[j][i] = rank <= 3 ? 1 : 0;
    }
  }

  std::set<Integer> gens;
  for (std::size_t i = 0; i < 3; ++i) {
    for (auto& g : u[i].generators()) gens.insert(std::move(g));
    for (auto& g : v[i].generators()) gens.insert(std::move(g));
  }
  system.generators.assign(gens.begin(), gens.end());
  return system;
}

LineP4 apply_character(const SignCharacter& chi, const LineP4& line) {
  LineP4 out;
  for (std::size_t i = 0; i < 5; ++i) {
    out.p[i] = apply_character(chi, line.p[i]);
    out.q[i] = apply_character(chi, line.q[i]);
  }
  return out;
}

std::vector<std::vector<std::size_t>> galois_permutations(const LineSystem& system,
                                                          const std::vector<SignCharacter>& chars) {
  const std::set<SignCharacter> group(chars.begin(), chars.end());
  if (group.count(SignCharacter()) == 0) throw InputError("character set lacks the identity");
  for (const auto& x : group) {
    for (const auto& y : group) {
      if (group.count(x.compose(y)) == 0) {
        throw InputError("character set is not closed under composition");
      }
    }
  }

  const std::size_t n = system.lines.size();
  std::vector<std::vector<std::size_t>> perms;
  perms.reserve(chars.size());
  for (const auto& chi : chars) {
    std::vector<std::size_t> perm(n);
    for (std::size_t i = 0; i < n; ++i) {
      const LineP4 image = apply_character(chi, system.lines[i]);
      std::size_t match = n;
      // Identical spanning points imply the same span; fall back to a rank test.
      for (std::size_t j = 0; j < n && match == n; ++j) {
        if (image.p == system.lines[j].p && image.q == system.lines[j].q) match = j;
      }
      for (std::size_t j = 0; j < n && match == n; ++j) {
        if (line_equal(image, system.lines[j])) match = j;
      }
      if (match == n) {
        throw VerificationFailure(chi.to_string() + " maps line " + std::to_string(i) +
                                  " outside the line system");
      }
      perm[i] = match;
    }
    perms.push_back(std::move(perm));
  }
  return perms;
}

std::vector<std::vector<std::size_t>> galois_orbits(const LineSystem& system,
                                                    const std::vector<SignCharacter>& chars) {
  const auto perms = galois_permutations(system, chars);
  const std::size_t n = system.lines.size();
  std::vector<bool> seen(n, false);
  std::vector<std::vector<std::size_t>> orbits;
  for (std::size_t start = 0; start < n; ++start) {
    if (seen[start]) continue;
    // The character set is a group, so one application of every element
    // reaches the whole orbit.
    std::set<std::size_t> orbit;
    for (const auto& perm : perms) orbit.insert(perm[start]);
    orbit.insert(start);
    for (auto i : orbit) seen[i] = true;
    orbits.emplace_back(orbit.begin(), orbit.end());
  }
  return orbits;
}

std::size_t invariant_picard_rank(const LineSystem& system, const std::vector<SignCharacter>& chars) {
  const auto perms = galois_permutations(system, chars);
  const std::size_t n = system.lines.size();
  Matrix<Rat> average(n, std::vector<Rat>(n, Rat(0)));
  const Rat weight(1L, static_cast<long>(perms.size()));
  for (const auto& perm : perms) {
    for (std::size_t i = 0; i < n; ++i) average[perm[i]][i] += weight;
  }
  Matrix<Rat> gram(n, std::vector<Rat>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) gram[i][j] = Rat(system.gram[i][j]);
  }
  return matrix_rank(multiply(gram, average));
}

AnticanonicalCheck verify_anticanonical(const std::vector<std::vector<int>>& gram) {
  AnticanonicalCheck check;
  const std::size_t n = gram.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (gram[i].size() != n || gram[i][i] != -1) return check;
    for (std::size_t j = 0; j < i; ++j) {
      if (gram[i][j] != gram[j][i]) return check;
    }
  }
  Matrix<Rat> g(n, std::vector<Rat>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) g[i][j] = Rat(gram[i][j]);
  }
  const auto x = solve_linear(g, std::vector<Rat>(n, Rat(1)));
  if (!x) return check;
  Rat hh;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) hh += (*x)[i] * g[i][j] * (*x)[j];
  }
  check.representative = *x;
  check.self_intersection = hh;
  check.ok = hh == Rat(4);
  return check;
}

}  // namespace delpezzo
