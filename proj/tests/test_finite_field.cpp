#include <gtest/gtest.h>

#include <set>

#include "delpezzo/errors.hpp"
#include "delpezzo/finite_field.hpp"
#include "delpezzo/projective_search.hpp"

using namespace delpezzo;

using Poly = std::vector<std::uint32_t>;

TEST(GaloisField, LeastIrreducibleModuli) {
  // Frozen from an independent brute-force divisor search.
  EXPECT_EQ(least_irreducible(2, 2), (Poly{1, 1, 1}));
  EXPECT_EQ(least_irreducible(3, 2), (Poly{1, 0, 1}));
  EXPECT_EQ(least_irreducible(3, 3), (Poly{1, 2, 0, 1}));
  EXPECT_EQ(least_irreducible(5, 3), (Poly{1, 1, 0, 1}));
  EXPECT_EQ(least_irreducible(7, 2), (Poly{1, 0, 1}));
  EXPECT_EQ(least_irreducible(3, 5), (Poly{1, 2, 0, 0, 0, 1}));
  EXPECT_EQ(least_irreducible(2, 8), (Poly{1, 1, 0, 1, 1, 0, 0, 0, 1}));
}

TEST(GaloisField, IrreducibilityAgainstRootCount) {
  // Degree 2 and 3 polynomials are irreducible iff they have no root.
  for (std::uint32_t p : {2U, 3U, 5U, 7U}) {
    for (unsigned deg : {2U, 3U}) {
      std::uint64_t count = 1;
      for (unsigned i = 0; i < deg; ++i) count *= p;
      for (std::uint64_t t = 0; t < count; ++t) {
        Poly g(deg + 1, 0);
        for (unsigned i = 0; i < deg; ++i) g[i] = static_cast<std::uint32_t>((t / [&] {
                                                    std::uint64_t s = 1;
                                                    for (unsigned k = 0; k < i; ++k) s *= p;
                                                    return s;
                                                  }()) % p);
        g[deg] = 1;
        bool has_root = false;
        for (std::uint64_t x = 0; x < p; ++x) {
          std::uint64_t v = 0;
          for (unsigned i = deg + 1; i-- > 0;) v = (v * x + g[i]) % p;
          if (v == 0) has_root = true;
        }
        ASSERT_EQ(is_irreducible(g, p), !has_root);
      }
    }
  }
}

TEST(GaloisField, FieldAxioms) {
  for (auto spec : {FieldSpec{2, 3}, FieldSpec{3, 2}, FieldSpec{5, 2}, FieldSpec{7, 1}}) {
    const GaloisField f(spec);
    const auto q = static_cast<GaloisField::Element>(f.order());
    std::set<GaloisField::Element> units;
    for (GaloisField::Element a = 0; a < q; ++a) {
      EXPECT_EQ(f.add(a, f.neg(a)), 0U);
      EXPECT_EQ(f.mul(a, 1), a);
      if (a != 0) {
        EXPECT_EQ(f.pow(a, f.order() - 1), 1U);
        // a has an inverse
        bool found = false;
        for (GaloisField::Element b = 1; b < q && !found; ++b) found = f.mul(a, b) == 1;
        EXPECT_TRUE(found);
      }
      for (GaloisField::Element b = 0; b < q; ++b) {
        EXPECT_EQ(f.mul(a, b), f.mul(b, a));
        for (GaloisField::Element c = 0; c < q; c += 3) {
          EXPECT_EQ(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
        }
      }
    }
  }
}

TEST(GaloisField, SlowPathMatchesTables) {
  // F_{3^7} exceeds the table limit; check it against F_{3^7} arithmetic identities.
  const GaloisField big(3, 7);
  for (GaloisField::Element a = 1; a < 400; a += 7) {
    EXPECT_EQ(big.pow(a, big.order() - 1), 1U);
    EXPECT_EQ(big.pow(a, big.order()), a);
  }
}

TEST(GaloisField, RejectsBadInput) {
  EXPECT_THROW(GaloisField(9, 1), InputError);
  EXPECT_THROW(GaloisField(3, 0), InputError);
  EXPECT_THROW(GaloisField(2, 40), BudgetExceeded);
}

TEST(FFVector, Serialization) {
  EXPECT_EQ(to_string(FFVector{{3, 2}, {3, 0, 1, 0}}), "[[0,1],[0,0],[1,0],[0,0]]");
}

TEST(ProjectiveSearch, EnumerationOrder) {
  const GaloisField f(3, 1);
  const ProjectiveSearch s(f, {DiagonalForm{2, {1, 1, 1}}});
  ASSERT_EQ(s.candidate_count(), 13U);
  using V = std::vector<GaloisField::Element>;
  EXPECT_EQ(s.point_at(0), (V{1, 0, 0}));
  EXPECT_EQ(s.point_at(1), (V{0, 1, 0}));
  EXPECT_EQ(s.point_at(3), (V{2, 1, 0}));
  EXPECT_EQ(s.point_at(4), (V{0, 0, 1}));
  EXPECT_EQ(s.point_at(5), (V{0, 1, 1}));
  EXPECT_EQ(s.point_at(12), (V{2, 2, 1}));
  // Every projective point of P²(F_3) appears once.
  std::set<V> seen;
  for (std::uint64_t i = 0; i < s.candidate_count(); ++i) seen.insert(s.point_at(i));
  EXPECT_EQ(seen.size(), 13U);
}

TEST(ProjectiveSearch, SerialAndParallelAgree) {
  for (auto spec : {FieldSpec{3, 1}, FieldSpec{5, 1}, FieldSpec{3, 2}, FieldSpec{7, 1}, FieldSpec{3, 3}}) {
    const GaloisField f(spec);
    for (GaloisField::Element a = 1; a < std::min<std::uint64_t>(f.order(), 6); ++a) {
      const ProjectiveSearch s(f, {DiagonalForm{2, {1, a, 1, a}}, DiagonalForm{2, {1, 2, a, 1}}});
      EXPECT_EQ(s.first_zero_serial(), s.first_zero_parallel());
      EXPECT_EQ(s.count_zeros_serial(), s.count_zeros_parallel());
    }
  }
}

TEST(ProjectiveSearch, ConicPointCount) {
  // A smooth conic over F_q has q + 1 points.
  for (std::uint32_t p : {3U, 5U, 7U, 11U, 13U}) {
    const GaloisField f(p, 1);
    const ProjectiveSearch s(f, {DiagonalForm{2, {1, 1, f.from_int(-1)}}});
    EXPECT_EQ(s.count_zeros_serial(), p + 1U) << p;
  }
}

TEST(ProjectiveSearch, BudgetGuard) {
  const GaloisField f(13, 1);
  EXPECT_THROW(ProjectiveSearch(f, {DiagonalForm{2, {1, 1, 1, 1, 1}}}, 1000), BudgetExceeded);
  EXPECT_NO_THROW(ProjectiveSearch(f, {DiagonalForm{2, {1, 1, 1, 1, 1}}}, 13 * 13 * 13 * 13));
  EXPECT_EQ(search_cost(13, 5), 28561U);
  EXPECT_THROW(ProjectiveSearch(f, {}), InputError);
  EXPECT_THROW(ProjectiveSearch(f, {DiagonalForm{2, {1, 1}}, DiagonalForm{2, {1}}}), InputError);
}
