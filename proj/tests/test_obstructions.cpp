#include <gtest/gtest.h>

#include "delpezzo/errors.hpp"
#include "delpezzo/obstructions.hpp"

using namespace delpezzo;

namespace {

std::vector<Rat> rats(std::initializer_list<long> xs) {
  std::vector<Rat> out;
  for (long x : xs) out.emplace_back(x);
  return out;
}

}  // namespace

TEST(AdjunctionGenus, Examples) {
  const auto dp4 = PicRankOneSurface::del_pezzo(4);
  EXPECT_EQ(adjunction_genus(dp4, -2), 5);
  EXPECT_EQ(adjunction_genus(dp4, -1), 1);
  EXPECT_EQ(adjunction_genus(PicRankOneSurface::k3_quartic(), 1), 3);
  EXPECT_THROW(adjunction_genus(dp4, 0), InputError);
  EXPECT_THROW(adjunction_genus(PicRankOneSurface{3, 0}, 1), InputError);
  EXPECT_THROW(adjunction_genus(PicRankOneSurface{0, 1}, 1), InputError);
}

TEST(AdjunctionGenus, ClosedForm) {
  const auto dp4 = PicRankOneSurface::del_pezzo(4);
  for (long long n = -50; n <= 50; ++n) {
    if (n == 0) continue;
    ASSERT_EQ(adjunction_genus(dp4, n), 2 * n * (n + 1) + 1) << n;
  }
}

TEST(ParityObstruction, Examples) {
  const auto r = parity_obstruction(PicRankOneSurface::del_pezzo(4), 3, 2);
  EXPECT_EQ(r.half_intersection, 24);
  EXPECT_EQ(r.residue, 0);
  EXPECT_TRUE(r.fires);
  const auto k3 = parity_obstruction(PicRankOneSurface::k3_quartic(), 1, 3);
  EXPECT_EQ(k3.half_intersection, 2);
  EXPECT_EQ(k3.residue, 2);
  EXPECT_FALSE(k3.fires);
  EXPECT_THROW(parity_obstruction(PicRankOneSurface{3, 0}, 1, 2), InputError);
  EXPECT_THROW(parity_obstruction(PicRankOneSurface::del_pezzo(4), 1, 4), InputError);
}

TEST(ParityObstruction, UniversalEvenness) {
  for (const auto& s : {PicRankOneSurface::del_pezzo(4), PicRankOneSurface::del_pezzo(2),
                        PicRankOneSurface::k3_quartic()}) {
    for (long long n = -50; n <= 50; ++n) {
      const auto r = parity_obstruction(s, n, 2);
      ASSERT_EQ(r.residue, 0) << s.gen_sq << " " << n;
      ASSERT_TRUE(r.fires);
    }
  }
}

TEST(EulerCongruence, Examples) {
  EXPECT_EQ(euler_char_congruence(1, 3, 2).residue, 1);
  EXPECT_TRUE(euler_char_congruence(1, 3, 2).unit);
  EXPECT_EQ(euler_char_congruence(1, 4, 2).residue, 0);
  EXPECT_FALSE(euler_char_congruence(1, 4, 2).unit);
  EXPECT_EQ(euler_char_congruence(-1, 3, 2).residue, 1);
  EXPECT_EQ(euler_char_congruence(-1, 1, 3).residue, 2);
  EXPECT_THROW(euler_char_congruence(1, 1, 1), InputError);
}

TEST(GenusGap, Examples) {
  const auto a = genus_gap_parity(5, 0);
  EXPECT_EQ(a.delta, 5);
  EXPECT_TRUE(a.odd);
  EXPECT_FALSE(genus_gap_parity(4, 4).odd);
  EXPECT_EQ(genus_gap_parity(3, 1).delta, 2);
  EXPECT_FALSE(genus_gap_parity(3, 1).odd);
  EXPECT_THROW(genus_gap_parity(1, 2), InputError);
  EXPECT_THROW(genus_gap_parity(1, -1), InputError);
}

TEST(GenusGap, ConicChainIsOdd) {
  const auto dp4 = PicRankOneSurface::del_pezzo(4);
  for (long long n = -50; n <= 50; ++n) {
    if (n == 0) continue;
    ASSERT_TRUE(genus_gap_parity(adjunction_genus(dp4, n), 0).odd) << n;
  }
}

TEST(RostAudit, Examples) {
  const auto a = rost_audit({3, 3, 3, 1, 1, 1});
  EXPECT_EQ(a.eta_ypp, 1);
  EXPECT_EQ(a.deg_r_constraint, "prime to p");
  EXPECT_TRUE(a.deg_r_consistent);
  EXPECT_TRUE(a.contradiction_with_brauer_injectivity);

  const auto b = rost_audit({3, 3, 3, 1, 2, 2});
  EXPECT_EQ(b.eta_ypp, 2);
  EXPECT_EQ(b.deg_r_constraint, "prime to p");
  EXPECT_TRUE(b.contradiction_with_brauer_injectivity);

  EXPECT_FALSE(rost_audit({3, 3, 3, 1, 1, 3}).deg_r_consistent);
  EXPECT_THROW(rost_audit({3, 3, 3, 1, 3, 1}), InputError);
  EXPECT_THROW(rost_audit({3, 3, 3, 0, 1, 1}), InputError);
  EXPECT_THROW(rost_audit({3, 0, 3, 1, 1, 1}), InputError);
}

TEST(RostAudit, EtaNeverZero) {
  for (long long p : {2LL, 3LL, 5LL, 7LL}) {
    for (long long eta = 1; eta < p; ++eta) {
      for (long long q = 1; q < 4 * p; ++q) {
        if (q % p == 0) continue;
        ASSERT_NE(rost_audit({p, p, p, eta, q, 1}).eta_ypp, 0);
      }
    }
  }
}

TEST(IndexFF, Examples) {
  const auto cubic = index_ff({DiagonalEquation{3, rats({1, 1, 1, 1})}}, {2, 1}, 3);
  EXPECT_EQ(cubic.index, 1);
  EXPECT_EQ(cubic.degrees_with_point, (std::vector<unsigned>{1}));

  const auto pair = index_ff({DiagonalEquation{2, rats({1, 1, 1, 1, 1})}, DiagonalEquation{2, rats({2, 3, 5, 7, 11})}},
                             {13, 1}, 2);
  EXPECT_EQ(pair.index, 1);

  // x² + y² has no point over F_3 and one over F_9.
  const auto conic = index_ff({DiagonalEquation{2, rats({1, 1})}}, {3, 1}, 2);
  EXPECT_EQ(conic.index, 2);
  EXPECT_EQ(conic.degrees_with_point, (std::vector<unsigned>{2}));

  EXPECT_EQ(index_ff({DiagonalEquation{2, rats({1, 1})}}, {3, 1}, 1).index, 0);
  EXPECT_THROW(index_ff({}, {3, 1}, 2), InputError);
}

TEST(IndexFF, ChevalleyWarningFamilies) {
  for (std::uint32_t p : {13U, 17U, 19U, 23U}) {
    const auto r = index_ff({DiagonalEquation{2, rats({1, 1, 1, 1, 1})}, DiagonalEquation{2, rats({2, 3, 5, 7, 11})}},
                            {p, 1}, 1);
    EXPECT_EQ(r.index, 1) << p;
  }
  for (std::uint32_t p : {2U, 5U, 11U, 13U}) {
    EXPECT_EQ(index_ff({DiagonalEquation{3, rats({1, 7, 49, -3})}}, {p, 1}, 1).index, 1) << p;
  }
}
