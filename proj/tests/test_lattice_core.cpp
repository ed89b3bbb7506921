#include "enriques/lattice.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace enriques;

namespace {

const IsotropicTuple& tuple() {
  static const IsotropicTuple t = e10_isotropic_basis();
  return t;
}

GramForm diag(std::initializer_list<long long> d) {
  IntMatrix m(d.size(), std::vector<BigInt>(d.size(), 0));
  std::size_t i = 0;
  for (long long v : d) {
    m[i][i] = v;
    ++i;
  }
  return GramForm(std::move(m));
}

// Random unimodular matrix as a product of elementary row operations.
IntMatrix random_unimodular(std::size_t n, std::mt19937_64& rng) {
  IntMatrix u = identity_matrix(n);
  std::uniform_int_distribution<std::size_t> idx(0, n - 1);
  std::uniform_int_distribution<int> coef(-2, 2);
  for (int step = 0; step < 30; ++step) {
    const std::size_t a = idx(rng), b = idx(rng);
    if (a == b) continue;
    const int c = coef(rng);
    for (std::size_t k = 0; k < n; ++k) u[a][k] += c * u[b][k];
  }
  return u;
}

}  // namespace

TEST(GramProduct, TupleProducts) {
  const auto& t = tuple();
  EXPECT_EQ(gram_product(t.vectors[0], t.vectors[0], t.ambient), 0);
  EXPECT_EQ(gram_product(t.vectors[0], t.vectors[1], t.ambient), 1);
  const IntVec e = solve_cossec_vector(t, 0, 1);
  EXPECT_EQ(gram_product(e, t.vectors[0], t.ambient), 2);
}

TEST(GramProduct, DimensionMismatchThrows) {
  const auto& t = tuple();
  EXPECT_THROW(gram_product(IntVec{1, 2}, t.vectors[0], t.ambient), std::invalid_argument);
}

TEST(RankDisc, TwoDisjointA1) {
  const auto rd = rank_and_discriminant(diag({-2, -2}));
  EXPECT_EQ(rd.rank, 2u);
  EXPECT_EQ(rd.disc, 4);
}

TEST(RankDisc, E10Unimodular) {
  const auto rd = rank_and_discriminant(e10_gram());
  EXPECT_EQ(rd.rank, 10u);
  EXPECT_EQ(rd.disc, 1);
}

TEST(RankDisc, DegenerateFormUsesQuotientByRadical) {
  // Isotropic I2 fiber class spans the radical of [[-2,2],[2,-2]].
  const auto rd = rank_and_discriminant(GramForm(IntMatrix{{-2, 2}, {2, -2}}));
  EXPECT_EQ(rd.rank, 1u);
  EXPECT_EQ(rd.disc, 2);
}

TEST(RankDisc, InvariantUnderUnimodularChange) {
  std::mt19937_64 rng(7);
  const GramForm g = e10_gram();
  for (int trial = 0; trial < 20; ++trial) {
    const IntMatrix u = random_unimodular(10, rng);
    const GramForm h(multiply(multiply(u, g.entries()), transpose(u)));
    EXPECT_EQ(rank_and_discriminant(h), rank_and_discriminant(g));
  }
  const GramForm a(IntMatrix{{-2, 1, 0}, {1, -2, 0}, {0, 0, 0}});
  for (int trial = 0; trial < 20; ++trial) {
    const IntMatrix u = random_unimodular(3, rng);
    const GramForm h(multiply(multiply(u, a.entries()), transpose(u)));
    EXPECT_EQ(rank_and_discriminant(h), rank_and_discriminant(a));
  }
}

TEST(SublatticeIndex, TupleHasIndexThree) {
  const auto& t = tuple();
  auto idx = sublattice_index(t.vectors, t.ambient);
  ASSERT_TRUE(idx.has_value());
  EXPECT_EQ(*idx, 3);
}

TEST(SublatticeIndex, StandardBasisAndRankDeficit) {
  const auto& t = tuple();
  std::vector<IntVec> basis;
  for (std::size_t i = 0; i < 10; ++i) {
    IntVec v(std::vector<BigInt>(10, 0));
    v[i] = 1;
    basis.push_back(v);
  }
  EXPECT_EQ(sublattice_index(basis, t.ambient), BigInt(1));
  std::vector<IntVec> nine(t.vectors.begin(), t.vectors.begin() + 9);
  EXPECT_FALSE(sublattice_index(nine, t.ambient).has_value());
}

TEST(SublatticeIndex, DiscriminantEqualsIndexSquared) {
  const auto& t = tuple();
  const auto rd = rank_and_discriminant(restrict_form(t.vectors, t.ambient));
  const BigInt idx = *sublattice_index(t.vectors, t.ambient);
  EXPECT_EQ(rd.disc, idx * idx * rank_and_discriminant(t.ambient).disc);
}

TEST(IsotropicBasis, PairwiseProducts) {
  const auto& t = tuple();
  ASSERT_EQ(t.vectors.size(), 10u);
  EXPECT_TRUE(t.valid());
  EXPECT_EQ(gram_product(t.vectors[0], t.sum(), t.ambient), 9);
}

TEST(Cossec, AllPairs) {
  const auto& t = tuple();
  for (std::size_t i = 0; i < 10; ++i)
    for (std::size_t j = i + 1; j < 10; ++j) {
      const IntVec e = solve_cossec_vector(t, i, j);
      EXPECT_EQ(gram_product(e, e, t.ambient), 0);
      for (std::size_t k = 0; k < 10; ++k)
        EXPECT_EQ(gram_product(e, t.vectors[k], t.ambient), (k == i || k == j) ? 2 : 1);
      EXPECT_EQ(gram_product(e, t.sum(), t.ambient), 12);
      EXPECT_FALSE(in_integer_span(e, t.vectors));
    }
}

TEST(Cossec, BadIndices) {
  EXPECT_THROW(solve_cossec_vector(tuple(), 1, 1), std::invalid_argument);
}

TEST(Divisibility, Examples) {
  const auto& t = tuple();
  EXPECT_EQ(divisibility_check(t.vectors[0], t), (Divisibility{true, true, true}));
  EXPECT_EQ(divisibility_check(solve_cossec_vector(t, 0, 1), t), (Divisibility{true, false, false}));
  EXPECT_EQ(divisibility_check(t.vectors[0] + t.vectors[1], t), (Divisibility{true, true, true}));
}

TEST(Divisibility, RandomVectorsAreDivisibleByThree) {
  const auto& t = tuple();
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<long long> d(-50, 50);
  for (int s = 0; s < 10000; ++s) {
    IntVec v;
    for (int k = 0; k < 10; ++k) v.coords.emplace_back(d(rng));
    EXPECT_EQ(gram_product(v, t.sum(), t.ambient) % 3, 0);
  }
}

TEST(Divisibility, SpanVectorsAreDivisibleByNine) {
  const auto& t = tuple();
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<long long> d(-9, 9);
  for (int s = 0; s < 500; ++s) {
    IntVec v(std::vector<BigInt>(10, 0));
    for (const auto& f : t.vectors) v += BigInt(d(rng)) * f;
    const auto r = divisibility_check(v, t);
    EXPECT_TRUE(r.in_span);
    EXPECT_TRUE(r.div9);
  }
}
