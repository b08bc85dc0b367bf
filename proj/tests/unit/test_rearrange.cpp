#include <cmath>
#include <random>
#include <stdexcept>

#include <gtest/gtest.h>

#include "paving/errors.hpp"
#include "paving/rearrange.hpp"

namespace paving::rearrange {
namespace {

ZeroSumFamily random_family(std::mt19937_64& rng, std::size_t dim, std::size_t size) {
  std::normal_distribution<double> g;
  std::vector<Vector> vs(size, Vector(dim));
  Vector sum(dim);
  for (std::size_t i = 0; i + 1 < size; ++i)
    for (std::size_t d = 0; d < dim; ++d) {
      vs[i][d] = g(rng);
      sum[d] += vs[i][d];
    }
  for (std::size_t d = 0; d < dim; ++d) vs[size - 1][d] = -sum[d];
  return ZeroSumFamily(std::move(vs));
}

TEST(ZeroSumFamily, RejectsNonZeroSum) {
  EXPECT_THROW(ZeroSumFamily({Vector{1.0, 0.0}, Vector{1.0, 0.0}}), std::invalid_argument);
  EXPECT_THROW(ZeroSumFamily({Vector{1.0, 0.0}, Vector{-1.0}}), std::invalid_argument);
  EXPECT_NO_THROW(ZeroSumFamily({}));
}

TEST(CheckPrefix, Examples) {
  const ZeroSumFamily pair({Vector{1.0, 0.0}, Vector{-1.0, 0.0}});
  EXPECT_TRUE(check_prefix_property(pair, std::vector<std::size_t>{0, 1}));
  EXPECT_TRUE(check_prefix_property(pair, std::vector<std::size_t>{1, 0}));
  const ZeroSumFamily triple({Vector{1.0, 0.0}, Vector{1.0, 0.0}, Vector{-2.0, 0.0}});
  EXPECT_FALSE(check_prefix_property(triple, std::vector<std::size_t>{0, 1, 2}));
  EXPECT_TRUE(check_prefix_property(ZeroSumFamily({}), std::vector<std::size_t>{}));
}

TEST(Lemma2, Examples) {
  const ZeroSumFamily pair({Vector{1.0, 0.0}, Vector{-1.0, 0.0}});
  EXPECT_TRUE(lemma2_bound_holds(pair, std::vector<std::size_t>{0, 1}));
  // Positive inner products can break the bound: w₂ = (2,0) has ‖w₂‖² = 4 > 2.
  const ZeroSumFamily triple({Vector{1.0, 0.0}, Vector{1.0, 0.0}, Vector{-2.0, 0.0}});
  EXPECT_FALSE(lemma2_bound_holds(triple, std::vector<std::size_t>{0, 1, 2}));
  EXPECT_TRUE(lemma2_bound_holds(triple, std::vector<std::size_t>{0, 2, 1}));
}

TEST(Greedy, Examples) {
  EXPECT_EQ(greedy_rearrange(ZeroSumFamily({Vector{1.0, 0.0}, Vector{-1.0, 0.0}})), (Permutation{0, 1}));
  EXPECT_EQ(greedy_rearrange(ZeroSumFamily({Vector{2.0, 0.0}, Vector{-1.0, 0.0}, Vector{-1.0, 0.0}})),
            (Permutation{0, 1, 2}));
  EXPECT_TRUE(greedy_rearrange(ZeroSumFamily({})).empty());
}

TEST(Greedy, AlternatesOppositeCopies) {
  const Vector v{0.6, 0.8};
  const Vector w{-0.6, -0.8};
  std::vector<Vector> vs;
  for (int i = 0; i < 5; ++i) vs.push_back(v);
  for (int i = 0; i < 5; ++i) vs.push_back(w);
  const ZeroSumFamily fam(vs);
  const Permutation order = greedy_rearrange(fam);
  double x = 0.0, y = 0.0;
  for (auto i : order) {
    x += fam[i][0];
    y += fam[i][1];
    const double len = std::hypot(x, y);
    EXPECT_TRUE(std::abs(len) < 1e-12 || std::abs(len - 1.0) < 1e-12);
  }
}

TEST(Greedy, RandomFamiliesSatisfyBothLemmas) {
  std::mt19937_64 rng(2718);
  for (int t = 0; t < 300; ++t) {
    const std::size_t dim = 2 + rng() % 15;
    const std::size_t size = 2 + rng() % 39;
    const ZeroSumFamily fam = random_family(rng, dim, size);
    const Permutation order = greedy_rearrange(fam);
    ASSERT_EQ(order.size(), size);
    std::vector<bool> seen(size, false);
    for (auto i : order) seen.at(i) = true;
    for (bool b : seen) ASSERT_TRUE(b);
    ASSERT_TRUE(check_prefix_property(fam, order));
    ASSERT_TRUE(lemma2_bound_holds(fam, order));
  }
}

TEST(Theorem1, FullCancellationExample) {
  const Projection p = Projection::onto(Vector{1.0, 1.0});
  const Vector v{1.0, 1.0};
  const Decomposition d = decompose(p, v);
  EXPECT_NEAR(d.delta_p, 0.5, 1e-15);
  EXPECT_NEAR(d.alpha_sq[0], 0.5, 1e-15);
  EXPECT_NEAR(d.alpha_sq[1], 0.5, 1e-15);
  for (const auto& y : d.y)
    for (double c : y) EXPECT_NEAR(c, 0.0, 1e-15);
  const Theorem1Result r = theorem1_symmetry(p, v);
  EXPECT_EQ(r.k, 1u);
  EXPECT_EQ(r.s, Symmetry(std::vector<std::int8_t>{1, -1}));
  EXPECT_NEAR(r.achieved_norm, 0.0, 1e-15);
  EXPECT_NEAR(r.bound, std::sqrt(1.0 + 0.75), 1e-15);
}

TEST(Theorem1, IdentityProjectionIsVacuous) {
  const Projection p = Projection::identity(5);
  const Theorem1Result r = theorem1_symmetry(p, random_unit_vector(5, 3));
  EXPECT_DOUBLE_EQ(r.delta_p, 1.0);
  EXPECT_NEAR(r.bound, std::sqrt(5.0), 1e-15);
  EXPECT_LE(r.achieved_norm, 1.0 + 1e-12);
}

TEST(Theorem1, DegenerateInputThrows) {
  const Projection p = Projection::onto(Vector{1.0, 1.0});
  EXPECT_THROW(theorem1_symmetry(p, Vector{1.0, -1.0}), DegenerateInput);
  EXPECT_THROW(theorem1_symmetry(p, Vector{1.0}), std::invalid_argument);
}

TEST(Theorem1, RandomInstancesRespectTheBound) {
  std::mt19937_64 rng(99);
  for (int t = 0; t < 100; ++t) {
    const std::size_t n = 2 + rng() % 40;
    const std::size_t r = 1 + rng() % n;
    const Projection p = random_projection(n, r, 5000 + t);
    const Vector v = random_unit_vector(n, 9000 + t);
    const Theorem1Result res = theorem1_symmetry(p, v);
    EXPECT_LE(res.achieved_norm, theorem1_bound(res.delta_p) + 1e-9);
    double mass = 0.0, total = 0.0;
    for (std::size_t i = 0; i < res.k; ++i) mass += res.alpha_sq[res.permutation[i]];
    for (double a : res.alpha_sq) total += a;
    EXPECT_LE(std::abs(0.5 - mass), res.delta_p / 2 + 1e-12);
    EXPECT_NEAR(total, 1.0, 1e-9);
    // Only the first k entries of the order carry +1.
    for (std::size_t i = 0; i < n; ++i) EXPECT_EQ(res.s[res.permutation[i]], i < res.k ? 1 : -1);
  }
}

TEST(Decompose, ComponentNormsFactor) {
  const Projection p = random_projection(20, 7, 31);
  const Decomposition d = decompose(p, random_unit_vector(20, 32));
  for (std::size_t i = 0; i < 20; ++i) {
    EXPECT_NEAR(Vector(d.x[i]).norm(), d.alpha_sq[i], 1e-12);
    EXPECT_NEAR(Vector(d.y[i]).norm(), std::sqrt(d.alpha_sq[i] * d.beta_sq[i]), 1e-12);
    EXPECT_LE(d.alpha_sq[i] + d.beta_sq[i], d.delta_p + 1e-12);
  }
}

}  // namespace
}  // namespace paving::rearrange
