// Copyright 2026 The rank1 Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <cmath>
#include <cstdio>
#include <set>
#include <stdexcept>

#include "rank1/cbc.hpp"
#include "rank1/index_set.hpp"
#include "rank1/lattice.hpp"
#include "rank1/oracle.hpp"

namespace rank1 {
namespace {

// Straightforward component-by-component scan with std::set.
std::optional<std::vector<std::int64_t>> reference_cbc(const FrequencyIndexSet& I,
                                                       std::int64_t M) {
  const int d = I.dim();
  std::vector<std::int64_t> z{1};
  auto distinct = [&](int s) {
    std::set<std::vector<std::int64_t>> proj;
    std::set<std::int64_t> res;
    for (std::size_t i = 0; i < I.size(); ++i) {
      std::vector<std::int64_t> p(I[i].begin(), I[i].begin() + s);
      if (!proj.insert(p).second) continue;
      __int128 acc = 0;
      for (int t = 0; t < s; ++t) acc += static_cast<__int128>(p[t]) * z[t];
      acc %= M;
      if (acc < 0) acc += M;
      if (!res.insert(static_cast<std::int64_t>(acc)).second) return false;
    }
    return true;
  };
  if (!distinct(1)) return std::nullopt;
  for (int s = 2; s <= d; ++s) {
    z.push_back(0);
    while (z.back() < M && !distinct(s)) ++z.back();
    if (z.back() == M) return std::nullopt;
  }
  return z;
}

std::vector<std::int64_t> sieve_primes(std::int64_t n) {
  std::vector<bool> composite(n + 1, false);
  std::vector<std::int64_t> out;
  for (std::int64_t i = 2; i <= n; ++i) {
    if (composite[i]) continue;
    out.push_back(i);
    for (std::int64_t j = i * i; j <= n; j += i) composite[j] = true;
  }
  return out;
}

TEST(Primes, MatchSieve) {
  const auto primes = sieve_primes(100000);
  std::set<std::int64_t> ps(primes.begin(), primes.end());
  for (std::int64_t n = -3; n <= 100000; ++n) ASSERT_EQ(is_prime(n), ps.count(n) == 1) << n;
  for (std::int64_t n = 0; n <= 99990; ++n) {
    ASSERT_EQ(next_prime(n), *ps.lower_bound(std::max<std::int64_t>(n, 2))) << n;
  }
  EXPECT_TRUE(is_prime(2305843009213693951));  // 2^61 - 1
  EXPECT_FALSE(is_prime(3215031751));           // strong pseudoprime to 2,3,5,7
}

TEST(CandidateSizes, StreamForFivePoints) {
  const FrequencyIndexSet I(1, {-2, -1, 0, 1, 2});
  CbcOptions opt;
  opt.growth = 0;
  CandidateSizes c(I, opt);
  EXPECT_EQ(c.next(), 5);
  EXPECT_EQ(c.next(), 7);
  EXPECT_EQ(c.next(), 11);
}

TEST(CandidateSizes, HyperbolicCrossStartsAtLowerBound) {
  const auto I = hyperbolic_cross(2, 0, 4);
  CandidateSizes c(I);
  EXPECT_EQ(c.start(), 577);
  EXPECT_EQ(c.ceiling(), std::int64_t{1} << 11);
  std::int64_t prev = 0;
  while (auto M = c.next()) {
    EXPECT_GE(*M, 64);
    EXPECT_GT(*M, prev);
    EXPECT_LE(*M, c.ceiling());
    EXPECT_TRUE(is_prime(*M));
    prev = *M;
  }
  EXPECT_GT(c.yielded(), 3);
  EXPECT_EQ(hyperbolic_cross_size_lower_bound(4), 64);
  EXPECT_EQ(hyperbolic_cross_size_lower_bound(4.9), 64);
  EXPECT_EQ(hyperbolic_cross_size_lower_bound(0.5), 1);
}

TEST(CandidateSizes, GrowthSpacing) {
  const auto I = hyperbolic_cross(2, 0, 6);
  CbcOptions opt;
  opt.growth = 0.25;
  CandidateSizes c(I, opt);
  std::int64_t prev = 0;
  while (auto M = c.next()) {
    if (prev) {
      EXPECT_GE(*M, static_cast<std::int64_t>(std::ceil(prev * 1.25)));
    }
    prev = *M;
  }
}

TEST(Cbc, SingletonAndSmallGrid) {
  const FrequencyIndexSet zero(2, {0, 0});
  const auto L0 = cbc_construct(zero);
  EXPECT_TRUE(is_reconstructing(L0, zero));

  const auto G = tensor_grid_2d(1);
  const auto L = cbc_construct(G);
  EXPECT_LE(L.size(), 7);
  EXPECT_TRUE(oracle::reconstructs_via_difference_set(L, G));
  const auto best = oracle::exhaustive_lattice_search(G, 7);
  ASSERT_TRUE(best.has_value());
  EXPECT_LE(best->size(), L.size());
}

TEST(Cbc, GeneratorMatchesReferenceScan) {
  const std::vector<FrequencyIndexSet> sets = {
      hyperbolic_cross(2, 0, 3), hyperbolic_cross(3, 0, 2), anisotropic_cross({1, 1.5, 3}, 3),
      linf_ball_2d(7), dyadic_cross(4, 3)};
  for (const auto& I : sets) {
    const auto n = static_cast<std::int64_t>(I.size());
    for (std::int64_t M : {n, n + 1, next_prime(n), next_prime(2 * n), 4 * n, next_prime(5 * n)}) {
      EXPECT_EQ(cbc_generator(I, M), reference_cbc(I, M))
          << to_string(I.spec()) << " M=" << M;
    }
  }
}

TEST(Cbc, HyperbolicCrossWithinWindow) {
  for (int R = 3; R <= 7; ++R) {
    const auto I = hyperbolic_cross(2, 0, R);
    const auto L = cbc_construct(I);
    EXPECT_GE(L.size(), std::int64_t{1} << (2 * R - 2)) << R;
    EXPECT_LE(L.size(), std::int64_t{1} << (2 * R + 3)) << R;
    if (I.size() <= 2000) {
      EXPECT_TRUE(oracle::reconstructs_via_difference_set(L, I)) << R;
    }
    EXPECT_TRUE(is_reconstructing(L, I));
  }
}

TEST(Cbc, SoundOnAssortedSets) {
  const std::vector<FrequencyIndexSet> sets = {
      hyperbolic_cross(3, 0, 2), hyperbolic_cross(2, 0.5, 4), anisotropic_cross({1, 2}, 4),
      linf_ball_2d(10), tensor_grid_2d(3), axis_cross(3, 50), dyadic_cross(3, 4),
      FrequencyIndexSet(3, {0, 0, 0, 7, -3, 2, -11, 4, 9, 1, 1, 1})};
  CbcOptions wide;
  wide.ceiling_multiplier = 8;
  for (const auto& I : sets) {
    const auto L = cbc_construct(I, wide);
    EXPECT_TRUE(oracle::reconstructs_via_difference_set(L, I)) << to_string(I.spec());
    EXPECT_GE(L.size(), static_cast<std::int64_t>(I.size()));
  }
}

TEST(Cbc, ProjectionsSeparateAtEveryStep) {
  for (const auto& I : {hyperbolic_cross(3, 0, 3), hyperbolic_cross(4, 0, 2)}) {
    const auto L = cbc_construct(I);
    for (int s = 1; s <= I.dim(); ++s) {
      std::vector<std::int64_t> rows;
      for (std::size_t i = 0; i < I.size(); ++i) rows.insert(rows.end(), I[i].begin(), I[i].begin() + s);
      const FrequencyIndexSet P(s, rows);
      const std::vector<std::int64_t> zs(L.generator().begin(), L.generator().begin() + s);
      EXPECT_TRUE(is_reconstructing(Rank1Lattice(zs, L.size()), P)) << "s=" << s;
    }
  }
}

TEST(Cbc, DefaultCeilingCanBeTooSmallForEnergySets) {
  // The 2^{2R+3} default is tuned to T = 0; with T > 0 the set reaches
  // further along the axes and may need more.
  const auto I = hyperbolic_cross(2, 0.5, 4);
  EXPECT_THROW(cbc_construct(I), CandidateExhausted);
}

TEST(Cbc, CompositeSizesAllowed) {
  const auto I = hyperbolic_cross(2, 0, 3);
  CbcOptions opt;
  opt.prime_only = false;
  opt.growth = 0;
  const auto L = cbc_construct(I, opt);
  EXPECT_TRUE(oracle::reconstructs_via_difference_set(L, I));
}

TEST(Cbc, Deterministic) {
  const auto I = hyperbolic_cross(3, 0, 3);
  EXPECT_EQ(cbc_construct(I), cbc_construct(I));
}

TEST(Cbc, SizeEnvelope) {
  // Lower bound 2^{2 floor(R) - 2}; the constant c in M <= c 2^{2R} R^{d-2}
  // is reported, not asserted.
  struct Case { int d; int r_max; };
  double worst = 0;
  for (Case c : {Case{2, 8}, Case{3, 5}, Case{4, 3}}) {
    for (int R = 3; R <= c.r_max; ++R) {
      const auto L = cbc_construct(hyperbolic_cross(c.d, 0, R));
      EXPECT_GE(L.size(), std::int64_t{1} << (2 * R - 2)) << c.d << " " << R;
      worst = std::max(worst, static_cast<double>(L.size()) /
                                  (std::ldexp(1.0, 2 * R) * std::pow(R, c.d - 2)));
    }
  }
  RecordProperty("max_constant", std::to_string(worst));
  std::printf("size envelope constant c = %.2f\n", worst);
}

TEST(Cbc, Failures) {
  const auto I = hyperbolic_cross(2, 0, 2);
  EXPECT_THROW(cbc_construct(I), CandidateExhausted);
  CbcOptions tight;
  tight.ceiling = 50;
  try {
    cbc_construct(linf_ball_2d(10), tight);
    FAIL() << "expected CandidateExhausted";
  } catch (const CandidateExhausted& e) {
    EXPECT_EQ(e.ceiling(), 50);
    EXPECT_EQ(e.tried(), 0);
  }
  EXPECT_THROW(cbc_construct(FrequencyIndexSet(2, {})), std::invalid_argument);
}

}  // namespace
}  // namespace rank1
