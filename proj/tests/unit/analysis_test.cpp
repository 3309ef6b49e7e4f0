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
#include <memory>
#include <optional>
#include <random>
#include <stdexcept>

#include "rank1/analysis.hpp"
#include "rank1/kink.hpp"
#include "rank1/lattice.hpp"
#include "rank1/spectral.hpp"

namespace rank1 {
namespace {

std::optional<int> largest_level_for_test(const Rank1Lattice& L) {
  std::optional<int> best;
  for (int R = 0; R < 20 && is_reconstructing(L, dyadic_cross(2, R)); ++R) best = R;
  return best;
}

SpectralApproximation zero_on(const FrequencyIndexSet& I) {
  return {std::make_shared<const FrequencyIndexSet>(I), std::vector<Complex>(I.size())};
}

TEST(Weights, Examples) {
  EXPECT_DOUBLE_EQ(weight_omega(Frequency{0, 0}, 1, 0), 1.0);
  EXPECT_DOUBLE_EQ(weight_omega(Frequency{1, 0}, 1, 0), std::sqrt(2.0));
  EXPECT_DOUBLE_EQ(weight_omega(Frequency{1, 1}, 0, 1), std::sqrt(3.0));
  EXPECT_DOUBLE_EQ(weight_omega(Frequency{1, 1}, 1, 0), 2.0);
}

TEST(Weights, Norms) {
  const auto I = std::make_shared<const FrequencyIndexSet>(
      2, std::vector<std::int64_t>{0, 0, 1, 0});
  EXPECT_DOUBLE_EQ(hab_norm({I, {Complex(1), Complex(0)}}, 1, 0), 1.0);
  EXPECT_NEAR(hab_norm({I, {Complex(0), Complex(0, std::sqrt(2.0))}}, 1, 0), 2.0, 1e-15);
}

TEST(KinkError, Examples) {
  const FrequencyIndexSet origin(1, {0});
  EXPECT_NEAR(kink_l2_error(zero_on(origin)), 1.0, 1e-15);
  SpectralApproximation exact = zero_on(origin);
  exact.coefficients[0] = kink_coeff_1d(0);
  EXPECT_NEAR(kink_l2_error(exact), std::sqrt(1 - std::pow(kink_coeff_1d(0), 2)), 1e-15);
  const FrequencyIndexSet origin2(2, {0, 0});
  SpectralApproximation p = zero_on(origin2);
  p.coefficients[0] = kink_coeff(Frequency{0, 0});
  EXPECT_NEAR(kink_l2_error(p), std::sqrt(1 - 5.0 / 9.0), 1e-12);
  EXPECT_NEAR(kink_l2_error(exact), 0.5046, 1e-3);
}

TEST(KinkError, MatchesDirectIntegration) {
  // One-dimensional: integrate (g - p)^2 by the midpoint rule.
  const auto I = hyperbolic_cross(1, 0, 3);
  auto p = zero_on(I);
  std::mt19937_64 rng(2);
  std::normal_distribution<double> noise(0, 0.01);
  for (std::size_t i = 0; i < I.size(); ++i) {
    p.coefficients[i] = kink_coeff(I[i]) + noise(rng);
  }
  // Keep p real: c_{-k} = conj(c_k).
  for (std::size_t i = 0; i < I.size(); ++i) {
    const auto j = I.find(Frequency{-I[i][0]});
    p.coefficients[*j] = std::conj(p.coefficients[i]);
  }
  const int n = 1 << 16;
  double acc = 0;
  std::vector<double> x(1);
  for (int t = 0; t < n; ++t) {
    x[0] = (t + 0.5) / n;
    acc += std::norm(kink_value(x) - evaluate_trig_poly(p, x));
  }
  EXPECT_NEAR(std::sqrt(acc / n), kink_l2_error(p), 1e-3);
}

TEST(KinkError, DecompositionAndTriangleBound) {
  for (int n : {8, 12, 16}) {
    const auto L = fibonacci_lattice(n);
    const auto R = *largest_level_for_test(L);
    const auto I = std::make_shared<const FrequencyIndexSet>(dyadic_cross(2, R));
    const auto s = sample_on_lattice([](auto x) { return Complex(kink_value(x)); }, L);
    const auto p = reconstruct_coefficients(s, I);
    double captured = 0;
    for (std::size_t i = 0; i < I->size(); ++i) captured += std::pow(kink_coeff((*I)[i]), 2);
    const double err = kink_l2_error(p);
    EXPECT_GE(err * err, 1 - captured - 1e-15);
    EXPECT_LE(err, 1 + hab_norm(p, 0, 0));
    EXPECT_DOUBLE_EQ(kink_l2_error(zero_on(*I)), 1.0);
    auto exact = zero_on(*I);
    for (std::size_t i = 0; i < I->size(); ++i) exact.coefficients[i] = kink_coeff((*I)[i]);
    EXPECT_NEAR(kink_l2_error(exact), std::sqrt(1 - captured), 1e-12);
  }
}

TEST(Aliasing, Examples) {
  const auto w = find_aliasing_pair(Rank1Lattice({1, 1}, 4));
  EXPECT_EQ(w.k1, (Frequency{1, 0}));
  EXPECT_EQ(w.k2, (Frequency{0, 1}));
  const auto v = find_aliasing_pair(Rank1Lattice({1, 2}, 5));
  EXPECT_EQ(v.k1, (Frequency{1, 0}));
  EXPECT_EQ(v.k2, (Frequency{0, -2}));
  EXPECT_THROW(find_aliasing_pair(Rank1Lattice({1}, 4)), std::invalid_argument);
}

TEST(Aliasing, FibonacciPairsAliasInsideTheAxisCross) {
  for (int n = 2; n <= 25; ++n) {
    const auto L = fibonacci_lattice(n);
    const auto w = find_aliasing_pair(L);
    EXPECT_EQ(residue(L, w.k1), residue(L, w.k2)) << n;
    EXPECT_NE(w.k1, w.k2);
    const auto A = axis_cross(2, L.size());
    EXPECT_TRUE(A.contains(w.k1)) << n;
    EXPECT_TRUE(A.contains(w.k2)) << n;
  }
}

TEST(Aliasing, RandomLatticesInHigherDimensions) {
  std::mt19937_64 rng(31);
  for (int t = 0; t < 50; ++t) {
    const int d = 2 + t % 3;
    const std::int64_t M = 2 + static_cast<std::int64_t>(rng() % 5000);
    std::vector<std::int64_t> z(d);
    for (auto& v : z) v = static_cast<std::int64_t>(rng() % M);
    const Rank1Lattice L(z, M);
    const auto w = fooling_function(L, SmoothnessParams{1.5, 0, 0.5, {}});
    EXPECT_LE(w.max_node_value, 1e-12);
    EXPECT_EQ(residue(L, w.k1), residue(L, w.k2));
    EXPECT_EQ(static_cast<int>(w.k1.size()), d);
  }
}

TEST(FoolingFunction, SymmetricPairRatio) {
  for (const SmoothnessParams& p : {SmoothnessParams{1, 0, 0, {}}, SmoothnessParams{2, -0.25, 0.5, {}},
                                   SmoothnessParams{1.5, 0, 0.5, {}}}) {
    const auto w = fooling_function(Rank1Lattice({1, 1}, 4), p);
    EXPECT_NEAR(w.norm_ratio, std::pow(2.0, (p.gamma - p.alpha - p.beta) / 2), 1e-14);
    EXPECT_GE(w.norm_ratio, lower_bound_value(4, p));
  }
}

TEST(FoolingFunction, ParameterDomain) {
  const Rank1Lattice L({1, 1}, 4);
  EXPECT_THROW(fooling_function(L, SmoothnessParams{0.5, 0, 0.5, {}}), std::invalid_argument);
  EXPECT_THROW(fooling_function(L, SmoothnessParams{1, 0.5, 0, {}}), std::invalid_argument);
  EXPECT_THROW(lower_bound_value(4, SmoothnessParams{-1, 0, 0, {}}), std::invalid_argument);
  EXPECT_TRUE((SmoothnessParams{1.5, -0.25, 0, {}}).admissible_for_lower_bound());
}

TEST(LowerBound, Values) {
  const SmoothnessParams p{1, 0, 0, {}};
  EXPECT_DOUBLE_EQ(lower_bound_value(1, p), 0.5);
  EXPECT_DOUBLE_EQ(lower_bound_value(4, p), 0.25);
  EXPECT_THROW(lower_bound_value(0, p), std::invalid_argument);
  double prev = 1;
  for (std::int64_t M = 1; M < 100000; M *= 3) {
    const double v = lower_bound_value(M, SmoothnessParams{1.5, 0, 0.5, {}});
    EXPECT_LT(v, prev);
    prev = v;
  }
}

}  // namespace
}  // namespace rank1
