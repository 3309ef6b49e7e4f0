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

#include <algorithm>
#include <random>
#include <stdexcept>

#include "rank1/fft.hpp"
#include "rank1/oracle.hpp"

namespace rank1 {
namespace {

std::vector<Complex> random_vector(std::size_t n, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  std::vector<Complex> v(n);
  for (auto& x : v) x = {g(rng), g(rng)};
  return v;
}

double rel_error(const std::vector<Complex>& a, const std::vector<Complex>& b) {
  double num = 0, den = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    num = std::max(num, std::abs(a[i] - b[i]));
    den = std::max(den, std::abs(b[i]));
  }
  return den == 0 ? num : num / den;
}

TEST(Dft, DeltaGivesOnes) {
  for (std::size_t n : {1u, 2u, 5u, 8u, 12u}) {
    std::vector<Complex> v(n);
    v[0] = 1;
    for (auto x : dft_1d(v, Direction::kForward)) EXPECT_NEAR(std::abs(x - Complex(1)), 0, 1e-14);
  }
}

TEST(Dft, ConstantGivesSpike) {
  const Complex c(0.5, -2);
  std::vector<Complex> v(5, c);
  const auto a = dft_1d(v, Direction::kForward);
  EXPECT_NEAR(std::abs(a[0] - 5.0 * c), 0, 1e-13);
  for (std::size_t m = 1; m < 5; ++m) EXPECT_NEAR(std::abs(a[m]), 0, 1e-13);
}

TEST(Dft, MatchesNaiveTransform) {
  std::mt19937_64 rng(3);
  std::vector<std::size_t> sizes;
  for (std::size_t n = 1; n <= 64; ++n) sizes.push_back(n);
  for (std::size_t n : {97u, 610u, 1024u, 10946u}) sizes.push_back(n);
  for (auto n : sizes) {
    const auto v = random_vector(n, rng);
    for (auto dir : {Direction::kForward, Direction::kInverse}) {
      EXPECT_LE(rel_error(dft_1d(v, dir), oracle::naive_dft(v, dir)), 1e-10) << n;
    }
    const auto back = dft_1d(dft_1d(v, Direction::kForward), Direction::kInverse);
    EXPECT_LE(rel_error(back, v), 1e-10) << n;
  }
}

TEST(Dft, PlanReuseAndLinearity) {
  std::mt19937_64 rng(9);
  const DftPlan plan(30);
  EXPECT_EQ(plan.size(), 30u);
  const auto x = random_vector(30, rng);
  const auto y = random_vector(30, rng);
  auto fx = x, fy = y;
  plan.execute(fx, Direction::kForward);
  plan.execute(fy, Direction::kForward);
  std::vector<Complex> s(30);
  for (int i = 0; i < 30; ++i) s[i] = 2.0 * x[i] - Complex(0, 3) * y[i];
  plan.execute(s, Direction::kForward);
  for (int i = 0; i < 30; ++i) {
    EXPECT_NEAR(std::abs(s[i] - (2.0 * fx[i] - Complex(0, 3) * fy[i])), 0, 1e-11);
  }
  std::vector<Complex> wrong(29);
  EXPECT_THROW(plan.execute(wrong, Direction::kForward), std::invalid_argument);
}

TEST(Dft, RejectsEmptyLength) {
  EXPECT_THROW(DftPlan(0), std::invalid_argument);
}

}  // namespace
}  // namespace rank1
