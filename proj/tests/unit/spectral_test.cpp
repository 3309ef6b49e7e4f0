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
#include <numbers>
#include <random>
#include <sstream>
#include <stdexcept>

#include "rank1/cbc.hpp"
#include "rank1/kink.hpp"
#include "rank1/lattice.hpp"
#include "rank1/spectral.hpp"

namespace rank1 {
namespace {

Complex character(FrequencyView k, std::span<const double> x) {
  double phase = 0;
  for (std::size_t s = 0; s < k.size(); ++s) phase += static_cast<double>(k[s]) * x[s];
  return std::polar(1.0, 2 * std::numbers::pi * phase);
}

TEST(Sampling, ConstantAndCharacter) {
  const Rank1Lattice L({1, 2}, 5);
  const auto ones = sample_on_lattice([](auto) { return Complex(1); }, L);
  EXPECT_EQ(ones.values, std::vector<Complex>(5, Complex(1)));

  const Frequency k{1, -1};
  const auto s = sample_on_lattice([&](auto x) { return character(k, x); }, L);
  for (int j = 0; j < 5; ++j) {
    const double want = 2 * std::numbers::pi * j * residue(L, k) / 5.0;
    EXPECT_NEAR(std::abs(s.values[j] - std::polar(1.0, want)), 0, 1e-13);
  }
}

TEST(Sampling, ErrorsCarryTheNode) {
  const Rank1Lattice L({1, 2}, 5);
  try {
    sample_on_lattice([](std::span<const double> x) -> Complex {
      if (x[0] > 0.5) throw std::domain_error("boom");
      return 0;
    }, L);
    FAIL() << "expected SampleError";
  } catch (const SampleError& e) {
    EXPECT_EQ(e.node(), 3);
  }
}

TEST(Reconstruction, KinkSamplesMatchDirectEvaluation) {
  const auto L = fibonacci_lattice(10);
  const auto s = sample_on_lattice([](auto x) { return Complex(kink_value(x)); }, L);
  std::vector<double> x(2);
  for (std::int64_t j = 0; j < L.size(); ++j) {
    L.node(j, x);
    ASSERT_EQ(s.values[j], Complex(kink_value(x)));
  }
}

TEST(Reconstruction, RecoversPolynomialsExactly) {
  std::mt19937_64 rng(17);
  std::normal_distribution<double> g;
  for (const auto& I : {hyperbolic_cross(2, 0, 4), hyperbolic_cross(3, 0, 2), linf_ball_2d(9)}) {
    const auto L = cbc_construct(I);
    std::vector<Complex> c(I.size());
    for (auto& v : c) v = {g(rng), g(rng)};
    const auto shared = std::make_shared<const FrequencyIndexSet>(I);
    const SpectralApproximation p{shared, c};
    const auto s = sample_on_lattice([&](auto x) { return evaluate_trig_poly(p, x); }, L);
    const auto q = reconstruct_coefficients(s, shared);
    ASSERT_EQ(q.coefficients.size(), c.size());
    for (std::size_t i = 0; i < c.size(); ++i) {
      EXPECT_NEAR(std::abs(q.coefficients[i] - c[i]), 0, 1e-11);
    }
  }
}

TEST(Reconstruction, QuadratureAgreesWithFftPath) {
  const auto L = fibonacci_lattice(12);
  const auto I = dyadic_cross(2, 4);
  const auto s = sample_on_lattice([](auto x) { return Complex(kink_value(x)); }, L);
  const auto p = reconstruct_coefficients(s, I);
  for (std::size_t i = 0; i < I.size(); ++i) {
    EXPECT_NEAR(std::abs(p.coefficients[i] - quadrature_coefficient(s, I[i])), 0, 1e-12);
  }
}

TEST(Reconstruction, ConstantFunction) {
  const Rank1Lattice L({1, 2}, 5);
  const auto s = sample_on_lattice([](auto) { return Complex(2.5); }, L);
  EXPECT_NEAR(std::abs(quadrature_coefficient(s, Frequency{0, 0}) - 2.5), 0, 1e-14);
  EXPECT_NEAR(std::abs(quadrature_coefficient(s, Frequency{1, 0})), 0, 1e-14);
  EXPECT_NEAR(std::abs(quadrature_coefficient(s, Frequency{5, 0}) - 2.5), 0, 1e-14);
}

TEST(Reconstruction, AliasingIdentity) {
  // Coefficients at k and k + h with h in the dual lattice coincide.
  const auto L = fibonacci_lattice(9);
  const auto s = sample_on_lattice([](auto x) { return Complex(kink_value(x)); }, L);
  const Frequency k{3, -2};
  const Frequency h{-fibonacci_number(8), 1};
  ASSERT_TRUE(dual_contains(L, h));
  const Frequency kh{k[0] + h[0], k[1] + h[1]};
  EXPECT_NEAR(std::abs(quadrature_coefficient(s, k) - quadrature_coefficient(s, kh)), 0, 1e-13);
}

TEST(Reconstruction, SingleCharacterAliasesOntoItsResidueClass) {
  const auto L = fibonacci_lattice(14);
  const auto I = dyadic_cross(2, 5);
  ASSERT_TRUE(is_reconstructing(L, I));
  const Frequency k{2, -3};
  const Frequency h{-fibonacci_number(13) * 2, 2};
  ASSERT_TRUE(dual_contains(L, h));
  const Frequency kh{k[0] + h[0], k[1] + h[1]};
  const auto s = sample_on_lattice([&](auto x) { return character(kh, x); }, L);
  const auto p = reconstruct_coefficients(s, I);
  for (std::size_t i = 0; i < I.size(); ++i) {
    const Complex want = residue(L, I[i]) == residue(L, k) ? Complex(1) : Complex(0);
    EXPECT_NEAR(std::abs(p.coefficients[i] - want), 0, 1e-12);
  }
}

TEST(Reconstruction, Linearity) {
  const auto L = fibonacci_lattice(11);
  const auto I = dyadic_cross(2, 3);
  auto f = [](auto x) { return Complex(kink_value(x)); };
  auto g = [](auto x) { return Complex(std::sin(2 * std::numbers::pi * x[0]), x[1]); };
  const auto pf = reconstruct_coefficients(sample_on_lattice(f, L), I);
  const auto pg = reconstruct_coefficients(sample_on_lattice(g, L), I);
  const auto ph = reconstruct_coefficients(
      sample_on_lattice([&](auto x) { return 3.0 * f(x) - Complex(0, 1) * g(x); }, L), I);
  for (std::size_t i = 0; i < I.size(); ++i) {
    EXPECT_NEAR(std::abs(ph.coefficients[i] -
                         (3.0 * pf.coefficients[i] - Complex(0, 1) * pg.coefficients[i])),
                0, 1e-13);
  }
}

TEST(Reconstruction, RejectsMismatches) {
  const Rank1Lattice L({1, 2}, 5);
  auto s = sample_on_lattice([](auto) { return Complex(1); }, L);
  EXPECT_THROW(reconstruct_coefficients(s, hyperbolic_cross(3, 0, 0)), std::invalid_argument);
  EXPECT_THROW(reconstruct_coefficients(s, std::shared_ptr<const FrequencyIndexSet>()),
               std::invalid_argument);
  s.values.pop_back();
  EXPECT_THROW(reconstruct_coefficients(s, linf_ball_2d(2)), std::invalid_argument);
}

TEST(Evaluation, Examples) {
  const auto I = std::make_shared<const FrequencyIndexSet>(1, std::vector<std::int64_t>{1});
  const SpectralApproximation p{I, {Complex(1)}};
  const std::vector<double> quarter{0.25};
  EXPECT_NEAR(std::abs(evaluate_trig_poly(p, quarter) - Complex(0, 1)), 0, 1e-15);
  const std::vector<double> two{0.1, 0.2};
  EXPECT_THROW(evaluate_trig_poly(p, two), std::invalid_argument);
}

TEST(Evaluation, MatchesNaiveSum) {
  std::mt19937_64 rng(23);
  std::uniform_real_distribution<double> u;
  const auto I = std::make_shared<const FrequencyIndexSet>(hyperbolic_cross(3, 0, 2));
  std::vector<Complex> c(I->size());
  for (auto& v : c) v = {u(rng) - 0.5, u(rng) - 0.5};
  const SpectralApproximation p{I, c};
  for (int t = 0; t < 100; ++t) {
    std::vector<double> x{u(rng), u(rng), u(rng)};
    Complex want = 0;
    for (std::size_t i = 0; i < I->size(); ++i) want += c[i] * character((*I)[i], x);
    EXPECT_NEAR(std::abs(evaluate_trig_poly(p, x) - want), 0, 1e-12);
  }
}

TEST(Serialization, SpectralFormat) {
  const auto I = std::make_shared<const FrequencyIndexSet>(
      2, std::vector<std::int64_t>{0, 0, 1, -1});
  const SpectralApproximation p{I, {Complex(0.5, 0), Complex(-1, 2)}};
  std::ostringstream out;
  write_spectral(out, p);
  const auto text = out.str();
  EXPECT_NE(text.find("dim=2"), std::string::npos);
  EXPECT_NE(text.find("0;0\t"), std::string::npos);
  EXPECT_NE(text.find("1;-1\t"), std::string::npos);
}

}  // namespace
}  // namespace rank1
