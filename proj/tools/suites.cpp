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

#include "suites.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <numbers>
#include <random>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "rank1/cbc.hpp"
#include "rank1/experiment.hpp"
#include "rank1/fft.hpp"
#include "rank1/kink.hpp"
#include "rank1/oracle.hpp"
#include "rank1/spectral.hpp"

namespace rank1::suites {
namespace {

constexpr std::size_t kMaxMessages = 10;

std::int64_t mod_floor(__int128 v, std::int64_t m) {
  auto r = static_cast<std::int64_t>(v % m);
  return r < 0 ? r + m : r;
}

double max_abs_diff(std::span<const Complex> a, std::span<const Complex> b) {
  double worst = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) worst = std::max(worst, std::abs(a[i] - b[i]));
  return worst;
}

double max_abs(std::span<const Complex> a) {
  double worst = 0.0;
  for (const auto& v : a) worst = std::max(worst, std::abs(v));
  return worst;
}

std::vector<Complex> random_vector(std::size_t n, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::vector<Complex> v(n);
  for (auto& x : v) x = Complex(u(rng), u(rng));
  return v;
}

std::string describe(const Rank1Lattice& L, const FrequencyIndexSet& I) {
  return to_string(L) + " on " + to_string(I.spec());
}

}  // namespace

void SuiteResult::check(bool ok, const std::string& what) {
  ++checks;
  if (ok) return;
  ++failures;
  if (messages.size() < kMaxMessages) messages.push_back(what);
}

void SuiteResult::merge(const SuiteResult& other) {
  checks += other.checks;
  failures += other.failures;
  for (const auto& m : other.messages) {
    if (messages.size() < kMaxMessages) messages.push_back(m);
  }
}

std::string summary_line(const SuiteResult& r) {
  return "SUITE " + r.name + (r.passed() ? " PASS " : " FAIL ") +
         std::to_string(r.checks);
}

SuiteResult reconstruction_suite(const std::vector<ReconstructionCase>& cases,
                                 int polys, std::uint64_t seed, double tol,
                                 std::size_t oracle_limit) {
  SuiteResult out;
  out.name = "reconstruction";
  std::mt19937_64 rng(seed);
  for (const auto& [I, L] : cases) {
    const bool reco = is_reconstructing(L, I);
    out.check(reco, describe(L, I) + ": not reconstructing");
    if (!reco) continue;
    if (I.size() <= oracle_limit) {
      out.check(oracle::reconstructs_via_difference_set(L, I),
                describe(L, I) + ": difference-set oracle disagrees");
      // A smaller lattice usually fails; both paths must agree either way.
      if (L.size() > 1) {
        const Rank1Lattice smaller(L.generator(), L.size() - 1);
        out.check(is_reconstructing(smaller, I) ==
                      oracle::reconstructs_via_difference_set(smaller, I),
                  describe(smaller, I) + ": residue and difference-set checks disagree");
      }
    }
    const auto M = L.size();
    const auto r = residues(L, I);
    const DftPlan plan(static_cast<std::size_t>(M));
    const auto shared = std::make_shared<const FrequencyIndexSet>(I);
    for (int p = 0; p < polys; ++p) {
      const auto c = random_vector(I.size(), rng);
      // Samples f(x_j) = sum_k c_k exp(2 pi i j r_k / M) by one inverse DFT.
      std::vector<Complex> g(static_cast<std::size_t>(M));
      for (std::size_t i = 0; i < I.size(); ++i) g[static_cast<std::size_t>(r[i])] = c[i];
      plan.execute(g, Direction::kInverse);
      auto f = std::move(g);
      for (auto& v : f) v *= static_cast<double>(M);

      double l1 = 0.0;
      for (const auto& v : c) l1 += std::abs(v);
      std::uniform_int_distribution<std::int64_t> node(0, M - 1);
      double spot = 0.0;
      for (int t = 0; t < 3; ++t) {
        const std::int64_t j = node(rng);
        Complex direct{};
        for (std::size_t i = 0; i < I.size(); ++i) {
          const auto q = mod_floor(static_cast<__int128>(j) * r[i], M);
          direct += c[i] * std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(q) /
                                                static_cast<double>(M));
        }
        spot = std::max(spot, std::abs(direct - f[static_cast<std::size_t>(j)]));
      }
      out.check(spot <= 1e-10 * std::max(l1, 1.0),
                describe(L, I) + ": synthesized samples disagree with direct sum");

      const auto approx = reconstruct_coefficients(SampleVector{L, std::move(f)}, shared, plan);
      const double err = max_abs_diff(approx.coefficients, c);
      std::ostringstream msg;
      msg << describe(L, I) << ": coefficient error " << err;
      out.check(err <= tol, msg.str());
    }
  }
  return out;
}

std::vector<ReconstructionCase> default_reconstruction_cases() {
  std::vector<ReconstructionCase> cases;
  auto with_cbc = [&](FrequencyIndexSet I, CbcOptions options = {}) {
    auto L = cbc_construct(I, options);
    cases.push_back({std::move(I), std::move(L)});
  };
  // The default ceiling 2^{2R+3} is below |H_R^{2,0}| for R = 1 and admits no
  // lattice for R = 2.
  CbcOptions wide;
  wide.ceiling_multiplier = 8.0;
  for (int R = 1; R <= 2; ++R) with_cbc(hyperbolic_cross(2, 0.0, R), wide);
  for (int R = 3; R <= 5; ++R) with_cbc(hyperbolic_cross(2, 0.0, R));
  for (int R = 1; R <= 3; ++R) with_cbc(hyperbolic_cross(3, 0.0, R));
  with_cbc(hyperbolic_cross(3, 0.5, 3));
  with_cbc(hyperbolic_cross(2, 0.25, 4));
  for (int d = 2; d <= 4; ++d) with_cbc(dyadic_cross(d, 4));
  for (std::int64_t N = 1; N <= 12; ++N) with_cbc(linf_ball_2d(N));
  for (int R = 1; R <= 3; ++R) with_cbc(tensor_grid_2d(R));
  for (int R = 2; R <= 4; ++R) with_cbc(anisotropic_cross({1.0, 2.0}, R));
  with_cbc(anisotropic_cross({1.0, 1.5, 3.0}, 3));
  for (int n = 8; n <= 16; ++n) {
    auto L = fibonacci_lattice(n);
    if (const auto R = largest_dyadic_level(L)) cases.push_back({dyadic_cross(2, *R), L});
  }
  for (int R = 1; R <= 6; ++R) {
    auto L = korobov_lattice_2d(R);
    if (const auto level = largest_dyadic_level(L)) {
      cases.push_back({dyadic_cross(2, *level), L});
    }
  }
  return cases;
}

std::vector<SmoothnessParams> lower_bound_param_grid() {
  std::vector<SmoothnessParams> grid;
  for (double alpha : {1.0, 1.5, 2.0}) {
    for (double beta : {0.0, -0.25}) {
      for (double gamma : {0.0, 0.5}) grid.push_back({alpha, beta, gamma, std::nullopt});
    }
  }
  return grid;
}

SuiteResult lower_bound_suite(const std::vector<Rank1Lattice>& lattices,
                              const std::vector<SmoothnessParams>& params) {
  SuiteResult out;
  out.name = "lower-bound";
  for (const auto& L : lattices) {
    const auto pair = find_aliasing_pair(L);
    for (const auto& p : params) {
      std::ostringstream where;
      where << to_string(L) << " alpha=" << p.alpha << " beta=" << p.beta
            << " gamma=" << p.gamma;
      try {
        const auto w = fooling_function(pair, p);
        const double bound = lower_bound_value(L.size(), p);
        where << ": ratio " << w.norm_ratio << " < bound " << bound;
        out.check(w.max_node_value <= 1e-12 && w.norm_ratio >= bound, where.str());
      } catch (const std::logic_error& e) {
        out.check(false, where.str() + ": " + e.what());
      }
    }
  }
  return out;
}

SuiteResult counting_suite(const std::vector<CountingCase>& cases,
                           int boxes_per_lattice, std::uint64_t seed) {
  SuiteResult out;
  out.name = "counting";
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (const auto& [L, R] : cases) {
    const int d = L.dim();
    const std::int64_t M = L.size();
    const auto& z = L.generator();
    const double max_log_vol = (R + 3) * std::log(2.0);
    for (int b = 0; b < boxes_per_lattice; ++b) {
      // Anchor: the origin or a dual point with small trailing components.
      Frequency anchor(static_cast<std::size_t>(d), 0);
      if (b % 2 == 1 && z[0] % M == 1 % M) {
        std::uniform_int_distribution<std::int64_t> small(-(std::int64_t{1} << R),
                                                          std::int64_t{1} << R);
        __int128 acc = 0;
        for (int s = 1; s < d; ++s) {
          anchor[s] = small(rng);
          acc += static_cast<__int128>(anchor[s]) * z[s];
        }
        std::int64_t h1 = mod_floor(-acc, M);
        if (h1 > M / 2) h1 -= M;
        anchor[0] = h1;
      }
      // Volume log-uniform in [1, 2^{R+3}], split by random weights.
      const double log_vol = unit(rng) * max_log_vol;
      std::vector<double> w(static_cast<std::size_t>(d));
      double wsum = 0.0;
      for (auto& v : w) wsum += (v = -std::log(1.0 - unit(rng)));
      IntegerBox box;
      for (int s = 0; s < d; ++s) {
        const auto side = std::max<std::int64_t>(
            1, std::llround(std::exp(log_vol * w[s] / wsum)));
        std::uniform_int_distribution<std::int64_t> shift(0, side);
        const std::int64_t lo = anchor[s] - shift(rng);
        box.bounds.emplace_back(lo, lo + side);
      }
      const auto count = static_cast<double>(dual_points_in_box(L, box).size());
      const double vol = box.volume();
      const double limit = vol <= std::ldexp(1.0, R - 1)
                               ? 1.0
                               : std::ldexp(1.0, d + 1) * vol / std::ldexp(1.0, R);
      std::ostringstream msg;
      msg << to_string(L) << " R=" << R << " box vol " << vol << ": " << count
          << " dual points > " << limit;
      out.check(count <= limit, msg.str());
    }
  }
  return out;
}

SuiteResult fft_suite(const std::vector<std::size_t>& sizes, std::uint64_t seed,
                      double tol) {
  SuiteResult out;
  out.name = "fft";
  std::mt19937_64 rng(seed);
  for (std::size_t n : sizes) {
    const auto v = random_vector(n, rng);
    for (auto dir : {Direction::kForward, Direction::kInverse}) {
      const auto fast = dft_1d(v, dir);
      const auto slow = oracle::naive_dft(v, dir);
      const double rel = max_abs_diff(fast, slow) / std::max(max_abs(slow), 1e-300);
      std::ostringstream msg;
      msg << "n=" << n << (dir == Direction::kForward ? " forward" : " inverse")
          << ": relative error " << rel;
      out.check(rel <= tol, msg.str());
    }
    const auto back = dft_1d(dft_1d(v, Direction::kForward), Direction::kInverse);
    const double rel = max_abs_diff(back, v) / std::max(max_abs(v), 1e-300);
    std::ostringstream msg;
    msg << "n=" << n << ": round trip error " << rel;
    out.check(rel <= tol, msg.str());
  }
  return out;
}

SuiteResult kink_suite(std::int64_t kmax_quad, std::int64_t kmax_sum, double tol,
                       double parseval_tol) {
  SuiteResult out;
  out.name = "kink";
  for (std::int64_t k = -kmax_quad; k <= kmax_quad; ++k) {
    const double closed = kink_coeff_1d(k);
    const double quad = oracle::kink_coeff_quadrature(k);
    std::ostringstream msg;
    msg << "k=" << k << ": closed form " << closed << " vs quadrature " << quad;
    out.check(std::abs(closed - quad) <= tol, msg.str());
  }
  double sum = 0.0;
  for (std::int64_t k = -kmax_sum; k <= kmax_sum; ++k) sum += kink_coeff_1d(k) * kink_coeff_1d(k);
  std::ostringstream msg;
  msg << "Parseval sum over |k| <= " << kmax_sum << " is " << sum;
  out.check(std::abs(sum - 1.0) <= parseval_tol, msg.str());
  std::ostringstream norm;
  const double q = oracle::kink_norm2_quadrature();
  norm << "quadrature norm^2 " << q;
  out.check(std::abs(q - 1.0) <= tol, norm.str());
  return out;
}

SuiteResult run_named_suite(const std::string& name) {
  if (name == "reconstruction") {
    return reconstruction_suite(default_reconstruction_cases(), 5, 1);
  }
  if (name == "lower-bound") {
    std::vector<Rank1Lattice> lattices;
    for (int n = 5; n <= 25; ++n) lattices.push_back(fibonacci_lattice(n));
    for (int R = 0; R <= 8; ++R) lattices.push_back(korobov_lattice_2d(R));
    return lower_bound_suite(lattices, lower_bound_param_grid());
  }
  if (name == "counting") {
    std::vector<CountingCase> cases;
    for (int R = 4; R <= 7; ++R) cases.push_back({cbc_construct(hyperbolic_cross(2, 0.0, R)), R});
    for (int R = 4; R <= 5; ++R) cases.push_back({cbc_construct(hyperbolic_cross(3, 0.0, R)), R});
    return counting_suite(cases, 100, 7);
  }
  if (name == "fft") {
    std::vector<std::size_t> sizes;
    for (std::size_t n = 1; n <= 64; ++n) sizes.push_back(n);
    for (std::size_t n : {97, 610, 10946}) sizes.push_back(n);
    return fft_suite(sizes, 3);
  }
  if (name == "kink") return kink_suite(200, 10000);
  throw std::invalid_argument("unknown suite '" + name +
                              "' (expected reconstruction, lower-bound, counting, fft, kink)");
}

}  // namespace rank1::suites
