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

#include "rank1/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "rank1/kink.hpp"

namespace rank1 {
namespace {

double sq(double v) { return v * v; }

void require_admissible(const SmoothnessParams& p) {
  if (!p.admissible_for_lower_bound()) {
    throw std::invalid_argument(
        "smoothness parameters must satisfy alpha > gamma - beta >= 0 and "
        "alpha + beta > 0");
  }
}

}  // namespace

bool SmoothnessParams::admissible_for_lower_bound() const {
  return alpha > gamma - beta && gamma - beta >= 0.0 && alpha + beta > 0.0;
}

double weight_omega(FrequencyView k, double alpha, double beta) {
  double mixed = 1.0;
  double norm2 = 0.0;
  for (auto ks : k) {
    const double v = static_cast<double>(ks);
    mixed *= 1.0 + v * v;
    norm2 += v * v;
  }
  return std::sqrt(std::pow(mixed, alpha) * std::pow(1.0 + norm2, beta));
}

double hab_norm(const SpectralApproximation& p, double alpha, double beta) {
  const auto& I = *p.index_set;
  double acc = 0.0;
  for (std::size_t i = 0; i < I.size(); ++i) {
    acc += std::norm(p.coefficients[i]) * sq(weight_omega(I[i], alpha, beta));
  }
  return std::sqrt(acc);
}

double kink_l2_error(const SpectralApproximation& approx) {
  const auto& I = *approx.index_set;
  double inside = 0.0;
  double captured = 0.0;
  for (std::size_t i = 0; i < I.size(); ++i) {
    const double gk = kink_coeff(I[i]);
    inside += std::norm(Complex(gk) - approx.coefficients[i]);
    captured += gk * gk;
  }
  double total = inside + (1.0 - captured);
  if (total < -1e-12) {
    throw std::logic_error("kink_l2_error: negative squared error " +
                           std::to_string(total));
  }
  return std::sqrt(std::max(total, 0.0));
}

AliasingWitness find_aliasing_pair(const Rank1Lattice& L) {
  if (L.dim() < 2) throw std::invalid_argument("find_aliasing_pair: d must be >= 2");
  const std::int64_t M = L.size();
  const std::int64_t side = isqrt(M);
  const int d = L.dim();
  const auto& z = L.generator();
  const std::int64_t z1 = ((z[0] % M) + M) % M;
  const std::int64_t z2 = ((z[1] % M) + M) % M;
  // first[r] = row-major position + 1 of the first grid point with residue r.
  std::vector<std::int64_t> first(static_cast<std::size_t>(M), 0);
  for (std::int64_t a = 0; a <= side; ++a) {
    for (std::int64_t b = 0; b <= side; ++b) {
      const auto r = static_cast<std::size_t>(
          (static_cast<__int128>(a) * z1 + static_cast<__int128>(b) * z2) % M);
      if (first[r] == 0) {
        first[r] = a * (side + 1) + b + 1;
        continue;
      }
      const std::int64_t pa = (first[r] - 1) / (side + 1);
      const std::int64_t pb = (first[r] - 1) % (side + 1);
      AliasingWitness w{Frequency(static_cast<std::size_t>(d), 0),
                        Frequency(static_cast<std::size_t>(d), 0), L};
      w.k1[0] = a - pa;
      w.k2[1] = -(b - pb);
      if (residue(L, w.k1) != residue(L, w.k2)) {
        throw std::logic_error("find_aliasing_pair: witness does not alias");
      }
      return w;
    }
  }
  throw std::logic_error("find_aliasing_pair: no collision found");
}

AliasingWitness fooling_function(const AliasingWitness& pair,
                                 const SmoothnessParams& params) {
  require_admissible(params);
  AliasingWitness w = pair;
  const double o1 = weight_omega(w.k1, params.alpha, params.beta);
  const double o2 = weight_omega(w.k2, params.alpha, params.beta);
  const double norm = std::sqrt(o1 * o1 + o2 * o2);
  const double t1 = weight_omega(w.k1, 0.0, params.gamma);
  const double t2 = weight_omega(w.k2, 0.0, params.gamma);
  w.norm_ratio = std::sqrt(t1 * t1 + t2 * t2) / norm;

  const auto& L = w.lattice;
  const auto d = static_cast<std::size_t>(L.dim());
  std::vector<double> x(d);
  double worst = 0.0;
  auto character = [&](const Frequency& k) {
    double phase = 0.0;
    for (std::size_t s = 0; s < d; ++s) phase += static_cast<double>(k[s]) * x[s];
    phase -= std::floor(phase);
    const double angle = 2.0 * std::numbers::pi * phase;
    return Complex(std::cos(angle), std::sin(angle));
  };
  for (std::int64_t j = 0; j < L.size(); ++j) {
    L.node(j, x);
    worst = std::max(worst, std::abs(character(w.k1) - character(w.k2)) / norm);
  }
  w.max_node_value = worst;
  if (worst > 1e-12) {
    throw std::logic_error("fooling function does not vanish on the lattice (" +
                           std::to_string(worst) + ")");
  }
  return w;
}

AliasingWitness fooling_function(const Rank1Lattice& L,
                                 const SmoothnessParams& params) {
  require_admissible(params);
  return fooling_function(find_aliasing_pair(L), params);
}

double lower_bound_value(std::int64_t M, const SmoothnessParams& params) {
  require_admissible(params);
  if (M < 1) throw std::invalid_argument("lower_bound_value: M must be >= 1");
  const double e = params.alpha + params.beta - params.gamma;
  return std::pow(2.0, -(e + 1.0) / 2.0) *
         std::pow(static_cast<double>(M), -e / 2.0);
}

}  // namespace rank1
