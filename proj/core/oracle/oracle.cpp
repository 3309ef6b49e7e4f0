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

#include "rank1/oracle.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>
#include <stdexcept>

namespace rank1::oracle {
namespace {

std::int64_t slow_residue(const std::vector<std::int64_t>& z, std::int64_t M,
                          const std::vector<std::int64_t>& k) {
  __int128 acc = 0;
  for (std::size_t s = 0; s < k.size(); ++s) acc += static_cast<__int128>(k[s]) * z[s];
  acc %= M;
  if (acc < 0) acc += M;
  return static_cast<std::int64_t>(acc);
}

// All integer vectors in [-B, B]^d accepted by `pred`.
template <class Pred>
std::vector<Frequency> box_filter(int d, std::int64_t B, Pred pred) {
  std::vector<Frequency> out;
  Frequency k(static_cast<std::size_t>(d), -B);
  while (true) {
    if (pred(k)) out.push_back(k);
    int s = d - 1;
    while (s >= 0 && k[s] == B) k[s--] = -B;
    if (s < 0) break;
    ++k[s];
  }
  return out;
}

int block_level(std::int64_t k) {
  for (int j = 0; j < 62; ++j) {
    if (in_dyadic_block(k, j)) return j;
  }
  throw std::logic_error("no dyadic block contains k");
}

double kink_factor(double x) {
  const double c = std::pow(5.0, 0.75) * 15.0 / (4.0 * std::sqrt(3.0));
  const double t = x - 0.5;
  return c * std::max(0.2 - t * t, 0.0);
}

}  // namespace

std::vector<Complex> naive_dft(std::span<const Complex> v, Direction dir) {
  const std::size_t n = v.size();
  const double sign = dir == Direction::kForward ? -1.0 : 1.0;
  std::vector<Complex> out(n);
  for (std::size_t m = 0; m < n; ++m) {
    Complex acc{};
    for (std::size_t j = 0; j < n; ++j) {
      const auto q = static_cast<double>((j * m) % n);
      const double angle = sign * 2.0 * std::numbers::pi * q / static_cast<double>(n);
      acc += v[j] * std::polar(1.0, angle);
    }
    out[m] = dir == Direction::kForward ? acc : acc / static_cast<double>(n);
  }
  return out;
}

bool reconstructs_via_difference_set(const Rank1Lattice& L,
                                     const FrequencyIndexSet& I) {
  std::set<std::vector<std::int64_t>> diffs;
  for (std::size_t a = 0; a < I.size(); ++a) {
    for (std::size_t b = 0; b < I.size(); ++b) {
      std::vector<std::int64_t> h(static_cast<std::size_t>(I.dim()));
      for (int s = 0; s < I.dim(); ++s) h[s] = I[a][s] - I[b][s];
      diffs.insert(std::move(h));
    }
  }
  for (const auto& h : diffs) {
    const bool zero = std::all_of(h.begin(), h.end(), [](auto v) { return v == 0; });
    if (!zero && slow_residue(L.generator(), L.size(), h) == 0) return false;
  }
  return true;
}

bool in_dyadic_block(std::int64_t k, int j) {
  if (j == 0) return k >= -1 && k <= 1;
  const std::int64_t hi = std::int64_t{1} << j;
  const std::int64_t lo = (std::int64_t{1} << (j - 1)) + 1;
  return (k >= -hi && k <= -lo) || (k >= lo && k <= hi);
}

std::vector<Frequency> hyperbolic_cross_by_predicate(int d, double T, double R) {
  const double rhs = (1.0 - T) * R + d - 1;
  const auto jmax = static_cast<int>(std::floor(rhs / (1.0 - T) + 1e-9));
  return box_filter(d, std::int64_t{1} << jmax, [&](const Frequency& k) {
    double l1 = 0;
    double linf = 0;
    for (auto v : k) {
      const int j = block_level(v);
      l1 += j;
      linf = std::max<double>(linf, j);
    }
    return l1 - T * linf <= rhs + 1e-12;
  });
}

std::vector<Frequency> anisotropic_cross_by_predicate(
    const std::vector<double>& alpha, double R) {
  const double amin = *std::min_element(alpha.begin(), alpha.end());
  const auto jmax = static_cast<int>(std::floor(R + 1e-9));
  const int d = static_cast<int>(alpha.size());
  return box_filter(d, std::int64_t{1} << jmax, [&](const Frequency& k) {
    double dot = 0;
    for (int s = 0; s < d; ++s) dot += alpha[s] * block_level(k[s]);
    return dot / amin <= R + 1e-12;
  });
}

std::vector<Frequency> dyadic_cross_by_predicate(int d, int R) {
  const std::int64_t B = R == 0 ? 0 : std::int64_t{1} << (R - 1);
  // Sum over coordinates of the smallest half-open block level.
  auto level = [](std::int64_t k) {
    for (int j = 0;; ++j) {
      const std::int64_t h = j == 0 ? 0 : std::int64_t{1} << (j - 1);
      const bool in = j == 0 ? k == 0 : (k > -h && k <= h);
      if (in) return j;
    }
  };
  return box_filter(d, B, [&](const Frequency& k) {
    int sum = 0;
    for (auto v : k) sum += level(v);
    return sum <= R;
  });
}

std::optional<Rank1Lattice> exhaustive_lattice_search(const FrequencyIndexSet& I,
                                                      std::int64_t max_M) {
  const int d = I.dim();
  std::vector<std::vector<std::int64_t>> rows;
  for (std::size_t i = 0; i < I.size(); ++i) rows.emplace_back(I[i].begin(), I[i].end());
  for (std::int64_t M = std::max<std::int64_t>(1, static_cast<std::int64_t>(I.size()));
       M <= max_M; ++M) {
    std::vector<std::int64_t> z(static_cast<std::size_t>(d), 0);
    while (true) {
      std::set<std::int64_t> seen;
      bool ok = true;
      for (const auto& k : rows) {
        if (!seen.insert(slow_residue(z, M, k)).second) {
          ok = false;
          break;
        }
      }
      if (ok) return Rank1Lattice(z, M);
      int s = d - 1;
      while (s >= 0 && z[s] == M - 1) z[s--] = 0;
      if (s < 0) break;
      ++z[s];
    }
  }
  return std::nullopt;
}

double kink_coeff_quadrature(std::int64_t k) {
  using boost::math::quadrature::gauss_kronrod;
  const double a = 1.0 / std::sqrt(5.0);
  const double w = 2.0 * std::numbers::pi * static_cast<double>(k);
  // The imaginary part vanishes by symmetry about 1/2.
  auto f = [&](double x) { return kink_factor(x) * std::cos(w * x); };
  // Split the support so every panel covers at most about one period.
  const double lo = 0.5 - a;
  const double hi = 0.5 + a;
  const int panels = std::max<int>(1, static_cast<int>(std::abs(k)) + 1);
  double sum = 0.0;
  for (int p = 0; p < panels; ++p) {
    const double x0 = lo + (hi - lo) * p / panels;
    const double x1 = lo + (hi - lo) * (p + 1) / panels;
    sum += gauss_kronrod<double, 61>::integrate(f, x0, x1, 4, 1e-12);
  }
  return sum;
}

double kink_norm2_quadrature() {
  using boost::math::quadrature::gauss_kronrod;
  const double a = 1.0 / std::sqrt(5.0);
  auto f = [](double x) {
    const double h = kink_factor(x);
    return h * h;
  };
  return gauss_kronrod<double, 61>::integrate(f, 0.5 - a, 0.5 + a, 4, 1e-12);
}

}  // namespace rank1::oracle
