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

#include "rank1/spectral.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <ostream>
#include <utility>

namespace rank1 {

SampleVector sample_on_lattice(const PeriodicFunction& f, const Rank1Lattice& L) {
  SampleVector s{L, {}};
  s.values.resize(static_cast<std::size_t>(L.size()));
  std::vector<double> x(static_cast<std::size_t>(L.dim()));
  for (std::int64_t j = 0; j < L.size(); ++j) {
    L.node(j, x);
    try {
      s.values[static_cast<std::size_t>(j)] = f(x);
    } catch (const std::exception& e) {
      throw SampleError(j, e.what());
    }
  }
  return s;
}

SpectralApproximation reconstruct_coefficients(
    const SampleVector& s, std::shared_ptr<const FrequencyIndexSet> I) {
  return reconstruct_coefficients(s, std::move(I), DftPlan(s.values.size()));
}

SpectralApproximation reconstruct_coefficients(
    const SampleVector& s, std::shared_ptr<const FrequencyIndexSet> I,
    const DftPlan& plan) {
  if (!I) throw std::invalid_argument("reconstruct_coefficients: null index set");
  if (I->dim() != s.lattice.dim()) {
    throw std::invalid_argument("reconstruct_coefficients: dimension mismatch");
  }
  if (static_cast<std::int64_t>(s.values.size()) != s.lattice.size()) {
    throw std::invalid_argument("reconstruct_coefficients: sample count != M");
  }
  std::vector<Complex> a = s.values;
  plan.execute(a, Direction::kForward);
  const double inv_m = 1.0 / static_cast<double>(s.lattice.size());
  SpectralApproximation p{std::move(I), {}};
  p.coefficients.resize(p.index_set->size());
  for (std::size_t i = 0; i < p.index_set->size(); ++i) {
    const auto r = residue(s.lattice, (*p.index_set)[i]);
    p.coefficients[i] = a[static_cast<std::size_t>(r)] * inv_m;
  }
  return p;
}

SpectralApproximation reconstruct_coefficients(const SampleVector& s,
                                               const FrequencyIndexSet& I) {
  return reconstruct_coefficients(s, std::make_shared<const FrequencyIndexSet>(I));
}

Complex quadrature_coefficient(const SampleVector& s, FrequencyView k) {
  const std::int64_t M = s.lattice.size();
  const std::int64_t r = residue(s.lattice, k);
  Complex acc{};
  for (std::int64_t j = 0; j < M; ++j) {
    // (j r) mod M keeps the phase exact for large j.
    const auto q = static_cast<std::int64_t>(static_cast<__int128>(j) * r % M);
    const double angle = -2.0 * std::numbers::pi * static_cast<double>(q) /
                         static_cast<double>(M);
    acc += s.values[static_cast<std::size_t>(j)] *
           Complex(std::cos(angle), std::sin(angle));
  }
  return acc / static_cast<double>(M);
}

Complex evaluate_trig_poly(const SpectralApproximation& p,
                           std::span<const double> x) {
  const auto& I = *p.index_set;
  if (static_cast<int>(x.size()) != I.dim()) {
    throw std::invalid_argument("evaluate_trig_poly: dimension mismatch");
  }
  Complex acc{};
  for (std::size_t i = 0; i < I.size(); ++i) {
    const auto k = I[i];
    double phase = 0.0;
    for (std::size_t s = 0; s < x.size(); ++s) phase += static_cast<double>(k[s]) * x[s];
    const double angle = 2.0 * std::numbers::pi * phase;
    acc += p.coefficients[i] * Complex(std::cos(angle), std::sin(angle));
  }
  return acc;
}

void write_spectral(std::ostream& out, const SpectralApproximation& p) {
  const auto& I = *p.index_set;
  out << "# dim=" << I.dim() << " kind=" << to_string(I.spec()) << '\n';
  char buf[64];
  for (std::size_t i = 0; i < I.size(); ++i) {
    const auto k = I[i];
    for (int s = 0; s < I.dim(); ++s) {
      if (s) out << ';';
      out << k[s];
    }
    std::snprintf(buf, sizeof buf, "\t%.17g\t%.17g", p.coefficients[i].real(),
                  p.coefficients[i].imag());
    out << buf << '\n';
  }
}

}  // namespace rank1
