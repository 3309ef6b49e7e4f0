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

#ifndef RANK1_SPECTRAL_HPP_
#define RANK1_SPECTRAL_HPP_

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "rank1/fft.hpp"
#include "rank1/index_set.hpp"
#include "rank1/lattice.hpp"

namespace rank1 {

/// Function samples f(x_j) at the nodes of a rank-1 lattice.
struct SampleVector {
  Rank1Lattice lattice;
  std::vector<Complex> values;  // values.size() == lattice.size()
};

/// A d-variate periodic function on [0,1)^d.
using PeriodicFunction = std::function<Complex(std::span<const double>)>;

/// Raised when the sampled function throws; carries the failing node.
class SampleError : public std::runtime_error {
 public:
  SampleError(std::int64_t node, const std::string& what)
      : std::runtime_error("sampling failed at node " + std::to_string(node) +
                           ": " + what),
        node_(node) {}
  std::int64_t node() const { return node_; }

 private:
  std::int64_t node_;
};

/// Trigonometric polynomial sum_{k in I} c_k exp(2 pi i k . x).
struct SpectralApproximation {
  std::shared_ptr<const FrequencyIndexSet> index_set;
  std::vector<Complex> coefficients;  // one per index, index-set order
};

SampleVector sample_on_lattice(const PeriodicFunction& f, const Rank1Lattice& L);

/// Single-FFT lattice reconstruction: c_k = (1/M) a_{k.z mod M} where a is the
/// forward DFT of the samples. The lattice need not be reconstructing for I.
SpectralApproximation reconstruct_coefficients(
    const SampleVector& s, std::shared_ptr<const FrequencyIndexSet> I);
SpectralApproximation reconstruct_coefficients(const SampleVector& s,
                                               const FrequencyIndexSet& I);
/// Same, reusing a plan of length M across many sample vectors.
SpectralApproximation reconstruct_coefficients(
    const SampleVector& s, std::shared_ptr<const FrequencyIndexSet> I,
    const DftPlan& plan);

/// Direct lattice rule (1/M) sum_j f(x_j) exp(-2 pi i j (k.z) / M).
Complex quadrature_coefficient(const SampleVector& s, FrequencyView k);

/// Direct summation of the polynomial at x.
Complex evaluate_trig_poly(const SpectralApproximation& p,
                           std::span<const double> x);

/// Header as for index sets, then `k_1;...;k_d<TAB>re<TAB>im` per index.
void write_spectral(std::ostream& out, const SpectralApproximation& p);

}  // namespace rank1

#endif  // RANK1_SPECTRAL_HPP_
