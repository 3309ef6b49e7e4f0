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

#ifndef RANK1_ANALYSIS_HPP_
#define RANK1_ANALYSIS_HPP_

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "rank1/index_set.hpp"
#include "rank1/lattice.hpp"
#include "rank1/spectral.hpp"

namespace rank1 {

/// Smoothness exponents of the hybrid weight
///   prod_s (1 + |k_s|^2)^alpha * (1 + ||k||_2^2)^beta
/// and the target exponent gamma of the isotropic space H^gamma.
struct SmoothnessParams {
  double alpha = 1.0;
  double beta = 0.0;
  double gamma = 0.0;
  std::optional<std::vector<double>> alpha_vector;

  /// alpha > gamma - beta >= 0 and alpha + beta > 0.
  bool admissible_for_lower_bound() const;
};

/// omega^{alpha,beta}(k) = sqrt(prod_s (1+k_s^2)^alpha (1+||k||^2)^beta).
double weight_omega(FrequencyView k, double alpha, double beta);

/// sqrt(sum_k |c_k|^2 omega^{alpha,beta}(k)^2).
double hab_norm(const SpectralApproximation& p, double alpha, double beta);

/// L2(T^d) distance between the kink function and `approx`, via
///   ||g - p||^2 = sum_{k in I} |g_k - c_k|^2 + (1 - sum_{k in I} g_k^2),
/// using ||g|| = 1. Throws std::logic_error if the tail term is below -1e-12.
double kink_l2_error(const SpectralApproximation& approx);

/// Two distinct axis-cross frequencies with equal lattice residue.
struct AliasingWitness {
  Frequency k1;
  Frequency k2;
  Rank1Lattice lattice;
  /// ||g||_{H^gamma} of the fooling function normalized in H^{alpha,beta};
  /// zero until filled in by fooling_function.
  double norm_ratio = 0.0;
  /// max_j |g(x_j)| over the lattice nodes (fooling_function only).
  double max_node_value = 0.0;
};

/// Searches {0..floor(sqrt M)}^2 (first two coordinates) in row-major order
/// for the first residue collision p, q; with h = q - p returns
/// k1 = (h_1, 0, ...) and k2 = (0, -h_2, 0, ...). Requires d >= 2.
/// Uses O(M) memory.
AliasingWitness find_aliasing_pair(const Rank1Lattice& L);

/// Builds g = (e_{k1} - e_{k2}) / sqrt(omega(k1)^2 + omega(k2)^2) from the
/// aliasing pair, records its H^gamma norm and checks it vanishes on every
/// node to 1e-12. Throws std::invalid_argument outside the admissible
/// parameter domain and std::logic_error if a node value exceeds 1e-12.
AliasingWitness fooling_function(const Rank1Lattice& L,
                                 const SmoothnessParams& params);
/// Same, reusing a pair from find_aliasing_pair.
AliasingWitness fooling_function(const AliasingWitness& pair,
                                 const SmoothnessParams& params);

/// 2^{-(alpha+beta-gamma+1)/2} M^{-(alpha+beta-gamma)/2}.
double lower_bound_value(std::int64_t M, const SmoothnessParams& params);

/// One experiment row.
struct ErrorReport {
  std::string family;
  std::string index_set_spec;
  int d = 0;
  std::int64_t refinement = 0;  // R for crosses, N for l_inf balls
  Rank1Lattice lattice{{1}, 1};
  std::size_t index_set_size = 0;
  double l2_error = 0.0;
  std::map<std::string, double> scaled_errors;
};

}  // namespace rank1

#endif  // RANK1_ANALYSIS_HPP_
