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

#ifndef RANK1_TOOLS_SUITES_HPP_
#define RANK1_TOOLS_SUITES_HPP_

// Property suites behind `rank1 verify` and the acceptance runner. Each suite
// counts individual checks and collects the first few failure messages.

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "rank1/analysis.hpp"
#include "rank1/index_set.hpp"
#include "rank1/lattice.hpp"

namespace rank1::suites {

struct SuiteResult {
  std::string name;
  std::int64_t checks = 0;
  std::int64_t failures = 0;
  std::vector<std::string> messages;  // first failures, capped

  bool passed() const { return checks > 0 && failures == 0; }
  void check(bool ok, const std::string& what);
  void merge(const SuiteResult& other);
};

/// "SUITE <name> PASS|FAIL <checks>".
std::string summary_line(const SuiteResult& r);

struct ReconstructionCase {
  FrequencyIndexSet index_set;
  Rank1Lattice lattice;
};

/// For every case: the lattice reconstructs the set (cross-checked against
/// the difference-set oracle when |I| <= oracle_limit), `polys` random
/// trigonometric polynomials supported on I are recovered to `tol`
/// (max-abs coefficient error), and the synthesized samples agree with
/// direct evaluation at a few nodes.
SuiteResult reconstruction_suite(const std::vector<ReconstructionCase>& cases,
                                 int polys, std::uint64_t seed,
                                 double tol = 1e-12,
                                 std::size_t oracle_limit = 2000);

/// Desk-scale cases for `rank1 verify reconstruction`.
std::vector<ReconstructionCase> default_reconstruction_cases();

/// alpha in {1, 1.5, 2}, beta in {0, -0.25}, gamma in {0, 0.5}.
std::vector<SmoothnessParams> lower_bound_param_grid();

/// For every lattice and parameter set: the fooling function vanishes on all
/// nodes to 1e-12 and its H^gamma ratio is at least the lower bound value.
SuiteResult lower_bound_suite(const std::vector<Rank1Lattice>& lattices,
                              const std::vector<SmoothnessParams>& params);

struct CountingCase {
  Rank1Lattice lattice;
  int R = 0;  // the lattice reconstructs H_R^{d,0}
};

/// Random boxes with integer corners and side lengths >= 1, half of them
/// placed around a dual lattice point: a box of volume <= 2^{R-1} holds at
/// most one dual point, a larger one at most 2^{d+1} vol / 2^R.
SuiteResult counting_suite(const std::vector<CountingCase>& cases,
                           int boxes_per_lattice, std::uint64_t seed);

/// dft_1d against the naive DFT (relative max-abs error) in both directions
/// and forward followed by inverse against the identity.
SuiteResult fft_suite(const std::vector<std::size_t>& sizes, std::uint64_t seed,
                      double tol = 1e-10);

/// Closed-form 1D kink coefficients against quadrature for |k| <= kmax_quad
/// (absolute error <= tol) and the Parseval partial sum over |k| <= kmax_sum
/// within parseval_tol of one.
SuiteResult kink_suite(std::int64_t kmax_quad, std::int64_t kmax_sum,
                       double tol = 1e-10, double parseval_tol = 1e-6);

/// Runs a suite by CLI name with its default configuration. Throws
/// std::invalid_argument for an unknown name.
SuiteResult run_named_suite(const std::string& name);

}  // namespace rank1::suites

#endif  // RANK1_TOOLS_SUITES_HPP_
