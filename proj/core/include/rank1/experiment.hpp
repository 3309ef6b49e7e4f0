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

#ifndef RANK1_EXPERIMENT_HPP_
#define RANK1_EXPERIMENT_HPP_

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "rank1/analysis.hpp"
#include "rank1/cbc.hpp"
#include "rank1/index_set.hpp"
#include "rank1/lattice.hpp"

namespace rank1 {

enum class LatticeFamily { kCbc, kFibonacci, kKorobov };

/// Index-set families a sweep can pair with its lattices.
///   kDyadic  half-open dyadic hyperbolic cross ("hc" in the figures)
///   kHct     generalized H_R^{d,T}
///   kLinf    l_inf ball I_N^2, largest N the lattice reconstructs
///   kGrid    tensor grid G_R^2, largest R the lattice reconstructs
///   kAniso   anisotropic cross H_R^{d,alpha}
enum class SetKind { kDyadic, kHct, kLinf, kGrid, kAniso };

std::string to_string(LatticeFamily f);
std::string to_string(SetKind k);
LatticeFamily parse_family(const std::string& s);
SetKind parse_set_kind(const std::string& s);

struct SweepConfig {
  LatticeFamily family = LatticeFamily::kCbc;
  SetKind set = SetKind::kDyadic;
  int d = 2;
  double T = 0.0;
  std::vector<double> alpha;
  int r_min = 0;
  int r_max = 40;
  std::int64_t max_M = 1'000'000;
  CbcOptions cbc;
};

/// Smoothness used by the scaled error columns.
inline constexpr double kKinkSmoothness = 1.5;

/// err * M^{alpha/2}.
double scaled_error_main(double err, std::int64_t M);
/// err * M^{alpha/2} (log M)^{-(d-2) alpha/2 - (d-1)/2}.
double scaled_error_log(double err, std::int64_t M, int d);

/// Samples the kink function on L, reconstructs on I and fills one report.
/// Throws std::runtime_error if L does not reconstruct I.
ErrorReport kink_experiment_row(const std::string& family, const Rank1Lattice& L,
                                std::shared_ptr<const FrequencyIndexSet> I,
                                std::int64_t refinement);

/// Largest R for which L reconstructs dyadic_cross(d, R); nullopt if not even
/// R = 0 (which holds for every lattice).
std::optional<int> largest_dyadic_level(const Rank1Lattice& L);
/// Largest N for which L reconstructs linf_ball_2d(N).
std::int64_t largest_linf_size(const Rank1Lattice& L);
/// Largest integer R >= 1 for which L reconstructs tensor_grid_2d(R), or 0.
int largest_grid_level(const Rank1Lattice& L);

/// Lattices of a family in ascending size, each paired with the refinement it
/// was generated for (R for CBC/Korobov, n for Fibonacci).
struct FamilyLattice {
  Rank1Lattice lattice;
  int parameter;
};
std::vector<FamilyLattice> family_lattices(const SweepConfig& config);

/// One row per lattice of the sweep, ascending M.
std::vector<ErrorReport> run_sweep(const SweepConfig& config);

/// Figure selectors: fig4a, fig4b, fig4c, fig5a, fig5b, fig5c, fig8, fig9.
bool is_figure_selector(const std::string& name);
std::vector<ErrorReport> run_figure(const std::string& selector,
                                    std::int64_t max_M,
                                    const CbcOptions& cbc = {});

void write_csv_header(std::ostream& out);
void write_csv_row(std::ostream& out, const ErrorReport& row);

}  // namespace rank1

#endif  // RANK1_EXPERIMENT_HPP_
