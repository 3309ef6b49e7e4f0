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

#ifndef RANK1_LATTICE_HPP_
#define RANK1_LATTICE_HPP_

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "rank1/index_set.hpp"

namespace rank1 {

/// Rank-1 lattice Lambda(z, M) = {(j z / M) mod 1 : j = 0, ..., M-1}.
class Rank1Lattice {
 public:
  /// Throws std::invalid_argument if z is empty, M < 1, or any |z_s| > 2^31.
  Rank1Lattice(std::vector<std::int64_t> z, std::int64_t M);

  int dim() const { return static_cast<int>(z_.size()); }
  std::int64_t size() const { return M_; }
  const std::vector<std::int64_t>& generator() const { return z_; }

  /// Writes node j (components in [0,1)) into `out`, which must have dim()
  /// entries.
  void node(std::int64_t j, std::span<double> out) const;

  friend bool operator==(const Rank1Lattice&, const Rank1Lattice&) = default;

 private:
  std::vector<std::int64_t> z_;
  std::int64_t M_;
};

/// Magnitude budget for frequency components and generator entries.
inline constexpr std::int64_t kMaxComponent = std::int64_t{1} << 31;
inline constexpr int kMaxDim = 16;

/// All M nodes, row-major (node j occupies [j*d, (j+1)*d)).
std::vector<double> lattice_nodes(const Rank1Lattice& L);

/// (k . z) mod M in [0, M), computed exactly.
std::int64_t residue(const Rank1Lattice& L, FrequencyView k);

/// Residues of every member of I, in index-set order.
std::vector<std::int64_t> residues(const Rank1Lattice& L,
                                   const FrequencyIndexSet& I);

/// True iff k . z mod M is injective on I.
bool is_reconstructing(const Rank1Lattice& L, const FrequencyIndexSet& I);

/// h . z == 0 (mod M).
bool dual_contains(const Rank1Lattice& L, FrequencyView h);

/// Closed integer box prod_s [lo_s, hi_s].
struct IntegerBox {
  std::vector<std::pair<std::int64_t, std::int64_t>> bounds;

  int dim() const { return static_cast<int>(bounds.size()); }
  /// Number of integer points, saturating at INT64_MAX.
  std::int64_t point_count() const;
  /// prod_s (hi_s - lo_s), the continuous volume used by the counting bound.
  double volume() const;
};

inline constexpr std::int64_t kDefaultBoxBudget = 10'000'000;

/// Integer points of the box that lie in the dual lattice, in lexicographic
/// order. Throws std::length_error if the box has more than `budget` points.
std::vector<Frequency> dual_points_in_box(
    const Rank1Lattice& L, const IntegerBox& box,
    std::int64_t budget = kDefaultBoxBudget);

/// Fibonacci number b_n with b_0 = b_1 = 1. Requires 0 <= n <= 90.
std::int64_t fibonacci_number(int n);

/// F_n = Lambda((1, b_{n-1}), b_n), n in [2, 90].
Rank1Lattice fibonacci_lattice(int n);

/// Lambda((1, ceil(3 * 2^{R-2})), ceil((1 + 3 * 2^{R-2}) * 2^{R-1})), R in [0, 30].
Rank1Lattice korobov_lattice_2d(int R);

/// `M<TAB>z_1;z_2;...;z_d`
std::string to_string(const Rank1Lattice& L);
void write_lattice(std::ostream& out, const Rank1Lattice& L);
Rank1Lattice read_lattice(std::istream& in);
Rank1Lattice parse_lattice(const std::string& line);

}  // namespace rank1

#endif  // RANK1_LATTICE_HPP_
