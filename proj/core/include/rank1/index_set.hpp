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

#ifndef RANK1_INDEX_SET_HPP_
#define RANK1_INDEX_SET_HPP_

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

namespace rank1 {

/// A single frequency k in Z^d.
using Frequency = std::vector<std::int64_t>;
/// Non-owning view of a frequency stored inside an index set.
using FrequencyView = std::span<const std::int64_t>;

// Provenance tags for generated index sets.

/// H_R^{d,T}: union of Q_j blocks over ||j||_1 - T||j||_inf <= (1-T)R + d - 1.
struct HyperbolicCross {
  int d = 2;
  double T = 0.0;
  double R = 0.0;
};

/// Union over ||j||_1 <= R of the half-open blocks
/// x_s (-2^{j_s-1}, 2^{j_s-1}], with the block {0} for j_s = 0.
/// This is the cross the convergence figures are computed on.
struct DyadicCross {
  int d = 2;
  int R = 0;
};

/// H_R^{d,alpha}: union of Q_j blocks over (alpha . j) / min(alpha) <= R.
struct AnisotropicCross {
  std::vector<double> alpha;
  double R = 0.0;
};

struct LinfBall2D {
  std::int64_t N = 1;
};

struct TensorGrid2D {
  double R = 1.0;
};

struct AxisCross {
  int d = 2;
  std::int64_t M = 1;
};

struct Explicit {};

using IndexSetSpec = std::variant<HyperbolicCross, DyadicCross,
                                  AnisotropicCross, LinfBall2D, TensorGrid2D,
                                  AxisCross, Explicit>;

/// Short textual form used in serialization headers, e.g. "hc(d=2,T=0,R=4)".
std::string to_string(const IndexSetSpec& spec);

/// Ordered, duplicate-free set of d-dimensional frequencies.
///
/// Frequencies are stored contiguously (row-major, one row per frequency) and
/// kept in lexicographic order. The set is immutable after construction.
class FrequencyIndexSet {
 public:
  /// Builds a set from `dim`-strided rows. Rows are sorted and deduplicated.
  /// Throws std::invalid_argument if dim < 1 or the row data is ragged.
  FrequencyIndexSet(int dim, std::vector<std::int64_t> rows,
                    IndexSetSpec spec = Explicit{});

  static FrequencyIndexSet from_frequencies(
      int dim, const std::vector<Frequency>& frequencies,
      IndexSetSpec spec = Explicit{});

  int dim() const { return dim_; }
  std::size_t size() const { return data_.size() / static_cast<std::size_t>(dim_); }
  bool empty() const { return data_.empty(); }

  FrequencyView operator[](std::size_t i) const {
    return {data_.data() + i * static_cast<std::size_t>(dim_),
            static_cast<std::size_t>(dim_)};
  }

  /// Row-major storage, size() * dim() entries.
  std::span<const std::int64_t> data() const { return data_; }
  const IndexSetSpec& spec() const { return spec_; }

  /// Position of k in the set, if present (binary search).
  std::optional<std::size_t> find(FrequencyView k) const;
  bool contains(FrequencyView k) const { return find(k).has_value(); }

  /// Largest |k_s| over all members and coordinates.
  std::int64_t max_abs_component() const;

  friend bool operator==(const FrequencyIndexSet& a,
                         const FrequencyIndexSet& b) {
    return a.dim_ == b.dim_ && a.data_ == b.data_;
  }

 private:
  int dim_;
  std::vector<std::int64_t> data_;
  IndexSetSpec spec_;
};

/// Q_0 = {-1,0,1}; Q_j = [-2^j, -2^{j-1}-1] u [2^{j-1}+1, 2^j] for j > 0.
std::vector<std::int64_t> dyadic_block(int j);

/// H_R^{d,T}. Requires d >= 1, 0 <= T < 1, R >= 0.
FrequencyIndexSet hyperbolic_cross(int d, double T, double R);

/// Half-open dyadic hyperbolic cross of integer refinement R >= 0.
FrequencyIndexSet dyadic_cross(int d, int R);

/// H_R^{d,alpha}; alpha must be strictly positive, R >= 0.
FrequencyIndexSet anisotropic_cross(const std::vector<double>& alpha, double R);

/// I_N^2 = {-ceil((N-2)/2), ..., ceil((N-1)/2)}^2.
FrequencyIndexSet linf_ball_2d(std::int64_t N);

/// G_R^2 = (-2^{floor(R)-1}, 2^{floor(R)-1}]^2.
FrequencyIndexSet tensor_grid_2d(double R);

/// Frequencies in Z^2 x {0}^{d-2} with at most one nonzero entry of modulus
/// at most floor(sqrt(M)).
FrequencyIndexSet axis_cross(int d, std::int64_t M);

/// D(I) = {h1 - h2 : h1, h2 in I}. O(|I|^2).
FrequencyIndexSet difference_set(const FrequencyIndexSet& I);

/// `# dim=<d> kind=<spec>` followed by one tab-separated frequency per line.
void write_index_set(std::ostream& out, const FrequencyIndexSet& I);
/// Parses the format of write_index_set. The result carries an Explicit spec.
FrequencyIndexSet read_index_set(std::istream& in);

/// floor(sqrt(n)) for n >= 0, exact.
std::int64_t isqrt(std::int64_t n);

}  // namespace rank1

#endif  // RANK1_INDEX_SET_HPP_
