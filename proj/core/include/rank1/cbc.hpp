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

#ifndef RANK1_CBC_HPP_
#define RANK1_CBC_HPP_

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "rank1/index_set.hpp"
#include "rank1/lattice.hpp"

namespace rank1 {

struct CbcOptions {
  /// Largest lattice size tried. 0 selects the default for the index set.
  std::int64_t ceiling = 0;
  /// Scales the (default or explicit) ceiling.
  double ceiling_multiplier = 1.0;
  /// Restrict candidate sizes to primes.
  bool prime_only = true;
  /// After candidate p the next candidate is the first admissible size
  /// >= max(p + 1, ceil(p * (1 + growth))). 0 gives every admissible size.
  double growth = 1.0 / 16.0;
};

/// Thrown when no candidate size up to the ceiling admits a generator.
class CandidateExhausted : public std::runtime_error {
 public:
  CandidateExhausted(std::int64_t ceiling, std::int64_t tried)
      : std::runtime_error("no reconstructing lattice with M <= " +
                           std::to_string(ceiling) + " (" +
                           std::to_string(tried) + " candidate sizes tried)"),
        ceiling_(ceiling),
        tried_(tried) {}

  std::int64_t ceiling() const { return ceiling_; }
  std::int64_t tried() const { return tried_; }

 private:
  std::int64_t ceiling_;
  std::int64_t tried_;
};

bool is_prime(std::int64_t n);
/// Smallest prime >= n.
std::int64_t next_prime(std::int64_t n);

/// Strictly increasing stream of lattice sizes for a CBC search over I.
///
/// Starts at max(|I|, 2^{2 floor(R) - 2}) (the latter only for hyperbolic
/// crosses H_R^{d,T}, where every reconstructing lattice is at least that
/// large) and stops after the ceiling.
class CandidateSizes {
 public:
  CandidateSizes(const FrequencyIndexSet& I, const CbcOptions& options = {});

  std::optional<std::int64_t> next();

  std::int64_t start() const { return start_; }
  std::int64_t ceiling() const { return ceiling_; }
  std::int64_t yielded() const { return yielded_; }

 private:
  std::int64_t admissible_at_or_after(std::int64_t n) const;

  std::int64_t start_;
  std::int64_t ceiling_;
  bool prime_only_;
  double growth_;
  std::int64_t last_ = 0;
  std::int64_t yielded_ = 0;
};

/// Lower bound 2^{2 floor(R) - 2} on reconstructing lattices for H_R^{d,T}
/// (1 for R < 1).
std::int64_t hyperbolic_cross_size_lower_bound(double R);

/// Default ceiling used when CbcOptions::ceiling is 0.
std::int64_t default_cbc_ceiling(const FrequencyIndexSet& I);

/// Component-by-component search for a fixed lattice size M: z_1 = 1 and each
/// further z_s is the smallest value in [0, M) that keeps the residues of the
/// distinct s-dimensional projections of I pairwise distinct. Returns the
/// generating vector, or nullopt if some component admits no value.
std::optional<std::vector<std::int64_t>> cbc_generator(
    const FrequencyIndexSet& I, std::int64_t M);

/// Walks CandidateSizes and returns the first lattice found by cbc_generator.
/// The result is re-verified with is_reconstructing before returning.
Rank1Lattice cbc_construct(const FrequencyIndexSet& I,
                           const CbcOptions& options = {});

}  // namespace rank1

#endif  // RANK1_CBC_HPP_
