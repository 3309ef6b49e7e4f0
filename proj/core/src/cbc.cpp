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

#include "rank1/cbc.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>
#include <variant>

namespace rank1 {
namespace {

constexpr std::int64_t kMaxLatticeSize = std::int64_t{1} << 40;

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mul_mod(r, a, m);
    a = mul_mod(a, a, m);
    e >>= 1;
  }
  return r;
}

// Multiplication modulo a fixed m. For m < 2^31 the product fits in 64 bits
// and is reduced with a precomputed reciprocal instead of a division.
class Modulus {
 public:
  explicit Modulus(std::uint64_t m)
      : m_(m), small_(m < (std::uint64_t{1} << 31)), recip_(~std::uint64_t{0} / m) {}
  std::uint64_t value() const { return m_; }
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const {
    if (!small_) return mul_mod(a, b, m_);
    const std::uint64_t x = a * b;
    const auto q = static_cast<std::uint64_t>((static_cast<unsigned __int128>(x) * recip_) >> 64);
    std::uint64_t r = x - q * m_;
    while (r >= m_) r -= m_;
    return r;
  }

 private:
  std::uint64_t m_;
  bool small_;
  std::uint64_t recip_;
};

std::int64_t mod_floor(std::int64_t v, std::int64_t m) {
  const std::int64_t r = v % m;
  return r < 0 ? r + m : r;
}

// Scans z in [0, M) for the smallest value keeping (r + k z) mod M injective
// over the pairs. `Wide` selects 128-bit products for M >= 2^31.
template <bool Wide>
std::optional<std::int64_t> smallest_separating_z(
    std::vector<std::pair<std::int64_t, std::int64_t>> pairs,
    std::int64_t M, std::vector<std::uint32_t>& stamp, std::uint32_t& epoch) {
  const auto m = static_cast<std::uint64_t>(M);
  for (auto& p : pairs) p.second = mod_floor(p.second, M);
  for (std::int64_t z = 0; z < M; ++z) {
    if (++epoch == 0) {
      std::fill(stamp.begin(), stamp.end(), 0);
      epoch = 1;
    }
    bool ok = true;
    for (const auto& [r, k] : pairs) {
      std::uint64_t v;
      if constexpr (Wide) {
        v = (static_cast<std::uint64_t>(r) +
             mul_mod(static_cast<std::uint64_t>(k), static_cast<std::uint64_t>(z), m)) % m;
      } else {
        v = (static_cast<std::uint64_t>(r) +
             static_cast<std::uint64_t>(k) * static_cast<std::uint64_t>(z)) % m;
      }
      if (stamp[v] == epoch) {
        ok = false;
        break;
      }
      stamp[v] = epoch;
    }
    if (ok) return z;
  }
  return std::nullopt;
}

// Same result as smallest_separating_z for prime M, found by two interleaved
// strategies. Every pair of points (r_p, a_p), (r_q, a_q) with a_p != a_q
// collides for exactly one z = (r_q - r_p) / (a_p - a_q) mod M, so adding
// points one at a time marks z values as certainly bad. The smallest unmarked
// z is checked directly against all points. Marking gets four times the work
// budget of checking; once every point is added the unmarked z are exactly the
// separating ones.
class PrimeSeparator {
 public:
  PrimeSeparator(const std::vector<std::pair<std::int64_t, std::int64_t>>& points,
                 std::int64_t M)
      : points_(points), M_(static_cast<std::uint64_t>(M)), mod_(M_),
        bad_((static_cast<std::size_t>(M) + 63) / 64, 0) {
    std::int64_t max_a = 0;
    for (const auto& p : points_) max_a = std::max(max_a, std::abs(p.second));
    offset_ = 2 * max_a;
    inverse_.assign(static_cast<std::size_t>(2 * offset_ + 1), 0);
    for (std::int64_t delta = -offset_; delta <= offset_; ++delta) {
      const auto v = static_cast<std::uint64_t>(mod_floor(delta, M));
      inverse_[static_cast<std::size_t>(delta + offset_)] =
          v == 0 ? 0 : pow_mod(v, M_ - 2, M_);
    }
    a_mod_.reserve(points_.size());
    for (const auto& p : points_) {
      a_mod_.push_back(static_cast<std::uint64_t>(mod_floor(p.second, M)));
    }
    // Points far apart in the input tend to collide for different z, so a
    // spread-out order marks more of Z_M early.
    order_.resize(points_.size());
    for (std::size_t i = 0; i < order_.size(); ++i) order_[i] = i;
    std::mt19937_64 rng(0x9e3779b97f4a7c15ULL);
    std::shuffle(order_.begin(), order_.end(), rng);
  }

  std::optional<std::int64_t> run() {
    const std::size_t n = points_.size();
    std::size_t added = 0;
    std::uint64_t mark_work = 0;
    std::uint64_t check_work = 0;
    std::uint64_t lo = 0;
    while (true) {
      if (failed_) return std::nullopt;
      lo = next_unmarked(lo);
      if (lo == M_) return std::nullopt;
      if (added < n && mark_work <= 4 * check_work) {
        add_point(order_[added], added);
        mark_work += added + 1;
        ++added;
        continue;
      }
      std::uint64_t steps = 0;
      if (separates(lo, steps)) return static_cast<std::int64_t>(lo);
      check_work += steps;
      mark(lo);
    }
  }

 private:
  bool marked(std::uint64_t z) const { return (bad_[z >> 6] >> (z & 63)) & 1; }
  void mark(std::uint64_t z) { bad_[z >> 6] |= std::uint64_t{1} << (z & 63); }

  std::uint64_t next_unmarked(std::uint64_t z) const {
    while (z < M_) {
      const std::uint64_t word = ~bad_[z >> 6] >> (z & 63);
      if (word) return std::min(M_, z + static_cast<std::uint64_t>(std::countr_zero(word)));
      z = (z | 63) + 1;
    }
    return M_;
  }

  // Marks the z for which point p collides with one of the first `count`
  // points of the order.
  void add_point(std::size_t p, std::size_t count) {
    const auto [rp, ap] = points_[p];
    for (std::size_t t = 0; t < count; ++t) {
      const auto [rq, aq] = points_[order_[t]];
      if (aq == ap) continue;  // distinct residues, never collide
      const std::uint64_t inv = inverse_[static_cast<std::size_t>(ap - aq + offset_)];
      std::int64_t diff = rq - rp;
      if (diff < 0) diff += static_cast<std::int64_t>(M_);
      const auto dr = static_cast<std::uint64_t>(diff);
      if (inv == 0) {
        // a_p = a_q mod M: equal residues for every z or for none.
        if (dr == 0) failed_ = true;
        continue;
      }
      mark(mod_.mul(dr, inv));
    }
  }

  bool separates(std::uint64_t z, std::uint64_t& steps) {
    if (stamp_.empty()) stamp_.assign(static_cast<std::size_t>(M_), 0);
    if (++epoch_ == 0) {
      std::fill(stamp_.begin(), stamp_.end(), 0);
      epoch_ = 1;
    }
    for (std::size_t i : order_) {
      ++steps;
      std::uint64_t v = static_cast<std::uint64_t>(points_[i].first) +
                        mod_.mul(a_mod_[i], z);
      if (v >= M_) v -= M_;
      if (stamp_[v] == epoch_) return false;
      stamp_[v] = epoch_;
    }
    return true;
  }

  const std::vector<std::pair<std::int64_t, std::int64_t>>& points_;
  std::uint64_t M_;
  Modulus mod_;
  std::vector<std::uint64_t> bad_;
  std::int64_t offset_ = 0;
  std::vector<std::uint64_t> inverse_;
  std::vector<std::uint64_t> a_mod_;
  std::vector<std::size_t> order_;
  std::vector<std::uint32_t> stamp_;
  std::uint32_t epoch_ = 0;
  bool failed_ = false;
};

}  // namespace

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n % p == 0) return n == p;
  }
  const auto u = static_cast<std::uint64_t>(n);
  std::uint64_t d = u - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // Deterministic witness set for 64-bit integers.
  for (std::uint64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    std::uint64_t x = pow_mod(a, d, u);
    if (x == 1 || x == u - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = mul_mod(x, x, u);
      if (x == u - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::int64_t next_prime(std::int64_t n) {
  if (n <= 2) return 2;
  if (n % 2 == 0) ++n;
  while (!is_prime(n)) n += 2;
  return n;
}

std::int64_t hyperbolic_cross_size_lower_bound(double R) {
  const auto fl = static_cast<int>(std::floor(R));
  if (fl < 1) return 1;
  if (2 * fl - 2 > 62) return std::numeric_limits<std::int64_t>::max();
  return std::int64_t{1} << (2 * fl - 2);
}

std::int64_t default_cbc_ceiling(const FrequencyIndexSet& I) {
  if (const auto* hc = std::get_if<HyperbolicCross>(&I.spec()); hc && hc->d == 2) {
    const double c = std::floor(std::pow(2.0, 2.0 * hc->R + 3.0));
    return static_cast<std::int64_t>(std::min(c, static_cast<double>(kMaxLatticeSize)));
  }
  const double n = static_cast<double>(I.size());
  const double span = 2.0 * (2.0 * static_cast<double>(I.max_abs_component()) + 1.0);
  return static_cast<std::int64_t>(
      std::min(std::max(n * n, span), static_cast<double>(kMaxLatticeSize)));
}

CandidateSizes::CandidateSizes(const FrequencyIndexSet& I,
                               const CbcOptions& options)
    : prime_only_(options.prime_only), growth_(options.growth) {
  if (I.empty()) throw std::invalid_argument("CBC: empty index set");
  if (!(options.growth >= 0.0)) throw std::invalid_argument("CBC: growth must be >= 0");
  if (!(options.ceiling_multiplier > 0.0)) {
    throw std::invalid_argument("CBC: ceiling multiplier must be positive");
  }
  std::int64_t start = static_cast<std::int64_t>(I.size());
  if (const auto* hc = std::get_if<HyperbolicCross>(&I.spec())) {
    start = std::max(start, hyperbolic_cross_size_lower_bound(hc->R));
  }
  start_ = admissible_at_or_after(std::max<std::int64_t>(start, 1));
  const std::int64_t base =
      options.ceiling > 0 ? options.ceiling : default_cbc_ceiling(I);
  ceiling_ = static_cast<std::int64_t>(std::min(
      std::floor(static_cast<double>(base) * options.ceiling_multiplier),
      static_cast<double>(kMaxLatticeSize)));
}

std::int64_t CandidateSizes::admissible_at_or_after(std::int64_t n) const {
  return prime_only_ ? next_prime(n) : n;
}

std::optional<std::int64_t> CandidateSizes::next() {
  std::int64_t candidate;
  if (yielded_ == 0) {
    candidate = start_;
  } else {
    const double grown = std::ceil(static_cast<double>(last_) * (1.0 + growth_));
    const std::int64_t at_least =
        std::max(last_ + 1, static_cast<std::int64_t>(
                                std::min(grown, static_cast<double>(kMaxLatticeSize) + 1)));
    candidate = admissible_at_or_after(at_least);
  }
  if (candidate > ceiling_) return std::nullopt;
  last_ = candidate;
  ++yielded_;
  return candidate;
}

std::optional<std::vector<std::int64_t>> cbc_generator(const FrequencyIndexSet& I,
                                                       std::int64_t M) {
  if (I.empty()) throw std::invalid_argument("CBC: empty index set");
  if (M < 1) throw std::invalid_argument("CBC: M must be >= 1");
  const int d = I.dim();
  const std::size_t n = I.size();
  if (static_cast<std::int64_t>(n) > M) return std::nullopt;

  std::vector<std::int64_t> z(static_cast<std::size_t>(d), 0);
  z[0] = 1 % M;
  // Residues of the current projections. Distinct projections have distinct
  // residues, so a residue identifies its projection.
  std::vector<std::int64_t> r(n);
  for (std::size_t i = 0; i < n; ++i) r[i] = mod_floor(I[i][0], M);
  {
    std::vector<std::pair<std::int64_t, std::int64_t>> firsts;
    firsts.reserve(n);
    for (std::size_t i = 0; i < n; ++i) firsts.emplace_back(I[i][0], r[i]);
    std::sort(firsts.begin(), firsts.end());
    firsts.erase(std::unique(firsts.begin(), firsts.end()), firsts.end());
    std::vector<std::int64_t> res;
    res.reserve(firsts.size());
    for (const auto& f : firsts) res.push_back(f.second);
    std::sort(res.begin(), res.end());
    if (std::adjacent_find(res.begin(), res.end()) != res.end()) return std::nullopt;
  }

  const bool prime = is_prime(M);
  std::vector<std::uint32_t> stamp(prime ? 0 : static_cast<std::size_t>(M), 0);
  std::uint32_t epoch = 0;
  std::vector<std::pair<std::int64_t, std::int64_t>> pairs;
  pairs.reserve(n);
  for (int s = 1; s < d; ++s) {
    pairs.clear();
    for (std::size_t i = 0; i < n; ++i) {
      pairs.emplace_back(r[i], I[i][s]);
    }
    std::sort(pairs.begin(), pairs.end());
    pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());

    std::optional<std::int64_t> zs;
    if (prime) {
      zs = PrimeSeparator(pairs, M).run();
    } else if (M < (std::int64_t{1} << 31)) {
      zs = smallest_separating_z<false>(pairs, M, stamp, epoch);
    } else {
      zs = smallest_separating_z<true>(pairs, M, stamp, epoch);
    }
    if (!zs) return std::nullopt;
    z[static_cast<std::size_t>(s)] = *zs;
    for (std::size_t i = 0; i < n; ++i) {
      const auto k = static_cast<unsigned __int128>(mod_floor(I[i][s], M));
      r[i] = static_cast<std::int64_t>(
          (static_cast<unsigned __int128>(r[i]) + k * static_cast<std::uint64_t>(*zs)) %
          static_cast<std::uint64_t>(M));
    }
  }
  return z;
}

Rank1Lattice cbc_construct(const FrequencyIndexSet& I, const CbcOptions& options) {
  CandidateSizes sizes(I, options);
  while (const auto M = sizes.next()) {
    if (auto z = cbc_generator(I, *M)) {
      Rank1Lattice L(std::move(*z), *M);
      if (!is_reconstructing(L, I)) {
        throw std::logic_error("CBC produced a non-reconstructing lattice " +
                               to_string(L));
      }
      return L;
    }
  }
  throw CandidateExhausted(sizes.ceiling(), sizes.yielded());
}

}  // namespace rank1
