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

#include "rank1/index_set.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <deque>
#include <functional>
#include <istream>
#include <limits>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace rank1 {
namespace {

constexpr int kMaxLevel = 40;
constexpr double kMembershipTol = 1e-12;

bool leq_tol(double lhs, double rhs) {
  return lhs <= rhs + kMembershipTol * std::max(1.0, std::abs(rhs));
}

std::string format_real(double v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

// Enumerates j in N_0^d accepted by a predicate that is monotone
// non-increasing in every component (if j is rejected, so is every j' >= j),
// and concatenates the products of the per-coordinate blocks.
std::vector<std::int64_t> union_of_blocks(
    int d, const std::function<bool(std::span<const int>)>& admit,
    const std::function<std::vector<std::int64_t>(int)>& block) {
  std::vector<std::int64_t> rows;
  std::deque<std::vector<std::int64_t>> cache;  // stable references on growth
  auto cached = [&](int level) -> const std::vector<std::int64_t>& {
    while (static_cast<int>(cache.size()) <= level) {
      cache.push_back(block(static_cast<int>(cache.size())));
    }
    return cache[static_cast<std::size_t>(level)];
  };
  std::vector<int> j(static_cast<std::size_t>(d), 0);
  std::vector<std::size_t> pos(static_cast<std::size_t>(d));
  std::vector<const std::vector<std::int64_t>*> blocks(static_cast<std::size_t>(d));

  auto expand = [&] {
    for (int s = 0; s < d; ++s) blocks[s] = &cached(j[s]);
    std::fill(pos.begin(), pos.end(), 0);
    while (true) {
      for (int s = 0; s < d; ++s) rows.push_back((*blocks[s])[pos[s]]);
      int s = d - 1;
      while (s >= 0 && ++pos[s] == blocks[s]->size()) pos[s--] = 0;
      if (s < 0) break;
    }
  };

  std::function<void(int)> recurse = [&](int s) {
    if (s == d) {
      expand();
      return;
    }
    for (int level = 0;; ++level) {
      if (level > kMaxLevel) {
        throw std::length_error("index set refinement too large");
      }
      j[s] = level;
      if (!admit(j)) break;
      recurse(s + 1);
    }
    j[s] = 0;
  };
  if (admit(j)) recurse(0);
  return rows;
}

}  // namespace

std::string to_string(const IndexSetSpec& spec) {
  struct Visitor {
    std::string operator()(const HyperbolicCross& s) const {
      return "hc(d=" + std::to_string(s.d) + ",T=" + format_real(s.T) +
             ",R=" + format_real(s.R) + ")";
    }
    std::string operator()(const DyadicCross& s) const {
      return "dyadic(d=" + std::to_string(s.d) + ",R=" + std::to_string(s.R) +
             ")";
    }
    std::string operator()(const AnisotropicCross& s) const {
      std::string a;
      for (std::size_t i = 0; i < s.alpha.size(); ++i) {
        if (i) a += ';';
        a += format_real(s.alpha[i]);
      }
      return "aniso(alpha=" + a + ",R=" + format_real(s.R) + ")";
    }
    std::string operator()(const LinfBall2D& s) const {
      return "linf(N=" + std::to_string(s.N) + ")";
    }
    std::string operator()(const TensorGrid2D& s) const {
      return "grid(R=" + format_real(s.R) + ")";
    }
    std::string operator()(const AxisCross& s) const {
      return "axis(d=" + std::to_string(s.d) + ",M=" + std::to_string(s.M) +
             ")";
    }
    std::string operator()(const Explicit&) const { return "explicit"; }
  };
  return std::visit(Visitor{}, spec);
}

FrequencyIndexSet::FrequencyIndexSet(int dim, std::vector<std::int64_t> rows,
                                     IndexSetSpec spec)
    : dim_(dim), spec_(std::move(spec)) {
  if (dim < 1) throw std::invalid_argument("index set dimension must be >= 1");
  const auto d = static_cast<std::size_t>(dim);
  if (rows.size() % d != 0) {
    throw std::invalid_argument("index set rows are not a multiple of dim");
  }
  const std::size_t n = rows.size() / d;
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  auto row = [&](std::size_t i) { return rows.begin() + static_cast<std::ptrdiff_t>(i * d); };
  auto less = [&](std::size_t a, std::size_t b) {
    return std::lexicographical_compare(row(a), row(a) + dim, row(b), row(b) + dim);
  };
  if (!std::is_sorted(order.begin(), order.end(), less)) {
    std::sort(order.begin(), order.end(), less);
  }
  data_.reserve(rows.size());
  for (std::size_t i = 0; i < n; ++i) {
    const auto r = row(order[i]);
    if (!data_.empty() &&
        std::equal(r, r + dim, data_.end() - dim, data_.end())) {
      continue;
    }
    data_.insert(data_.end(), r, r + dim);
  }
}

FrequencyIndexSet FrequencyIndexSet::from_frequencies(
    int dim, const std::vector<Frequency>& frequencies, IndexSetSpec spec) {
  std::vector<std::int64_t> rows;
  rows.reserve(frequencies.size() * static_cast<std::size_t>(std::max(dim, 0)));
  for (const auto& k : frequencies) {
    if (static_cast<int>(k.size()) != dim) {
      throw std::invalid_argument("frequency length does not match dim");
    }
    rows.insert(rows.end(), k.begin(), k.end());
  }
  return FrequencyIndexSet(dim, std::move(rows), std::move(spec));
}

std::optional<std::size_t> FrequencyIndexSet::find(FrequencyView k) const {
  if (static_cast<int>(k.size()) != dim_) return std::nullopt;
  std::size_t lo = 0;
  std::size_t hi = size();
  while (lo < hi) {
    const std::size_t mid = lo + (hi - lo) / 2;
    const auto row = (*this)[mid];
    if (std::lexicographical_compare(row.begin(), row.end(), k.begin(), k.end())) {
      lo = mid + 1;
    } else {
      hi = mid;
    }
  }
  if (lo < size() && std::ranges::equal((*this)[lo], k)) return lo;
  return std::nullopt;
}

std::int64_t FrequencyIndexSet::max_abs_component() const {
  std::int64_t m = 0;
  for (auto v : data_) m = std::max(m, v < 0 ? -v : v);
  return m;
}

std::vector<std::int64_t> dyadic_block(int j) {
  if (j < 0) throw std::invalid_argument("dyadic block level must be >= 0");
  if (j > 62) throw std::invalid_argument("dyadic block level too large");
  if (j == 0) return {-1, 0, 1};
  const std::int64_t hi = std::int64_t{1} << j;
  const std::int64_t lo = (std::int64_t{1} << (j - 1)) + 1;
  std::vector<std::int64_t> b;
  b.reserve(static_cast<std::size_t>(2 * (hi - lo + 1)));
  for (std::int64_t k = -hi; k <= -lo; ++k) b.push_back(k);
  for (std::int64_t k = lo; k <= hi; ++k) b.push_back(k);
  return b;
}

FrequencyIndexSet hyperbolic_cross(int d, double T, double R) {
  if (d < 1) throw std::invalid_argument("hyperbolic_cross: d must be >= 1");
  if (!(T >= 0.0 && T < 1.0)) {
    throw std::invalid_argument("hyperbolic_cross: T must lie in [0,1)");
  }
  if (!(R >= 0.0)) throw std::invalid_argument("hyperbolic_cross: R must be >= 0");
  const double rhs = (1.0 - T) * R + d - 1;
  auto admit = [&](std::span<const int> j) {
    int l1 = 0;
    int linf = 0;
    for (int v : j) {
      l1 += v;
      linf = std::max(linf, v);
    }
    return leq_tol(l1 - T * linf, rhs);
  };
  return FrequencyIndexSet(d, union_of_blocks(d, admit, dyadic_block),
                           HyperbolicCross{d, T, R});
}

FrequencyIndexSet dyadic_cross(int d, int R) {
  if (d < 1) throw std::invalid_argument("dyadic_cross: d must be >= 1");
  if (R < 0) throw std::invalid_argument("dyadic_cross: R must be >= 0");
  if (R > kMaxLevel) throw std::length_error("dyadic_cross: R too large");
  std::vector<std::int64_t> rows;
  // Since the half-open blocks are nested, k belongs to the cross iff the
  // sum of per-coordinate levels is at most R; walk that directly.
  std::vector<std::int64_t> k(static_cast<std::size_t>(d));
  std::function<void(int, int)> walk = [&](int s, int budget) {
    if (s == d) {
      rows.insert(rows.end(), k.begin(), k.end());
      return;
    }
    const std::int64_t h = budget == 0 ? 0 : std::int64_t{1} << (budget - 1);
    for (std::int64_t v = budget == 0 ? 0 : -h + 1; v <= h; ++v) {
      int level = 0;
      if (v != 0) {
        // Smallest l with v in (-2^{l-1}, 2^{l-1}].
        level = 1;
        while (!(v > -(std::int64_t{1} << (level - 1)) &&
                 v <= (std::int64_t{1} << (level - 1)))) {
          ++level;
        }
      }
      k[static_cast<std::size_t>(s)] = v;
      walk(s + 1, budget - level);
    }
  };
  walk(0, R);
  return FrequencyIndexSet(d, std::move(rows), DyadicCross{d, R});
}

FrequencyIndexSet anisotropic_cross(const std::vector<double>& alpha, double R) {
  if (alpha.empty()) throw std::invalid_argument("anisotropic_cross: empty alpha");
  for (double a : alpha) {
    if (!(a > 0.0)) {
      throw std::invalid_argument("anisotropic_cross: alpha must be positive");
    }
  }
  if (!(R >= 0.0)) throw std::invalid_argument("anisotropic_cross: R must be >= 0");
  const double amin = *std::min_element(alpha.begin(), alpha.end());
  const int d = static_cast<int>(alpha.size());
  auto admit = [&](std::span<const int> j) {
    double dot = 0.0;
    for (std::size_t s = 0; s < j.size(); ++s) dot += alpha[s] * j[s];
    return leq_tol(dot / amin, R);
  };
  return FrequencyIndexSet(d, union_of_blocks(d, admit, dyadic_block),
                           AnisotropicCross{alpha, R});
}

FrequencyIndexSet linf_ball_2d(std::int64_t N) {
  if (N < 1) throw std::invalid_argument("linf_ball_2d: N must be >= 1");
  // ceil((N-2)/2) and ceil((N-1)/2) for integer N >= 1.
  auto ceil_half = [](std::int64_t n) { return n >= 0 ? (n + 1) / 2 : -((-n) / 2); };
  const std::int64_t lo = -ceil_half(N - 2);
  const std::int64_t hi = ceil_half(N - 1);
  std::vector<std::int64_t> rows;
  rows.reserve(static_cast<std::size_t>(2 * N * N));
  for (std::int64_t a = lo; a <= hi; ++a) {
    for (std::int64_t b = lo; b <= hi; ++b) {
      rows.push_back(a);
      rows.push_back(b);
    }
  }
  return FrequencyIndexSet(2, std::move(rows), LinfBall2D{N});
}

FrequencyIndexSet tensor_grid_2d(double R) {
  if (!(R >= 1.0)) throw std::invalid_argument("tensor_grid_2d: R must be >= 1");
  const auto fl = static_cast<int>(std::floor(R));
  if (fl > 30) throw std::length_error("tensor_grid_2d: R too large");
  const std::int64_t h = std::int64_t{1} << (fl - 1);
  std::vector<std::int64_t> rows;
  rows.reserve(static_cast<std::size_t>(8 * h * h));
  for (std::int64_t a = -h + 1; a <= h; ++a) {
    for (std::int64_t b = -h + 1; b <= h; ++b) {
      rows.push_back(a);
      rows.push_back(b);
    }
  }
  return FrequencyIndexSet(2, std::move(rows), TensorGrid2D{R});
}

FrequencyIndexSet axis_cross(int d, std::int64_t M) {
  if (d < 2) throw std::invalid_argument("axis_cross: d must be >= 2");
  if (M < 1) throw std::invalid_argument("axis_cross: M must be >= 1");
  const std::int64_t r = isqrt(M);
  std::vector<std::int64_t> rows;
  auto push = [&](std::int64_t a, std::int64_t b) {
    rows.push_back(a);
    rows.push_back(b);
    for (int s = 2; s < d; ++s) rows.push_back(0);
  };
  push(0, 0);
  for (std::int64_t v = 1; v <= r; ++v) {
    push(v, 0);
    push(-v, 0);
    push(0, v);
    push(0, -v);
  }
  return FrequencyIndexSet(d, std::move(rows), AxisCross{d, M});
}

FrequencyIndexSet difference_set(const FrequencyIndexSet& I) {
  if (I.empty()) throw std::invalid_argument("difference_set: empty input");
  const int d = I.dim();
  std::vector<std::int64_t> rows;
  rows.reserve(I.size() * I.size() * static_cast<std::size_t>(d));
  for (std::size_t a = 0; a < I.size(); ++a) {
    const auto ka = I[a];
    for (std::size_t b = 0; b < I.size(); ++b) {
      const auto kb = I[b];
      for (int s = 0; s < d; ++s) rows.push_back(ka[s] - kb[s]);
    }
  }
  return FrequencyIndexSet(d, std::move(rows));
}

void write_index_set(std::ostream& out, const FrequencyIndexSet& I) {
  out << "# dim=" << I.dim() << " kind=" << to_string(I.spec()) << '\n';
  for (std::size_t i = 0; i < I.size(); ++i) {
    const auto k = I[i];
    for (int s = 0; s < I.dim(); ++s) {
      if (s) out << '\t';
      out << k[s];
    }
    out << '\n';
  }
}

FrequencyIndexSet read_index_set(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line.rfind("# dim=", 0) != 0) {
    throw std::runtime_error("index set: missing '# dim=' header");
  }
  int dim = 0;
  const char* first = line.data() + 6;
  const auto [ptr, ec] = std::from_chars(first, line.data() + line.size(), dim);
  if (ec != std::errc() || ptr == first || dim < 1) {
    throw std::runtime_error("index set: bad dimension in header");
  }
  std::vector<std::int64_t> rows;
  std::size_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::int64_t v = 0;
    int count = 0;
    while (ls >> v) {
      rows.push_back(v);
      ++count;
    }
    if (!ls.eof()) {
      throw std::runtime_error("index set: line " + std::to_string(lineno) +
                               " is not a list of integers");
    }
    if (count != dim) {
      throw std::runtime_error("index set: line " + std::to_string(lineno) +
                               " has " + std::to_string(count) +
                               " components, expected " + std::to_string(dim));
    }
  }
  return FrequencyIndexSet(dim, std::move(rows));
}

std::int64_t isqrt(std::int64_t n) {
  if (n < 0) throw std::invalid_argument("isqrt: negative argument");
  auto r = static_cast<std::int64_t>(std::sqrt(static_cast<double>(n)));
  while (r > 0 && static_cast<__int128>(r) * r > n) --r;
  while (static_cast<__int128>(r + 1) * (r + 1) <= n) ++r;
  return r;
}

}  // namespace rank1
