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

#include "rank1/lattice.hpp"

#include <algorithm>
#include <charconv>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace rank1 {
namespace {

std::int64_t mod_floor(__int128 v, std::int64_t m) {
  __int128 r = v % m;
  if (r < 0) r += m;
  return static_cast<std::int64_t>(r);
}

void check_dims(const Rank1Lattice& L, std::size_t n) {
  if (static_cast<int>(n) != L.dim()) {
    throw std::invalid_argument("frequency dimension " + std::to_string(n) +
                                " does not match lattice dimension " +
                                std::to_string(L.dim()));
  }
}

}  // namespace

Rank1Lattice::Rank1Lattice(std::vector<std::int64_t> z, std::int64_t M)
    : z_(std::move(z)), M_(M) {
  if (z_.empty()) throw std::invalid_argument("lattice: empty generating vector");
  if (static_cast<int>(z_.size()) > kMaxDim) {
    throw std::invalid_argument("lattice: dimension exceeds 16");
  }
  if (M_ < 1) throw std::invalid_argument("lattice: M must be >= 1");
  for (auto v : z_) {
    if (v > kMaxComponent || v < -kMaxComponent) {
      throw std::invalid_argument("lattice: generator entry exceeds 2^31");
    }
  }
}

void Rank1Lattice::node(std::int64_t j, std::span<double> out) const {
  const auto m = static_cast<double>(M_);
  for (std::size_t s = 0; s < z_.size(); ++s) {
    out[s] = static_cast<double>(mod_floor(static_cast<__int128>(j) * z_[s], M_)) / m;
  }
}

std::vector<double> lattice_nodes(const Rank1Lattice& L) {
  const auto d = static_cast<std::size_t>(L.dim());
  std::vector<double> nodes(static_cast<std::size_t>(L.size()) * d);
  for (std::int64_t j = 0; j < L.size(); ++j) {
    L.node(j, std::span<double>(nodes.data() + static_cast<std::size_t>(j) * d, d));
  }
  return nodes;
}

std::int64_t residue(const Rank1Lattice& L, FrequencyView k) {
  check_dims(L, k.size());
  const auto& z = L.generator();
  __int128 acc = 0;
  for (std::size_t s = 0; s < k.size(); ++s) {
    if (k[s] > kMaxComponent || k[s] < -kMaxComponent) {
      throw std::invalid_argument("residue: frequency component exceeds 2^31");
    }
    acc += static_cast<__int128>(k[s]) * z[s];
  }
  return mod_floor(acc, L.size());
}

std::vector<std::int64_t> residues(const Rank1Lattice& L,
                                   const FrequencyIndexSet& I) {
  check_dims(L, static_cast<std::size_t>(I.dim()));
  std::vector<std::int64_t> r(I.size());
  for (std::size_t i = 0; i < I.size(); ++i) r[i] = residue(L, I[i]);
  return r;
}

bool is_reconstructing(const Rank1Lattice& L, const FrequencyIndexSet& I) {
  check_dims(L, static_cast<std::size_t>(I.dim()));
  if (static_cast<std::int64_t>(I.size()) > L.size()) return false;
  auto r = residues(L, I);
  // Dense bitmap when M is comparable to |I|, otherwise sort.
  if (L.size() <= std::max<std::int64_t>(64 * static_cast<std::int64_t>(I.size()), 1 << 20)) {
    std::vector<bool> seen(static_cast<std::size_t>(L.size()));
    for (auto v : r) {
      if (seen[static_cast<std::size_t>(v)]) return false;
      seen[static_cast<std::size_t>(v)] = true;
    }
    return true;
  }
  std::sort(r.begin(), r.end());
  return std::adjacent_find(r.begin(), r.end()) == r.end();
}

bool dual_contains(const Rank1Lattice& L, FrequencyView h) {
  return residue(L, h) == 0;
}

std::int64_t IntegerBox::point_count() const {
  __int128 n = 1;
  for (const auto& [lo, hi] : bounds) {
    if (hi < lo) return 0;
    n *= static_cast<__int128>(hi) - lo + 1;
    if (n > std::numeric_limits<std::int64_t>::max()) {
      return std::numeric_limits<std::int64_t>::max();
    }
  }
  return static_cast<std::int64_t>(n);
}

double IntegerBox::volume() const {
  double v = 1.0;
  for (const auto& [lo, hi] : bounds) v *= static_cast<double>(hi - lo);
  return v;
}

std::vector<Frequency> dual_points_in_box(const Rank1Lattice& L,
                                          const IntegerBox& box,
                                          std::int64_t budget) {
  check_dims(L, box.bounds.size());
  const std::int64_t count = box.point_count();
  if (count > budget) {
    throw std::length_error("dual_points_in_box: box has " +
                            std::to_string(count) +
                            " points, exceeding the enumeration budget");
  }
  std::vector<Frequency> out;
  if (count == 0) return out;
  const int d = L.dim();
  const auto& z = L.generator();
  const std::int64_t M = L.size();
  Frequency h(static_cast<std::size_t>(d));
  for (int s = 0; s < d; ++s) h[s] = box.bounds[s].first;
  // Odometer over the box, maintaining the running residue incrementally.
  std::int64_t r = residue(L, h);
  std::vector<std::int64_t> step(static_cast<std::size_t>(d));
  for (int s = 0; s < d; ++s) step[s] = mod_floor(z[s], M);
  while (true) {
    if (r == 0) out.push_back(h);
    int s = d - 1;
    while (s >= 0) {
      if (h[s] < box.bounds[s].second) {
        ++h[s];
        r += step[s];
        if (r >= M) r -= M;
        break;
      }
      // Wrap this coordinate back to its lower bound.
      const __int128 span = static_cast<__int128>(h[s]) - box.bounds[s].first;
      r = mod_floor(static_cast<__int128>(r) - span * step[s], M);
      h[s] = box.bounds[s].first;
      --s;
    }
    if (s < 0) break;
  }
  return out;
}

std::int64_t fibonacci_number(int n) {
  if (n < 0 || n > 90) {
    throw std::invalid_argument("fibonacci_number: n must lie in [0, 90]");
  }
  std::int64_t a = 1;
  std::int64_t b = 1;
  for (int i = 2; i <= n; ++i) {
    const std::int64_t c = a + b;
    a = b;
    b = c;
  }
  return b;
}

Rank1Lattice fibonacci_lattice(int n) {
  if (n < 2 || n > 90) {
    throw std::invalid_argument("fibonacci_lattice: n must lie in [2, 90]");
  }
  const std::int64_t prev = fibonacci_number(n - 1);
  if (prev > kMaxComponent) {
    throw std::invalid_argument("fibonacci_lattice: b_{n-1} exceeds 2^31");
  }
  return Rank1Lattice({1, prev}, fibonacci_number(n));
}

Rank1Lattice korobov_lattice_2d(int R) {
  if (R < 0 || R > 30) {
    throw std::invalid_argument("korobov_lattice_2d: R must lie in [0, 30]");
  }
  auto ceil_div = [](std::int64_t a, std::int64_t b) { return (a + b - 1) / b; };
  const std::int64_t p = std::int64_t{1} << R;
  // 3 * 2^{R-2} = 3p/4 and (1 + 3p/4) * p/2 = (4 + 3p) p / 8.
  const std::int64_t z2 = ceil_div(3 * p, 4);
  const std::int64_t M = ceil_div((4 + 3 * p) * p, 8);
  return Rank1Lattice({1, z2}, M);
}

std::string to_string(const Rank1Lattice& L) {
  std::string s = std::to_string(L.size()) + '\t';
  for (int i = 0; i < L.dim(); ++i) {
    if (i) s += ';';
    s += std::to_string(L.generator()[i]);
  }
  return s;
}

void write_lattice(std::ostream& out, const Rank1Lattice& L) {
  out << to_string(L) << '\n';
}

namespace {

std::int64_t parse_int(const std::string& text, const char* what) {
  std::int64_t v = 0;
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, v);
  if (ec != std::errc() || ptr != end) {
    throw std::runtime_error(std::string("lattice: bad ") + what + " '" + text + "'");
  }
  return v;
}

}  // namespace

Rank1Lattice parse_lattice(const std::string& line) {
  const auto tab = line.find('\t');
  if (tab == std::string::npos) {
    throw std::runtime_error("lattice: expected 'M<TAB>z_1;...;z_d'");
  }
  const std::int64_t M = parse_int(line.substr(0, tab), "size");
  std::vector<std::int64_t> z;
  std::istringstream zs(line.substr(tab + 1));
  std::string item;
  while (std::getline(zs, item, ';')) z.push_back(parse_int(item, "generator entry"));
  return Rank1Lattice(std::move(z), M);
}

Rank1Lattice read_lattice(std::istream& in) {
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line[0] != '#') return parse_lattice(line);
  }
  throw std::runtime_error("lattice: no lattice line found");
}

}  // namespace rank1
