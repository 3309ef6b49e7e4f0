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

#include "rank1/fft.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace rank1 {
namespace {

bool is_pow2(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

Complex mul(Complex a, Complex b) {
  return {a.real() * b.real() - a.imag() * b.imag(),
          a.real() * b.imag() + a.imag() * b.real()};
}

int ilog2(std::size_t n) {
  int l = 0;
  while ((std::size_t{1} << l) < n) ++l;
  return l;
}

}  // namespace

void DftPlan::Radix2::run(std::span<Complex> a, bool inverse) const {
  if (n <= 1) return;
  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(a[i], a[j]);
  }
  // Plain real arithmetic: std::complex multiplication goes through the
  // NaN-recovering library routine unless -ffast-math is on.
  const double sign = inverse ? -1.0 : 1.0;
  for (std::size_t half = 1; half < n; half <<= 1) {
    const Complex* w = twiddle.data() + half;
    for (std::size_t i = 0; i < n; i += 2 * half) {
      Complex* lo = a.data() + i;
      Complex* hi = lo + half;
      for (std::size_t k = 0; k < half; ++k) {
        const double wr = w[k].real();
        const double wi = sign * w[k].imag();
        const double xr = hi[k].real();
        const double xi = hi[k].imag();
        const double tr = xr * wr - xi * wi;
        const double ti = xr * wi + xi * wr;
        const double ur = lo[k].real();
        const double ui = lo[k].imag();
        lo[k] = {ur + tr, ui + ti};
        hi[k] = {ur - tr, ui - ti};
      }
    }
  }
}

DftPlan::DftPlan(std::size_t n) : n_(n) {
  if (n == 0) throw std::invalid_argument("DftPlan: length must be >= 1");
  const std::size_t len = is_pow2(n) ? n : std::size_t{1} << ilog2(2 * n - 1);
  pow2_.n = len;
  pow2_.log2n = ilog2(len);
  pow2_.twiddle.resize(std::max<std::size_t>(len, 1));
  for (std::size_t half = 1; half < len; half <<= 1) {
    for (std::size_t k = 0; k < half; ++k) {
      const double angle = -std::numbers::pi * static_cast<double>(k) /
                           static_cast<double>(half);
      pow2_.twiddle[half + k] = {std::cos(angle), std::sin(angle)};
    }
  }
  if (is_pow2(n)) return;

  chirp_.resize(n);
  const auto two_n = static_cast<unsigned __int128>(2 * n);
  for (std::size_t j = 0; j < n; ++j) {
    // j^2 mod 2n keeps the phase argument small and exact.
    const auto q = static_cast<double>(static_cast<unsigned __int128>(j) * j % two_n);
    const double angle = -std::numbers::pi * q / static_cast<double>(n);
    chirp_[j] = {std::cos(angle), std::sin(angle)};
  }
  kernel_.assign(len, Complex{});
  kernel_[0] = std::conj(chirp_[0]);
  for (std::size_t j = 1; j < n; ++j) {
    kernel_[j] = std::conj(chirp_[j]);
    kernel_[len - j] = std::conj(chirp_[j]);
  }
  pow2_.run(kernel_, false);
}

void DftPlan::bluestein(std::span<Complex> data, bool inverse) const {
  const std::size_t len = pow2_.n;
  std::vector<Complex> work(len, Complex{});
  for (std::size_t j = 0; j < n_; ++j) {
    const Complex v = inverse ? std::conj(data[j]) : data[j];
    work[j] = mul(v, chirp_[j]);
  }
  pow2_.run(work, false);
  for (std::size_t k = 0; k < len; ++k) work[k] = mul(work[k], kernel_[k]);
  pow2_.run(work, true);
  const double scale = 1.0 / static_cast<double>(len);
  for (std::size_t m = 0; m < n_; ++m) {
    const Complex a = mul(work[m], chirp_[m]) * scale;
    data[m] = inverse ? std::conj(a) : a;
  }
}

void DftPlan::execute(std::span<Complex> data, Direction dir) const {
  if (data.size() != n_) {
    throw std::invalid_argument("DftPlan: data length does not match plan");
  }
  const bool inverse = dir == Direction::kInverse;
  if (is_pow2(n_)) {
    pow2_.run(data, inverse);
  } else {
    bluestein(data, inverse);
  }
  if (inverse) {
    const double scale = 1.0 / static_cast<double>(n_);
    for (auto& v : data) v *= scale;
  }
}

std::vector<Complex> dft_1d(std::span<const Complex> v, Direction dir) {
  std::vector<Complex> out(v.begin(), v.end());
  DftPlan(v.size()).execute(out, dir);
  return out;
}

}  // namespace rank1
