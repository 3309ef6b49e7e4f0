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

#ifndef RANK1_FFT_HPP_
#define RANK1_FFT_HPP_

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace rank1 {

using Complex = std::complex<double>;

enum class Direction { kForward, kInverse };

/// Discrete Fourier transform of arbitrary length.
///
/// forward: a_m = sum_j v_j exp(-2 pi i j m / n)
/// inverse: v_j = (1/n) sum_m a_m exp(+2 pi i j m / n)
///
/// Power-of-two lengths use an iterative radix-2 transform; every other
/// length goes through Bluestein's chirp-z embedding into a power-of-two
/// convolution of length >= 2n - 1. A plan caches twiddles and the chirp
/// kernel, so reusing it for many transforms of one length is cheap.
class DftPlan {
 public:
  explicit DftPlan(std::size_t n);

  std::size_t size() const { return n_; }

  /// In-place transform; `data.size()` must equal size().
  void execute(std::span<Complex> data, Direction dir) const;

 private:
  struct Radix2 {
    std::size_t n = 0;
    int log2n = 0;
    std::vector<Complex> twiddle;  // [h + k] = exp(-pi i k / h) for each stage h
    void run(std::span<Complex> data, bool inverse) const;
  };

  void bluestein(std::span<Complex> data, bool inverse) const;

  std::size_t n_;
  Radix2 pow2_;                  // length n_ (power of two) or the padded length
  std::vector<Complex> chirp_;   // exp(-pi i j^2 / n), j < n
  std::vector<Complex> kernel_;  // forward transform of the conjugate chirp
};

/// One-shot transform, returns a new vector.
std::vector<Complex> dft_1d(std::span<const Complex> v, Direction dir);

}  // namespace rank1

#endif  // RANK1_FFT_HPP_
