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

#ifndef RANK1_KINK_HPP_
#define RANK1_KINK_HPP_

#include <cstdint>
#include <span>

#include "rank1/index_set.hpp"

namespace rank1 {

/// Normalizing constant 5^{3/4} * 15 / (4 sqrt 3) of the kink factor.
double kink_scale();

/// Tensor-product kink function
///   g(x) = prod_t c * max(1/5 - (x_t - 1/2)^2, 0),
/// with unit L2 norm on the torus. The dimension is x.size().
double kink_value(std::span<const double> x);

/// Fourier coefficient of the one-dimensional factor.
///
/// With a = 1/sqrt 5 and w = 2 pi |k|,
///   h_0 = 4 c a^3 / 3 = 5^{1/4} / sqrt 3,
///   h_k = (-1)^k 4 c (sin(w a) - w a cos(w a)) / w^3.
/// For k != 0 we have w a >= 2 pi / sqrt 5 > 2.8, where sin and w a cos do not
/// cancel catastrophically, so the closed form is used as is.
double kink_coeff_1d(std::int64_t k);

/// prod_t kink_coeff_1d(k_t).
double kink_coeff(FrequencyView k);

}  // namespace rank1

#endif  // RANK1_KINK_HPP_
