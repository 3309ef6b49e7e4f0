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

#include "rank1/kink.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace rank1 {

double kink_scale() {
  static const double c = std::pow(5.0, 0.75) * 15.0 / (4.0 * std::sqrt(3.0));
  return c;
}

double kink_value(std::span<const double> x) {
  const double c = kink_scale();
  double g = 1.0;
  for (double xt : x) {
    const double t = xt - 0.5;
    g *= c * std::max(0.2 - t * t, 0.0);
    if (g == 0.0) break;
  }
  return g;
}

double kink_coeff_1d(std::int64_t k) {
  const double c = kink_scale();
  const double a = 1.0 / std::sqrt(5.0);
  if (k == 0) return c * 4.0 * a * a * a / 3.0;
  const double w = 2.0 * std::numbers::pi * static_cast<double>(k < 0 ? -k : k);
  const double wa = w * a;
  const double sign = (k % 2 == 0) ? 1.0 : -1.0;
  return sign * c * 4.0 * (std::sin(wa) - wa * std::cos(wa)) / (w * w * w);
}

double kink_coeff(FrequencyView k) {
  double v = 1.0;
  for (auto kt : k) v *= kink_coeff_1d(kt);
  return v;
}

}  // namespace rank1
