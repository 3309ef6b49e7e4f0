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

#ifndef RANK1_ORACLE_HPP_
#define RANK1_ORACLE_HPP_

// Reference implementations that deliberately share no code path with the
// library routines they check. Slow by design; desk-scale inputs only.

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "rank1/fft.hpp"
#include "rank1/index_set.hpp"
#include "rank1/lattice.hpp"

namespace rank1::oracle {

/// O(n^2) DFT with the same sign and normalization conventions as dft_1d.
std::vector<Complex> naive_dft(std::span<const Complex> v, Direction dir);

/// Reconstruction via D(I) cap dual lattice = {0}, enumerating all pairs.
bool reconstructs_via_difference_set(const Rank1Lattice& L,
                                     const FrequencyIndexSet& I);

/// Q_j membership straight from the interval formula.
bool in_dyadic_block(std::int64_t k, int j);

/// Box enumeration plus membership predicate for H_R^{d,T}.
std::vector<Frequency> hyperbolic_cross_by_predicate(int d, double T, double R);
/// Same for H_R^{d,alpha}.
std::vector<Frequency> anisotropic_cross_by_predicate(
    const std::vector<double>& alpha, double R);
/// Same for the half-open dyadic cross.
std::vector<Frequency> dyadic_cross_by_predicate(int d, int R);

/// Smallest lattice size M <= max_M that reconstructs I, searching every
/// generating vector in Z_M^d. Exponential in d.
std::optional<Rank1Lattice> exhaustive_lattice_search(const FrequencyIndexSet& I,
                                                      std::int64_t max_M);

/// Adaptive Gauss-Kronrod quadrature of the 1D kink factor's k-th Fourier
/// coefficient.
double kink_coeff_quadrature(std::int64_t k);
/// Adaptive quadrature of the squared 1D kink factor over the torus.
double kink_norm2_quadrature();

}  // namespace rank1::oracle

#endif  // RANK1_ORACLE_HPP_
