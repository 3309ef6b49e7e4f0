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

#include "rank1/experiment.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>

#include "rank1/kink.hpp"
#include "rank1/spectral.hpp"

namespace rank1 {
namespace {

CbcOptions sweep_cbc_options(const SweepConfig& config) {
  CbcOptions o = config.cbc;
  o.ceiling = o.ceiling > 0 ? std::min(o.ceiling, config.max_M) : config.max_M;
  o.ceiling_multiplier = 1.0;
  return o;
}

// Index set a CBC sweep constructs its lattice for at refinement R.
FrequencyIndexSet cbc_target_set(const SweepConfig& config, int R) {
  switch (config.set) {
    case SetKind::kHct:
      return hyperbolic_cross(config.d, config.T, R);
    case SetKind::kAniso:
      return anisotropic_cross(config.alpha, R);
    case SetKind::kDyadic:
    case SetKind::kLinf:
    case SetKind::kGrid:
      return dyadic_cross(config.set == SetKind::kDyadic ? config.d : 2, R);
  }
  throw std::logic_error("unknown set kind");
}

// Largest integer refinement r >= 0 for which `make(r)` is reconstructed by L,
// scanning upward. Relies on the sets being nested in r.
template <class Make>
std::optional<int> largest_level(const Rank1Lattice& L, Make make) {
  std::optional<int> best;
  for (int r = 0; r <= 40; ++r) {
    const auto I = make(r);
    if (static_cast<std::int64_t>(I.size()) > L.size() || !is_reconstructing(L, I)) {
      break;
    }
    best = r;
  }
  return best;
}

}  // namespace

std::string to_string(LatticeFamily f) {
  switch (f) {
    case LatticeFamily::kCbc:
      return "cbc";
    case LatticeFamily::kFibonacci:
      return "fibonacci";
    case LatticeFamily::kKorobov:
      return "korobov";
  }
  return "unknown";
}

std::string to_string(SetKind k) {
  switch (k) {
    case SetKind::kDyadic:
      return "hc";
    case SetKind::kHct:
      return "hct";
    case SetKind::kLinf:
      return "linf";
    case SetKind::kGrid:
      return "grid";
    case SetKind::kAniso:
      return "aniso";
  }
  return "unknown";
}

LatticeFamily parse_family(const std::string& s) {
  if (s == "cbc") return LatticeFamily::kCbc;
  if (s == "fibonacci") return LatticeFamily::kFibonacci;
  if (s == "korobov") return LatticeFamily::kKorobov;
  throw std::invalid_argument("unknown lattice family '" + s + "'");
}

SetKind parse_set_kind(const std::string& s) {
  if (s == "hc") return SetKind::kDyadic;
  if (s == "hct") return SetKind::kHct;
  if (s == "linf") return SetKind::kLinf;
  if (s == "grid") return SetKind::kGrid;
  if (s == "aniso") return SetKind::kAniso;
  throw std::invalid_argument("unknown index set kind '" + s + "'");
}

double scaled_error_main(double err, std::int64_t M) {
  return err * std::pow(static_cast<double>(M), kKinkSmoothness / 2.0);
}

double scaled_error_log(double err, std::int64_t M, int d) {
  const double log_exp = -(d - 2) * kKinkSmoothness / 2.0 - (d - 1) / 2.0;
  return scaled_error_main(err, M) *
         std::pow(std::log(static_cast<double>(M)), log_exp);
}

ErrorReport kink_experiment_row(const std::string& family, const Rank1Lattice& L,
                                std::shared_ptr<const FrequencyIndexSet> I,
                                std::int64_t refinement) {
  if (!is_reconstructing(L, *I)) {
    throw std::runtime_error("lattice " + to_string(L) +
                             " does not reconstruct " + to_string(I->spec()));
  }
  const auto samples = sample_on_lattice(
      [](std::span<const double> x) { return Complex(kink_value(x)); }, L);
  const auto approx = reconstruct_coefficients(samples, I);
  ErrorReport row;
  row.family = family;
  row.index_set_spec = to_string(I->spec());
  row.d = L.dim();
  row.refinement = refinement;
  row.lattice = L;
  row.index_set_size = I->size();
  row.l2_error = kink_l2_error(approx);
  row.scaled_errors["main"] = scaled_error_main(row.l2_error, L.size());
  row.scaled_errors["log"] = scaled_error_log(row.l2_error, L.size(), L.dim());
  return row;
}

std::optional<int> largest_dyadic_level(const Rank1Lattice& L) {
  return largest_level(L, [&](int r) { return dyadic_cross(L.dim(), r); });
}

std::int64_t largest_linf_size(const Rank1Lattice& L) {
  if (L.dim() != 2) throw std::invalid_argument("largest_linf_size: d must be 2");
  // I_N^2 is nested in N and needs N^2 <= M.
  std::int64_t lo = 1;
  std::int64_t hi = isqrt(L.size());
  while (lo < hi) {
    const std::int64_t mid = lo + (hi - lo + 1) / 2;
    if (is_reconstructing(L, linf_ball_2d(mid))) {
      lo = mid;
    } else {
      hi = mid - 1;
    }
  }
  return lo;
}

int largest_grid_level(const Rank1Lattice& L) {
  if (L.dim() != 2) throw std::invalid_argument("largest_grid_level: d must be 2");
  int best = 0;
  for (int r = 1; r <= 30 && (std::int64_t{1} << (2 * r)) <= L.size(); ++r) {
    if (!is_reconstructing(L, tensor_grid_2d(r))) break;
    best = r;
  }
  return best;
}

std::vector<FamilyLattice> family_lattices(const SweepConfig& config) {
  std::vector<FamilyLattice> out;
  switch (config.family) {
    case LatticeFamily::kFibonacci:
      for (int n = 2; n <= 90 && fibonacci_number(n) <= config.max_M; ++n) {
        out.push_back({fibonacci_lattice(n), n});
      }
      break;
    case LatticeFamily::kKorobov:
      for (int R = std::max(config.r_min, 0); R <= std::min(config.r_max, 30); ++R) {
        auto L = korobov_lattice_2d(R);
        if (L.size() > config.max_M) break;
        out.push_back({std::move(L), R});
      }
      break;
    case LatticeFamily::kCbc: {
      const auto options = sweep_cbc_options(config);
      for (int R = std::max(config.r_min, 0); R <= config.r_max; ++R) {
        const auto I = cbc_target_set(config, R);
        if (static_cast<std::int64_t>(I.size()) > config.max_M) break;
        try {
          out.push_back({cbc_construct(I, options), R});
        } catch (const CandidateExhausted&) {
          break;
        }
      }
      break;
    }
  }
  return out;
}

std::vector<ErrorReport> run_sweep(const SweepConfig& config) {
  if (config.family != LatticeFamily::kCbc &&
      (config.set == SetKind::kDyadic || config.set == SetKind::kHct) &&
      config.d != 2) {
    throw std::invalid_argument("Fibonacci and Korobov lattices are two-dimensional");
  }
  const std::string family = to_string(config.family);
  std::vector<ErrorReport> rows;
  for (const auto& [L, parameter] : family_lattices(config)) {
    std::shared_ptr<const FrequencyIndexSet> I;
    std::int64_t refinement = 0;
    switch (config.set) {
      case SetKind::kDyadic:
        if (config.family == LatticeFamily::kCbc) {
          refinement = parameter;
          I = std::make_shared<const FrequencyIndexSet>(dyadic_cross(config.d, parameter));
        } else {
          const auto R = largest_dyadic_level(L);
          if (!R) continue;
          refinement = *R;
          I = std::make_shared<const FrequencyIndexSet>(dyadic_cross(2, *R));
        }
        break;
      case SetKind::kHct:
        if (config.family == LatticeFamily::kCbc) {
          refinement = parameter;
          I = std::make_shared<const FrequencyIndexSet>(
              hyperbolic_cross(config.d, config.T, parameter));
        } else {
          const auto R = largest_level(
              L, [&](int r) { return hyperbolic_cross(2, config.T, r); });
          if (!R) continue;
          refinement = *R;
          I = std::make_shared<const FrequencyIndexSet>(hyperbolic_cross(2, config.T, *R));
        }
        break;
      case SetKind::kAniso:
        if (config.family == LatticeFamily::kCbc) {
          refinement = parameter;
          I = std::make_shared<const FrequencyIndexSet>(
              anisotropic_cross(config.alpha, parameter));
        } else {
          const auto R = largest_level(
              L, [&](int r) { return anisotropic_cross(config.alpha, r); });
          if (!R) continue;
          refinement = *R;
          I = std::make_shared<const FrequencyIndexSet>(anisotropic_cross(config.alpha, *R));
        }
        break;
      case SetKind::kLinf: {
        refinement = largest_linf_size(L);
        I = std::make_shared<const FrequencyIndexSet>(linf_ball_2d(refinement));
        break;
      }
      case SetKind::kGrid: {
        const int R = largest_grid_level(L);
        if (R < 1) continue;
        refinement = R;
        I = std::make_shared<const FrequencyIndexSet>(tensor_grid_2d(R));
        break;
      }
    }
    rows.push_back(kink_experiment_row(family, L, std::move(I), refinement));
  }
  std::stable_sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) {
    return a.lattice.size() < b.lattice.size();
  });
  return rows;
}

bool is_figure_selector(const std::string& name) {
  for (const char* s : {"fig4a", "fig4b", "fig4c", "fig5a", "fig5b", "fig5c",
                        "fig8", "fig9"}) {
    if (name == s) return true;
  }
  return false;
}

std::vector<ErrorReport> run_figure(const std::string& selector,
                                    std::int64_t max_M, const CbcOptions& cbc) {
  if (!is_figure_selector(selector)) {
    throw std::invalid_argument("unknown figure selector '" + selector + "'");
  }
  SweepConfig base;
  base.max_M = max_M;
  base.cbc = cbc;
  std::vector<ErrorReport> rows;
  auto append = [&](LatticeFamily f, SetKind set, int d) {
    SweepConfig c = base;
    c.family = f;
    c.set = set;
    c.d = d;
    auto part = run_sweep(c);
    rows.insert(rows.end(), part.begin(), part.end());
  };
  if (selector == "fig4a" || selector == "fig8" || selector == "fig9") {
    const SetKind set = selector == "fig4a" ? SetKind::kDyadic : SetKind::kLinf;
    append(LatticeFamily::kCbc, set, 2);
    append(LatticeFamily::kFibonacci, set, 2);
    append(LatticeFamily::kKorobov, set, 2);
  } else {
    const int d = selector == "fig4b"   ? 3
                  : selector == "fig4c" ? 4
                  : selector == "fig5a" ? 5
                  : selector == "fig5b" ? 6
                                        : 7;
    append(LatticeFamily::kCbc, SetKind::kDyadic, d);
  }
  return rows;
}

void write_csv_header(std::ostream& out) {
  out << "family,d,R_or_N,M,z,l2_error,err_scaled_main,err_scaled_log\n";
}

void write_csv_row(std::ostream& out, const ErrorReport& row) {
  std::string z;
  for (int s = 0; s < row.lattice.dim(); ++s) {
    if (s) z += ';';
    z += std::to_string(row.lattice.generator()[s]);
  }
  auto fmt = [](double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6e", v);
    return std::string(buf);
  };
  auto scaled = [&](const char* key) {
    const auto it = row.scaled_errors.find(key);
    return it == row.scaled_errors.end() ? std::string("nan") : fmt(it->second);
  };
  out << row.family << ',' << row.d << ',' << row.refinement << ','
      << row.lattice.size() << ',' << z << ',' << fmt(row.l2_error) << ','
      << scaled("main") << ',' << scaled("log") << '\n';
}

}  // namespace rank1
