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

// rank1: build reconstructing lattices, run kink-function sweeps and run the
// property suites.

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "rank1/cbc.hpp"
#include "rank1/experiment.hpp"
#include "rank1/index_set.hpp"
#include "rank1/lattice.hpp"
#include "suites.hpp"

namespace {

using KeyValues = std::map<std::string, std::string>;

KeyValues parse_pairs(const std::string& flag, const std::vector<std::string>& tokens) {
  KeyValues kv;
  for (const auto& t : tokens) {
    const auto eq = t.find('=');
    if (eq == std::string::npos || eq == 0) {
      throw CLI::ValidationError(flag, "expected key=value, got '" + t + "'");
    }
    kv[t.substr(0, eq)] = t.substr(eq + 1);
  }
  return kv;
}

std::string take(KeyValues& kv, const std::string& flag, const std::string& key,
                 std::optional<std::string> fallback = std::nullopt) {
  const auto it = kv.find(key);
  if (it == kv.end()) {
    if (fallback) return *fallback;
    throw CLI::ValidationError(flag, "missing " + key + "=");
  }
  std::string v = it->second;
  kv.erase(it);
  return v;
}

void reject_leftovers(const KeyValues& kv, const std::string& flag) {
  if (!kv.empty()) {
    throw CLI::ValidationError(flag, "unknown key '" + kv.begin()->first + "'");
  }
}

std::vector<double> parse_reals(const std::string& s) {
  std::vector<double> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, s.find(';') != std::string::npos ? ';' : ',')) {
    out.push_back(std::stod(item));
  }
  return out;
}

// "a" or "a:b".
std::pair<std::int64_t, std::int64_t> parse_range(const std::string& s) {
  const auto colon = s.find(':');
  if (colon == std::string::npos) {
    const auto v = std::stoll(s);
    return {v, v};
  }
  return {std::stoll(s.substr(0, colon)), std::stoll(s.substr(colon + 1))};
}

struct BuildArgs {
  std::vector<std::string> hc, dyadic, linf, grid, aniso, fibonacci, korobov;
  std::string out;
  std::string index_set_out;
  double ceiling_multiplier = 1.0;
  std::int64_t ceiling = 0;
  double growth = rank1::CbcOptions{}.growth;
  bool no_prime_only = false;
};

int run_build(const BuildArgs& a) {
  using namespace rank1;
  CbcOptions options;
  options.ceiling = a.ceiling;
  options.ceiling_multiplier = a.ceiling_multiplier;
  options.growth = a.growth;
  options.prime_only = !a.no_prime_only;

  std::optional<FrequencyIndexSet> I;
  std::optional<Rank1Lattice> L;
  if (!a.hc.empty()) {
    auto kv = parse_pairs("--hc", a.hc);
    const int d = std::stoi(take(kv, "--hc", "d"));
    const double T = std::stod(take(kv, "--hc", "T", "0"));
    const double R = std::stod(take(kv, "--hc", "R"));
    reject_leftovers(kv, "--hc");
    I = hyperbolic_cross(d, T, R);
  } else if (!a.dyadic.empty()) {
    auto kv = parse_pairs("--dyadic", a.dyadic);
    const int d = std::stoi(take(kv, "--dyadic", "d"));
    const int R = std::stoi(take(kv, "--dyadic", "R"));
    reject_leftovers(kv, "--dyadic");
    I = dyadic_cross(d, R);
  } else if (!a.linf.empty()) {
    auto kv = parse_pairs("--linf", a.linf);
    const auto N = std::stoll(take(kv, "--linf", "N"));
    reject_leftovers(kv, "--linf");
    I = linf_ball_2d(N);
  } else if (!a.grid.empty()) {
    auto kv = parse_pairs("--grid", a.grid);
    const double R = std::stod(take(kv, "--grid", "R"));
    reject_leftovers(kv, "--grid");
    I = tensor_grid_2d(R);
  } else if (!a.aniso.empty()) {
    auto kv = parse_pairs("--aniso", a.aniso);
    const auto alpha = parse_reals(take(kv, "--aniso", "alpha"));
    const double R = std::stod(take(kv, "--aniso", "R"));
    reject_leftovers(kv, "--aniso");
    I = anisotropic_cross(alpha, R);
  } else if (!a.fibonacci.empty()) {
    auto kv = parse_pairs("--fibonacci", a.fibonacci);
    const int n = std::stoi(take(kv, "--fibonacci", "n"));
    reject_leftovers(kv, "--fibonacci");
    L = fibonacci_lattice(n);
  } else if (!a.korobov.empty()) {
    auto kv = parse_pairs("--korobov", a.korobov);
    const int R = std::stoi(take(kv, "--korobov", "R"));
    reject_leftovers(kv, "--korobov");
    L = korobov_lattice_2d(R);
  } else {
    throw CLI::ValidationError("build", "one index set or lattice family flag is required");
  }

  if (L) {
    // Closed-form lattices are reported against the largest dyadic cross
    // they reconstruct.
    const auto R = largest_dyadic_level(*L);
    I = dyadic_cross(L->dim(), R.value_or(0));
  } else {
    L = cbc_construct(*I, options);
  }
  const bool ok = is_reconstructing(*L, *I);

  std::printf("index set: %s\n", to_string(I->spec()).c_str());
  std::printf("|I| = %zu\n", I->size());
  std::printf("M = %lld\n", static_cast<long long>(L->size()));
  std::printf("z = %s\n", to_string(*L).substr(to_string(*L).find('\t') + 1).c_str());
  std::printf("oversampling M/|I| = %.4f\n",
              static_cast<double>(L->size()) / static_cast<double>(I->size()));
  std::printf("reconstructing: %s\n", ok ? "yes" : "no");

  if (!a.out.empty()) {
    std::ofstream f(a.out);
    if (!f) throw std::runtime_error("cannot write " + a.out);
    write_lattice(f, *L);
  } else {
    write_lattice(std::cout, *L);
  }
  if (!a.index_set_out.empty()) {
    std::ofstream f(a.index_set_out);
    if (!f) throw std::runtime_error("cannot write " + a.index_set_out);
    write_index_set(f, *I);
  }
  return ok ? 0 : 1;
}

struct ExperimentArgs {
  std::string figure;
  std::string family = "cbc";
  std::string set = "hc";
  int d = 2;
  double T = 0.0;
  std::string alpha;
  std::string R;
  std::string N;
  std::int64_t max_M = 1'000'000;
  double growth = rank1::CbcOptions{}.growth;
  std::string out;
};

int run_experiment(const ExperimentArgs& a) {
  using namespace rank1;
  CbcOptions cbc;
  cbc.growth = a.growth;
  std::vector<ErrorReport> rows;
  if (!a.figure.empty()) {
    rows = run_figure(a.figure, a.max_M, cbc);
  } else {
    SweepConfig c;
    c.family = parse_family(a.family);
    c.set = parse_set_kind(a.set);
    c.d = a.d;
    c.T = a.T;
    c.max_M = a.max_M;
    c.cbc = cbc;
    if (c.set == SetKind::kAniso) {
      if (a.alpha.empty()) throw CLI::ValidationError("--alpha", "required for --set aniso");
      c.alpha = parse_reals(a.alpha);
      c.d = static_cast<int>(c.alpha.size());
    }
    std::optional<std::pair<std::int64_t, std::int64_t>> keep;
    if (!a.R.empty()) {
      const auto [lo, hi] = parse_range(a.R);
      if (c.family != LatticeFamily::kFibonacci) {
        c.r_min = static_cast<int>(lo);
        c.r_max = static_cast<int>(hi);
      }
      if (c.set != SetKind::kLinf) keep = std::pair{lo, hi};
    }
    if (!a.N.empty() && c.set == SetKind::kLinf) keep = parse_range(a.N);
    rows = run_sweep(c);
    if (keep) {
      std::erase_if(rows, [&](const ErrorReport& r) {
        return r.refinement < keep->first || r.refinement > keep->second;
      });
    }
  }

  std::ofstream file;
  std::ostream* out = &std::cout;
  if (!a.out.empty()) {
    file.open(a.out);
    if (!file) throw std::runtime_error("cannot write " + a.out);
    out = &file;
  }
  write_csv_header(*out);
  for (const auto& r : rows) write_csv_row(*out, r);
  return 0;
}

int run_verify(const std::string& suite) {
  const auto result = rank1::suites::run_named_suite(suite);
  for (const auto& m : result.messages) std::printf("  failed: %s\n", m.c_str());
  std::printf("%s\n", rank1::suites::summary_line(result).c_str());
  return result.passed() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Rank-1 lattice construction, sampling and kink-function experiments"};
  app.require_subcommand(1);

  BuildArgs build;
  auto* b = app.add_subcommand("build", "Construct a reconstructing rank-1 lattice");
  auto kv_option = [&](const char* name, std::vector<std::string>& dst, const char* help) {
    return b->add_option(name, dst, help)->expected(1, 8);
  };
  auto* o_hc = kv_option("--hc", build.hc, "Hyperbolic cross H_R^{d,T}: d=<d> [T=<T>] R=<R>");
  auto* o_dy = kv_option("--dyadic", build.dyadic, "Half-open dyadic cross: d=<d> R=<R>");
  auto* o_li = kv_option("--linf", build.linf, "l_inf ball I_N^2: N=<N>");
  auto* o_gr = kv_option("--grid", build.grid, "Tensor grid G_R^2: R=<R>");
  auto* o_an = kv_option("--aniso", build.aniso, "Anisotropic cross: alpha=<a1;a2;...> R=<R>");
  auto* o_fi = kv_option("--fibonacci", build.fibonacci, "Fibonacci lattice: n=<n>");
  auto* o_ko = kv_option("--korobov", build.korobov, "Korobov lattice: R=<R>");
  for (auto* x : {o_hc, o_dy, o_li, o_gr, o_an, o_fi, o_ko}) {
    for (auto* y : {o_hc, o_dy, o_li, o_gr, o_an, o_fi, o_ko}) {
      if (x != y) x->excludes(y);
    }
  }
  b->add_option("--out", build.out, "Write the lattice here instead of standard output");
  b->add_option("--index-set-out", build.index_set_out, "Also write the index set");
  b->add_option("--ceiling", build.ceiling, "Largest candidate lattice size (default: by index set)");
  b->add_option("--ceiling-multiplier", build.ceiling_multiplier,
                "Scale the candidate ceiling")->check(CLI::PositiveNumber);
  b->add_option("--growth", build.growth,
                "Relative gap between successive candidate sizes (0: every prime)")
      ->check(CLI::NonNegativeNumber);
  b->add_flag("--no-prime-only", build.no_prime_only, "Allow composite lattice sizes");

  ExperimentArgs exp;
  auto* e = app.add_subcommand("experiment", "Kink-function sampling errors as CSV");
  e->add_option("--figure", exp.figure, "fig4a, fig4b, fig4c, fig5a, fig5b, fig5c, fig8 or fig9");
  e->add_option("--family", exp.family, "cbc, fibonacci or korobov")
      ->check(CLI::IsMember({"cbc", "fibonacci", "korobov"}));
  e->add_option("--set", exp.set, "hc, hct, linf, grid or aniso")
      ->check(CLI::IsMember({"hc", "hct", "linf", "grid", "aniso"}));
  e->add_option("--d", exp.d, "Dimension")->check(CLI::Range(1, 16));
  e->add_option("--T", exp.T, "Energy parameter of hct sets")->check(CLI::Range(0.0, 0.999999));
  e->add_option("--alpha", exp.alpha, "Anisotropy weights, ';' or ',' separated");
  e->add_option("--R", exp.R, "Refinement R or range Rmin:Rmax");
  e->add_option("--N", exp.N, "l_inf size N or range Nmin:Nmax (linf sets)");
  e->add_option("--max-M", exp.max_M, "Largest lattice size")->check(CLI::PositiveNumber);
  e->add_option("--growth", exp.growth, "CBC candidate growth")->check(CLI::NonNegativeNumber);
  e->add_option("--out", exp.out, "CSV path (default: standard output)");

  std::string suite;
  auto* v = app.add_subcommand("verify", "Run a property suite");
  v->add_option("suite", suite, "reconstruction, lower-bound, counting, fft or kink")
      ->required()
      ->check(CLI::IsMember({"reconstruction", "lower-bound", "counting", "fft", "kink"}));

  CLI11_PARSE(app, argc, argv);

  try {
    if (*b) return run_build(build);
    if (*e) return run_experiment(exp);
    if (*v) return run_verify(suite);
  } catch (const CLI::Error& err) {
    return app.exit(err);
  } catch (const rank1::CandidateExhausted& err) {
    std::fprintf(stderr, "rank1: %s\n", err.what());
    return 2;
  } catch (const std::exception& err) {
    std::fprintf(stderr, "rank1: %s\n", err.what());
    return 1;
  }
  return 0;
}
