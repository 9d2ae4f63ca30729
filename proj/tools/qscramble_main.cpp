// Copyright 2026 The qscramble Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <limits>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "qscramble/dense.hpp"
#include "qscramble/errors.hpp"
#include "qscramble/fss.hpp"
#include "qscramble/models.hpp"
#include "qscramble/observables.hpp"
#include "qscramble/simulate.hpp"
#include "qscramble/sweep.hpp"

namespace {

using namespace qscramble;

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("cannot open " + path);
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw std::runtime_error("cannot write " + path);
  }
  out << content;
}

int cmd_sweep(const std::string& config_path, const std::string& out_path, int threads,
              bool pstar_only) {
  SweepConfig cfg = SweepConfig::parse(read_file(config_path));
  if (pstar_only) {
    cfg.obs_i3 = false;
    cfg.obs_pstar = true;
    cfg.obs_gates = true;
  }
  SweepResult result = run_sweep(cfg, threads);
  for (const auto& err : result.errors) {
    std::fprintf(stderr, "skipped grid point N=%u s=%g t=%u: %s\n", err.n, err.s, err.t,
                 err.message.c_str());
  }
  write_file(out_path, records_to_csv(result.records));
  std::printf("wrote %zu records to %s (%zu grid points skipped; entropies in bits)\n",
              result.records.size(), out_path.c_str(), result.errors.size());
  // Audit the normalization contract on the way out.
  for (const auto& rec : result.records) {
    if (rec.realizations >= 1000 && !std::isnan(rec.gates_per_qubit_mean) &&
        std::abs(rec.gates_per_qubit_mean - 1.0) > 0.05) {
      std::fprintf(stderr, "warning: gate budget off at N=%u s=%g t=%u: %.4f per qubit\n", rec.n,
                   rec.s, rec.t, rec.gates_per_qubit_mean);
    }
  }
  return 0;
}

int cmd_collapse(const std::string& in_path, const std::string& model_str, uint32_t t,
                 bool fix_zeta, int n_bootstrap, uint64_t seed, double window,
                 const std::string& out_path) {
  std::ifstream in(in_path);
  if (!in) {
    throw std::runtime_error("cannot open " + in_path);
  }
  const auto records = csv_to_records(in);
  const Model model = model_from_name(model_str);
  ScalingDataset data = dataset_from_records(records, model, t);
  data.validate();

  std::sort(data.series.begin(), data.series.end(),
            [](const ScalingSeries& a, const ScalingSeries& b) { return a.n < b.n; });

  // Seed s_c with the median pairwise crossing of the size-resolved curves.
  std::vector<double> crossings;
  for (size_t i = 0; i < data.series.size(); ++i) {
    for (size_t j = i + 1; j < data.series.size(); ++j) {
      crossings.push_back(crossing_estimate(data.series[i], data.series[j]));
    }
  }
  std::sort(crossings.begin(), crossings.end());

  CollapseOptions opts;
  opts.fix_zeta = fix_zeta;
  opts.n_bootstrap = n_bootstrap;
  opts.seed = seed;
  opts.init_sc = crossings[crossings.size() / 2];
  opts.init_nu = 2.0;
  opts.fit_window = window > 0 ? window : std::numeric_limits<double>::infinity();

  const CollapseFit fit = fit_collapse(data, opts);
  const ScalingDataset for_curve =
      window > 0 ? restrict_window(data, opts.init_sc, window) : data;
  const std::string report = format_fit_report(fit, master_curve(for_curve, fit));
  write_file(out_path, report);
  std::printf("crossing = %.6g, s_c = %.6g +- %.3g, nu = %.6g +- %.3g, quality = %.4g (%s)\n",
              opts.init_sc, fit.s_c, fit.sc_err, fit.nu, fit.nu_err, fit.quality,
              out_path.c_str());
  return 0;
}

int cmd_oracle_check(uint32_t n, uint32_t trials, uint64_t seed) {
  const Model models[] = {Model::WrAA, Model::PWR2, Model::Riffle};
  size_t checked = 0, mismatches = 0;
  for (Model model : models) {
    for (uint32_t trial = 0; trial < trials; ++trial) {
      RngStream base = RngStream::from_components({seed, static_cast<uint64_t>(model), n, trial});
      RngStream sched_rng = base.fork(1);
      RngStream init_rng = base.fork(2);
      const CircuitSchedule sched = build_schedule(model, n, -1.0, 1, sched_rng);

      Tableau tab = Tableau::make(n, InitState::RandomPauliProduct, init_rng);
      RngStream gates_a = base.fork(3);
      run_schedule(tab, sched, gates_a);

      RngStream init_rng2 = base.fork(2);
      DenseState dense =
          DenseState::pauli_product(Tableau::sample_pauli_product(n, init_rng2));
      RngStream gates_b = base.fork(3);
      run_schedule(dense, sched, gates_b);

      for (uint32_t mask = 0; mask < (1u << n); ++mask) {
        std::vector<uint32_t> region;
        for (uint32_t q = 0; q < n; ++q) {
          if ((mask >> q) & 1) {
            region.push_back(q);
          }
        }
        const int stab = tab.renyi2_entropy(region);
        const double dens = dense.renyi2_entropy(region);
        ++checked;
        if (std::abs(dens - stab) > 1e-6) {
          ++mismatches;
          std::fprintf(stderr, "mismatch: model=%s trial=%u mask=%u stab=%d dense=%.6f\n",
                       model_name(model), trial, mask, stab, dens);
        }
      }
    }
  }
  std::printf("oracle-check: %zu region entropies compared, %zu mismatches\n", checked,
              mismatches);
  return mismatches == 0 ? 0 : 1;
}

int cmd_calibrate(const std::string& model_str, uint32_t n, double s) {
  const Model model = model_from_name(model_str);
  if (model == Model::Riffle) {
    const RiffleNorm norm = riffle_norm(n, s);
    std::printf("J = %.12g%s\n", norm.j, norm.clipped ? " (clipped)" : "");
  } else {
    std::printf("J = %.12g\n", coupling_norm(model, n, s));
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Stabilizer-circuit toolkit for scrambling transitions in tunable-range circuits"};
  app.require_subcommand(1);

  std::string config_path, out_path, in_path, model_str = "wraa";
  int threads = 0;
  uint32_t t = 1, n = 8, trials = 200;
  bool fix_zeta = true;
  int n_bootstrap = 200;
  uint64_t seed = 1;
  double s = 0.0;
  double window = 0.0;

  auto* sweep = app.add_subcommand("sweep", "Run an ensemble sweep and write a CSV");
  sweep->add_option("--config", config_path, "flat key = value config file")->required();
  sweep->add_option("--out", out_path, "output CSV path")->required();
  sweep->add_option("--threads", threads, "worker threads (default: hardware)");

  auto* pstar = app.add_subcommand("pstar", "Sweep recording only the P* gate-crossing proxy");
  pstar->add_option("--config", config_path, "flat key = value config file")->required();
  pstar->add_option("--out", out_path, "output CSV path")->required();
  pstar->add_option("--threads", threads, "worker threads (default: hardware)");

  auto* collapse = app.add_subcommand("collapse", "Finite-size-scaling fit of a sweep CSV");
  collapse->add_option("--in", in_path, "input CSV from `sweep`")->required();
  collapse->add_option("--model", model_str, "wraa | pwr2 | riffle")->required();
  collapse->add_option("--t", t, "timestep to fit (default 1)");
  collapse->add_flag("--fix-zeta,!--no-fix-zeta", fix_zeta, "hold zeta = 0 (default on)");
  collapse->add_option("--bootstrap", n_bootstrap, "bootstrap resamples (default 200)");
  collapse->add_option("--seed", seed, "bootstrap seed");
  collapse->add_option("--window", window,
                       "fit window half-width in s around the crossing (0 = all points)");
  collapse->add_option("--out", out_path, "report path")->required();

  auto* oracle = app.add_subcommand("oracle-check", "Compare stabilizer vs dense entropies");
  oracle->add_option("--n", n, "qubits (<= 12)");
  oracle->add_option("--trials", trials, "schedules per model");
  oracle->add_option("--seed", seed, "base seed");

  auto* calibrate = app.add_subcommand("calibrate", "Print the coupling normalization J");
  calibrate->add_option("--model", model_str, "wraa | pwr2 | riffle")->required();
  calibrate->add_option("--n", n, "system size")->required();
  calibrate->add_option("--s", s, "power-law exponent")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*sweep) {
      return cmd_sweep(config_path, out_path, threads, false);
    }
    if (*pstar) {
      return cmd_sweep(config_path, out_path, threads, true);
    }
    if (*collapse) {
      return cmd_collapse(in_path, model_str, t, fix_zeta, n_bootstrap, seed, window, out_path);
    }
    if (*oracle) {
      return cmd_oracle_check(n, trials, seed);
    }
    if (*calibrate) {
      return cmd_calibrate(model_str, n, s);
    }
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 0;
}
