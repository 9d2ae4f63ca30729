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

#include "qscramble/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <istream>
#include <map>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "qscramble/dense.hpp"
#include "qscramble/errors.hpp"
#include "qscramble/models.hpp"
#include "qscramble/simulate.hpp"

namespace qscramble {

namespace {

// Purpose tags for per-realization stream forks.
constexpr uint64_t kForkSchedule = 1;
constexpr uint64_t kForkInit = 2;
constexpr uint64_t kForkGates = 3;

std::string trim(std::string_view s) {
  size_t b = s.find_first_not_of(" \t\r");
  size_t e = s.find_last_not_of(" \t\r");
  if (b == std::string_view::npos) {
    return {};
  }
  return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> split_list(const std::string& value) {
  std::vector<std::string> out;
  size_t start = 0;
  while (start <= value.size()) {
    size_t comma = value.find(',', start);
    std::string item = trim(std::string_view(value).substr(
        start, comma == std::string::npos ? std::string::npos : comma - start));
    if (!item.empty()) {
      out.push_back(item);
    }
    if (comma == std::string::npos) {
      break;
    }
    start = comma + 1;
  }
  return out;
}

double number_from(const std::string& s) {
  double v{};
  auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (res.ec != std::errc{} || res.ptr != s.data() + s.size()) {
    throw ParseError("config: bad number '" + s + "'");
  }
  return v;
}

uint64_t integer_from(const std::string& s) {
  uint64_t v{};
  auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (res.ec != std::errc{} || res.ptr != s.data() + s.size()) {
    throw ParseError("config: bad integer '" + s + "'");
  }
  return v;
}

void append_g9(std::string& out, double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.9g", v);
  out += buf;
}

struct RealizationOutput {
  double i3 = 0.0;
  double pstar = 0.0;
  double gates = 0.0;
};

// Deterministic per-realization work item: schedule, state, observables.
RealizationOutput run_realization(const SweepConfig& cfg, uint32_t n, size_t s_index, uint32_t t,
                                  uint32_t realization, const RegionSpec& regions,
                                  Interval pstar_region) {
  RngStream base = RngStream::from_components({cfg.seed, static_cast<uint64_t>(cfg.model), n,
                                               static_cast<uint64_t>(s_index), t, realization});
  RngStream sched_rng = base.fork(kForkSchedule);
  RngStream init_rng = base.fork(kForkInit);
  RngStream gate_rng = base.fork(kForkGates);

  const CircuitSchedule sched =
      build_schedule(cfg.model, n, cfg.exponents[s_index], t, sched_rng);

  RealizationOutput out;
  out.gates = sched.gates_per_qubit_per_timestep();
  if (cfg.obs_pstar) {
    out.pstar = pstar_indicator(sched, pstar_region) ? 1.0 : 0.0;
  }
  if (cfg.obs_i3) {
    Tableau tab = Tableau::make(n, cfg.init_state, init_rng);
    run_schedule(tab, sched, gate_rng);
    out.i3 = static_cast<double>(tripartite_mi(tab, regions));
  }
  return out;
}

void mean_and_sem(const std::vector<double>& v, double* mean, double* sem) {
  const size_t n = v.size();
  double m = 0.0;
  for (double x : v) m += x;
  m /= static_cast<double>(n);
  double ss = 0.0;
  for (double x : v) ss += (x - m) * (x - m);
  *mean = m;
  *sem = n > 1 ? std::sqrt(ss / static_cast<double>(n - 1)) / std::sqrt(static_cast<double>(n))
               : 0.0;
}

}  // namespace

SweepConfig SweepConfig::parse(std::string_view text) {
  SweepConfig cfg;
  cfg.timesteps.clear();
  bool saw_observables = false;
  size_t line_no = 0;
  while (!text.empty()) {
    size_t nl = text.find('\n');
    std::string_view raw = text.substr(0, nl);
    text = (nl == std::string_view::npos) ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    if (size_t hash = raw.find('#'); hash != std::string_view::npos) {
      raw = raw.substr(0, hash);
    }
    const std::string line = trim(raw);
    if (line.empty()) {
      continue;
    }
    const size_t eq = line.find('=');
    if (eq == std::string::npos) {
      throw ParseError("config line " + std::to_string(line_no) + ": expected key = value");
    }
    const std::string key = trim(std::string_view(line).substr(0, eq));
    const std::string value = trim(std::string_view(line).substr(eq + 1));

    if (key == "model") {
      cfg.model = model_from_name(value);
    } else if (key == "sizes") {
      for (const auto& item : split_list(value)) {
        cfg.sizes.push_back(static_cast<uint32_t>(integer_from(item)));
      }
    } else if (key == "exponents") {
      for (const auto& item : split_list(value)) {
        cfg.exponents.push_back(number_from(item));
      }
    } else if (key == "timesteps") {
      for (const auto& item : split_list(value)) {
        cfg.timesteps.push_back(static_cast<uint32_t>(integer_from(item)));
      }
    } else if (key == "realizations") {
      cfg.realizations = static_cast<uint32_t>(integer_from(value));
    } else if (key == "seed") {
      cfg.seed = integer_from(value);
    } else if (key == "init_state") {
      if (value == "z_polarized") {
        cfg.init_state = InitState::ZPolarized;
      } else if (value == "random_product") {
        cfg.init_state = InitState::RandomPauliProduct;
      } else {
        throw ParseError("config: init_state must be z_polarized or random_product");
      }
    } else if (key == "region_layout") {
      if (value == "default") {
        cfg.region_layout.reset();
      } else if (value == "quarters") {
        cfg.region_layout = RegionLayout::QuartersFromZero;
      } else if (value == "bulk") {
        cfg.region_layout = RegionLayout::BulkOffset;
      } else {
        throw ParseError("config: region_layout must be default, quarters or bulk");
      }
    } else if (key == "observables") {
      saw_observables = true;
      cfg.obs_i3 = cfg.obs_pstar = cfg.obs_gates = false;
      for (const auto& item : split_list(value)) {
        if (item == "i3") {
          cfg.obs_i3 = true;
        } else if (item == "pstar") {
          cfg.obs_pstar = true;
        } else if (item == "gates") {
          cfg.obs_gates = true;
        } else {
          throw ParseError("config: unknown observable '" + item + "'");
        }
      }
    } else {
      throw ParseError("config: unknown key '" + key + "'");
    }
  }
  if (cfg.timesteps.empty()) {
    cfg.timesteps.push_back(1);
  }
  if (saw_observables && !(cfg.obs_i3 || cfg.obs_pstar || cfg.obs_gates)) {
    throw ParseError("config: observables list is empty");
  }
  cfg.validate();
  return cfg;
}

std::string SweepConfig::to_string() const {
  std::string out;
  out += "model = ";
  out += model_name(model);
  out += "\nsizes = ";
  for (size_t i = 0; i < sizes.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(sizes[i]);
  }
  out += "\nexponents = ";
  for (size_t i = 0; i < exponents.size(); ++i) {
    if (i) out += ",";
    append_g9(out, exponents[i]);
  }
  out += "\ntimesteps = ";
  for (size_t i = 0; i < timesteps.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(timesteps[i]);
  }
  out += "\nrealizations = " + std::to_string(realizations);
  out += "\nseed = " + std::to_string(seed);
  out += "\ninit_state = ";
  out += (init_state == InitState::ZPolarized) ? "z_polarized" : "random_product";
  out += "\nregion_layout = ";
  if (!region_layout) {
    out += "default";
  } else {
    out += (*region_layout == RegionLayout::QuartersFromZero) ? "quarters" : "bulk";
  }
  out += "\nobservables = ";
  bool first = true;
  auto add = [&](const char* name) {
    if (!first) out += ",";
    out += name;
    first = false;
  };
  if (obs_i3) add("i3");
  if (obs_pstar) add("pstar");
  if (obs_gates) add("gates");
  out += "\n";
  return out;
}

void SweepConfig::validate() const {
  if (sizes.empty()) {
    throw std::invalid_argument("sweep config: sizes list is empty");
  }
  if (exponents.empty()) {
    throw std::invalid_argument("sweep config: exponents list is empty");
  }
  if (timesteps.empty()) {
    throw std::invalid_argument("sweep config: timesteps list is empty");
  }
  if (realizations < 1) {
    throw std::invalid_argument("sweep config: need at least one realization");
  }
}

SweepResult run_sweep(const SweepConfig& cfg, int threads) {
  cfg.validate();
  if (threads <= 0) {
    threads = static_cast<int>(std::thread::hardware_concurrency());
    if (threads <= 0) {
      threads = 1;
    }
  }

  SweepResult result;
  for (uint32_t n : cfg.sizes) {
    for (size_t s_index = 0; s_index < cfg.exponents.size(); ++s_index) {
      for (uint32_t t : cfg.timesteps) {
        RegionSpec regions;
        Interval pstar_region;
        try {
          regions = cfg.region_layout ? make_regions(n, *cfg.region_layout)
                                      : default_regions(n, cfg.model);
          pstar_region = regions.a;
          // Cheap grid-point validation: building a schedule checks sizes.
          build_schedule(cfg.model, n, cfg.exponents[s_index], t,
                         RngStream::from_components({cfg.seed, 0}));
        } catch (const std::exception& e) {
          result.errors.push_back(SweepPointError{n, cfg.exponents[s_index], t, e.what()});
          continue;
        }

        std::vector<RealizationOutput> outputs(cfg.realizations);
        std::atomic<uint32_t> next{0};
        std::atomic<bool> failed{false};
        std::mutex error_mu;
        std::string error_message;
        auto worker = [&]() {
          for (;;) {
            const uint32_t r = next.fetch_add(1);
            if (r >= cfg.realizations || failed.load()) {
              return;
            }
            try {
              outputs[r] = run_realization(cfg, n, s_index, t, r, regions, pstar_region);
            } catch (const std::exception& e) {
              std::lock_guard<std::mutex> lock(error_mu);
              error_message = e.what();
              failed.store(true);
              return;
            }
          }
        };
        if (threads == 1 || cfg.realizations == 1) {
          worker();
        } else {
          std::vector<std::thread> pool;
          const int count = std::min<int>(threads, static_cast<int>(cfg.realizations));
          pool.reserve(count);
          for (int i = 0; i < count; ++i) {
            pool.emplace_back(worker);
          }
          for (auto& th : pool) {
            th.join();
          }
        }
        if (failed.load()) {
          result.errors.push_back(SweepPointError{n, cfg.exponents[s_index], t, error_message});
          continue;
        }

        // Sequential reduction keeps the output independent of thread order.
        std::vector<double> i3(cfg.realizations), pstar(cfg.realizations),
            gates(cfg.realizations);
        for (uint32_t r = 0; r < cfg.realizations; ++r) {
          i3[r] = outputs[r].i3;
          pstar[r] = outputs[r].pstar;
          gates[r] = outputs[r].gates;
        }

        SweepRecord rec;
        rec.model = cfg.model;
        rec.n = n;
        rec.s = cfg.exponents[s_index];
        rec.t = t;
        rec.realizations = cfg.realizations;
        rec.seed = cfg.seed;
        if (cfg.obs_i3) {
          mean_and_sem(i3, &rec.i3_mean, &rec.i3_sem);
        } else {
          rec.i3_mean = rec.i3_sem = std::nan("");
        }
        if (cfg.obs_pstar) {
          mean_and_sem(pstar, &rec.pstar_mean, &rec.pstar_sem);
        } else {
          rec.pstar_mean = rec.pstar_sem = std::nan("");
        }
        if (cfg.obs_gates) {
          double gmean, gsem;
          mean_and_sem(gates, &gmean, &gsem);
          rec.gates_per_qubit_mean = gmean;
        } else {
          rec.gates_per_qubit_mean = std::nan("");
        }
        result.records.push_back(rec);
      }
    }
  }
  return result;
}

std::string records_to_csv(std::span<const SweepRecord> records) {
  std::string out =
      "model,N,s,t,realizations,seed,i3_mean,i3_sem,pstar_mean,pstar_sem,gates_per_qubit_mean\n";
  for (const auto& r : records) {
    out += model_name(r.model);
    out += ',';
    out += std::to_string(r.n);
    out += ',';
    append_g9(out, r.s);
    out += ',';
    out += std::to_string(r.t);
    out += ',';
    out += std::to_string(r.realizations);
    out += ',';
    out += std::to_string(r.seed);
    for (double v : {r.i3_mean, r.i3_sem, r.pstar_mean, r.pstar_sem, r.gates_per_qubit_mean}) {
      out += ',';
      append_g9(out, v);
    }
    out += '\n';
  }
  return out;
}

std::vector<SweepRecord> csv_to_records(std::istream& in) {
  std::vector<SweepRecord> records;
  std::string line;
  bool header = true;
  while (std::getline(in, line)) {
    if (header) {
      header = false;
      continue;
    }
    if (trim(line).empty()) {
      continue;
    }
    std::vector<std::string> fields = split_list(line);
    if (fields.size() != 11) {
      throw ParseError("csv: expected 11 fields, got " + std::to_string(fields.size()));
    }
    SweepRecord r;
    r.model = model_from_name(fields[0]);
    r.n = static_cast<uint32_t>(integer_from(fields[1]));
    r.s = number_from(fields[2]);
    r.t = static_cast<uint32_t>(integer_from(fields[3]));
    r.realizations = static_cast<uint32_t>(integer_from(fields[4]));
    r.seed = integer_from(fields[5]);
    auto value = [&](const std::string& f) {
      return (f == "nan" || f == "-nan") ? std::nan("") : number_from(f);
    };
    r.i3_mean = value(fields[6]);
    r.i3_sem = value(fields[7]);
    r.pstar_mean = value(fields[8]);
    r.pstar_sem = value(fields[9]);
    r.gates_per_qubit_mean = value(fields[10]);
    records.push_back(r);
  }
  return records;
}

ScalingDataset dataset_from_records(std::span<const SweepRecord> records, Model model, uint32_t t,
                                    const char* observable) {
  const bool use_pstar = std::string_view(observable) == "pstar";
  std::map<uint32_t, ScalingSeries> by_size;
  for (const auto& r : records) {
    if (r.model != model || r.t != t) {
      continue;
    }
    const double mean = use_pstar ? r.pstar_mean : r.i3_mean;
    double sem = use_pstar ? r.pstar_sem : r.i3_sem;
    if (std::isnan(mean)) {
      continue;
    }
    const double floor = 1.0 / std::max<uint32_t>(1, r.realizations);
    sem = std::max(sem, floor);
    auto& ser = by_size[r.n];
    ser.n = r.n;
    ser.points.push_back(ScalingPoint{r.s, mean, sem});
  }
  ScalingDataset data;
  data.label = use_pstar ? "pstar" : "i3";
  for (auto& [n, ser] : by_size) {
    std::sort(ser.points.begin(), ser.points.end(),
              [](const ScalingPoint& a, const ScalingPoint& b) { return a.s < b.s; });
    data.series.push_back(std::move(ser));
  }
  return data;
}

double dense_oracle_entropy(const CircuitSchedule& sched, InitState init,
                            std::span<const uint32_t> region, RngStream init_rng,
                            RngStream gate_rng) {
  if (sched.n_qubits > DenseState::kMaxQubits) {
    throw SizeLimitError("dense oracle limited to 12 qubits");
  }
  DenseState state = (init == InitState::ZPolarized)
                         ? DenseState(sched.n_qubits)
                         : DenseState::pauli_product(
                               Tableau::sample_pauli_product(sched.n_qubits, init_rng));
  run_schedule(state, sched, gate_rng);
  return state.renyi2_entropy(region);
}

}  // namespace qscramble
