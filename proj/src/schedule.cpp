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

#include "qscramble/schedule.hpp"

#include <charconv>
#include <cstdio>
#include <cstring>

#include "qscramble/errors.hpp"
#include "qscramble/models.hpp"

namespace qscramble {

namespace {

const char* kind_name(GateKind k) {
  switch (k) {
    case GateKind::H:
      return "H";
    case GateKind::Phase:
      return "Phase";
    case GateKind::CZ:
      return "CZ";
    case GateKind::Clifford2:
      return "Clifford2";
  }
  return "?";
}

GateKind kind_from_name(std::string_view s) {
  if (s == "H") return GateKind::H;
  if (s == "Phase") return GateKind::Phase;
  if (s == "CZ") return GateKind::CZ;
  if (s == "Clifford2") return GateKind::Clifford2;
  throw ParseError("schedule: unknown gate kind '" + std::string(s) + "'");
}

void append_double(std::string& out, double v) {
  char buf[40];
  auto res = std::to_chars(buf, buf + sizeof(buf), v);
  out.append(buf, res.ptr);
}

std::string_view next_field(std::string_view& line) {
  size_t pos = line.find(',');
  std::string_view field = line.substr(0, pos);
  line = (pos == std::string_view::npos) ? std::string_view{} : line.substr(pos + 1);
  return field;
}

template <typename T>
T parse_int(std::string_view s) {
  T v{};
  auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (res.ec != std::errc{} || res.ptr != s.data() + s.size()) {
    throw ParseError("schedule: bad integer field '" + std::string(s) + "'");
  }
  return v;
}

double parse_double(std::string_view s) {
  double v{};
  auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (res.ec != std::errc{} || res.ptr != s.data() + s.size()) {
    throw ParseError("schedule: bad float field '" + std::string(s) + "'");
  }
  return v;
}

}  // namespace

const char* model_name(Model m) {
  switch (m) {
    case Model::WrAA:
      return "wraa";
    case Model::PWR2:
      return "pwr2";
    case Model::Riffle:
      return "riffle";
  }
  return "?";
}

Model model_from_name(std::string_view name) {
  if (name == "wraa") return Model::WrAA;
  if (name == "pwr2") return Model::PWR2;
  if (name == "riffle") return Model::Riffle;
  throw ParseError("unknown model '" + std::string(name) + "'");
}

size_t CircuitSchedule::two_qubit_gate_count() const {
  size_t count = 0;
  for (const auto& layer : layers) {
    for (const auto& e : layer) {
      count += e.is_two_qubit();
    }
  }
  return count;
}

double CircuitSchedule::gates_per_qubit_per_timestep() const {
  if (n_qubits == 0 || timesteps == 0) {
    return 0.0;
  }
  return 2.0 * static_cast<double>(two_qubit_gate_count()) /
         (static_cast<double>(n_qubits) * timesteps);
}

std::string CircuitSchedule::serialize() const {
  std::string out;
  out.reserve(64 + 24 * two_qubit_gate_count());
  out += model_name(model);
  out += ',';
  out += std::to_string(n_qubits);
  out += ',';
  append_double(out, exponent);
  out += ',';
  out += std::to_string(timesteps);
  out += ',';
  out += std::to_string(seed);
  out += ',';
  append_double(out, norm_j);
  out += '\n';
  for (const auto& layer : layers) {
    for (const auto& e : layer) {
      out += std::to_string(e.layer);
      out += ',';
      out += kind_name(e.kind);
      out += ',';
      out += std::to_string(e.q1);
      if (e.is_two_qubit()) {
        out += ',';
        out += std::to_string(e.q2);
        out += ',';
        out += std::to_string(e.distance);
      }
      out += '\n';
    }
  }
  return out;
}

CircuitSchedule CircuitSchedule::parse(std::string_view text) {
  CircuitSchedule sched;
  size_t line_no = 0;
  bool have_header = false;
  while (!text.empty()) {
    size_t nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = (nl == std::string_view::npos) ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    if (line.empty()) {
      continue;
    }
    if (!have_header) {
      std::string_view rest = line;
      sched.model = model_from_name(next_field(rest));
      sched.n_qubits = parse_int<uint32_t>(next_field(rest));
      sched.exponent = parse_double(next_field(rest));
      sched.timesteps = parse_int<uint32_t>(next_field(rest));
      sched.seed = parse_int<uint64_t>(next_field(rest));
      sched.norm_j = parse_double(next_field(rest));
      have_header = true;
      continue;
    }
    std::string_view rest = line;
    GateEvent e;
    e.layer = parse_int<uint32_t>(next_field(rest));
    e.kind = kind_from_name(next_field(rest));
    e.q1 = parse_int<uint32_t>(next_field(rest));
    if (e.is_two_qubit()) {
      e.q2 = parse_int<uint32_t>(next_field(rest));
      e.distance = parse_int<uint32_t>(next_field(rest));
    }
    if (!rest.empty()) {
      throw ParseError("schedule: trailing fields on line " + std::to_string(line_no));
    }
    if (e.layer >= sched.layers.size()) {
      sched.layers.resize(e.layer + 1);
    }
    sched.layers[e.layer].push_back(e);
  }
  if (!have_header) {
    throw ParseError("schedule: empty input");
  }
  // The riffle permutation trace is deterministic in (N, t); rebuild it.
  if (sched.model == Model::Riffle) {
    sched.permutation_trace = riffle_permutation_trace(sched.n_qubits, sched.timesteps);
  }
  return sched;
}

}  // namespace qscramble
