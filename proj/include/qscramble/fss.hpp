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

#ifndef QSCRAMBLE_FSS_HPP
#define QSCRAMBLE_FSS_HPP

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace qscramble {

// One measured point of an observable curve at a given system size.
struct ScalingPoint {
  double s = 0.0;
  double y = 0.0;
  double dy = 0.0;
};

struct ScalingSeries {
  uint32_t n = 0;
  std::vector<ScalingPoint> points;  // sorted by s
};

// Curves of one observable across system sizes, the input to a collapse fit.
struct ScalingDataset {
  std::vector<ScalingSeries> series;
  std::string label;

  // At least 2 sizes, at least 4 points per size, strictly positive errors.
  void validate() const;
};

// Quality of the scaling collapse y * N^(-zeta/nu) vs (s - s_c) * N^(1/nu):
// reduced chi-square of every rescaled point against a local master-curve
// estimate interpolated from the other sizes' bracketing points, with
// propagated errors. A perfect collapse within quoted errors gives ~1.
// Throws UndefinedQualityError when no two sizes overlap after rescaling.
double collapse_quality(const ScalingDataset& data, double s_c, double nu, double zeta);

struct CollapseOptions {
  double init_sc = 0.0;
  double init_nu = 2.0;
  double init_zeta = 0.0;
  bool fix_zeta = true;
  int n_bootstrap = 200;
  uint64_t seed = 1;
  int max_iters = 500;
  double tol = 1e-6;  // simplex spread convergence threshold

  // Half-width of the fitting window in s around init_sc; infinity keeps all
  // points. The scaling form only describes the neighborhood of the
  // transition (far above it the observable keeps growing with N), so fits
  // on wide grids should restrict to the near-critical window.
  double fit_window = std::numeric_limits<double>::infinity();
};

struct CollapseFit {
  double s_c = 0.0;
  double nu = 0.0;
  double zeta = 0.0;
  double quality = 0.0;
  double sc_err = 0.0;
  double nu_err = 0.0;
  int n_bootstrap = 0;
  int iterations = 0;
  bool converged = false;
};

// Thrown when Nelder-Mead fails to converge; carries the best point found.
struct ConvergenceError : std::runtime_error {
  ConvergenceError(const std::string& what, CollapseFit best_so_far)
      : std::runtime_error(what), best(best_so_far) {}
  CollapseFit best;
};

// Copy of the dataset keeping only points with |s - center| <= half_width.
ScalingDataset restrict_window(const ScalingDataset& data, double center, double half_width);

// Nelder-Mead minimization of collapse_quality over (s_c, nu) with zeta fixed
// (or over all three when fix_zeta is false), followed by Gaussian bootstrap
// resampling for parameter errors. Deterministic given options.seed.
CollapseFit fit_collapse(const ScalingDataset& data, const CollapseOptions& opts);

// Interpolated crossing of two observable curves, used to seed s_c. With
// several sign changes the median crossing is returned.
double crossing_estimate(const ScalingSeries& s1, const ScalingSeries& s2);

struct MasterCurvePoint {
  double x = 0.0;
  double y = 0.0;
  double dy = 0.0;
};

// All points rescaled at the fitted parameters, sorted by x.
std::vector<MasterCurvePoint> master_curve(const ScalingDataset& data, const CollapseFit& fit);

// Key = value report plus master_curve block, the `collapse` CLI output.
std::string format_fit_report(const CollapseFit& fit,
                              const std::vector<MasterCurvePoint>& curve);

}  // namespace qscramble

#endif  // QSCRAMBLE_FSS_HPP
