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

#include "qscramble/fss.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "qscramble/errors.hpp"
#include "synthetic_fss.hpp"

using namespace qscramble;
using qscramble::testing::synthetic_dataset;
using qscramble::testing::synthetic_master;

TEST_CASE("quality near one at the true parameters, worse elsewhere") {
  const ScalingDataset data = synthetic_dataset(-1.0, 2.0, 0.02, 0xA1);
  const double at_truth = collapse_quality(data, -1.0, 2.0, 0.0);
  CHECK(at_truth > 0.5);
  CHECK(at_truth < 1.5);

  const double wrong_nu = collapse_quality(data, -1.0, 4.0, 0.0);
  CHECK(wrong_nu > at_truth);
  const double wrong_sc = collapse_quality(data, -0.5, 2.0, 0.0);
  CHECK(wrong_sc > at_truth);
}

TEST_CASE("single system size has undefined quality") {
  ScalingDataset data = synthetic_dataset(-1.0, 2.0, 0.02, 0xA2);
  data.series.resize(1);
  CHECK_THROWS_AS(collapse_quality(data, -1.0, 2.0, 0.0), UndefinedQualityError);
}

TEST_CASE("disjoint rescaled windows have undefined quality") {
  // Two sizes whose s windows do not overlap once rescaled: push s_c far
  // outside so x = (s - s_c) N^(1/nu) separates by size.
  ScalingDataset data;
  for (uint32_t n : {16u, 256u}) {
    ScalingSeries ser;
    ser.n = n;
    for (int k = 0; k < 5; ++k) {
      ser.points.push_back(ScalingPoint{0.1 * k, 1.0, 0.1});
    }
    data.series.push_back(ser);
  }
  CHECK_THROWS_AS(collapse_quality(data, -100.0, 1.0, 0.0), UndefinedQualityError);
}

TEST_CASE("dataset validation") {
  ScalingDataset bad = synthetic_dataset(-1.0, 2.0, 0.02, 0xA3);
  bad.series[0].points[3].dy = 0.0;
  CHECK_THROWS_AS(collapse_quality(bad, -1.0, 2.0, 0.0), std::invalid_argument);

  ScalingDataset few = synthetic_dataset(-1.0, 2.0, 0.02, 0xA4);
  few.series[1].points.resize(3);
  CHECK_THROWS_AS(few.validate(), std::invalid_argument);
}

TEST_CASE("quality is invariant under series relabeling") {
  ScalingDataset data = synthetic_dataset(-1.0, 2.0, 0.02, 0xA5);
  const double q1 = collapse_quality(data, -1.1, 2.2, 0.0);
  std::reverse(data.series.begin(), data.series.end());
  const double q2 = collapse_quality(data, -1.1, 2.2, 0.0);
  CHECK(q1 == doctest::Approx(q2).epsilon(1e-12));
}

TEST_CASE("adding an on-curve size does not degrade the collapse") {
  const ScalingDataset data = synthetic_dataset(-1.0, 2.0, 0.02, 0xA6);
  ScalingDataset extended = data;
  ScalingSeries extra;
  extra.n = 256;
  for (int k = 0; k < 41; ++k) {
    const double s = -2.0 + 2.0 * k / 40.0;
    const double u = (s + 1.0) * std::pow(256.0, 0.5);
    extra.points.push_back(ScalingPoint{s, synthetic_master(u), 0.02});
  }
  extended.series.push_back(extra);
  const double base = collapse_quality(data, -1.0, 2.0, 0.0);
  const double grown = collapse_quality(extended, -1.0, 2.0, 0.0);
  CHECK(grown < base * 1.5 + 0.5);
}

TEST_CASE("fit recovers the synthetic parameters") {
  const ScalingDataset data = synthetic_dataset(-1.0, 2.0, 0.02, 0xA7);
  CollapseOptions opts;
  opts.init_sc = -1.2;
  opts.init_nu = 2.5;
  opts.n_bootstrap = 50;
  opts.seed = 9;
  const CollapseFit fit = fit_collapse(data, opts);
  CHECK(fit.converged);
  CHECK(std::abs(fit.s_c - (-1.0)) < 0.05);
  CHECK(std::abs(fit.nu - 2.0) < 0.1);
  CHECK(fit.quality > 0.5);
  CHECK(fit.quality < 1.5);
  CHECK(fit.zeta == 0.0);
  CHECK(fit.sc_err > 0.0);
  CHECK(fit.nu_err > 0.0);

  // Bit-for-bit reproducibility.
  const CollapseFit again = fit_collapse(data, opts);
  CHECK(again.s_c == fit.s_c);
  CHECK(again.nu == fit.nu);
  CHECK(again.sc_err == fit.sc_err);
  CHECK(again.nu_err == fit.nu_err);
}

TEST_CASE("fitting zeta as a free parameter stays near zero on zeta-free data") {
  const ScalingDataset data = synthetic_dataset(-1.0, 2.0, 0.02, 0xA8);
  CollapseOptions opts;
  opts.init_sc = -1.1;
  opts.init_nu = 2.2;
  opts.fix_zeta = false;
  opts.n_bootstrap = 0;
  const CollapseFit fit = fit_collapse(data, opts);
  CHECK(std::abs(fit.zeta) < 0.2);
  CHECK(std::abs(fit.s_c - (-1.0)) < 0.08);
}

TEST_CASE("fit window restricts to near-critical points") {
  const ScalingDataset data = synthetic_dataset(-1.0, 2.0, 0.02, 0xAB);
  const ScalingDataset windowed = restrict_window(data, -1.0, 0.5);
  for (const auto& ser : windowed.series) {
    CHECK(ser.points.size() < data.series[0].points.size());
    for (const auto& p : ser.points) {
      CHECK(std::abs(p.s + 1.0) <= 0.5);
    }
  }

  CollapseOptions opts;
  opts.init_sc = -1.05;
  opts.init_nu = 2.3;
  opts.n_bootstrap = 20;
  opts.fit_window = 0.5;
  const CollapseFit fit = fit_collapse(data, opts);
  CHECK(std::abs(fit.s_c - (-1.0)) < 0.06);
  CHECK(std::abs(fit.nu - 2.0) < 0.25);

  // A window so tight that a size drops below 4 points must be rejected.
  CollapseOptions narrow = opts;
  narrow.fit_window = 0.02;
  CHECK_THROWS_AS(fit_collapse(data, narrow), std::invalid_argument);
}

TEST_CASE("crossing estimate agrees with the fitted transition point") {
  const ScalingDataset data = synthetic_dataset(-1.0, 2.0, 0.02, 0xA9);
  const double crossing = crossing_estimate(data.series[1], data.series[2]);
  CollapseOptions opts;
  opts.init_sc = crossing;
  opts.init_nu = 2.0;
  opts.n_bootstrap = 50;
  const CollapseFit fit = fit_collapse(data, opts);
  CHECK(std::abs(crossing - fit.s_c) < std::max(0.05, 2.0 * fit.sc_err));
}

TEST_CASE("fit report format") {
  const ScalingDataset data = synthetic_dataset(-1.0, 2.0, 0.02, 0xAA);
  CollapseOptions opts;
  opts.init_sc = -1.0;
  opts.init_nu = 2.0;
  opts.n_bootstrap = 5;
  const CollapseFit fit = fit_collapse(data, opts);
  const std::string report = format_fit_report(fit, master_curve(data, fit));
  CHECK(report.find("s_c = ") != std::string::npos);
  CHECK(report.find("nu = ") != std::string::npos);
  CHECK(report.find("quality = ") != std::string::npos);
  CHECK(report.find("n_bootstrap = 5") != std::string::npos);
  CHECK(report.find("master_curve:") != std::string::npos);

  const auto curve = master_curve(data, fit);
  CHECK(curve.size() == 3 * 41);
  CHECK(std::is_sorted(curve.begin(), curve.end(),
                       [](const MasterCurvePoint& a, const MasterCurvePoint& b) {
                         return a.x < b.x;
                       }));
}
