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

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <set>

#include "qscramble/errors.hpp"
#include "qscramble/rng.hpp"

namespace qscramble {

namespace {

struct RescaledPoint {
  double x, y, dy;
};

struct RescaledSeries {
  std::vector<RescaledPoint> pts;  // sorted by x
};

std::vector<RescaledSeries> rescale(const ScalingDataset& data, double s_c, double nu,
                                    double zeta) {
  std::vector<RescaledSeries> out(data.series.size());
  for (size_t i = 0; i < data.series.size(); ++i) {
    const auto& ser = data.series[i];
    const double n = static_cast<double>(ser.n);
    const double xfac = std::pow(n, 1.0 / nu);
    const double yfac = std::pow(n, -zeta / nu);
    out[i].pts.reserve(ser.points.size());
    for (const auto& p : ser.points) {
      out[i].pts.push_back(RescaledPoint{(p.s - s_c) * xfac, p.y * yfac, p.dy * yfac});
    }
    std::sort(out[i].pts.begin(), out[i].pts.end(),
              [](const RescaledPoint& a, const RescaledPoint& b) { return a.x < b.x; });
  }
  return out;
}

double sample_stddev(const std::vector<double>& v) {
  const size_t n = v.size();
  if (n < 2) {
    return 0.0;
  }
  double mean = 0.0;
  for (double x : v) mean += x;
  mean /= static_cast<double>(n);
  double ss = 0.0;
  for (double x : v) ss += (x - mean) * (x - mean);
  return std::sqrt(ss / static_cast<double>(n - 1));
}

// Standard Nelder-Mead with reflection/expansion/contraction/shrink
// coefficients (1, 2, 0.5, 0.5). Converges when the simplex value spread
// drops below tol.
struct SimplexResult {
  std::vector<double> x;
  double f = 0.0;
  int iterations = 0;
  bool converged = false;
};

SimplexResult nelder_mead(const std::function<double(const std::vector<double>&)>& f,
                          std::vector<double> x0, const std::vector<double>& steps,
                          int max_iters, double tol) {
  const size_t dim = x0.size();
  std::vector<std::vector<double>> verts(dim + 1, x0);
  for (size_t i = 0; i < dim; ++i) {
    verts[i + 1][i] += steps[i];
  }
  std::vector<double> vals(dim + 1);
  for (size_t i = 0; i <= dim; ++i) {
    vals[i] = f(verts[i]);
  }

  auto order = [&]() {
    std::vector<size_t> idx(dim + 1);
    for (size_t i = 0; i <= dim; ++i) idx[i] = i;
    std::sort(idx.begin(), idx.end(), [&](size_t a, size_t b) { return vals[a] < vals[b]; });
    std::vector<std::vector<double>> nv(dim + 1);
    std::vector<double> nf(dim + 1);
    for (size_t i = 0; i <= dim; ++i) {
      nv[i] = verts[idx[i]];
      nf[i] = vals[idx[i]];
    }
    verts.swap(nv);
    vals.swap(nf);
  };

  SimplexResult res;
  int iter = 0;
  for (; iter < max_iters; ++iter) {
    order();
    if (vals[dim] - vals[0] < tol) {
      res.converged = true;
      break;
    }
    std::vector<double> centroid(dim, 0.0);
    for (size_t i = 0; i < dim; ++i) {
      for (size_t d = 0; d < dim; ++d) {
        centroid[d] += verts[i][d];
      }
    }
    for (size_t d = 0; d < dim; ++d) centroid[d] /= static_cast<double>(dim);

    auto blend = [&](double coeff) {
      std::vector<double> p(dim);
      for (size_t d = 0; d < dim; ++d) {
        p[d] = centroid[d] + coeff * (centroid[d] - verts[dim][d]);
      }
      return p;
    };

    std::vector<double> reflected = blend(1.0);
    const double fr = f(reflected);
    if (fr < vals[0]) {
      std::vector<double> expanded = blend(2.0);
      const double fe = f(expanded);
      if (fe < fr) {
        verts[dim] = std::move(expanded);
        vals[dim] = fe;
      } else {
        verts[dim] = std::move(reflected);
        vals[dim] = fr;
      }
    } else if (fr < vals[dim - 1]) {
      verts[dim] = std::move(reflected);
      vals[dim] = fr;
    } else {
      std::vector<double> contracted = blend(fr < vals[dim] ? 0.5 : -0.5);
      const double fc = f(contracted);
      if (fc < std::min(fr, vals[dim])) {
        verts[dim] = std::move(contracted);
        vals[dim] = fc;
      } else {
        for (size_t i = 1; i <= dim; ++i) {  // shrink toward best
          for (size_t d = 0; d < dim; ++d) {
            verts[i][d] = verts[0][d] + 0.5 * (verts[i][d] - verts[0][d]);
          }
          vals[i] = f(verts[i]);
        }
      }
    }
  }
  order();
  res.x = verts[0];
  res.f = vals[0];
  res.iterations = iter;
  return res;
}

void append_kv(std::string& out, const char* key, double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%s = %.9g\n", key, v);
  out += buf;
}

}  // namespace

void ScalingDataset::validate() const {
  if (series.size() < 2) {
    throw std::invalid_argument("scaling dataset: need at least 2 system sizes");
  }
  std::set<uint32_t> sizes;
  for (const auto& ser : series) {
    if (!sizes.insert(ser.n).second) {
      throw std::invalid_argument("scaling dataset: duplicate system size");
    }
    if (ser.points.size() < 4) {
      throw std::invalid_argument("scaling dataset: need at least 4 points per size");
    }
    for (const auto& p : ser.points) {
      if (!(p.dy > 0.0)) {
        throw std::invalid_argument("scaling dataset: standard errors must be positive");
      }
    }
  }
}

double collapse_quality(const ScalingDataset& data, double s_c, double nu, double zeta) {
  if (data.series.size() < 2) {
    throw UndefinedQualityError("collapse quality: need at least two system sizes");
  }
  data.validate();
  if (!(nu > 0.0)) {
    throw std::invalid_argument("collapse_quality: nu must be positive");
  }
  const auto scaled = rescale(data, s_c, nu, zeta);

  bool any_overlap = false;
  for (size_t i = 0; i < scaled.size() && !any_overlap; ++i) {
    for (size_t j = i + 1; j < scaled.size(); ++j) {
      if (scaled[i].pts.front().x <= scaled[j].pts.back().x &&
          scaled[j].pts.front().x <= scaled[i].pts.back().x) {
        any_overlap = true;
        break;
      }
    }
  }
  if (!any_overlap) {
    throw UndefinedQualityError("collapse quality: no two sizes overlap in rescaled x");
  }

  // Houdayer-Hartmann: for every point, estimate the master curve by a
  // weighted linear fit through the bracketing points of the other sizes.
  double total = 0.0;
  size_t counted = 0;
  for (size_t i = 0; i < scaled.size(); ++i) {
    for (const auto& p : scaled[i].pts) {
      double kw = 0, kx = 0, ky = 0, kxx = 0, kxy = 0;
      size_t selected = 0;
      for (size_t j = 0; j < scaled.size(); ++j) {
        if (j == i) {
          continue;
        }
        const auto& pts = scaled[j].pts;
        if (p.x < pts.front().x || p.x > pts.back().x) {
          continue;  // this size does not bracket the point
        }
        size_t hi = 1;
        while (hi < pts.size() - 1 && pts[hi].x <= p.x) {
          ++hi;
        }
        for (size_t k = hi - 1; k <= hi; ++k) {
          const double w = 1.0 / (pts[k].dy * pts[k].dy);
          kw += w;
          kx += w * pts[k].x;
          ky += w * pts[k].y;
          kxx += w * pts[k].x * pts[k].x;
          kxy += w * pts[k].x * pts[k].y;
          ++selected;
        }
      }
      if (selected < 2) {
        continue;
      }
      const double delta = kw * kxx - kx * kx;
      double master, master_var;
      if (delta <= 1e-300 * kw * kxx || !(delta > 0.0)) {
        master = ky / kw;  // degenerate abscissas: weighted mean
        master_var = 1.0 / kw;
      } else {
        const double a = (kxx * ky - kx * kxy) / delta;
        const double b = (kw * kxy - kx * ky) / delta;
        master = a + b * p.x;
        master_var = (kxx - 2.0 * p.x * kx + p.x * p.x * kw) / delta;
      }
      const double resid = p.y - master;
      total += resid * resid / (p.dy * p.dy + master_var);
      ++counted;
    }
  }
  if (counted == 0) {
    throw UndefinedQualityError("collapse quality: no point has a defined master estimate");
  }
  return total / static_cast<double>(counted);
}

double crossing_estimate(const ScalingSeries& s1, const ScalingSeries& s2) {
  auto interp = [](const ScalingSeries& ser, double s) {
    const auto& p = ser.points;
    if (s <= p.front().s) return p.front().y;
    if (s >= p.back().s) return p.back().y;
    size_t k = 1;
    while (k < p.size() - 1 && p[k].s < s) ++k;
    const double f = (s - p[k - 1].s) / (p[k].s - p[k - 1].s);
    return p[k - 1].y + f * (p[k].y - p[k - 1].y);
  };
  const double lo = std::max(s1.points.front().s, s2.points.front().s);
  const double hi = std::min(s1.points.back().s, s2.points.back().s);
  if (!(lo < hi)) {
    throw std::runtime_error("crossing_estimate: curves do not share an s window");
  }
  std::set<double> grid;
  for (const auto& p : s1.points) {
    if (p.s >= lo && p.s <= hi) grid.insert(p.s);
  }
  for (const auto& p : s2.points) {
    if (p.s >= lo && p.s <= hi) grid.insert(p.s);
  }
  std::vector<double> xs, ds;
  for (double s : grid) {
    xs.push_back(s);
    ds.push_back(interp(s1, s) - interp(s2, s));
  }

  // Both curves share their asymptotes, so the difference fades to noise in
  // the tails; only the zero between its extreme lobes is the crossing.
  size_t imax = 0, imin = 0;
  for (size_t k = 1; k < ds.size(); ++k) {
    if (ds[k] > ds[imax]) imax = k;
    if (ds[k] < ds[imin]) imin = k;
  }
  if (!(ds[imax] > 0.0) || !(ds[imin] < 0.0)) {
    throw std::runtime_error("crossing_estimate: curves do not cross");
  }
  const size_t a = std::min(imax, imin);
  const size_t b = std::max(imax, imin);
  double best_slope = -1.0;
  double root = xs[a];
  for (size_t k = a; k < b; ++k) {
    if ((ds[k] < 0) == (ds[k + 1] < 0)) {
      continue;
    }
    const double slope = std::abs(ds[k + 1] - ds[k]) / (xs[k + 1] - xs[k]);
    if (slope > best_slope) {
      best_slope = slope;
      root = xs[k] - ds[k] * (xs[k + 1] - xs[k]) / (ds[k + 1] - ds[k]);
    }
  }
  if (best_slope < 0.0) {
    throw std::runtime_error("crossing_estimate: curves do not cross");
  }
  return root;
}

ScalingDataset restrict_window(const ScalingDataset& data, double center, double half_width) {
  ScalingDataset out = data;
  for (auto& ser : out.series) {
    std::erase_if(ser.points, [&](const ScalingPoint& p) {
      return std::abs(p.s - center) > half_width;
    });
  }
  return out;
}

CollapseFit fit_collapse(const ScalingDataset& raw, const CollapseOptions& opts) {
  raw.validate();
  const bool fit_zeta = !opts.fix_zeta;

  ScalingDataset data = raw;
  if (std::isfinite(opts.fit_window)) {
    data = restrict_window(raw, opts.init_sc, opts.fit_window);
    data.validate();  // window must leave enough points per size
  }

  std::vector<double> x0{opts.init_sc, opts.init_nu};
  std::vector<double> steps{0.1, 0.25};
  if (fit_zeta) {
    x0.push_back(opts.init_zeta);
    steps.push_back(0.1);
  }

  auto run_fit = [&](const ScalingDataset& d) {
    auto obj = [&](const std::vector<double>& p) -> double {
      const double nu = p[1];
      if (nu < 1e-3 || nu > 1e3) {
        return 1e100;
      }
      const double zeta = fit_zeta ? p[2] : opts.init_zeta;
      try {
        return collapse_quality(d, p[0], nu, zeta);
      } catch (const UndefinedQualityError&) {
        return 1e100;
      }
    };
    return nelder_mead(obj, x0, steps, opts.max_iters, opts.tol);
  };

  const SimplexResult main_fit = run_fit(data);

  CollapseFit fit;
  fit.s_c = main_fit.x[0];
  fit.nu = main_fit.x[1];
  fit.zeta = fit_zeta ? main_fit.x[2] : opts.init_zeta;
  fit.quality = main_fit.f;
  fit.iterations = main_fit.iterations;
  fit.converged = main_fit.converged;
  fit.n_bootstrap = opts.n_bootstrap;
  if (!main_fit.converged) {
    throw ConvergenceError("fit_collapse: Nelder-Mead did not converge", fit);
  }

  // Bootstrap: Gaussian-perturb every point by its quoted error and refit.
  std::vector<double> sc_samples, nu_samples;
  RngStream master = RngStream::from_components({opts.seed, 0xB0075742ull});
  for (int b = 0; b < opts.n_bootstrap; ++b) {
    RngStream stream = master.fork(static_cast<uint64_t>(b));
    ScalingDataset perturbed = data;
    for (auto& ser : perturbed.series) {
      for (auto& p : ser.points) {
        p.y += p.dy * stream.normal();
      }
    }
    const SimplexResult bs = run_fit(perturbed);
    sc_samples.push_back(bs.x[0]);
    nu_samples.push_back(bs.x[1]);
  }
  fit.sc_err = sample_stddev(sc_samples);
  fit.nu_err = sample_stddev(nu_samples);
  return fit;
}

std::vector<MasterCurvePoint> master_curve(const ScalingDataset& data, const CollapseFit& fit) {
  const auto scaled = rescale(data, fit.s_c, fit.nu, fit.zeta);
  std::vector<MasterCurvePoint> out;
  for (const auto& ser : scaled) {
    for (const auto& p : ser.pts) {
      out.push_back(MasterCurvePoint{p.x, p.y, p.dy});
    }
  }
  std::sort(out.begin(), out.end(),
            [](const MasterCurvePoint& a, const MasterCurvePoint& b) { return a.x < b.x; });
  return out;
}

std::string format_fit_report(const CollapseFit& fit,
                              const std::vector<MasterCurvePoint>& curve) {
  std::string out;
  append_kv(out, "s_c", fit.s_c);
  append_kv(out, "s_c_err", fit.sc_err);
  append_kv(out, "nu", fit.nu);
  append_kv(out, "nu_err", fit.nu_err);
  append_kv(out, "zeta", fit.zeta);
  append_kv(out, "quality", fit.quality);
  out += "n_bootstrap = " + std::to_string(fit.n_bootstrap) + "\n";
  out += "master_curve:\n";
  for (const auto& p : curve) {
    char buf[96];
    std::snprintf(buf, sizeof(buf), "%.9g %.9g %.9g\n", p.x, p.y, p.dy);
    out += buf;
  }
  return out;
}

}  // namespace qscramble
