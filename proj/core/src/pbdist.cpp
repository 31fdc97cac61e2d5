/* Copyright 2026 The RankSeg Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/
#include "rankseg/pbdist.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <string>

#include <boost/math/special_functions/erf.hpp>

#include "fft.hpp"
#include "rankseg/error.hpp"

namespace rankseg {

PBMoments PBMoments::from_sums(std::size_t d, double mu, double sigma2,
                               double m3) {
  PBMoments m;
  m.d = d;
  m.mu = mu;
  m.sigma2 = std::max(sigma2, 0.0);
  m.m3 = m3;
  if (m.sigma2 > 0.0) m.eta = m3 / std::pow(m.sigma2, 1.5);
  return m;
}

PBMoments PBMoments::without(double q) const {
  const double v = q * (1.0 - q);
  return from_sums(d == 0 ? 0 : d - 1, mu - q, sigma2 - v,
                   m3 - v * (1.0 - 2.0 * q));
}

PBMoments pb_moments(std::span<const double> q) {
  double mu = 0.0, s2 = 0.0, m3 = 0.0;
  for (double p : q) {
    const double v = p * (1.0 - p);
    mu += p;
    s2 += v;
    m3 += v * (1.0 - 2.0 * p);
  }
  return PBMoments::from_sums(q.size(), mu, s2, m3);
}

std::vector<double> PmfTable::cdf() const {
  std::vector<double> c(mass.size());
  double acc = 0.0;
  for (std::size_t l = 0; l < mass.size(); ++l) {
    acc += mass[l];
    c[l] = acc;
  }
  return c;
}

double PmfTable::total() const {
  double acc = 0.0;
  for (double v : mass) acc += v;
  return acc;
}

namespace {

std::vector<double> dp_pmf(std::span<const double> q) {
  std::vector<double> mass(q.size() + 1, 0.0);
  mass[0] = 1.0;
  for (std::size_t k = 0; k < q.size(); ++k) {
    const double p = q[k];
    for (std::size_t l = k + 1; l > 0; --l) {
      mass[l] = mass[l] * (1.0 - p) + mass[l - 1] * p;
    }
    mass[0] *= 1.0 - p;
  }
  return mass;
}

std::vector<double> fft_pmf(std::span<const double> q) {
  const std::size_t d = q.size();
  const std::size_t n = detail::next_pow2(d + 1);
  const std::size_t nh = n / 2 + 1;
  std::vector<std::complex<double>> cf(nh, {1.0, 0.0});
  for (std::size_t k = 0; k < nh; ++k) {
    const double w = 2.0 * std::numbers::pi * static_cast<double>(k) /
                     static_cast<double>(n);
    const double c = std::cos(w), s = std::sin(w);
    // Long products drift into subnormals, which are very slow; keep the
    // running value near 1 and carry a binary exponent instead.
    double re = 1.0, im = 0.0;
    int expo = 0;
    for (double p : q) {
      const double a = 1.0 - p + p * c, b = p * s;
      const double nre = re * a - im * b;
      im = re * b + im * a;
      re = nre;
      const double mag = std::abs(re) + std::abs(im);
      if (mag < 0x1p-500) {
        if (mag == 0.0) break;
        int e = 0;
        (void)std::frexp(mag, &e);
        re = std::ldexp(re, -e);
        im = std::ldexp(im, -e);
        expo += e;
      }
    }
    cf[k] = {std::ldexp(re, expo), std::ldexp(im, expo)};
  }
  std::vector<double> raw = detail::real_from_half_spectrum(cf, n);
  std::vector<double> mass(d + 1);
  const double scale = 1.0 / static_cast<double>(n);
  for (std::size_t l = 0; l <= d; ++l) {
    double v = raw[l] * scale;
    if (std::abs(v) < 1e-14 || v < 0.0) v = 0.0;
    mass[l] = v;
  }
  return mass;
}

}  // namespace

PmfTable pb_pmf_exact(const SuccessProbVector& q, std::size_t cap) {
  if (q.size() > cap) {
    throw Error(Errc::size_exceeded,
                "exact PMF requested for d=" + std::to_string(q.size()) +
                    " above the cap " + std::to_string(cap));
  }
  return PmfTable{dp_pmf(q.values())};
}

PmfTable pb_pmf_fft(const SuccessProbVector& q) {
  return PmfTable{fft_pmf(q.values())};
}

PmfTable pb_pmf_without(const SuccessProbVector& q, std::size_t j,
                        PmfMethod method) {
  if (j >= q.size()) {
    throw Error(Errc::index_out_of_range,
                "index " + std::to_string(j) + " outside a vector of size " +
                    std::to_string(q.size()));
  }
  std::vector<double> reduced;
  reduced.reserve(q.size() - 1);
  for (std::size_t k = 0; k < q.size(); ++k) {
    if (k != j) reduced.push_back(q[k]);
  }
  if (method == PmfMethod::automatic) {
    method = reduced.size() <= kDefaultDpCap ? PmfMethod::dp : PmfMethod::fft;
  }
  return PmfTable{method == PmfMethod::dp ? dp_pmf(reduced) : fft_pmf(reduced)};
}

double normal_cdf(double u) {
  return 0.5 * boost::math::erfc(-u / std::numbers::sqrt2);
}

double normal_pdf(double u) {
  return std::exp(-0.5 * u * u) / std::sqrt(2.0 * std::numbers::pi);
}

double normal_quantile(double p) {
  if (!(p > 0.0 && p < 1.0)) {
    throw Error(Errc::invalid_argument, "normal quantile needs p in (0,1)");
  }
  return -std::numbers::sqrt2 * boost::math::erfc_inv(2.0 * p);
}

double refined_normal_cdf(double u, double eta) {
  return normal_cdf(u) + eta * (1.0 - u * u) * normal_pdf(u) / 6.0;
}

namespace {

double require_eta(const PBMoments& m) {
  if (!(m.sigma2 > 0.0) || !m.eta) {
    throw Error(Errc::degenerate_distribution,
                "normal approximation needs positive variance");
  }
  return *m.eta;
}

}  // namespace

double rna_cdf(const PBMoments& m, std::int64_t l) {
  const double eta = require_eta(m);
  const double u =
      (static_cast<double>(l) + 0.5 - m.mu) / std::sqrt(m.sigma2);
  return std::clamp(refined_normal_cdf(u, eta), 0.0, 1.0);
}

double rna_pmf(const PBMoments& m, std::int64_t l) {
  return std::max(0.0, rna_cdf(m, l) - rna_cdf(m, l - 1));
}

std::vector<double> rna_pmf_range(const PBMoments& m, std::size_t lo,
                                  std::size_t hi) {
  if (hi < lo) return {};
  std::vector<double> out(hi - lo + 1);
  double prev = rna_cdf(m, static_cast<std::int64_t>(lo) - 1);
  for (std::size_t l = lo; l <= hi; ++l) {
    const double cur = rna_cdf(m, static_cast<std::int64_t>(l));
    out[l - lo] = std::max(0.0, cur - prev);
    prev = cur;
  }
  return out;
}

double rna_quantile(const PBMoments& m, double p) {
  const double eta = require_eta(m);
  if (!(p > 0.0 && p < 1.0)) {
    throw Error(Errc::invalid_argument,
                "quantile level must lie in (0,1), got " + std::to_string(p));
  }
  const double z = normal_quantile(p);
  double lo = z - 1.0, hi = z + 1.0;
  for (double step = 1.0; refined_normal_cdf(lo, eta) > p; step *= 2.0) lo -= step;
  for (double step = 1.0; refined_normal_cdf(hi, eta) < p; step *= 2.0) hi += step;
  while (hi - lo > 1e-10) {
    const double mid = 0.5 * (lo + hi);
    if (refined_normal_cdf(mid, eta) < p) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

CountWindow rna_window(const PBMoments& m, double eps) {
  const double sigma = std::sqrt(m.sigma2);
  const double lo_real = std::floor(sigma * rna_quantile(m, eps) + m.mu - 1.5);
  const double hi_real =
      std::floor(sigma * rna_quantile(m, 1.0 - eps) + m.mu - 0.5);
  const double top = static_cast<double>(m.d);
  const double lo = std::max(lo_real, 0.0);
  const double hi = std::min(hi_real, top);
  if (lo > hi) return CountWindow{0, m.d};
  return CountWindow{static_cast<std::size_t>(lo), static_cast<std::size_t>(hi)};
}

}  // namespace rankseg
