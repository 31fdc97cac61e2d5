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
#include "rankseg/rankdice.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <span>
#include <string>
#include <vector>

#include "fft.hpp"
#include "pb_accumulator.hpp"
#include "rankseg/error.hpp"
#include "rankseg/pbdist.hpp"
#include "scoring_util.hpp"

namespace rankseg {

std::size_t shrink_bound(const RankedProbs& r, double gamma,
                         std::optional<std::size_t> d_cap) {
  const std::size_t d = r.size();
  std::size_t d0 = d;
  const double dd = static_cast<double>(d);
  for (std::size_t tau = 1; tau < d; ++tau) {
    const double next = r.sorted[tau];
    // A zero next probability satisfies the condition in the limit.
    if (next <= 0.0 ||
        r.top_sum(tau) / next >= static_cast<double>(tau) + gamma + dd) {
      d0 = tau;
      break;
    }
  }
  if (d_cap) d0 = std::min(d0, *d_cap);
  return d0;
}

VolumeSearchResult score_exact(const RankedProbs& r, double gamma,
                               std::size_t d0, ZeroOverZero zz) {
  const std::size_t d = r.size();
  d0 = std::min(d0, d);
  const std::span<const double> sorted(r.sorted);

  detail::PmfAccumulator tail;
  tail.add_all(sorted.subspan(d0));
  tail.trim();
  detail::PmfAccumulator full = tail;
  full.add_all(sorted.first(d0));
  full.trim();

  VolumeSearchResult res;
  res.d0 = d0;
  res.algorithm_used = Algorithm::exact;
  res.sigma2 = pb_moments(sorted).sigma2;
  res.scores.assign(d0 + 1, 0.0);

  const auto smoothing_term = [&](std::size_t tau) {
    return detail::smoothing_sum(full.window(), full.offset(), tau, gamma, zz);
  };
  res.scores[0] = smoothing_term(0);

  // Running sum over selected pixels of q * P(count without that pixel = l).
  std::vector<double> overlap(d, 0.0);
  std::size_t lo = d, hi = 0;
  detail::for_each_leave_one_out(
      tail, sorted.first(d0),
      [&](std::size_t s, const detail::PmfAccumulator& loo) {
        const double q = sorted[s];
        const auto& w = loo.window();
        const std::size_t off = loo.offset();
        for (std::size_t i = 0; i < w.size(); ++i) overlap[off + i] += q * w[i];
        lo = std::min(lo, off);
        hi = std::max(hi, off + w.size());
        const double tau = static_cast<double>(s + 1);
        double acc = 0.0;
        for (std::size_t l = lo; l < hi; ++l) {
          acc += overlap[l] / (tau + static_cast<double>(l) + gamma + 1.0);
        }
        res.scores[s + 1] = 2.0 * acc + smoothing_term(s + 1);
      });
  select_volume(res);
  return res;
}

namespace {

PBMoments require_spread(std::span<const double> sorted) {
  PBMoments m = pb_moments(sorted);
  if (m.sigma2 < kMinApproxVariance) {
    throw Error(Errc::variance_too_small,
                "approximate scoring needs variance >= 25, got " +
                    std::to_string(m.sigma2));
  }
  return m;
}

}  // namespace

VolumeSearchResult score_trna(const RankedProbs& r, double gamma, double eps,
                              std::size_t d0, ZeroOverZero zz) {
  const std::size_t d = r.size();
  d0 = std::min(d0, d);
  const PBMoments m = require_spread(r.sorted);
  const CountWindow win = rna_window(m, eps);
  const std::vector<double> full = rna_pmf_range(m, win.lo, win.hi);

  VolumeSearchResult res;
  res.d0 = d0;
  res.algorithm_used = Algorithm::trna;
  res.sigma2 = m.sigma2;
  res.scores.assign(d0 + 1, 0.0);
  res.scores[0] = detail::smoothing_sum(full, win.lo, 0, gamma, zz);

  // Leave-one-out counts live on 0..d-1.
  const std::size_t top = std::min(win.hi, d - 1);
  std::vector<double> overlap(top >= win.lo ? top - win.lo + 1 : 0, 0.0);
  for (std::size_t s = 0; s < d0; ++s) {
    const double q = r.sorted[s];
    if (!overlap.empty()) {
      const std::vector<double> loo = rna_pmf_range(m.without(q), win.lo, top);
      for (std::size_t i = 0; i < loo.size(); ++i) overlap[i] += q * loo[i];
    }
    const double tau = static_cast<double>(s + 1);
    double acc = 0.0;
    for (std::size_t i = 0; i < overlap.size(); ++i) {
      acc += overlap[i] / (tau + static_cast<double>(win.lo + i) + gamma + 1.0);
    }
    res.scores[s + 1] = 2.0 * acc + detail::smoothing_sum(full, win.lo, s + 1, gamma, zz);
  }
  select_volume(res);
  return res;
}

VolumeSearchResult score_ba(const RankedProbs& r, double gamma, double eps,
                            std::size_t d0, ZeroOverZero zz) {
  const std::size_t d = r.size();
  d0 = std::min(d0, d);
  const PBMoments m = require_spread(r.sorted);
  const CountWindow win = rna_window(m, eps);
  const std::vector<double> full = rna_pmf_range(m, win.lo, win.hi);
  const double lo = static_cast<double>(win.lo);

  VolumeSearchResult res;
  res.d0 = d0;
  res.algorithm_used = Algorithm::ba;
  res.sigma2 = m.sigma2;
  res.scores.assign(d0 + 1, 0.0);

  // Overlap part: counts up to d-1, weights 1/(tau + l + gamma + 1).
  const std::size_t top = std::min(win.hi, d - 1);
  const std::size_t n_overlap = top >= win.lo ? top - win.lo + 1 : 0;
  if (n_overlap > 0 && d0 > 0) {
    std::vector<double> weights(n_overlap + d0 + 1);
    for (std::size_t k = 0; k < weights.size(); ++k) {
      weights[k] = 1.0 / (lo + static_cast<double>(k) + gamma + 1.0);
    }
    const std::vector<double> c = detail::cross_correlate(
        std::span<const double>(full).first(n_overlap), weights, d0 + 1);
    for (std::size_t tau = 1; tau <= d0; ++tau) {
      res.scores[tau] = 2.0 * r.top_sum(tau) * c[tau];
    }
  }

  // Smoothing part: counts up to d, weights 1/(tau + l + gamma).
  if (gamma > 0.0) {
    std::vector<double> weights(full.size() + d0 + 1);
    for (std::size_t k = 0; k < weights.size(); ++k) {
      weights[k] = 1.0 / (lo + static_cast<double>(k) + gamma);
    }
    const std::vector<double> c = detail::cross_correlate(full, weights, d0 + 1);
    for (std::size_t tau = 0; tau <= d0; ++tau) res.scores[tau] += gamma * c[tau];
  } else if (zz == ZeroOverZero::one && win.lo == 0) {
    res.scores[0] += full[0];
  }
  select_volume(res);
  return res;
}

DicePrediction predict_dice(const SuccessProbVector& q, const RankSegConfig& cfg,
                            bool force) {
  cfg.validate();
  const RankedProbs r = rank_probs(q);
  const std::size_t d0 = shrink_bound(r, cfg.gamma, cfg.d_cap);
  const std::size_t d = q.size();

  Algorithm algo = cfg.algorithm;
  if (algo == Algorithm::automatic) {
    // Low spread means exact is both cheap and the only valid route.
    const bool small = d <= detail::kAutoExactMaxPixels;
    algo = (small || pb_moments(r.sorted).sigma2 < kMinApproxVariance)
               ? Algorithm::exact
               : Algorithm::ba;
  } else if (algo == Algorithm::exact && d > cfg.dp_cap && !force) {
    throw Error(Errc::size_exceeded,
                "exact scoring of d=" + std::to_string(d) +
                    " pixels exceeds the cap " + std::to_string(cfg.dp_cap));
  }

  DicePrediction out;
  switch (algo) {
    case Algorithm::trna:
      out.search = score_trna(r, cfg.gamma, cfg.epsilon, d0, cfg.zero_over_zero);
      break;
    case Algorithm::ba:
      out.search = score_ba(r, cfg.gamma, cfg.epsilon, d0, cfg.zero_over_zero);
      break;
    default:
      out.search = score_exact(r, cfg.gamma, d0, cfg.zero_over_zero);
      break;
  }
  out.mask = top_mask(r, out.search.tau_hat);
  return out;
}

namespace {

double approx_constant(double sigma2) { return sigma2 >= 100.0 ? 0.1618 : 0.3056; }

}  // namespace

double trna_error_bound(const PBMoments& m, std::size_t tau, double gamma,
                        double eps) {
  const double c0 = approx_constant(m.sigma2);
  const double t = static_cast<double>(tau);
  const double log_term = std::log(1.0 + static_cast<double>(m.d)) + 1.0;
  const double tail = eps + c0 / m.sigma2;
  double bound = 4.0 * t / (t + gamma + 1.0) * tail +
                 c0 * std::min(m.mu, t) / (m.sigma2 - 0.25) * log_term;
  if (gamma > 0.0) {
    bound += 2.0 * gamma / (t + gamma) * tail + c0 * gamma / m.sigma2 * log_term;
  }
  return bound;
}

double ba_error_bound(const PBMoments& m, std::size_t tau, double gamma,
                      double eps) {
  const double v = m.sigma2 - 0.25;
  const double log_term = std::log(1.0 + static_cast<double>(m.d)) + 1.0;
  const double blind = (1.0 / (4.0 * std::sqrt(2.0 * std::numbers::pi))) *
                       ((1.0 / (2.0 * std::sqrt(std::numbers::e))) / v +
                        4.0 / std::sqrt(v) + 4.0 * m.m3 / std::pow(v, 1.5)) *
                       log_term;
  return trna_error_bound(m, tau, gamma, eps) + blind;
}

double expected_dice_oracle(const SuccessProbVector& q, const SegMask& mask,
                            double gamma, ZeroOverZero zz) {
  return detail::enumerate_expectation(
      q, mask, [gamma, zz](double inter, double ny, double nv) {
        const double den = ny + nv + gamma;
        if (den == 0.0) return zz == ZeroOverZero::one ? 1.0 : 0.0;
        return (2.0 * inter + gamma) / den;
      });
}

}  // namespace rankseg
