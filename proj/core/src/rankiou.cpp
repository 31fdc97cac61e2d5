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
#include "rankseg/rankiou.hpp"

#include <algorithm>
#include <span>
#include <string>
#include <vector>

#include "pb_accumulator.hpp"
#include "rankseg/error.hpp"
#include "rankseg/pbdist.hpp"
#include "rankseg/rankdice.hpp"
#include "scoring_util.hpp"

namespace rankseg {

std::size_t shrink_iou_bound(const RankedProbs& r, double gamma,
                             std::optional<std::size_t> d_cap) {
  const std::size_t d = r.size();
  const double dd = static_cast<double>(d);
  std::size_t bound = d;
  for (std::size_t tau = 1; tau < d; ++tau) {
    const double q = r.sorted[tau];
    if (q >= 1.0) continue;  // right-hand side is infinite
    const double t = static_cast<double>(tau);
    bool hit = q <= 0.0;
    if (!hit) {
      const double spread = (dd - t) * q + t + gamma;
      const double rhs =
          q / (1.0 - q) * std::max(dd + gamma, spread * spread / (t + gamma));
      hit = r.top_sum(tau) + gamma >= rhs;
    }
    if (hit) {
      bound = tau;
      break;
    }
  }
  if (d_cap) bound = std::min(bound, *d_cap);
  return bound;
}

namespace {

double weighted_sum(std::span<const double> mass, std::size_t offset,
                    std::size_t tau, double gamma) {
  const double base = static_cast<double>(tau + offset) + gamma;
  double acc = 0.0;
  for (std::size_t i = 0; i < mass.size(); ++i) {
    acc += mass[i] / (base + static_cast<double>(i));
  }
  return acc;
}

IoUScoreTable score_iou_exact(const RankedProbs& r, double gamma,
                              std::size_t d0, ZeroOverZero zz) {
  const std::span<const double> sorted(r.sorted);
  IoUScoreTable res;
  res.d0 = d0;
  res.algorithm_used = Algorithm::exact;
  res.sigma2 = pb_moments(sorted).sigma2;
  res.scores.assign(d0 + 1, 0.0);

  // Law of the unselected positives, grown backwards one pixel per step.
  detail::PmfAccumulator rest;
  rest.add_all(sorted.subspan(d0));
  rest.trim();
  for (std::size_t tau = d0 + 1; tau-- > 0;) {
    if (tau < d0) {
      rest.add(sorted[tau]);
      rest.trim();
    }
    if (tau == 0) {
      res.scores[0] = detail::smoothing_sum(rest.window(), rest.offset(), 0, gamma, zz);
    } else {
      res.scores[tau] = (r.top_sum(tau) + gamma) *
                        weighted_sum(rest.window(), rest.offset(), tau, gamma);
    }
  }
  select_volume(res);
  return res;
}

// Moments of the unselected set for every volume 0..d0.
std::vector<PBMoments> suffix_moments(const RankedProbs& r, std::size_t d0) {
  std::vector<PBMoments> out;
  out.reserve(d0 + 1);
  out.push_back(pb_moments(r.sorted));
  for (std::size_t s = 0; s < d0; ++s) out.push_back(out.back().without(r.sorted[s]));
  return out;
}

IoUScoreTable score_iou_trna(const RankedProbs& r, double gamma, std::size_t d0,
                             double eps, ZeroOverZero zz) {
  const std::vector<PBMoments> moments = suffix_moments(r, d0);
  if (moments.back().sigma2 < kMinApproxVariance) {
    throw Error(Errc::variance_too_small,
                "approximate IoU scoring needs variance >= 25 for the unselected "
                "set at volume " + std::to_string(d0) + ", got " +
                    std::to_string(moments.back().sigma2));
  }
  IoUScoreTable res;
  res.d0 = d0;
  res.algorithm_used = Algorithm::trna;
  res.sigma2 = moments.front().sigma2;
  res.scores.assign(d0 + 1, 0.0);
  for (std::size_t tau = 0; tau <= d0; ++tau) {
    const PBMoments& m = moments[tau];
    const CountWindow win = rna_window(m, eps);
    const std::vector<double> mass = rna_pmf_range(m, win.lo, win.hi);
    if (tau == 0) {
      res.scores[0] = detail::smoothing_sum(mass, win.lo, 0, gamma, zz);
    } else {
      res.scores[tau] =
          (r.top_sum(tau) + gamma) * weighted_sum(mass, win.lo, tau, gamma);
    }
  }
  select_volume(res);
  return res;
}

}  // namespace

IoUScoreTable score_iou(const RankedProbs& r, double gamma, std::size_t d0,
                        IoUMode mode, double eps, ZeroOverZero zz) {
  d0 = std::min(d0, r.size());
  return mode == IoUMode::exact ? score_iou_exact(r, gamma, d0, zz)
                                : score_iou_trna(r, gamma, d0, eps, zz);
}

IoUPrediction predict_iou(const SuccessProbVector& q, const RankSegConfig& cfg,
                          bool force) {
  cfg.validate();
  if (cfg.algorithm == Algorithm::ba) {
    throw Error(Errc::invalid_argument,
                "the blind approximation is not available for IoU");
  }
  const RankedProbs r = rank_probs(q);
  const std::size_t d0 = shrink_iou_bound(r, cfg.gamma, cfg.d_cap);
  const std::size_t d = q.size();

  IoUMode mode = IoUMode::exact;
  if (cfg.algorithm == Algorithm::automatic) {
    if (d > detail::kAutoExactMaxPixels) {
      PBMoments rest = pb_moments(r.sorted);
      for (std::size_t s = 0; s < d0; ++s) rest = rest.without(r.sorted[s]);
      if (rest.sigma2 >= kMinApproxVariance) mode = IoUMode::trna;
    }
  } else if (cfg.algorithm == Algorithm::trna) {
    mode = IoUMode::trna;
  } else if (d > cfg.dp_cap && !force) {
    throw Error(Errc::size_exceeded,
                "exact scoring of d=" + std::to_string(d) +
                    " pixels exceeds the cap " + std::to_string(cfg.dp_cap));
  }

  IoUPrediction out;
  out.search = score_iou(r, cfg.gamma, d0, mode, cfg.epsilon, cfg.zero_over_zero);
  out.mask = top_mask(r, out.search.tau_hat);
  return out;
}

double expected_iou_oracle(const SuccessProbVector& q, const SegMask& mask,
                           double gamma, ZeroOverZero zz) {
  return detail::enumerate_expectation(
      q, mask, [gamma, zz](double inter, double ny, double nv) {
        const double den = ny + nv - inter + gamma;
        if (den == 0.0) return zz == ZeroOverZero::one ? 1.0 : 0.0;
        return (inter + gamma) / den;
      });
}

}  // namespace rankseg
