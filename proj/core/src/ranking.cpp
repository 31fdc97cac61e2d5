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
#include "rankseg/ranking.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "rankseg/error.hpp"

namespace rankseg {

RankedProbs rank_probs(const SuccessProbVector& q) {
  RankedProbs r;
  const std::size_t d = q.size();
  r.order.resize(d);
  std::iota(r.order.begin(), r.order.end(), std::size_t{0});
  std::stable_sort(r.order.begin(), r.order.end(),
                   [&q](std::size_t a, std::size_t b) { return q[a] > q[b]; });
  r.sorted.resize(d);
  r.cumsum.resize(d);
  double acc = 0.0;
  for (std::size_t k = 0; k < d; ++k) {
    r.sorted[k] = q[r.order[k]];
    acc += r.sorted[k];
    r.cumsum[k] = acc;
  }
  return r;
}

SegMask top_mask(const RankedProbs& r, std::size_t volume) {
  SegMask m(r.size());
  volume = std::min(volume, r.size());
  for (std::size_t k = 0; k < volume; ++k) m.bits[r.order[k]] = 1;
  return m;
}

std::string_view to_string(Algorithm a) noexcept {
  switch (a) {
    case Algorithm::exact:
      return "exact";
    case Algorithm::trna:
      return "trna";
    case Algorithm::ba:
      return "ba";
    case Algorithm::automatic:
      return "auto";
  }
  return "auto";
}

std::optional<Algorithm> parse_algorithm(std::string_view s) noexcept {
  if (s == "exact") return Algorithm::exact;
  if (s == "trna") return Algorithm::trna;
  if (s == "ba") return Algorithm::ba;
  if (s == "auto") return Algorithm::automatic;
  return std::nullopt;
}

std::string_view to_string(Metric m) noexcept {
  return m == Metric::dice ? "dice" : "iou";
}

std::optional<Metric> parse_metric(std::string_view s) noexcept {
  if (s == "dice") return Metric::dice;
  if (s == "iou") return Metric::iou;
  return std::nullopt;
}

void RankSegConfig::validate() const {
  if (!(gamma >= 0.0) || !std::isfinite(gamma)) {
    throw Error(Errc::invalid_argument,
                "gamma must be a finite value >= 0, got " + std::to_string(gamma));
  }
  if (!(epsilon > 0.0 && epsilon < 0.5)) {
    throw Error(Errc::invalid_argument,
                "epsilon must lie in (0, 0.5), got " + std::to_string(epsilon));
  }
  if (d_cap && *d_cap == 0) {
    throw Error(Errc::invalid_argument, "d_cap must be positive");
  }
}

void select_volume(VolumeSearchResult& res) {
  res.tau_hat = 0;
  for (std::size_t t = 1; t < res.scores.size(); ++t) {
    if (res.scores[t] > res.scores[res.tau_hat]) res.tau_hat = t;
  }
}

}  // namespace rankseg
