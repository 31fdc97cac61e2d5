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
#ifndef RANKSEG_RANKING_HPP_
#define RANKSEG_RANKING_HPP_

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "rankseg/pbdist.hpp"
#include "rankseg/prob_vector.hpp"

namespace rankseg {

// Probabilities sorted in decreasing order. Ties keep ascending pixel index.
struct RankedProbs {
  std::vector<std::size_t> order;  // order[k] = pixel holding rank k
  std::vector<double> sorted;      // sorted[k] = q[order[k]]
  std::vector<double> cumsum;      // cumsum[k] = sorted[0] + ... + sorted[k]

  std::size_t size() const noexcept { return sorted.size(); }
  // Sum of the top-k probabilities; top_sum(0) == 0.
  double top_sum(std::size_t k) const noexcept {
    return k == 0 ? 0.0 : cumsum[k - 1];
  }
};

RankedProbs rank_probs(const SuccessProbVector& q);

// Mask selecting the `volume` highest-ranked pixels.
SegMask top_mask(const RankedProbs& r, std::size_t volume);

enum class Algorithm { exact, trna, ba, automatic };
enum class ZeroOverZero { zero, one };
enum class Metric { dice, iou };

std::string_view to_string(Algorithm a) noexcept;
std::optional<Algorithm> parse_algorithm(std::string_view s) noexcept;
std::string_view to_string(Metric m) noexcept;
std::optional<Metric> parse_metric(std::string_view s) noexcept;

struct RankSegConfig {
  double gamma = 0.0;  // smoothing added to numerator and denominator
  Algorithm algorithm = Algorithm::automatic;
  double epsilon = 1e-4;  // tail tolerance of the truncated sums
  std::optional<std::size_t> d_cap;  // user upper bound on the volume
  ZeroOverZero zero_over_zero = ZeroOverZero::zero;
  // Explicit exact requests above this size are refused (see `force`).
  std::size_t dp_cap = kDefaultDpCap;

  // Throws invalid_argument.
  void validate() const;
};

// Expected-metric score for every candidate volume 0..d0.
struct VolumeSearchResult {
  std::vector<double> scores;
  std::size_t d0 = 0;
  std::size_t tau_hat = 0;
  Algorithm algorithm_used = Algorithm::exact;
  double sigma2 = 0.0;  // variance of the positive count
};

// Smallest maximizer of scores; fills tau_hat.
void select_volume(VolumeSearchResult& res);

}  // namespace rankseg

#endif  // RANKSEG_RANKING_HPP_
