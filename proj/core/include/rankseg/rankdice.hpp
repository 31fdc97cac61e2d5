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
#ifndef RANKSEG_RANKDICE_HPP_
#define RANKSEG_RANKDICE_HPP_

// Dice-optimal volume search. Every rule here selects the top-tau ranked
// pixels; the work is in scoring each tau by its expected Dice.

#include <cstddef>
#include <optional>

#include "rankseg/prob_vector.hpp"
#include "rankseg/ranking.hpp"

namespace rankseg {

// Past this volume the expected Dice can no longer improve. d if never hit,
// then min'ed with d_cap.
std::size_t shrink_bound(const RankedProbs& r, double gamma,
                         std::optional<std::size_t> d_cap = std::nullopt);

// Exact scores for tau = 0..d0 using leave-one-out laws built without
// deconvolution.
VolumeSearchResult score_exact(const RankedProbs& r, double gamma,
                               std::size_t d0,
                               ZeroOverZero zz = ZeroOverZero::zero);

// Skew-corrected normal approximation summed over the count window that
// holds all but eps of the mass. Throws variance_too_small below 25.
VolumeSearchResult score_trna(const RankedProbs& r, double gamma, double eps,
                              std::size_t d0,
                              ZeroOverZero zz = ZeroOverZero::zero);

// Like score_trna but with the full law standing in for every leave-one-out
// law, so all volumes come out of one FFT cross-correlation.
VolumeSearchResult score_ba(const RankedProbs& r, double gamma, double eps,
                            std::size_t d0,
                            ZeroOverZero zz = ZeroOverZero::zero);

// Minimum variance the approximate modes accept.
inline constexpr double kMinApproxVariance = 25.0;

struct DicePrediction {
  SegMask mask;
  VolumeSearchResult search;
};

// rank -> bound -> score -> top-tau. `force` lifts cfg.dp_cap for exact.
DicePrediction predict_dice(const SuccessProbVector& q, const RankSegConfig& cfg,
                            bool force = false);

// Worst-case |approx - exact| for one volume, for the two approximate modes.
double trna_error_bound(const PBMoments& m, std::size_t tau, double gamma,
                        double eps);
double ba_error_bound(const PBMoments& m, std::size_t tau, double gamma,
                      double eps);

// Expected Dice of a fixed mask by enumerating all 2^d label vectors.
// d <= 20, otherwise size_exceeded.
double expected_dice_oracle(const SuccessProbVector& q, const SegMask& mask,
                            double gamma, ZeroOverZero zz = ZeroOverZero::zero);

inline constexpr std::size_t kOracleMaxPixels = 20;

}  // namespace rankseg

#endif  // RANKSEG_RANKDICE_HPP_
