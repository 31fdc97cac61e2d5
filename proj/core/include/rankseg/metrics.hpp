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
#ifndef RANKSEG_METRICS_HPP_
#define RANKSEG_METRICS_HPP_

// Empirical Dice / IoU. Per-instance averaging is the default; the pooled
// mode sums counts over the dataset first and is biased toward large
// instances, so every output labels it as such.

#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <utility>

#include "rankseg/multiseg.hpp"
#include "rankseg/prob_vector.hpp"
#include "rankseg/ranking.hpp"

namespace rankseg {

struct Confusion {
  std::size_t tp = 0;
  std::size_t fp = 0;
  std::size_t fn = 0;
};

// Throws shape_mismatch on length mismatch.
Confusion confusion(const SegMask& y, const SegMask& yhat);

double dice_instance(const SegMask& y, const SegMask& yhat, double gamma,
                     ZeroOverZero zz = ZeroOverZero::zero);
double iou_instance(const SegMask& y, const SegMask& yhat, double gamma,
                    ZeroOverZero zz = ZeroOverZero::zero);
double metric_instance(Metric metric, const SegMask& y, const SegMask& yhat,
                       double gamma, ZeroOverZero zz = ZeroOverZero::zero);

enum class EvalMode { instance, pooled };
std::string_view to_string(EvalMode m) noexcept;  // "instance" / "pooled_biased"

struct EvalSummary {
  double mean = 0.0;
  std::optional<double> std_error;  // instance mode only
  std::size_t n_instances = 0;      // instances that entered the mean
  std::size_t n_excluded = 0;
  EvalMode mode = EvalMode::instance;
};

// Ground truth first, prediction second.
using MaskPair = std::pair<SegMask, SegMask>;

// Throws empty_input / shape_mismatch.
EvalSummary eval_dataset(std::span<const MaskPair> pairs, double gamma,
                         EvalMode mode, Metric metric,
                         ZeroOverZero zz = ZeroOverZero::zero);

// Class-weighted multi-class score. Instances where no class is present in
// either mask are excluded and counted in n_excluded. Pooled mode pools
// counts per class over the dataset, then applies the weight rule to the
// pooled masks' presence.
EvalSummary mdice_eval(std::span<const MultiMask> gts,
                       std::span<const MultiMask> preds, double gamma,
                       Metric metric, EvalMode mode = EvalMode::instance,
                       ZeroOverZero zz = ZeroOverZero::zero);

// Order-fixed pairwise summation, so reductions do not depend on how the
// values were produced.
double pairwise_sum(std::span<const double> v);

}  // namespace rankseg

#endif  // RANKSEG_METRICS_HPP_
