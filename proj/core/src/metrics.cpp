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
#include "rankseg/metrics.hpp"

#include <cmath>
#include <string>
#include <vector>

#include "rankseg/error.hpp"

namespace rankseg {

Confusion confusion(const SegMask& y, const SegMask& yhat) {
  if (y.size() != yhat.size()) {
    throw Error(Errc::shape_mismatch,
                "mask lengths differ: " + std::to_string(y.size()) + " vs " +
                    std::to_string(yhat.size()));
  }
  Confusion c;
  for (std::size_t j = 0; j < y.size(); ++j) {
    const bool a = y.bits[j] != 0, b = yhat.bits[j] != 0;
    c.tp += a && b;
    c.fn += a && !b;
    c.fp += !a && b;
  }
  return c;
}

namespace {

double ratio(double num, double den, ZeroOverZero zz) {
  if (den == 0.0) return zz == ZeroOverZero::one ? 1.0 : 0.0;
  return num / den;
}

// Shared by instance and pooled forms: overlap, |y|, |yhat| (possibly means).
double metric_from_counts(Metric metric, double tp, double ny, double nv,
                          double gamma, ZeroOverZero zz) {
  if (metric == Metric::dice) return ratio(2.0 * tp + gamma, ny + nv + gamma, zz);
  return ratio(tp + gamma, ny + nv - tp + gamma, zz);
}

double standard_error(std::span<const double> v, double mean) {
  if (v.size() < 2) return 0.0;
  std::vector<double> sq(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) sq[i] = (v[i] - mean) * (v[i] - mean);
  const double var = pairwise_sum(sq) / static_cast<double>(v.size() - 1);
  return std::sqrt(var / static_cast<double>(v.size()));
}

EvalSummary summarize_instances(std::span<const double> scores,
                                std::size_t excluded) {
  EvalSummary s;
  s.mode = EvalMode::instance;
  s.n_instances = scores.size();
  s.n_excluded = excluded;
  if (scores.empty()) {
    s.std_error = 0.0;
    return s;
  }
  s.mean = pairwise_sum(scores) / static_cast<double>(scores.size());
  s.std_error = standard_error(scores, s.mean);
  return s;
}

}  // namespace

double dice_instance(const SegMask& y, const SegMask& yhat, double gamma,
                     ZeroOverZero zz) {
  return metric_instance(Metric::dice, y, yhat, gamma, zz);
}

double iou_instance(const SegMask& y, const SegMask& yhat, double gamma,
                    ZeroOverZero zz) {
  return metric_instance(Metric::iou, y, yhat, gamma, zz);
}

double metric_instance(Metric metric, const SegMask& y, const SegMask& yhat,
                       double gamma, ZeroOverZero zz) {
  const Confusion c = confusion(y, yhat);
  const double tp = static_cast<double>(c.tp);
  return metric_from_counts(metric, tp, tp + static_cast<double>(c.fn),
                            tp + static_cast<double>(c.fp), gamma, zz);
}

std::string_view to_string(EvalMode m) noexcept {
  return m == EvalMode::instance ? "instance" : "pooled_biased";
}

double pairwise_sum(std::span<const double> v) {
  if (v.size() <= 8) {
    double acc = 0.0;
    for (double x : v) acc += x;
    return acc;
  }
  const std::size_t half = v.size() / 2;
  return pairwise_sum(v.first(half)) + pairwise_sum(v.subspan(half));
}

EvalSummary eval_dataset(std::span<const MaskPair> pairs, double gamma,
                         EvalMode mode, Metric metric, ZeroOverZero zz) {
  if (pairs.empty()) throw Error(Errc::empty_input, "no instances to evaluate");
  if (mode == EvalMode::instance) {
    std::vector<double> scores(pairs.size());
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      scores[i] = metric_instance(metric, pairs[i].first, pairs[i].second, gamma, zz);
    }
    return summarize_instances(scores, 0);
  }
  std::vector<double> tp(pairs.size()), ny(pairs.size()), nv(pairs.size());
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const Confusion c = confusion(pairs[i].first, pairs[i].second);
    tp[i] = static_cast<double>(c.tp);
    ny[i] = static_cast<double>(c.tp + c.fn);
    nv[i] = static_cast<double>(c.tp + c.fp);
  }
  const double m = static_cast<double>(pairs.size());
  EvalSummary s;
  s.mode = EvalMode::pooled;
  s.n_instances = pairs.size();
  s.mean = metric_from_counts(metric, pairwise_sum(tp) / m, pairwise_sum(ny) / m,
                              pairwise_sum(nv) / m, gamma, zz);
  return s;
}

EvalSummary mdice_eval(std::span<const MultiMask> gts,
                       std::span<const MultiMask> preds, double gamma,
                       Metric metric, EvalMode mode, ZeroOverZero zz) {
  if (gts.size() != preds.size()) {
    throw Error(Errc::shape_mismatch, "ground truth and prediction counts differ");
  }
  if (gts.empty()) throw Error(Errc::empty_input, "no instances to evaluate");
  const std::size_t k_classes = gts.front().classes;
  for (std::size_t i = 0; i < gts.size(); ++i) {
    if (gts[i].classes != k_classes || preds[i].classes != k_classes) {
      throw Error(Errc::shape_mismatch,
                  "instance " + std::to_string(i) + " has a different class count");
    }
  }

  if (mode == EvalMode::instance) {
    std::vector<double> scores;
    scores.reserve(gts.size());
    std::size_t excluded = 0;
    for (std::size_t i = 0; i < gts.size(); ++i) {
      const ClassWeights w = mdice_weights(gts[i], preds[i]);
      if (w.undefined) {
        ++excluded;
        continue;
      }
      std::vector<double> terms(k_classes, 0.0);
      for (std::size_t k = 0; k < k_classes; ++k) {
        if (w.alpha[k] == 0.0) continue;
        terms[k] = w.alpha[k] * metric_instance(metric, gts[i].masks[k],
                                                preds[i].masks[k], gamma, zz);
      }
      scores.push_back(pairwise_sum(terms));
    }
    return summarize_instances(scores, excluded);
  }

  // Pooled: per-class means of the counts over all instances.
  const double m = static_cast<double>(gts.size());
  std::vector<double> per_class;
  for (std::size_t k = 0; k < k_classes; ++k) {
    std::vector<double> tp(gts.size()), ny(gts.size()), nv(gts.size());
    for (std::size_t i = 0; i < gts.size(); ++i) {
      const Confusion c = confusion(gts[i].masks[k], preds[i].masks[k]);
      tp[i] = static_cast<double>(c.tp);
      ny[i] = static_cast<double>(c.tp + c.fn);
      nv[i] = static_cast<double>(c.tp + c.fp);
    }
    const double sy = pairwise_sum(ny), sv = pairwise_sum(nv);
    if (sy + sv == 0.0) continue;  // class never present nor predicted
    per_class.push_back(
        metric_from_counts(metric, pairwise_sum(tp) / m, sy / m, sv / m, gamma, zz));
  }
  EvalSummary s;
  s.mode = EvalMode::pooled;
  s.n_instances = gts.size();
  if (!per_class.empty()) {
    s.mean = pairwise_sum(per_class) / static_cast<double>(per_class.size());
  }
  return s;
}

}  // namespace rankseg
