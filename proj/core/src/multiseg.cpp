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
#include "rankseg/multiseg.hpp"

#include <chrono>
#include <string>

#include "rankseg/error.hpp"
#include "rankseg/parallel.hpp"
#include "rankseg/rankdice.hpp"
#include "rankseg/rankiou.hpp"

namespace rankseg {

ProbMap::ProbMap(std::size_t k, std::size_t d, std::vector<double> values)
    : classes(k), pixels(d), data(std::move(values)) {
  validate();
}

void ProbMap::validate() const {
  if (classes == 0) throw Error(Errc::shape_mismatch, "probability map has no classes");
  if (data.size() != classes * pixels) {
    throw Error(Errc::shape_mismatch,
                "probability map holds " + std::to_string(data.size()) +
                    " values, expected " + std::to_string(classes) + "x" +
                    std::to_string(pixels));
  }
  if (!class_names.empty() && class_names.size() != classes) {
    throw Error(Errc::shape_mismatch, "class name count differs from class count");
  }
  for (std::size_t i = 0; i < data.size(); ++i) {
    if (!(data[i] >= 0.0 && data[i] <= 1.0)) {
      throw Error(Errc::invalid_argument,
                  "probability out of [0,1] at class " + std::to_string(i / pixels) +
                      ", pixel " + std::to_string(i % pixels));
    }
  }
}

MultiMask::MultiMask(std::vector<SegMask> rows)
    : classes(rows.size()),
      pixels(rows.empty() ? 0 : rows.front().size()),
      masks(std::move(rows)) {
  for (const SegMask& m : masks) {
    if (m.size() != pixels) {
      throw Error(Errc::shape_mismatch, "class masks differ in length");
    }
  }
}

MultiPrediction predict_multi(const ProbMap& pm, const RankSegConfig& cfg,
                              Metric metric, std::size_t threads, bool force) {
  pm.validate();
  cfg.validate();
  MultiPrediction out;
  out.masks = MultiMask(pm.classes, pm.pixels);
  out.per_class.resize(pm.classes);
  out.millis.resize(pm.classes);
  parallel_for(pm.classes, threads, [&](std::size_t k) {
    const auto start = std::chrono::steady_clock::now();
    try {
      const SuccessProbVector q = SuccessProbVector::from_span(pm.row(k));
      if (metric == Metric::dice) {
        DicePrediction p = predict_dice(q, cfg, force);
        out.masks.masks[k] = std::move(p.mask);
        out.per_class[k] = std::move(p.search);
      } else {
        IoUPrediction p = predict_iou(q, cfg, force);
        out.masks.masks[k] = std::move(p.mask);
        out.per_class[k] = std::move(p.search);
      }
    } catch (const Error& e) {
      throw Error(e.code(), "class " + std::to_string(k) + ": " + e.detail());
    }
    out.millis[k] = std::chrono::duration<double, std::milli>(
                        std::chrono::steady_clock::now() - start)
                        .count();
  });
  return out;
}

ClassWeights mdice_weights(const MultiMask& gt, const MultiMask& pred) {
  if (gt.classes != pred.classes || gt.pixels != pred.pixels) {
    throw Error(Errc::shape_mismatch, "ground truth and prediction shapes differ");
  }
  ClassWeights w;
  w.alpha.assign(gt.classes, 0.0);
  std::size_t active = 0;
  for (std::size_t k = 0; k < gt.classes; ++k) {
    if (gt.masks[k].count() + pred.masks[k].count() > 0) ++active;
  }
  if (active == 0) {
    w.undefined = true;
    return w;
  }
  const double share = 1.0 / static_cast<double>(active);
  for (std::size_t k = 0; k < gt.classes; ++k) {
    if (gt.masks[k].count() + pred.masks[k].count() > 0) w.alpha[k] = share;
  }
  return w;
}

}  // namespace rankseg
