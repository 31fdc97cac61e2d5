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
#ifndef RANKSEG_MULTISEG_HPP_
#define RANKSEG_MULTISEG_HPP_

// Overlapping multi-class prediction: each class row is its own binary
// problem, so masks may overlap.

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "rankseg/prob_vector.hpp"
#include "rankseg/ranking.hpp"

namespace rankseg {

// Row-major (classes x pixels) probabilities.
struct ProbMap {
  std::size_t classes = 0;
  std::size_t pixels = 0;
  std::vector<double> data;
  std::vector<std::string> class_names;  // empty or one per class

  ProbMap() = default;
  ProbMap(std::size_t k, std::size_t d, std::vector<double> values);

  std::span<const double> row(std::size_t k) const {
    return std::span<const double>(data).subspan(k * pixels, pixels);
  }
  // Throws shape_mismatch / invalid_argument.
  void validate() const;
};

struct MultiMask {
  std::size_t classes = 0;
  std::size_t pixels = 0;
  std::vector<SegMask> masks;  // one per class

  MultiMask() = default;
  MultiMask(std::size_t k, std::size_t d)
      : classes(k), pixels(d), masks(k, SegMask(d)) {}
  explicit MultiMask(std::vector<SegMask> rows);

  friend bool operator==(const MultiMask&, const MultiMask&) = default;
};

struct MultiPrediction {
  MultiMask masks;
  std::vector<VolumeSearchResult> per_class;
  std::vector<double> millis;  // wall time per class
};

// Classes are scored concurrently on up to `threads` workers; results do not
// depend on the thread count. A failing class is reported as
// "class <k>: <reason>" with the original error code.
MultiPrediction predict_multi(const ProbMap& pm, const RankSegConfig& cfg,
                              Metric metric, std::size_t threads = 1,
                              bool force = false);

struct ClassWeights {
  std::vector<double> alpha;
  bool undefined = false;  // no class present in either mask
};

// Equal weight over classes present in the ground truth or the prediction,
// zero for the rest.
ClassWeights mdice_weights(const MultiMask& gt, const MultiMask& pred);

}  // namespace rankseg

#endif  // RANKSEG_MULTISEG_HPP_
