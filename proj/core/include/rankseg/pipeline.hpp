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
#ifndef RANKSEG_PIPELINE_HPP_
#define RANKSEG_PIPELINE_HPP_

// Dense-array entry points: shaped scores in, shaped 0/1 masks out. The CLI
// is a thin file layer over these, and in-process bindings can call them
// directly to get the same bytes.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "rankseg/multiseg.hpp"
#include "rankseg/ranking.hpp"

namespace rankseg {

enum class Activation { none, sigmoid, softmax };
std::string_view to_string(Activation a) noexcept;
std::optional<Activation> parse_activation(std::string_view s) noexcept;

// C-order tensor of doubles.
struct DenseArray {
  std::vector<std::size_t> shape;
  std::vector<double> values;

  std::size_t element_count() const noexcept;
};

// How a shape maps onto (classes, pixels):
//   (d)       one class
//   (H, W)    one class, unless class_axis: then (K, d)
//   (K, H, W) K classes
// Softmax needs a class axis, so it implies class_axis for 2-D input.
struct Layout {
  std::size_t classes = 1;
  std::size_t pixels = 0;
};
Layout resolve_layout(std::span<const std::size_t> shape, bool class_axis,
                      Activation activation);

// sigmoid: 1 / (1 + exp(-z / T)) elementwise.
// softmax: exp(z_k / T) / sum_k exp(z_k / T) per pixel over classes, with the
//          per-pixel max subtracted first.
// none:    values must already be probabilities; passed through.
ProbMap apply_temperature(std::span<const double> values, Layout layout,
                          double temperature, Activation activation);

struct PredictOptions {
  RankSegConfig config;
  Metric metric = Metric::dice;
  Activation activation = Activation::none;
  double temperature = 1.0;
  bool class_axis = false;
  std::size_t threads = 1;
  bool force = false;  // allow exact scoring above config.dp_cap
};

struct DensePrediction {
  std::vector<std::size_t> shape;  // same as the input
  std::vector<std::uint8_t> mask;  // C-order, 0/1
  MultiPrediction detail;
};

DensePrediction predict_dense(const DenseArray& input, const PredictOptions& opt);

}  // namespace rankseg

#endif  // RANKSEG_PIPELINE_HPP_
