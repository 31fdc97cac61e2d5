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
#include "rankseg/pipeline.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <string>

#include "rankseg/error.hpp"

namespace rankseg {

std::string_view to_string(Activation a) noexcept {
  switch (a) {
    case Activation::none:
      return "none";
    case Activation::sigmoid:
      return "sigmoid";
    case Activation::softmax:
      return "softmax";
  }
  return "none";
}

std::optional<Activation> parse_activation(std::string_view s) noexcept {
  if (s == "none") return Activation::none;
  if (s == "sigmoid") return Activation::sigmoid;
  if (s == "softmax") return Activation::softmax;
  return std::nullopt;
}

std::size_t DenseArray::element_count() const noexcept {
  return std::accumulate(shape.begin(), shape.end(), std::size_t{1},
                         std::multiplies<>());
}

Layout resolve_layout(std::span<const std::size_t> shape, bool class_axis,
                      Activation activation) {
  const bool classes_first = class_axis || activation == Activation::softmax;
  switch (shape.size()) {
    case 1:
      if (activation == Activation::softmax) {
        throw Error(Errc::shape_mismatch, "softmax needs a class axis; got a 1-D input");
      }
      return Layout{1, shape[0]};
    case 2:
      if (classes_first) return Layout{shape[0], shape[1]};
      return Layout{1, shape[0] * shape[1]};
    case 3:
      return Layout{shape[0], shape[1] * shape[2]};
    default:
      throw Error(Errc::shape_mismatch,
                  "expected 1, 2 or 3 dimensions, got " + std::to_string(shape.size()));
  }
}

ProbMap apply_temperature(std::span<const double> values, Layout layout,
                          double temperature, Activation activation) {
  if (!(temperature > 0.0) || !std::isfinite(temperature)) {
    throw Error(Errc::invalid_argument, "temperature must be positive");
  }
  if (values.size() != layout.classes * layout.pixels) {
    throw Error(Errc::shape_mismatch, "value count does not match the layout");
  }
  if (layout.classes == 0) throw Error(Errc::shape_mismatch, "no classes");
  std::vector<double> p(values.size());
  switch (activation) {
    case Activation::none:
      for (std::size_t i = 0; i < values.size(); ++i) {
        if (!(values[i] >= 0.0 && values[i] <= 1.0)) {
          throw Error(Errc::invalid_argument,
                      "value at flat index " + std::to_string(i) +
                          " is not a probability; pass an activation for logits");
        }
        p[i] = values[i];
      }
      break;
    case Activation::sigmoid:
      for (std::size_t i = 0; i < values.size(); ++i) {
        p[i] = 1.0 / (1.0 + std::exp(-values[i] / temperature));
      }
      break;
    case Activation::softmax: {
      const std::size_t K = layout.classes, d = layout.pixels;
      for (std::size_t j = 0; j < d; ++j) {
        double top = values[j];
        for (std::size_t k = 1; k < K; ++k) top = std::max(top, values[k * d + j]);
        double total = 0.0;
        for (std::size_t k = 0; k < K; ++k) {
          const double e = std::exp((values[k * d + j] - top) / temperature);
          p[k * d + j] = e;
          total += e;
        }
        for (std::size_t k = 0; k < K; ++k) p[k * d + j] /= total;
      }
      break;
    }
  }
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (std::isnan(p[i])) {
      throw Error(Errc::invalid_argument,
                  "non-finite input at flat index " + std::to_string(i));
    }
  }
  return ProbMap(layout.classes, layout.pixels, std::move(p));
}

DensePrediction predict_dense(const DenseArray& input, const PredictOptions& opt) {
  if (input.values.size() != input.element_count()) {
    throw Error(Errc::shape_mismatch, "array values do not match its shape");
  }
  const Layout layout = resolve_layout(input.shape, opt.class_axis, opt.activation);
  const ProbMap pm =
      apply_temperature(input.values, layout, opt.temperature, opt.activation);
  DensePrediction out;
  out.shape = input.shape;
  out.detail = predict_multi(pm, opt.config, opt.metric, opt.threads, opt.force);
  out.mask.resize(input.values.size());
  for (std::size_t k = 0; k < layout.classes; ++k) {
    const SegMask& m = out.detail.masks.masks[k];
    std::copy(m.bits.begin(), m.bits.end(),
              out.mask.begin() + static_cast<std::ptrdiff_t>(k * layout.pixels));
  }
  return out;
}

}  // namespace rankseg
