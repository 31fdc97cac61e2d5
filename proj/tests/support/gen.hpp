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
#ifndef RANKSEG_TESTS_GEN_HPP_
#define RANKSEG_TESTS_GEN_HPP_

// Small seeded generators for property tests.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

namespace gen {

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : eng_(seed) {}

  double uniform(double lo = 0.0, double hi = 1.0) {
    return std::uniform_real_distribution<double>(lo, hi)(eng_);
  }
  std::size_t size(std::size_t lo, std::size_t hi) {  // inclusive
    return std::uniform_int_distribution<std::size_t>(lo, hi)(eng_);
  }
  bool coin(double p = 0.5) { return uniform() < p; }
  double beta(double a, double b) {
    const double x = std::gamma_distribution<double>(a, 1.0)(eng_);
    const double y = std::gamma_distribution<double>(b, 1.0)(eng_);
    return x / (x + y);
  }

  // Probabilities from a randomly chosen shape. `edgy` mixes in exact 0/1
  // entries and ties on a coarse grid.
  std::vector<double> probs(std::size_t d, bool edgy = true) {
    const std::size_t shape = size(0, edgy ? 4 : 2);
    std::vector<double> q(d);
    for (double& v : q) {
      switch (shape) {
        case 0:
          v = uniform();
          break;
        case 1:
          v = beta(0.5, 0.5);
          break;
        case 2:
          v = coin(0.3) ? uniform(0.5, 1.0) : uniform(0.0, 0.2);
          break;
        case 3:
          v = static_cast<double>(size(0, 10)) / 10.0;
          break;
        default:
          v = coin(0.2) ? static_cast<double>(size(0, 1)) : uniform();
          break;
      }
    }
    return q;
  }

  std::vector<double> probs_in(std::size_t d, double lo, double hi) {
    std::vector<double> q(d);
    for (double& v : q) v = uniform(lo, hi);
    return q;
  }

  std::vector<std::size_t> permutation(std::size_t d) {
    std::vector<std::size_t> p(d);
    for (std::size_t i = 0; i < d; ++i) p[i] = i;
    std::shuffle(p.begin(), p.end(), eng_);
    return p;
  }

  std::mt19937_64& engine() { return eng_; }

 private:
  std::mt19937_64 eng_;
};

}  // namespace gen

#endif  // RANKSEG_TESTS_GEN_HPP_
