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
#ifndef RANKSEG_SIMGEN_HPP_
#define RANKSEG_SIMGEN_HPP_

// Synthetic probability maps with known truth, and the two benchmark
// experiments comparing fixed thresholds against the ranking rule when the
// true probabilities are handed to both.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rankseg/prob_vector.hpp"
#include "rankseg/ranking.hpp"

namespace rankseg {

// Stateless generator: (seed, stream, index) -> uniform draw in (0,1).
// Draws never depend on the order they are requested in, which is what keeps
// simulations identical across thread counts.
class CounterRng {
 public:
  CounterRng(std::uint64_t seed, std::uint64_t stream);
  double uniform(std::uint64_t index) const noexcept;
  std::uint64_t key() const noexcept { return key_; }

 private:
  std::uint64_t key_;
};

// Child seed for sub-task `a` (and optionally `b`) of a run seeded with `seed`.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t a, std::uint64_t b = 0);

enum class DecayKind { step, exponential, linear };

// Background noise of step decay: N(beta, 0.1^2) truncated either to the
// standardized window [0,1] (values in [beta, beta + 0.1]) or to the unit
// probability interval.
enum class StepNoise { standardized, unit_interval };

std::string_view to_string(DecayKind k) noexcept;
std::optional<DecayKind> parse_decay(std::string_view s) noexcept;
std::optional<StepNoise> parse_step_noise(std::string_view s) noexcept;

struct DecaySpec {
  DecayKind kind = DecayKind::step;
  double beta = 0.1;
  double rho = 0.1;  // step only: side fraction of the high-probability block
  std::size_t width = 28;
  std::size_t height = 28;
  StepNoise step_noise = StepNoise::standardized;

  std::size_t pixels() const noexcept { return width * height; }
  // Throws invalid_argument.
  void validate() const;
};

// Pixel (w, h), both 0-based, lives at index w * height + h.
//   step:        U(0.5, 1) on w < floor(rho W), h < floor(rho H); noise elsewhere
//   exponential: beta^-(w + h)
//   linear:      1 - beta (w + h) / (W + H), clamped to [0, 1]
SuccessProbVector gen_probmap(const DecaySpec& spec, std::uint64_t seed);

// Independent Bernoulli labels, draw j from index j of the seed's stream.
SegMask sample_mask(const SuccessProbVector& p, std::uint64_t seed);

// Pixels with probability strictly above t.
SegMask threshold_mask(const SuccessProbVector& p, double t);

struct SimRow {
  std::string method;  // "threshold_<t>" or "rankdice"
  std::string decay;
  double beta = 0.0;
  std::optional<double> rho;  // step decay only
  bool rho_random = false;    // drawn per instance; printed as "random"
  std::size_t width = 0;
  std::size_t height = 0;
  double gamma = 0.0;
  double mean = 0.0;
  double std_error = 0.0;
  std::size_t replicates = 0;
};

struct SimReport {
  std::vector<SimRow> rows;

  // Header: method,decay,beta,rho,width,height,gamma,mean,stderr,replicates
  std::string to_csv() const;
  const SimRow* find(std::string_view method, std::string_view decay,
                     double beta) const;
};

// For each decay: `replicates` draws of (probabilities, labels); thresholding at
// 0.5 and the ranking rule both see the true probabilities.
SimReport run_example1(const std::vector<DecaySpec>& decays,
                       std::size_t replicates, const RankSegConfig& cfg,
                       std::uint64_t seed, std::size_t threads = 1);

struct Example2Instance {
  double rho = 0.0;
  double best_threshold = 0.0;  // first maximizer over the threshold grid
  double rankdice = 0.0;
};

struct Example2Result {
  SimReport report;
  std::vector<Example2Instance> instances;

  // rho,best_threshold,rankdice per instance.
  std::string instances_csv() const;
};

// Each instance draws its own block fraction rho ~ U(0,1) for a step map with
// beta = 0.1, then scores every fixed threshold and the ranking rule.
Example2Result run_example2(std::size_t n, std::size_t width, std::size_t height,
                            const std::vector<double>& thresholds,
                            const RankSegConfig& cfg, std::uint64_t seed,
                            std::size_t threads = 1,
                            StepNoise noise = StepNoise::standardized);

std::vector<double> default_thresholds();  // 0.1, 0.2, ..., 0.9

// The nine Example 1 scenarios: step 0.1/0.3/0.5, exponential 1.01/1.05/1.10,
// linear 1/2/4, all at the given shape.
std::vector<DecaySpec> example1_decays(std::size_t width, std::size_t height);

}  // namespace rankseg

#endif  // RANKSEG_SIMGEN_HPP_
