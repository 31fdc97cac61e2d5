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
#ifndef RANKSEG_TOOLS_COMMANDS_HPP_
#define RANKSEG_TOOLS_COMMANDS_HPP_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "rankseg/metrics.hpp"
#include "rankseg/pipeline.hpp"
#include "rankseg/simgen.hpp"

namespace rankseg::cli {

namespace fs = std::filesystem;

struct PredictArgs {
  fs::path input;   // .npy file or a directory of them
  fs::path output;  // file, or directory when input is one
  std::optional<fs::path> sidecar;  // default: output with .json extension
  PredictOptions options;
};

struct EvalArgs {
  fs::path pred;
  fs::path gt;
  double gamma = 0.0;
  Metric metric = Metric::dice;
  ZeroOverZero zero_over_zero = ZeroOverZero::zero;
  bool multiclass = false;  // leading axis of each file is the class axis
  std::optional<fs::path> output;
};

struct SimulateArgs {
  std::string scenario;  // example1 | example2
  std::optional<DecayKind> decay;
  std::optional<double> beta;
  double rho = 0.1;
  std::optional<std::size_t> width, height;
  std::size_t reps = 100;
  std::size_t n = 2000;
  std::vector<double> thresholds;  // empty: 0.1 .. 0.9
  std::uint64_t seed = 0;
  StepNoise step_noise = StepNoise::standardized;
  RankSegConfig config;
  std::size_t threads = 1;
  std::optional<fs::path> output;
  std::optional<fs::path> instances_output;  // example2 per-instance data
};

struct BenchArgs {
  unsigned min_log2 = 8;
  unsigned max_log2 = 18;
  std::vector<Algorithm> algos{Algorithm::exact, Algorithm::trna, Algorithm::ba};
  std::vector<std::string> profiles{"well-separated", "diffuse"};
  std::uint64_t seed = 0;
  double gamma = 0.0;
  double epsilon = 1e-4;
  std::size_t dp_cap = kDefaultDpCap;
  bool force = false;
  std::size_t threads = 1;
  std::optional<fs::path> output;
};

// Each returns a process exit status; diagnostics go to `err`, reports to `out`.
int cmd_predict(const PredictArgs& args, std::ostream& out, std::ostream& err);
int cmd_eval(const EvalArgs& args, std::ostream& out, std::ostream& err);
int cmd_simulate(const SimulateArgs& args, std::ostream& out, std::ostream& err);
int cmd_bench(const BenchArgs& args, std::ostream& out, std::ostream& err);

// Probability profile used by the bench, exposed for tests.
std::vector<double> bench_profile(const std::string& name, std::size_t d,
                                  std::uint64_t seed);

}  // namespace rankseg::cli

#endif  // RANKSEG_TOOLS_COMMANDS_HPP_
