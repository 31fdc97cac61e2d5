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
#include <iostream>
#include <map>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "commands.hpp"

namespace {

using namespace rankseg;

const std::map<std::string, Algorithm> kAlgos{{"exact", Algorithm::exact},
                                              {"trna", Algorithm::trna},
                                              {"ba", Algorithm::ba},
                                              {"auto", Algorithm::automatic}};
const std::map<std::string, Metric> kMetrics{{"dice", Metric::dice}, {"iou", Metric::iou}};
const std::map<std::string, ZeroOverZero> kZz{{"zero", ZeroOverZero::zero},
                                              {"one", ZeroOverZero::one}};
const std::map<std::string, Activation> kActivations{{"none", Activation::none},
                                                     {"sigmoid", Activation::sigmoid},
                                                     {"softmax", Activation::softmax}};
const std::map<std::string, DecayKind> kDecays{{"step", DecayKind::step},
                                               {"exp", DecayKind::exponential},
                                               {"exponential", DecayKind::exponential},
                                               {"linear", DecayKind::linear}};
const std::map<std::string, StepNoise> kNoise{{"standardized", StepNoise::standardized},
                                              {"unit", StepNoise::unit_interval}};

// Binds a string flag to an enum through a lookup table.
template <class T, class E>
CLI::Option* enum_option(CLI::App* app, const std::string& name, T& target,
                         const std::map<std::string, E>& table, const std::string& desc) {
  std::vector<std::string> keys;
  for (const auto& kv : table) keys.push_back(kv.first);
  return app
      ->add_option_function<std::string>(
          name, [&target, &table](const std::string& s) { target = table.at(s); }, desc)
      ->check(CLI::IsMember(keys, CLI::ignore_case));
}

// Flags shared by commands that run the volume search.
void add_search_flags(CLI::App* app, RankSegConfig& cfg, std::size_t& threads,
                      std::optional<std::size_t>& d_cap) {
  app->add_option("--gamma", cfg.gamma, "Smoothing term (>= 0)")->check(CLI::NonNegativeNumber);
  enum_option(app, "--algo", cfg.algorithm, kAlgos, "Scoring algorithm");
  app->add_option("--eps", cfg.epsilon, "Tail tolerance of the truncated sums, in (0, 0.5)");
  enum_option(app, "--zero-over-zero", cfg.zero_over_zero, kZz,
              "Score of an empty prediction on an empty truth when gamma = 0");
  app->add_option("--d-cap", d_cap, "Upper bound on the predicted volume")
      ->check(CLI::PositiveNumber);
  app->add_option("--threads", threads, "Worker threads")->check(CLI::PositiveNumber);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Dice/IoU-optimal segmentation masks from probability maps"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string("rankseg 0.1.0"));

  // predict
  cli::PredictArgs pa;
  std::optional<std::size_t> pa_cap;
  std::string pa_sidecar;
  auto* predict = app.add_subcommand("predict", "Turn probability maps into masks");
  predict->add_option("input", pa.input, "Input .npy file or directory")->required();
  predict->add_option("--out,-o", pa.output, "Output mask file (or directory)")->required();
  predict->add_option("--sidecar", pa_sidecar, "JSON metadata path (default: <out>.json)");
  enum_option(predict, "--metric", pa.options.metric, kMetrics, "Target metric");
  enum_option(predict, "--activation", pa.options.activation, kActivations, "Input activation");
  predict->add_option("--temperature", pa.options.temperature, "Temperature for the activation")
      ->check(CLI::PositiveNumber);
  predict->add_flag("--class-axis", pa.options.class_axis,
                    "Treat the first axis of a 2-D input as classes");
  predict->add_flag("--force", pa.options.force, "Allow exact scoring above the size cap");
  predict->add_option("--dp-cap", pa.options.config.dp_cap, "Size cap for exact scoring");
  std::uint64_t pa_seed = 0;
  predict->add_option("--seed", pa_seed,
                      "Accepted for interface uniformity; prediction is deterministic");
  add_search_flags(predict, pa.options.config, pa.options.threads, pa_cap);

  // eval
  cli::EvalArgs ea;
  std::size_t ea_threads = 1;
  auto* eval = app.add_subcommand("eval", "Score predicted masks against ground truth");
  eval->add_option("--pred", ea.pred, "Prediction .npy file or directory")->required();
  eval->add_option("--gt", ea.gt, "Ground-truth .npy file or directory")->required();
  eval->add_option("--gamma", ea.gamma, "Smoothing term")->check(CLI::NonNegativeNumber);
  enum_option(eval, "--metric", ea.metric, kMetrics, "Metric");
  enum_option(eval, "--zero-over-zero", ea.zero_over_zero, kZz,
              "Empty-vs-empty score when gamma = 0");
  eval->add_flag("--multiclass", ea.multiclass, "Leading axis of every file is the class axis");
  eval->add_option("--out,-o", ea.output, "Write the CSV here instead of stdout");
  eval->add_option("--threads", ea_threads, "Accepted for interface uniformity");

  // simulate
  cli::SimulateArgs sa;
  std::optional<std::size_t> sa_cap;
  std::string sa_shape;
  auto* simulate = app.add_subcommand("simulate", "Run a synthetic experiment");
  simulate->add_option("scenario", sa.scenario, "example1 or example2")->required();
  enum_option(simulate, "--decay", sa.decay, kDecays,
              "example1: single decay (default: all nine)");
  simulate->add_option("--beta", sa.beta, "Decay parameter");
  simulate->add_option("--rho", sa.rho, "Step decay block fraction");
  simulate->add_option("--shape", sa_shape, "WxH, e.g. 28x28");
  simulate->add_option("--reps", sa.reps, "example1 replicates")->check(CLI::PositiveNumber);
  simulate->add_option("--n", sa.n, "example2 instances")->check(CLI::PositiveNumber);
  simulate->add_option("--thresholds", sa.thresholds, "example2 threshold grid")->delimiter(',');
  simulate->add_option("--seed", sa.seed, "Random seed");
  enum_option(simulate, "--step-noise", sa.step_noise, kNoise,
              "Step background truncation: standardized or unit");
  simulate->add_option("--out,-o", sa.output, "Write the CSV here instead of stdout");
  simulate->add_option("--instances-out", sa.instances_output,
                       "example2: per-instance rho / best threshold CSV");
  add_search_flags(simulate, sa.config, sa.threads, sa_cap);

  // bench
  cli::BenchArgs ba;
  std::string ba_profile = "all";
  std::vector<std::string> ba_algos;
  auto* bench = app.add_subcommand("bench", "Time the scoring algorithms");
  bench->add_option("--min-log2", ba.min_log2, "Smallest size as a power of two");
  bench->add_option("--max-log2", ba.max_log2, "Largest size as a power of two");
  bench->add_option("--profile", ba_profile, "well-separated, diffuse or all")
      ->check(CLI::IsMember({"well-separated", "diffuse", "all"}));
  bench->add_option("--algos", ba_algos, "Comma-separated subset of exact,trna,ba")
      ->delimiter(',')
      ->check(CLI::IsMember({"exact", "trna", "ba"}));
  bench->add_option("--seed", ba.seed, "Random seed for the profiles");
  bench->add_option("--gamma", ba.gamma, "Smoothing term")->check(CLI::NonNegativeNumber);
  bench->add_option("--eps", ba.epsilon, "Tail tolerance");
  bench->add_option("--dp-cap", ba.dp_cap, "Size cap for exact scoring");
  bench->add_flag("--force", ba.force, "Run exact scoring above the cap");
  bench->add_option("--threads", ba.threads, "Accepted for interface uniformity");
  bench->add_option("--out,-o", ba.output, "CSV path (one file per profile)");

  CLI11_PARSE(app, argc, argv);

  if (*predict) {
    pa.options.config.d_cap = pa_cap;
    if (!pa_sidecar.empty()) pa.sidecar = pa_sidecar;
    return cli::cmd_predict(pa, std::cout, std::cerr);
  }
  if (*eval) return cli::cmd_eval(ea, std::cout, std::cerr);
  if (*simulate) {
    sa.config.d_cap = sa_cap;
    if (!sa_shape.empty()) {
      std::size_t w = 0, h = 0;
      char x = 0;
      std::istringstream is(sa_shape);
      if (!(is >> w >> x >> h) || (x != 'x' && x != 'X') || w == 0 || h == 0) {
        std::cerr << "rankseg simulate: error: --shape expects WxH, got '" << sa_shape << "'\n";
        return 2;
      }
      sa.width = w;
      sa.height = h;
    }
    return cli::cmd_simulate(sa, std::cout, std::cerr);
  }
  if (*bench) {
    if (ba_profile != "all") ba.profiles = {ba_profile};
    if (!ba_algos.empty()) {
      ba.algos.clear();
      for (const std::string& a : ba_algos) ba.algos.push_back(kAlgos.at(a));
    }
    return cli::cmd_bench(ba, std::cout, std::cerr);
  }
  return 0;
}
