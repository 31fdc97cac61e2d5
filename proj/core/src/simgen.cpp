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
#include "rankseg/simgen.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <iomanip>
#include <sstream>

#include "rankseg/error.hpp"
#include "rankseg/metrics.hpp"
#include "rankseg/parallel.hpp"
#include "rankseg/pbdist.hpp"
#include "rankseg/rankdice.hpp"

namespace rankseg {
namespace {

std::uint64_t splitmix64(std::uint64_t x) noexcept {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Streams used inside one task seed.
constexpr std::uint64_t kStreamProbs = 0;
constexpr std::uint64_t kStreamLabels = 1;
constexpr std::uint64_t kStreamBlock = 2;

std::string shortest(double x) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), x);
  return std::string(buf, res.ptr);
}

std::string fixed6(double x) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(6) << x;
  return os.str();
}

struct MeanSe {
  double mean = 0.0;
  double se = 0.0;
};

MeanSe mean_se(const std::vector<double>& v) {
  MeanSe out;
  if (v.empty()) return out;
  const double n = static_cast<double>(v.size());
  out.mean = pairwise_sum(v) / n;
  if (v.size() > 1) {
    std::vector<double> sq(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) sq[i] = (v[i] - out.mean) * (v[i] - out.mean);
    out.se = std::sqrt(pairwise_sum(sq) / (n - 1.0) / n);
  }
  return out;
}

std::string threshold_label(double t) { return "threshold_" + shortest(t); }

}  // namespace

CounterRng::CounterRng(std::uint64_t seed, std::uint64_t stream)
    : key_(splitmix64(splitmix64(seed) ^ (stream * 0xd1b54a32d192ed03ULL))) {}

double CounterRng::uniform(std::uint64_t index) const noexcept {
  const std::uint64_t x = splitmix64(key_ ^ splitmix64(index));
  // 53 random bits, shifted by half a step so neither 0 nor 1 occurs.
  return (static_cast<double>(x >> 11) + 0.5) * 0x1.0p-53;
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t a, std::uint64_t b) {
  return splitmix64(splitmix64(seed ^ splitmix64(a)) + b);
}

std::string_view to_string(DecayKind k) noexcept {
  switch (k) {
    case DecayKind::step:
      return "step";
    case DecayKind::exponential:
      return "exponential";
    case DecayKind::linear:
      return "linear";
  }
  return "step";
}

std::optional<DecayKind> parse_decay(std::string_view s) noexcept {
  if (s == "step") return DecayKind::step;
  if (s == "exponential" || s == "exp") return DecayKind::exponential;
  if (s == "linear") return DecayKind::linear;
  return std::nullopt;
}

std::optional<StepNoise> parse_step_noise(std::string_view s) noexcept {
  if (s == "standardized") return StepNoise::standardized;
  if (s == "unit") return StepNoise::unit_interval;
  return std::nullopt;
}

void DecaySpec::validate() const {
  if (width == 0 || height == 0) {
    throw Error(Errc::invalid_argument, "decay map needs positive width and height");
  }
  switch (kind) {
    case DecayKind::step:
      if (!(beta > 0.0 && beta < 1.0)) {
        throw Error(Errc::invalid_argument, "step decay needs beta in (0,1)");
      }
      if (!(rho > 0.0 && rho <= 1.0)) {
        throw Error(Errc::invalid_argument, "step decay needs rho in (0,1]");
      }
      break;
    case DecayKind::exponential:
      if (!(beta > 1.0)) {
        throw Error(Errc::invalid_argument, "exponential decay needs beta > 1");
      }
      break;
    case DecayKind::linear:
      if (!(beta > 0.0)) {
        throw Error(Errc::invalid_argument, "linear decay needs beta > 0");
      }
      break;
  }
}

SuccessProbVector gen_probmap(const DecaySpec& spec, std::uint64_t seed) {
  spec.validate();
  const std::size_t W = spec.width, H = spec.height;
  std::vector<double> p(W * H);
  switch (spec.kind) {
    case DecayKind::step: {
      const CounterRng rng(seed, kStreamProbs);
      const auto wb = static_cast<std::size_t>(std::floor(spec.rho * static_cast<double>(W)));
      const auto hb = static_cast<std::size_t>(std::floor(spec.rho * static_cast<double>(H)));
      constexpr double sd = 0.1;
      const double a = spec.step_noise == StepNoise::standardized ? 0.0 : -spec.beta / sd;
      const double b = spec.step_noise == StepNoise::standardized ? 1.0 : (1.0 - spec.beta) / sd;
      const double fa = normal_cdf(a), fb = normal_cdf(b);
      for (std::size_t w = 0; w < W; ++w) {
        for (std::size_t h = 0; h < H; ++h) {
          const std::size_t i = w * H + h;
          const double u = rng.uniform(i);
          if (w < wb && h < hb) {
            p[i] = 0.5 + 0.5 * u;
          } else {
            const double z = normal_quantile(fa + u * (fb - fa));
            p[i] = std::clamp(spec.beta + sd * z, 0.0, 1.0);
          }
        }
      }
      break;
    }
    case DecayKind::exponential: {
      const double log_base = std::log(spec.beta);
      for (std::size_t w = 0; w < W; ++w) {
        for (std::size_t h = 0; h < H; ++h) {
          p[w * H + h] = std::exp(-static_cast<double>(w + h) * log_base);
        }
      }
      break;
    }
    case DecayKind::linear: {
      const double span = static_cast<double>(W + H);
      for (std::size_t w = 0; w < W; ++w) {
        for (std::size_t h = 0; h < H; ++h) {
          p[w * H + h] = std::clamp(
              1.0 - spec.beta * static_cast<double>(w + h) / span, 0.0, 1.0);
        }
      }
      break;
    }
  }
  return SuccessProbVector(std::move(p));
}

SegMask sample_mask(const SuccessProbVector& p, std::uint64_t seed) {
  const CounterRng rng(seed, kStreamLabels);
  SegMask m(p.size());
  for (std::size_t j = 0; j < p.size(); ++j) m.bits[j] = rng.uniform(j) < p[j] ? 1 : 0;
  return m;
}

SegMask threshold_mask(const SuccessProbVector& p, double t) {
  SegMask m(p.size());
  for (std::size_t j = 0; j < p.size(); ++j) m.bits[j] = p[j] > t ? 1 : 0;
  return m;
}

std::string SimReport::to_csv() const {
  std::ostringstream os;
  os << "method,decay,beta,rho,width,height,gamma,mean,stderr,replicates\n";
  for (const SimRow& r : rows) {
    os << r.method << ',' << r.decay << ',' << shortest(r.beta) << ','
       << (r.rho ? shortest(*r.rho) : std::string(r.rho_random ? "random" : "")) << ',' << r.width
       << ',' << r.height << ',' << shortest(r.gamma) << ',' << fixed6(r.mean)
       << ',' << fixed6(r.std_error) << ',' << r.replicates << '\n';
  }
  return os.str();
}

const SimRow* SimReport::find(std::string_view method, std::string_view decay,
                              double beta) const {
  for (const SimRow& r : rows) {
    if (r.method == method && r.decay == decay && r.beta == beta) return &r;
  }
  return nullptr;
}

SimReport run_example1(const std::vector<DecaySpec>& decays,
                       std::size_t replicates, const RankSegConfig& cfg,
                       std::uint64_t seed, std::size_t threads) {
  if (replicates == 0) throw Error(Errc::invalid_argument, "replicates must be >= 1");
  cfg.validate();
  SimReport report;
  for (std::size_t s = 0; s < decays.size(); ++s) {
    const DecaySpec& spec = decays[s];
    spec.validate();
    std::vector<double> thr(replicates), rank(replicates);
    // Deterministic maps are generated once and shared.
    std::optional<SuccessProbVector> fixed;
    if (spec.kind != DecayKind::step) fixed = gen_probmap(spec, seed);
    parallel_for(replicates, threads, [&](std::size_t r) {
      const std::uint64_t task = derive_seed(seed, s, r);
      const SuccessProbVector p = fixed ? *fixed : gen_probmap(spec, task);
      const SegMask y = sample_mask(p, task);
      thr[r] = dice_instance(y, threshold_mask(p, 0.5), cfg.gamma, cfg.zero_over_zero);
      rank[r] = dice_instance(y, predict_dice(p, cfg).mask, cfg.gamma, cfg.zero_over_zero);
    });
    const auto add = [&](std::string method, const std::vector<double>& v) {
      const MeanSe ms = mean_se(v);
      SimRow row;
      row.method = std::move(method);
      row.decay = std::string(to_string(spec.kind));
      row.beta = spec.beta;
      if (spec.kind == DecayKind::step) row.rho = spec.rho;
      row.width = spec.width;
      row.height = spec.height;
      row.gamma = cfg.gamma;
      row.mean = ms.mean;
      row.std_error = ms.se;
      row.replicates = replicates;
      report.rows.push_back(std::move(row));
    };
    add(threshold_label(0.5), thr);
    add("rankdice", rank);
  }
  return report;
}

std::vector<double> default_thresholds() {
  return {0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9};
}

std::vector<DecaySpec> example1_decays(std::size_t width, std::size_t height) {
  std::vector<DecaySpec> out;
  const auto add = [&](DecayKind kind, double beta) {
    DecaySpec s;
    s.kind = kind;
    s.beta = beta;
    s.width = width;
    s.height = height;
    out.push_back(s);
  };
  for (double b : {0.1, 0.3, 0.5}) add(DecayKind::step, b);
  for (double b : {1.01, 1.05, 1.10}) add(DecayKind::exponential, b);
  for (double b : {1.0, 2.0, 4.0}) add(DecayKind::linear, b);
  return out;
}

std::string Example2Result::instances_csv() const {
  std::ostringstream os;
  os << "rho,best_threshold,rankdice\n";
  for (const Example2Instance& e : instances) {
    os << fixed6(e.rho) << ',' << shortest(e.best_threshold) << ','
       << fixed6(e.rankdice) << '\n';
  }
  return os.str();
}

Example2Result run_example2(std::size_t n, std::size_t width, std::size_t height,
                            const std::vector<double>& thresholds,
                            const RankSegConfig& cfg, std::uint64_t seed,
                            std::size_t threads, StepNoise noise) {
  if (n == 0) throw Error(Errc::invalid_argument, "n must be >= 1");
  if (thresholds.empty()) throw Error(Errc::invalid_argument, "no thresholds given");
  cfg.validate();
  const std::size_t nt = thresholds.size();
  std::vector<std::vector<double>> by_threshold(nt, std::vector<double>(n));
  Example2Result out;
  out.instances.resize(n);
  parallel_for(n, threads, [&](std::size_t i) {
    const std::uint64_t task = derive_seed(seed, i);
    DecaySpec spec;
    spec.kind = DecayKind::step;
    spec.beta = 0.1;
    spec.rho = CounterRng(task, kStreamBlock).uniform(0);
    spec.width = width;
    spec.height = height;
    spec.step_noise = noise;
    const SuccessProbVector p = gen_probmap(spec, task);
    const SegMask y = sample_mask(p, task);
    std::size_t best = 0;
    for (std::size_t t = 0; t < nt; ++t) {
      by_threshold[t][i] =
          dice_instance(y, threshold_mask(p, thresholds[t]), cfg.gamma, cfg.zero_over_zero);
      if (by_threshold[t][i] > by_threshold[best][i]) best = t;
    }
    Example2Instance& inst = out.instances[i];
    inst.rho = spec.rho;
    inst.best_threshold = thresholds[best];
    inst.rankdice = dice_instance(y, predict_dice(p, cfg).mask, cfg.gamma, cfg.zero_over_zero);
  });

  const auto add = [&](std::string method, const std::vector<double>& v) {
    const MeanSe ms = mean_se(v);
    SimRow row;
    row.method = std::move(method);
    row.decay = "step";
    row.beta = 0.1;
    row.rho_random = true;
    row.width = width;
    row.height = height;
    row.gamma = cfg.gamma;
    row.mean = ms.mean;
    row.std_error = ms.se;
    row.replicates = n;
    out.report.rows.push_back(std::move(row));
  };
  for (std::size_t t = 0; t < nt; ++t) add(threshold_label(thresholds[t]), by_threshold[t]);
  std::vector<double> rank(n);
  for (std::size_t i = 0; i < n; ++i) rank[i] = out.instances[i].rankdice;
  add("rankdice", rank);
  return out;
}

}  // namespace rankseg
