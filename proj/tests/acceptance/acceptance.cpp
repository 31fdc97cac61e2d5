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
// End-to-end acceptance checks. Prints one PASS/FAIL line per criterion and
// exits non-zero if any criterion fails.

#include <algorithm>
#include <cctype>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "gen.hpp"
#include "json.hpp"
#include "npy.hpp"
#include "oracles.hpp"
#include "rankseg/rankseg.hpp"

namespace {

using namespace rankseg;
namespace fs = std::filesystem;

constexpr std::uint64_t kSeed = 20260;

int failures = 0;

void report(bool ok, const std::string& name, const std::string& detail) {
  std::printf("%s %s: %s\n", ok ? "PASS" : "FAIL", name.c_str(), detail.c_str());
  std::fflush(stdout);
  if (!ok) ++failures;
}

std::string fmt(const char* f, double a) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, a);
  return buf;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::uint32_t to_bits(const SegMask& m) {
  std::uint32_t b = 0;
  for (std::size_t j = 0; j < m.size(); ++j) b |= static_cast<std::uint32_t>(m.bits[j]) << j;
  return b;
}

// ---------------------------------------------------------------- example 1

struct RowTarget {
  std::string label;
  DecayKind kind;
  double beta;
  std::size_t side;
  double thr, rank, tol;
  bool tie;  // both columns must agree within two combined standard errors
  double max_seconds;
  Algorithm algo = Algorithm::automatic;
};

void example1_row(const RowTarget& t) {
  DecaySpec s;
  s.kind = t.kind;
  s.beta = t.beta;
  s.width = s.height = t.side;
  const auto t0 = std::chrono::steady_clock::now();
  RankSegConfig cfg;
  cfg.algorithm = t.algo;
  const SimReport r = run_example1({s}, 100, cfg, kSeed, 1);
  const double secs = seconds_since(t0);
  const SimRow& a = r.rows[0];
  const SimRow& b = r.rows[1];
  bool ok = std::abs(a.mean - t.thr) <= t.tol && std::abs(b.mean - t.rank) <= t.tol &&
            secs < t.max_seconds;
  std::string detail = "threshold " + fmt("%.4f", a.mean) + " (want " + fmt("%.3f", t.thr) +
                       "), rankdice " + fmt("%.4f", b.mean) + " (want " + fmt("%.3f", t.rank) +
                       "), tol " + fmt("%.2f", t.tol);
  if (t.tie) {
    const double gap = std::abs(a.mean - b.mean);
    const double se2 = 2.0 * std::hypot(a.std_error, b.std_error);
    ok = ok && gap <= se2;
    detail += ", gap " + fmt("%.4f", gap) + " <= 2se " + fmt("%.4f", se2);
  }
  detail += ", " + std::string(to_string(t.algo)) + ", " + fmt("%.2f", secs) + "s";
  report(ok, "example1 " + t.label, detail);
}

// ---------------------------------------------------------------- example 2

void example2() {
  const auto t0 = std::chrono::steady_clock::now();
  const Example2Result res =
      run_example2(2000, 64, 64, default_thresholds(), RankSegConfig{}, kSeed, 1);
  const double secs = seconds_since(t0);
  double best = 0.0, rank = 0.0;
  std::string best_label;
  for (const SimRow& r : res.report.rows) {
    if (r.method == "rankdice") {
      rank = r.mean;
    } else if (r.mean > best) {
      best = r.mean;
      best_label = r.method;
    }
  }
  const bool ok = std::abs(rank - 0.601) <= 0.02 && rank > best &&
                  std::abs(best - 0.560) <= 0.02 && secs < 300.0;
  report(ok, "example2 n=2000 64x64",
         "rankdice " + fmt("%.4f", rank) + " (want 0.601+-0.02), best fixed " + best_label +
             " " + fmt("%.4f", best) + " (want 0.560+-0.02), " + fmt("%.1f", secs) + "s");
}

// ---------------------------------------------------------- oracle optimality

void oracle_optimality() {
  gen::Gen g(kSeed + 1);
  int checks = 0, bad = 0;
  for (int it = 0; it < 500; ++it) {
    const auto q = g.probs(g.size(1, 10));
    const SuccessProbVector v(q);
    for (double gamma : {0.0, 1.0}) {
      RankSegConfig cfg;
      cfg.gamma = gamma;
      cfg.algorithm = Algorithm::exact;
      const SegMask dm = predict_dice(v, cfg).mask;
      const SegMask im = predict_iou(v, cfg).mask;
      const double dv = oracle::expected_metric(q, to_bits(dm), gamma, oracle::Kind::dice);
      const double iv = oracle::expected_metric(q, to_bits(im), gamma, oracle::Kind::iou);
      bad += dv < oracle::best_mask(q, gamma, oracle::Kind::dice).value - 1e-12;
      bad += iv < oracle::best_mask(q, gamma, oracle::Kind::iou).value - 1e-12;
      checks += 2;
    }
  }
  report(bad == 0, "oracle optimality",
         std::to_string(checks) + " checks (500 instances x gamma {0,1} x {dice,iou}), " +
             std::to_string(bad) + " below the all-masks maximum");
}

// ---------------------------------------------------------- distribution suite

void distribution_suite() {
  gen::Gen g(kSeed + 2);
  double fft_err = 0.0;
  for (int it = 0; it < 200; ++it) {
    const SuccessProbVector v(g.probs(g.size(1, 1000)));
    const PmfTable a = pb_pmf_fft(v), b = pb_pmf_exact(v);
    for (std::size_t l = 0; l < a.size(); ++l) fft_err = std::max(fft_err, std::abs(a[l] - b[l]));
  }

  // Worst ratio of observed CDF error to the allowed error, per variance band.
  double ratio25 = 0.0, ratio100 = 0.0;
  int n25 = 0, n100 = 0;
  while (n25 < 100 || n100 < 100) {
    const auto q = g.probs(g.size(100, 1500), g.coin(0.7));
    const PBMoments m = pb_moments(SuccessProbVector(q));
    if (m.sigma2 < 25.0) continue;
    const auto pmf = oracle::dp_pmf(q);
    double cdf = 0.0, worst = 0.0;
    for (std::size_t l = 0; l < pmf.size(); ++l) {
      cdf += pmf[l];
      worst = std::max(worst, std::abs(rna_cdf(m, static_cast<std::int64_t>(l)) - cdf));
    }
    if (m.sigma2 >= 100.0) {
      ratio100 = std::max(ratio100, worst / (0.1618 / m.sigma2));
      ++n100;
    } else {
      ++n25;
    }
    ratio25 = std::max(ratio25, worst / (0.3056 / m.sigma2));
  }

  double ident_err = 0.0;
  for (int it = 0; it < 100; ++it) {
    const auto q = g.probs(g.size(1, 60));
    const SuccessProbVector v(q);
    const PmfTable full = pb_pmf_exact(v);
    const auto cf = full.cdf();
    for (std::size_t j = 0; j < q.size(); ++j) {
      const PmfTable w = pb_pmf_without(v, j);
      const auto cw = w.cdf();
      for (std::size_t l = 0; l < full.size(); ++l) {
        const double below = l > 0 ? w[l - 1] : 0.0;
        const double here = l < w.size() ? w[l] : 0.0;
        ident_err = std::max(ident_err, std::abs(full[l] - ((1.0 - q[j]) * here + q[j] * below)));
        const double lower = l > 0 ? cw[l - 1] : 0.0;
        const double upper = l < cw.size() ? cw[l] : 1.0;
        ident_err = std::max(ident_err, lower - cf[l]);
        ident_err = std::max(ident_err, cf[l] - upper);
      }
    }
  }
  const bool ok = fft_err <= 1e-10 && ratio25 <= 1.0 && ratio100 <= 1.0 && ident_err <= 1e-10;
  report(ok, "distribution suite",
         "fft-vs-dp max " + fmt("%.2e", fft_err) + " (200 instances, d<=1000); cdf error / " +
             "allowed: " + fmt("%.3f", ratio25) + " (var>=25), " + fmt("%.3f", ratio100) +
             " (var>=100); mixing/sandwich max violation " + fmt("%.2e", ident_err));
}

// -------------------------------------------------------- approximation suite

void approximation_suite() {
  gen::Gen g(kSeed + 3);
  double trna_ratio = 0.0, ba_ratio = 0.0;
  int instances = 0;
  while (instances < 200) {
    const std::size_t d = g.size(100, 400);
    const auto q = g.coin() ? g.probs_in(d, 0.2, 0.8) : g.probs(d, false);
    const SuccessProbVector v(q);
    const PBMoments m = pb_moments(v);
    if (m.sigma2 < 25.0) continue;
    const int gamma = instances % 2;
    const RankedProbs r = rank_probs(v);
    const std::size_t d0 = shrink_bound(r, gamma);
    const auto exact = oracle::dice_scores(r.sorted, gamma, d0);
    const auto t = score_trna(r, gamma, 1e-4, d0);
    const auto b = score_ba(r, gamma, 1e-4, d0);
    for (std::size_t tau = 0; tau <= d0; ++tau) {
      trna_ratio = std::max(trna_ratio, std::abs(t.scores[tau] - exact[tau]) /
                                            trna_error_bound(m, tau, gamma, 1e-4));
      ba_ratio = std::max(ba_ratio, std::abs(b.scores[tau] - exact[tau]) /
                                        ba_error_bound(m, tau, gamma, 1e-4));
    }
    ++instances;
  }

  int shrink_bad = 0;
  for (int it = 0; it < 1000; ++it) {
    const auto q = g.probs(g.size(1, 200));
    const double gamma = it % 4 == 0 ? g.uniform(0.0, 3.0) : 0.0;
    const RankedProbs r = rank_probs(SuccessProbVector(q));
    const auto dfull = score_exact(r, gamma, q.size());
    shrink_bad += score_exact(r, gamma, shrink_bound(r, gamma)).tau_hat != dfull.tau_hat;
    const auto ifull = score_iou(r, gamma, q.size(), IoUMode::exact);
    shrink_bad +=
        score_iou(r, gamma, shrink_iou_bound(r, gamma), IoUMode::exact).tau_hat != ifull.tau_hat;
  }
  const bool ok = trna_ratio <= 1.0 && ba_ratio <= 1.0 && shrink_bad == 0;
  report(ok, "approximation suite",
         "worst error / bound over every volume of 200 instances: trna " +
             fmt("%.3f", trna_ratio) + ", ba " + fmt("%.3f", ba_ratio) +
             "; shrinkage excluded the argmax " + std::to_string(shrink_bad) +
             " times in 1000 instances x {dice,iou}");
}

// ------------------------------------------------------------- counterexample

void counterexample() {
  const SuccessProbVector q{0.45, 0.44};
  const SegMask ours = predict_dice(q, RankSegConfig{}).mask;
  const SegMask thr = threshold_mask(q, 0.5);
  const double a = oracle::expected_metric({0.45, 0.44}, to_bits(ours), 0.0, oracle::Kind::dice);
  const double b = oracle::expected_metric({0.45, 0.44}, to_bits(thr), 0.0, oracle::Kind::dice);
  const bool ok = ours.bits == std::vector<std::uint8_t>{1, 1} &&
                  thr.bits == std::vector<std::uint8_t>{0, 0} && std::abs(a - 0.527) < 5e-4 &&
                  b == 0.0;
  report(ok, "counterexample (0.45, 0.44)",
         "ranking mask (" + std::to_string(ours.bits[0]) + "," + std::to_string(ours.bits[1]) +
             ") dice " + fmt("%.6f", a) + ", threshold mask (" + std::to_string(thr.bits[0]) +
             "," + std::to_string(thr.bits[1]) + ") dice " + fmt("%.6f", b));
}

// ---------------------------------------------------------------- determinism

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

// Sidecars carry wall times; everything else must match byte for byte.
std::string without_timings(const std::string& text) {
  auto j = nlohmann::ordered_json::parse(text);
  for (auto& c : j["classes"]) c.erase("millis");
  return j.dump(2);
}

// Bench rows keep everything but the timing column.
std::string bench_without_timings(const std::string& text) {
  std::istringstream in(text);
  std::string line, out;
  while (std::getline(in, line)) {
    const auto cut = line.rfind(',');
    const std::string tail = cut == std::string::npos ? "" : line.substr(cut + 1);
    const bool numeric = !tail.empty() && (std::isdigit(static_cast<unsigned char>(tail[0])) != 0);
    out += (numeric ? line.substr(0, cut) + ",<t>" : line) + "\n";
  }
  return out;
}

int run(const std::string& cmd) {
  return std::system((std::string(RANKSEG_CLI_PATH) + " " + cmd + " > /dev/null 2>&1").c_str());
}

void determinism() {
  const fs::path dir = fs::temp_directory_path() / "rankseg_acceptance_determinism";
  fs::remove_all(dir);
  fs::create_directories(dir / "in");
  fs::create_directories(dir / "gt");
  gen::Gen g(kSeed + 4);
  for (int i = 0; i < 6; ++i) {
    const std::size_t k = 3;
    std::vector<double> v;
    for (std::size_t c = 0; c < k; ++c) {
      const auto row = g.probs(i < 3 ? 30 * 30 : 40 * 40, false);
      v.insert(v.end(), row.begin(), row.end());
    }
    const std::size_t side = i < 3 ? 30 : 40;
    const std::vector<std::size_t> shape{k, side, side};
    npy::write(dir / "in" / ("x" + std::to_string(i) + ".npy"),
               npy::Array::from_doubles(shape, v));
    std::vector<std::uint8_t> y(v.size());
    for (std::size_t j = 0; j < v.size(); ++j) y[j] = g.coin(v[j]) ? 1 : 0;
    npy::write(dir / "gt" / ("x" + std::to_string(i) + ".npy"), npy::Array::from_bytes(shape, y));
  }

  int mismatches = 0, errors = 0;
  std::vector<std::string> bad;
  const auto compare = [&](const std::string& what, const std::string& a, const std::string& b) {
    if (a != b || a.empty()) {
      ++mismatches;
      bad.push_back(what);
    }
  };
  std::vector<std::string> runs[2][2];  // [threads 1|8][repeat]
  for (int t = 0; t < 2; ++t) {
    for (int rep = 0; rep < 2; ++rep) {
      const std::string th = t == 0 ? "1" : "8";
      const fs::path o = dir / ("out_" + th + "_" + std::to_string(rep));
      fs::create_directories(o);
      const std::string os = o.string();
      errors += run("predict " + (dir / "in").string() + " --out " + os + "/masks --threads " +
                    th) != 0;
      errors += run("predict " + (dir / "in" / "x4.npy").string() + " --out " + os +
                    "/iou.npy --metric iou --gamma 1 --threads " + th) != 0;
      errors += run("eval --pred " + os + "/masks --gt " + (dir / "gt").string() +
                    " --multiclass --out " + os + "/eval.csv --threads " + th) != 0;
      errors += run("simulate example1 --reps 20 --seed 3 --out " + os + "/ex1.csv --threads " +
                    th) != 0;
      errors += run("simulate example2 --n 200 --seed 3 --out " + os + "/ex2.csv" +
                    " --instances-out " + os + "/ex2_inst.csv --threads " + th) != 0;
      errors += run("bench --min-log2 8 --max-log2 12 --seed 3 --out " + os +
                    "/bench.csv --threads " + th) != 0;
      std::vector<std::string>& r = runs[t][rep];
      for (int i = 0; i < 6; ++i) {
        const std::string stem = os + "/masks/x" + std::to_string(i);
        r.push_back(slurp(stem + ".npy"));
        r.push_back(fs::exists(stem + ".json") ? without_timings(slurp(stem + ".json")) : "");
      }
      r.push_back(slurp(os + "/iou.npy"));
      r.push_back(without_timings(slurp(os + "/iou.json")));
      r.push_back(slurp(os + "/eval.csv"));
      r.push_back(slurp(os + "/ex1.csv"));
      r.push_back(slurp(os + "/ex2.csv"));
      r.push_back(slurp(os + "/ex2_inst.csv"));
      r.push_back(bench_without_timings(slurp(os + "/bench.well-separated.csv")));
      r.push_back(bench_without_timings(slurp(os + "/bench.diffuse.csv")));
    }
  }
  const std::size_t n = runs[0][0].size();
  for (std::size_t i = 0; i < n; ++i) {
    compare("artifact " + std::to_string(i) + " (repeat, 1 thread)", runs[0][0][i], runs[0][1][i]);
    compare("artifact " + std::to_string(i) + " (repeat, 8 threads)", runs[1][0][i], runs[1][1][i]);
    compare("artifact " + std::to_string(i) + " (1 vs 8 threads)", runs[0][0][i], runs[1][0][i]);
  }
  fs::remove_all(dir);
  std::string detail = std::to_string(n) + " artifacts from predict/eval/simulate/bench, " +
                       std::to_string(3 * n) + " comparisons, " + std::to_string(mismatches) +
                       " mismatches, " + std::to_string(errors) + " failed runs" +
                       " (sidecar millis and bench timing column excluded)";
  if (!bad.empty()) detail += "; first mismatch: " + bad.front();
  report(mismatches == 0 && errors == 0, "cli determinism across 1 and 8 threads", detail);
}

}  // namespace

int main() {
  example1_row({"step(0.1) 28x28", DecayKind::step, 0.1, 28, 0.049, 0.274, 0.03, false, 60.0});
  example1_row({"step(0.5) 28x28", DecayKind::step, 0.5, 28, 0.708, 0.708, 0.02, true, 60.0});
  example1_row({"exp(1.01) 28x28", DecayKind::exponential, 1.01, 28, 0.870, 0.870, 0.02, false,
                60.0});
  example1_row({"exp(1.05) 28x28", DecayKind::exponential, 1.05, 28, 0.427, 0.551, 0.03, false,
                60.0});
  example1_row({"linear(1.00) 28x28", DecayKind::linear, 1.0, 28, 0.679, 0.717, 0.03, false,
                60.0});
  example1_row({"linear(4.00) 256x256", DecayKind::linear, 4.0, 256, 0.574, 0.639, 0.03, false,
                600.0, Algorithm::ba});
  example2();
  oracle_optimality();
  distribution_suite();
  approximation_suite();
  counterexample();
  determinism();
  std::printf("%s: %d criteria failed\n", failures == 0 ? "ALL PASS" : "SOME FAILED", failures);
  return failures == 0 ? 0 : 1;
}
