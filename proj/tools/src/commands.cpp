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
#include "commands.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "json.hpp"
#include "npy.hpp"
#include "rankseg/error.hpp"
#include "rankseg/rankdice.hpp"

namespace rankseg::cli {
namespace {

using ordered_json = nlohmann::ordered_json;

template <typename Fn>
int guarded(const char* name, std::ostream& err, Fn&& fn) {
  try {
    fn();
    return 0;
  } catch (const Error& e) {
    err << "rankseg " << name << ": error: " << e.what() << '\n';
  } catch (const std::exception& e) {
    err << "rankseg " << name << ": error: " << e.what() << '\n';
  }
  return 1;
}

std::vector<fs::path> npy_files(const fs::path& dir) {
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (entry.is_regular_file() && entry.path().extension() == ".npy") {
      files.push_back(entry.path());
    }
  }
  std::sort(files.begin(), files.end());
  return files;
}

void write_text(const fs::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(Errc::io_error, path.string() + ": cannot open for writing");
  out << text;
  if (!out) throw Error(Errc::io_error, path.string() + ": write failed");
}

std::string fixed(double x, int digits) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(digits) << x;
  return os.str();
}

ordered_json sidecar_json(const fs::path& input, const DensePrediction& pred,
                          const PredictOptions& opt) {
  ordered_json j;
  j["input"] = input.filename().string();
  j["shape"] = pred.shape;
  j["metric"] = std::string(to_string(opt.metric));
  j["gamma"] = opt.config.gamma;
  ordered_json classes = ordered_json::array();
  for (std::size_t k = 0; k < pred.detail.per_class.size(); ++k) {
    const VolumeSearchResult& r = pred.detail.per_class[k];
    ordered_json c;
    c["class"] = k;
    c["tau_hat"] = r.tau_hat;
    c["d0"] = r.d0;
    c["sigma2"] = r.sigma2;
    c["algorithm_used"] = std::string(to_string(r.algorithm_used));
    c["millis"] = pred.detail.millis[k];
    classes.push_back(std::move(c));
  }
  j["classes"] = std::move(classes);
  return j;
}

void predict_one(const fs::path& in, const fs::path& out, const fs::path& sidecar,
                 const PredictOptions& opt) {
  const npy::Array a = npy::read(in);
  DenseArray arr{a.shape, a.to_doubles()};
  const DensePrediction pred = predict_dense(arr, opt);
  npy::write(out, npy::Array::from_bytes(pred.shape, pred.mask));
  write_text(sidecar, sidecar_json(in, pred, opt).dump(2) + "\n");
}

// Binary mask from any numeric dtype: nonzero means foreground.
SegMask to_mask(const std::vector<double>& v, std::size_t begin, std::size_t len) {
  SegMask m(len);
  for (std::size_t i = 0; i < len; ++i) m.bits[i] = v[begin + i] != 0.0 ? 1 : 0;
  return m;
}

std::string eval_csv(Metric metric, const EvalSummary& inst, const EvalSummary& pooled) {
  std::ostringstream os;
  os << "metric,mode,mean,stderr,n_instances,n_excluded\n";
  for (const EvalSummary* s : {&inst, &pooled}) {
    os << to_string(metric) << ',' << to_string(s->mode) << ',' << fixed(s->mean, 6)
       << ',' << (s->std_error ? fixed(*s->std_error, 6) : std::string()) << ','
       << s->n_instances << ',' << s->n_excluded << '\n';
  }
  return os.str();
}

}  // namespace

int cmd_predict(const PredictArgs& args, std::ostream& /*out*/, std::ostream& err) {
  return guarded("predict", err, [&] {
    if (fs::is_directory(args.input)) {
      const std::vector<fs::path> files = npy_files(args.input);
      if (files.empty()) {
        throw Error(Errc::empty_input, args.input.string() + ": no .npy files");
      }
      fs::create_directories(args.output);
      for (const fs::path& f : files) {
        const fs::path sidecar = (args.output / f.filename()).replace_extension(".json");
        predict_one(f, args.output / f.filename(), sidecar, args.options);
      }
    } else {
      fs::path sidecar = args.sidecar.value_or(fs::path(args.output).replace_extension(".json"));
      predict_one(args.input, args.output, sidecar, args.options);
    }
  });
}

int cmd_eval(const EvalArgs& args, std::ostream& out, std::ostream& err) {
  return guarded("eval", err, [&] {
    std::vector<fs::path> preds, gts;
    if (fs::is_directory(args.pred) != fs::is_directory(args.gt)) {
      throw Error(Errc::invalid_argument,
                  "prediction and ground truth must both be files or both directories");
    }
    if (fs::is_directory(args.pred)) {
      preds = npy_files(args.pred);
      gts = npy_files(args.gt);
      if (preds.size() != gts.size()) {
        throw Error(Errc::shape_mismatch, "prediction and ground-truth directories differ in file count");
      }
      for (std::size_t i = 0; i < preds.size(); ++i) {
        if (preds[i].filename() != gts[i].filename()) {
          throw Error(Errc::shape_mismatch, "unmatched file " + preds[i].filename().string());
        }
      }
    } else {
      preds.push_back(args.pred);
      gts.push_back(args.gt);
    }
    if (preds.empty()) throw Error(Errc::empty_input, "no instances to evaluate");

    std::vector<MaskPair> pairs;
    std::vector<MultiMask> multi_gt, multi_pred;
    for (std::size_t i = 0; i < preds.size(); ++i) {
      const npy::Array p = npy::read(preds[i]);
      const npy::Array g = npy::read(gts[i]);
      if (p.shape != g.shape) {
        throw Error(Errc::shape_mismatch, preds[i].filename().string() +
                                              ": prediction and ground-truth shapes differ");
      }
      const std::vector<double> pv = p.to_doubles(), gv = g.to_doubles();
      if (args.multiclass) {
        if (p.shape.size() < 2) {
          throw Error(Errc::shape_mismatch, "multiclass input needs a leading class axis");
        }
        const std::size_t k = p.shape[0], d = pv.size() / std::max<std::size_t>(k, 1);
        std::vector<SegMask> pr, gr;
        for (std::size_t c = 0; c < k; ++c) {
          pr.push_back(to_mask(pv, c * d, d));
          gr.push_back(to_mask(gv, c * d, d));
        }
        multi_pred.emplace_back(std::move(pr));
        multi_gt.emplace_back(std::move(gr));
      } else {
        pairs.emplace_back(to_mask(gv, 0, gv.size()), to_mask(pv, 0, pv.size()));
      }
    }

    EvalSummary inst, pooled;
    if (args.multiclass) {
      inst = mdice_eval(multi_gt, multi_pred, args.gamma, args.metric,
                        EvalMode::instance, args.zero_over_zero);
      pooled = mdice_eval(multi_gt, multi_pred, args.gamma, args.metric,
                          EvalMode::pooled, args.zero_over_zero);
    } else {
      inst = eval_dataset(pairs, args.gamma, EvalMode::instance, args.metric,
                          args.zero_over_zero);
      pooled = eval_dataset(pairs, args.gamma, EvalMode::pooled, args.metric,
                            args.zero_over_zero);
    }
    const std::string csv = eval_csv(args.metric, inst, pooled);
    if (args.output) {
      write_text(*args.output, csv);
    } else {
      out << csv;
    }
  });
}

int cmd_simulate(const SimulateArgs& args, std::ostream& out, std::ostream& err) {
  return guarded("simulate", err, [&] {
    std::string csv;
    if (args.scenario == "example1") {
      const std::size_t w = args.width.value_or(28), h = args.height.value_or(28);
      std::vector<DecaySpec> decays;
      if (args.decay) {
        DecaySpec s;
        s.kind = *args.decay;
        s.beta = args.beta.value_or(s.kind == DecayKind::step          ? 0.1
                                    : s.kind == DecayKind::exponential ? 1.01
                                                                       : 1.0);
        s.rho = args.rho;
        s.width = w;
        s.height = h;
        decays.push_back(s);
      } else {
        decays = example1_decays(w, h);
      }
      for (DecaySpec& s : decays) s.step_noise = args.step_noise;
      csv = run_example1(decays, args.reps, args.config, args.seed, args.threads).to_csv();
    } else if (args.scenario == "example2") {
      const std::vector<double> thr =
          args.thresholds.empty() ? default_thresholds() : args.thresholds;
      const Example2Result res =
          run_example2(args.n, args.width.value_or(64), args.height.value_or(64), thr,
                       args.config, args.seed, args.threads, args.step_noise);
      csv = res.report.to_csv();
      if (args.instances_output) write_text(*args.instances_output, res.instances_csv());
    } else {
      throw Error(Errc::invalid_argument,
                  "unknown scenario '" + args.scenario + "' (expected example1 or example2)");
    }
    if (args.output) {
      write_text(*args.output, csv);
    } else {
      out << csv;
    }
  });
}

std::vector<double> bench_profile(const std::string& name, std::size_t d,
                                  std::uint64_t seed) {
  const CounterRng rng(seed, d);
  std::vector<double> q(d);
  if (name == "diffuse") {
    for (std::size_t j = 0; j < d; ++j) q[j] = rng.uniform(j);
  } else if (name == "well-separated") {
    // A fixed-size block of near-certain pixels over a faint background.
    const std::size_t head = std::min<std::size_t>(256, d / 4);
    const double faint = std::min(1.0, 100.0 / static_cast<double>(d));
    for (std::size_t j = 0; j < d; ++j) q[j] = j < head ? 0.999 : faint * rng.uniform(j);
  } else {
    throw Error(Errc::invalid_argument,
                "unknown profile '" + name + "' (expected well-separated or diffuse)");
  }
  return q;
}

int cmd_bench(const BenchArgs& args, std::ostream& out, std::ostream& err) {
  return guarded("bench", err, [&] {
    if (args.min_log2 > args.max_log2 || args.max_log2 > 24) {
      throw Error(Errc::invalid_argument, "need min-log2 <= max-log2 <= 24");
    }
    for (const std::string& profile : args.profiles) {
      std::ostringstream os;
      os << "algo,d,d0,sigma2,millis\n";
      for (unsigned k = args.min_log2; k <= args.max_log2; ++k) {
        const std::size_t d = std::size_t{1} << k;
        const SuccessProbVector q(bench_profile(profile, d, args.seed));
        for (Algorithm algo : args.algos) {
          RankSegConfig cfg;
          cfg.gamma = args.gamma;
          cfg.epsilon = args.epsilon;
          cfg.algorithm = algo;
          cfg.dp_cap = args.dp_cap;
          os << to_string(algo) << ',' << d << ',';
          try {
            const auto start = std::chrono::steady_clock::now();
            const DicePrediction p = predict_dice(q, cfg, args.force);
            const double ms = std::chrono::duration<double, std::milli>(
                                  std::chrono::steady_clock::now() - start)
                                  .count();
            os << p.search.d0 << ',' << fixed(p.search.sigma2, 3) << ',' << fixed(ms, 3)
               << '\n';
          } catch (const Error& e) {
            // Refused (size cap) or inapplicable (variance too small).
            os << ",," << (e.code() == Errc::size_exceeded ? "refused" : "NA") << '\n';
          }
        }
      }
      if (args.output) {
        fs::path path = *args.output;
        if (args.profiles.size() > 1) {
          path.replace_filename(path.stem().string() + "." + profile +
                                path.extension().string());
        }
        write_text(path, os.str());
      } else {
        if (args.profiles.size() > 1) out << "# profile=" << profile << '\n';
        out << os.str();
      }
    }
  });
}

}  // namespace rankseg::cli
