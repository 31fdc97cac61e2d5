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
#include <gtest/gtest.h>

#include <cmath>
#include <vector>

#include "gen.hpp"
#include "rankseg/error.hpp"
#include "rankseg/metrics.hpp"
#include "rankseg/multiseg.hpp"

namespace {

using namespace rankseg;

SegMask M(std::vector<std::uint8_t> b) { return SegMask(std::move(b)); }

SegMask random_mask(gen::Gen& g, std::size_t d, double p) {
  SegMask m(d);
  for (auto& b : m.bits) b = g.coin(p) ? 1 : 0;
  return m;
}

TEST(Instance, DiceExamples) {
  EXPECT_DOUBLE_EQ(dice_instance(M({1, 0, 1}), M({1, 0, 1}), 0.0), 1.0);
  EXPECT_DOUBLE_EQ(dice_instance(M({1, 0, 0}), M({1, 1, 0}), 0.0), 2.0 / 3.0);
  EXPECT_DOUBLE_EQ(dice_instance(M({0, 0}), M({0, 0}), 0.0), 0.0);
  EXPECT_DOUBLE_EQ(dice_instance(M({0, 0}), M({0, 0}), 0.0, ZeroOverZero::one), 1.0);
  EXPECT_DOUBLE_EQ(dice_instance(M({0, 0}), M({0, 0}), 1.0), 1.0);
  EXPECT_THROW((void)dice_instance(M({0, 0}), M({0}), 0.0), Error);
}

TEST(Instance, IouExamples) {
  EXPECT_DOUBLE_EQ(iou_instance(M({0, 1}), M({0, 1}), 0.0), 1.0);
  EXPECT_DOUBLE_EQ(iou_instance(M({1, 0, 0}), M({1, 1, 0}), 0.0), 0.5);
  const double dsc = dice_instance(M({1, 0, 0}), M({1, 1, 0}), 0.0);
  EXPECT_NEAR(iou_instance(M({1, 0, 0}), M({1, 1, 0}), 0.0), dsc / (2.0 - dsc), 1e-15);
}

TEST(Instance, Properties) {
  gen::Gen g(51);
  for (int it = 0; it < 500; ++it) {
    const std::size_t d = g.size(1, 30);
    const SegMask a = random_mask(g, d, g.uniform()), b = random_mask(g, d, g.uniform());
    const double gamma = it % 2 ? 0.0 : g.uniform(0.0, 2.0);
    const double ab = dice_instance(a, b, gamma), ba = dice_instance(b, a, gamma);
    EXPECT_EQ(ab, ba);
    EXPECT_GE(ab, 0.0);
    EXPECT_LE(ab, 1.0);
    const double j = iou_instance(a, b, gamma);
    EXPECT_GE(j, 0.0);
    EXPECT_LE(j, 1.0);
    const bool nonempty = a.count() + b.count() > 0;
    if (gamma == 0.0 && nonempty) {
      EXPECT_NEAR(j, ab / (2.0 - ab), 1e-14);
      EXPECT_EQ(ab == 1.0, a == b);
    }
    EXPECT_DOUBLE_EQ(metric_instance(Metric::dice, a, b, gamma), ab);
    EXPECT_DOUBLE_EQ(metric_instance(Metric::iou, a, b, gamma), j);
  }
}

TEST(Dataset, InstanceVersusPooled) {
  const std::vector<MaskPair> pairs{{M({1}), M({1})}, {M({1, 1, 1, 1}), M({0, 0, 0, 0})}};
  const EvalSummary inst = eval_dataset(pairs, 0.0, EvalMode::instance, Metric::dice);
  const EvalSummary pool = eval_dataset(pairs, 0.0, EvalMode::pooled, Metric::dice);
  EXPECT_DOUBLE_EQ(inst.mean, 0.5);
  EXPECT_NEAR(pool.mean, 1.0 / 3.0, 1e-15);
  EXPECT_NE(inst.mean, pool.mean);
  ASSERT_TRUE(inst.std_error.has_value());
  EXPECT_NEAR(*inst.std_error, std::sqrt(0.5) / std::sqrt(2.0), 1e-15);
  EXPECT_FALSE(pool.std_error.has_value());
  EXPECT_EQ(inst.n_instances, 2u);
  EXPECT_EQ(to_string(EvalMode::pooled), "pooled_biased");
}

TEST(Dataset, SingleAndPerfect) {
  const std::vector<MaskPair> one{{M({1, 0, 1}), M({1, 1, 0})}};
  const EvalSummary s = eval_dataset(one, 0.0, EvalMode::instance, Metric::dice);
  EXPECT_DOUBLE_EQ(s.mean, dice_instance(M({1, 0, 1}), M({1, 1, 0}), 0.0));
  EXPECT_DOUBLE_EQ(*s.std_error, 0.0);
  const std::vector<MaskPair> perfect{{M({1, 0}), M({1, 0})}, {M({1, 1, 1}), M({1, 1, 1})}};
  EXPECT_DOUBLE_EQ(eval_dataset(perfect, 0.0, EvalMode::instance, Metric::dice).mean, 1.0);
  EXPECT_DOUBLE_EQ(eval_dataset(perfect, 0.0, EvalMode::pooled, Metric::dice).mean, 1.0);
  EXPECT_DOUBLE_EQ(eval_dataset(perfect, 0.0, EvalMode::pooled, Metric::iou).mean, 1.0);
  try {
    (void)eval_dataset(std::vector<MaskPair>{}, 0.0, EvalMode::instance, Metric::dice);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::empty_input);
  }
}

TEST(ClassWeightsRule, Cases) {
  const MultiMask gt({M({1, 0}), M({0, 1}), M({0, 0})});
  const MultiMask pr({M({0, 0}), M({1, 1}), M({0, 0})});
  const ClassWeights w = mdice_weights(gt, pr);
  EXPECT_FALSE(w.undefined);
  EXPECT_EQ(w.alpha, (std::vector<double>{0.5, 0.5, 0.0}));

  const MultiMask all({M({1, 0}), M({0, 1}), M({1, 1})});
  for (double a : mdice_weights(all, all).alpha) EXPECT_DOUBLE_EQ(a, 1.0 / 3.0);

  const MultiMask none({M({0, 0}), M({0, 0})});
  const ClassWeights z = mdice_weights(none, none);
  EXPECT_TRUE(z.undefined);
  EXPECT_EQ(z.alpha, (std::vector<double>{0.0, 0.0}));
}

TEST(ClassWeightsRule, SumIsZeroOrOne) {
  gen::Gen g(52);
  for (int it = 0; it < 300; ++it) {
    const std::size_t k = g.size(1, 6), d = g.size(1, 8);
    std::vector<SegMask> a, b;
    for (std::size_t c = 0; c < k; ++c) {
      a.push_back(random_mask(g, d, 0.15));
      b.push_back(random_mask(g, d, 0.15));
    }
    const ClassWeights w = mdice_weights(MultiMask(a), MultiMask(b));
    double s = 0.0;
    for (double x : w.alpha) s += x;
    if (w.undefined) {
      EXPECT_EQ(s, 0.0);
    } else {
      EXPECT_NEAR(s, 1.0, 1e-15);
    }
  }
}

TEST(MultiEval, ReducesToBinary) {
  gen::Gen g(53);
  std::vector<MultiMask> gts, prs;
  std::vector<MaskPair> pairs;
  for (int i = 0; i < 20; ++i) {
    const SegMask y = random_mask(g, 12, 0.4), v = random_mask(g, 12, 0.4);
    if (y.count() + v.count() == 0) continue;
    gts.push_back(MultiMask({y}));
    prs.push_back(MultiMask({v}));
    pairs.emplace_back(y, v);
  }
  const EvalSummary a = mdice_eval(gts, prs, 0.0, Metric::dice);
  const EvalSummary b = eval_dataset(pairs, 0.0, EvalMode::instance, Metric::dice);
  EXPECT_NEAR(a.mean, b.mean, 1e-15);
  EXPECT_NEAR(*a.std_error, *b.std_error, 1e-15);
}

TEST(MultiEval, EmptyClassIsIgnored) {
  const MultiMask gt({M({1, 1, 0}), M({0, 0, 0})});
  const MultiMask pr({M({1, 0, 0}), M({0, 0, 0})});
  const std::vector<MultiMask> g{gt}, p{pr};
  EXPECT_NEAR(mdice_eval(g, p, 0.0, Metric::dice).mean, 2.0 / 3.0, 1e-15);
}

TEST(MultiEval, ThreeClassFixture) {
  // class 0: gt 1100, pred 1000 -> 2/3
  // class 1: gt 0110, pred 0011 -> 1/2
  // class 2: gt 0000, pred 0001 -> 0 (present in the prediction, so weighted)
  const MultiMask gt({M({1, 1, 0, 0}), M({0, 1, 1, 0}), M({0, 0, 0, 0})});
  const MultiMask pr({M({1, 0, 0, 0}), M({0, 0, 1, 1}), M({0, 0, 0, 1})});
  // A second instance with nothing in any class is excluded.
  const MultiMask empty({M({0, 0, 0, 0}), M({0, 0, 0, 0}), M({0, 0, 0, 0})});
  const std::vector<MultiMask> g{gt, empty}, p{pr, empty};
  const EvalSummary s = mdice_eval(g, p, 0.0, Metric::dice);
  EXPECT_NEAR(s.mean, 7.0 / 18.0, 1e-15);
  EXPECT_EQ(s.n_instances, 1u);
  EXPECT_EQ(s.n_excluded, 1u);
}

TEST(MultiEval, PooledPerClass) {
  // Class 0 pooled over both instances: tp 1+2, |y| 2+2, |v| 1+3 -> 6/8.
  // Class 1 only in the first instance: tp 0, |y| 1, |v| 0 -> 0.
  const MultiMask g1({M({1, 1, 0}), M({0, 0, 1})}), p1({M({1, 0, 0}), M({0, 0, 0})});
  const MultiMask g2({M({0, 1, 1}), M({0, 0, 0})}), p2({M({1, 1, 1}), M({0, 0, 0})});
  const std::vector<MultiMask> g{g1, g2}, p{p1, p2};
  const EvalSummary s = mdice_eval(g, p, 0.0, Metric::dice, EvalMode::pooled);
  EXPECT_NEAR(s.mean, (0.75 + 0.0) / 2.0, 1e-15);
  EXPECT_EQ(s.mode, EvalMode::pooled);
}

TEST(Summation, PairwiseIsOrderFixed) {
  std::vector<double> v{1e16, 1.0, -1e16, 1.0};
  EXPECT_EQ(pairwise_sum(v), pairwise_sum(v));
  EXPECT_EQ(pairwise_sum(std::vector<double>{}), 0.0);
  std::vector<double> w(1000, 0.1);
  EXPECT_NEAR(pairwise_sum(w), 100.0, 1e-12);
}

}  // namespace
