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
#ifndef RANKSEG_PBDIST_HPP_
#define RANKSEG_PBDIST_HPP_

// Poisson-binomial numerics: the law of a sum of independent, non-identical
// Bernoulli variables.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "rankseg/prob_vector.hpp"

namespace rankseg {

struct PBMoments {
  std::size_t d = 0;
  double mu = 0.0;
  double sigma2 = 0.0;
  double m3 = 0.0;  // third central moment
  std::optional<double> eta;  // skewness, absent when sigma2 == 0

  static PBMoments from_sums(std::size_t d, double mu, double sigma2, double m3);

  // Moments of the same sum with one Bernoulli(q) term removed. O(1).
  PBMoments without(double q) const;
};

PBMoments pb_moments(std::span<const double> q);
inline PBMoments pb_moments(const SuccessProbVector& q) {
  return pb_moments(q.values());
}

struct PmfTable {
  std::vector<double> mass;  // mass[l] = P(count == l)

  std::size_t size() const noexcept { return mass.size(); }
  double operator[](std::size_t l) const noexcept { return mass[l]; }
  std::vector<double> cdf() const;
  double total() const;
};

inline constexpr std::size_t kDefaultDpCap = 5000;

// O(d^2) convolution of the Bernoulli laws. Throws size_exceeded above cap.
PmfTable pb_pmf_exact(const SuccessProbVector& q, std::size_t cap = kDefaultDpCap);

// Inverse transform of the characteristic function sampled on a
// power-of-two grid. Magnitudes below 1e-14 and negatives are zeroed.
PmfTable pb_pmf_fft(const SuccessProbVector& q);

enum class PmfMethod { automatic, dp, fft };

// Law of the sum with index j left out, recomputed on the reduced vector.
PmfTable pb_pmf_without(const SuccessProbVector& q, std::size_t j,
                        PmfMethod method = PmfMethod::automatic);

// Standard normal helpers.
double normal_cdf(double u);
double normal_pdf(double u);
double normal_quantile(double p);

// Skew-corrected normal CDF: Phi(u) + eta (1 - u^2) phi(u) / 6. Not clamped.
double refined_normal_cdf(double u, double eta);

// Continuity-corrected approximation of P(count <= l), clamped to [0,1].
// Throws degenerate_distribution when sigma2 == 0.
double rna_cdf(const PBMoments& m, std::int64_t l);

// rna_cdf(l) - rna_cdf(l-1), floored at zero.
double rna_pmf(const PBMoments& m, std::int64_t l);

// rna_pmf for every count in lo..hi (inclusive), sharing CDF evaluations.
std::vector<double> rna_pmf_range(const PBMoments& m, std::size_t lo,
                                  std::size_t hi);

// Standardized u with refined_normal_cdf(u, eta) == p, by bisection.
double rna_quantile(const PBMoments& m, double p);

// Count window {lo..hi} outside which the approximate law has tail mass
// below eps on each side, intersected with {0..d}. Falls back to the full
// range when the intersection is empty.
struct CountWindow {
  std::size_t lo = 0;
  std::size_t hi = 0;  // inclusive
  std::size_t size() const noexcept { return hi - lo + 1; }
};
CountWindow rna_window(const PBMoments& m, double eps);

}  // namespace rankseg

#endif  // RANKSEG_PBDIST_HPP_
