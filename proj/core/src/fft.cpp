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
#include "fft.hpp"

#include <fftw3.h>

#include <algorithm>
#include <memory>
#include <mutex>
#include <new>

namespace rankseg::detail {
namespace {

// The FFTW planner keeps global state; only execution is thread-safe.
std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}

template <typename T>
struct FftwFree {
  void operator()(T* p) const noexcept { fftw_free(p); }
};

template <typename T>
using FftwBuffer = std::unique_ptr<T[], FftwFree<T>>;

template <typename T>
FftwBuffer<T> fftw_buffer(std::size_t n) {
  auto* p = static_cast<T*>(fftw_malloc(sizeof(T) * std::max<std::size_t>(n, 1)));
  if (p == nullptr) throw std::bad_alloc();
  return FftwBuffer<T>(p);
}

class Plan {
 public:
  explicit Plan(fftw_plan p) : plan_(p) {
    if (plan_ == nullptr) throw std::bad_alloc();
  }
  Plan(const Plan&) = delete;
  Plan& operator=(const Plan&) = delete;
  ~Plan() {
    std::lock_guard<std::mutex> lock(planner_mutex());
    fftw_destroy_plan(plan_);
  }
  void execute() const { fftw_execute(plan_); }

 private:
  fftw_plan plan_;
};

Plan make_r2c(int n, double* in, fftw_complex* out) {
  std::lock_guard<std::mutex> lock(planner_mutex());
  return Plan(fftw_plan_dft_r2c_1d(n, in, out, FFTW_ESTIMATE));
}

Plan make_c2r(int n, fftw_complex* in, double* out) {
  std::lock_guard<std::mutex> lock(planner_mutex());
  return Plan(fftw_plan_dft_c2r_1d(n, in, out, FFTW_ESTIMATE));
}

}  // namespace

std::size_t next_pow2(std::size_t n) {
  std::size_t p = 1;
  while (p < n) p <<= 1;
  return p;
}

std::vector<double> real_from_half_spectrum(
    std::span<const std::complex<double>> half, std::size_t n) {
  const std::size_t nh = n / 2 + 1;
  auto in = fftw_buffer<fftw_complex>(nh);
  auto out = fftw_buffer<double>(n);
  // Plan before filling: planning may scribble on the arrays.
  Plan plan = make_c2r(static_cast<int>(n), in.get(), out.get());
  // c2r computes the backward (positive exponent) transform; conjugating
  // the input turns it into the forward transform of a Hermitian sequence.
  for (std::size_t k = 0; k < nh; ++k) {
    in[k][0] = half[k].real();
    in[k][1] = -half[k].imag();
  }
  plan.execute();
  return std::vector<double>(out.get(), out.get() + n);
}

std::vector<double> cross_correlate(std::span<const double> a,
                                    std::span<const double> b,
                                    std::size_t out_len) {
  if (out_len == 0) return {};
  if (a.empty() || b.empty()) return std::vector<double>(out_len, 0.0);
  const std::size_t n = next_pow2(a.size() + std::max(out_len, b.size()));
  const std::size_t nh = n / 2 + 1;

  auto ra = fftw_buffer<double>(n);
  auto rb = fftw_buffer<double>(n);
  auto fa = fftw_buffer<fftw_complex>(nh);
  auto fb = fftw_buffer<fftw_complex>(nh);
  auto rc = fftw_buffer<double>(n);
  Plan pa = make_r2c(static_cast<int>(n), ra.get(), fa.get());
  Plan pb = make_r2c(static_cast<int>(n), rb.get(), fb.get());
  Plan pc = make_c2r(static_cast<int>(n), fa.get(), rc.get());

  std::fill(ra.get(), ra.get() + n, 0.0);
  std::fill(rb.get(), rb.get() + n, 0.0);
  std::copy(a.begin(), a.end(), ra.get());
  std::copy(b.begin(), b.end(), rb.get());
  pa.execute();
  pb.execute();
  // conj(A) * B, written back into fa.
  for (std::size_t k = 0; k < nh; ++k) {
    const double ar = fa[k][0], ai = -fa[k][1];
    const double br = fb[k][0], bi = fb[k][1];
    fa[k][0] = ar * br - ai * bi;
    fa[k][1] = ar * bi + ai * br;
  }
  pc.execute();

  std::vector<double> c(out_len);
  const double scale = 1.0 / static_cast<double>(n);
  for (std::size_t t = 0; t < out_len; ++t) c[t] = rc[t] * scale;
  return c;
}

}  // namespace rankseg::detail
