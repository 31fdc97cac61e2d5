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
#ifndef RANKSEG_ERROR_HPP_
#define RANKSEG_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

namespace rankseg {

enum class Errc {
  invalid_argument,
  size_exceeded,
  degenerate_distribution,
  variance_too_small,
  index_out_of_range,
  shape_mismatch,
  empty_input,
  io_error,
};

std::string_view to_string(Errc code) noexcept;

// All library failures are reported through this exception type; `code()`
// lets callers branch on the failure class without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message);

  Errc code() const noexcept { return code_; }
  // Message without the code prefix.
  const std::string& detail() const noexcept { return detail_; }

 private:
  Errc code_;
  std::string detail_;
};

}  // namespace rankseg

#endif  // RANKSEG_ERROR_HPP_
