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
#include "rankseg/error.hpp"

namespace rankseg {

std::string_view to_string(Errc code) noexcept {
  switch (code) {
    case Errc::invalid_argument:
      return "invalid argument";
    case Errc::size_exceeded:
      return "size exceeded";
    case Errc::degenerate_distribution:
      return "degenerate distribution";
    case Errc::variance_too_small:
      return "variance too small";
    case Errc::index_out_of_range:
      return "index out of range";
    case Errc::shape_mismatch:
      return "shape mismatch";
    case Errc::empty_input:
      return "empty input";
    case Errc::io_error:
      return "i/o error";
  }
  return "unknown error";
}

Error::Error(Errc code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message),
      code_(code),
      detail_(message) {}

}  // namespace rankseg
