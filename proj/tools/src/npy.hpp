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
#ifndef RANKSEG_TOOLS_NPY_HPP_
#define RANKSEG_TOOLS_NPY_HPP_

// Minimal NPY (format 1.0) reader/writer. Little-endian <f4, <f8 and |u1,
// C order only; anything else is rejected with a message naming the problem.

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

namespace rankseg::npy {

enum class Dtype { f4, f8, u1 };

const char* descr(Dtype t) noexcept;  // "<f4", "<f8", "|u1"
std::size_t item_size(Dtype t) noexcept;

struct Array {
  Dtype dtype = Dtype::f8;
  std::vector<std::size_t> shape;
  std::vector<std::uint8_t> data;  // raw little-endian payload

  std::size_t element_count() const noexcept;
  std::vector<double> to_doubles() const;

  static Array from_doubles(std::vector<std::size_t> shape,
                            const std::vector<double>& v);
  static Array from_bytes(std::vector<std::size_t> shape,
                          std::vector<std::uint8_t> v);
};

// Both throw rankseg::Error (io_error / invalid_argument).
Array parse(const std::vector<std::uint8_t>& bytes, const std::string& name = "<memory>");
Array read(const std::filesystem::path& path);

std::vector<std::uint8_t> serialize(const Array& a);
void write(const std::filesystem::path& path, const Array& a);

}  // namespace rankseg::npy

#endif  // RANKSEG_TOOLS_NPY_HPP_
