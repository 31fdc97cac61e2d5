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
#include "npy.hpp"

#include <bit>
#include <cstring>
#include <fstream>
#include <functional>
#include <iterator>
#include <numeric>
#include <regex>

#include "rankseg/error.hpp"

namespace rankseg::npy {

static_assert(std::endian::native == std::endian::little,
              "NPY payloads are copied as-is; a little-endian host is assumed");

namespace {

constexpr char kMagic[] = "\x93NUMPY";
constexpr std::size_t kMagicLen = 6;

[[noreturn]] void fail(const std::string& name, const std::string& why) {
  throw Error(Errc::io_error, name + ": " + why);
}

std::string shape_tuple(const std::vector<std::size_t>& shape) {
  std::string s = "(";
  for (std::size_t i = 0; i < shape.size(); ++i) {
    if (i > 0) s += ", ";
    s += std::to_string(shape[i]);
  }
  if (shape.size() == 1) s += ",";
  return s + ")";
}

}  // namespace

const char* descr(Dtype t) noexcept {
  switch (t) {
    case Dtype::f4:
      return "<f4";
    case Dtype::f8:
      return "<f8";
    case Dtype::u1:
      return "|u1";
  }
  return "<f8";
}

std::size_t item_size(Dtype t) noexcept {
  switch (t) {
    case Dtype::f4:
      return 4;
    case Dtype::f8:
      return 8;
    case Dtype::u1:
      return 1;
  }
  return 8;
}

std::size_t Array::element_count() const noexcept {
  return std::accumulate(shape.begin(), shape.end(), std::size_t{1},
                         std::multiplies<>());
}

std::vector<double> Array::to_doubles() const {
  const std::size_t n = element_count();
  std::vector<double> out(n);
  switch (dtype) {
    case Dtype::f8:
      std::memcpy(out.data(), data.data(), n * 8);
      break;
    case Dtype::f4:
      for (std::size_t i = 0; i < n; ++i) {
        float f;
        std::memcpy(&f, data.data() + 4 * i, 4);
        out[i] = static_cast<double>(f);
      }
      break;
    case Dtype::u1:
      for (std::size_t i = 0; i < n; ++i) out[i] = static_cast<double>(data[i]);
      break;
  }
  return out;
}

Array Array::from_doubles(std::vector<std::size_t> shape, const std::vector<double>& v) {
  Array a;
  a.dtype = Dtype::f8;
  a.shape = std::move(shape);
  a.data.resize(v.size() * 8);
  std::memcpy(a.data.data(), v.data(), a.data.size());
  return a;
}

Array Array::from_bytes(std::vector<std::size_t> shape, std::vector<std::uint8_t> v) {
  Array a;
  a.dtype = Dtype::u1;
  a.shape = std::move(shape);
  a.data = std::move(v);
  return a;
}

Array parse(const std::vector<std::uint8_t>& bytes, const std::string& name) {
  if (bytes.size() < 10 || std::memcmp(bytes.data(), kMagic, kMagicLen) != 0) {
    fail(name, "not an NPY file (bad magic)");
  }
  const std::uint8_t major = bytes[6];
  std::size_t header_len = 0, header_start = 0;
  if (major == 1) {
    header_len = bytes[8] | (static_cast<std::size_t>(bytes[9]) << 8);
    header_start = 10;
  } else if (major == 2 || major == 3) {
    if (bytes.size() < 12) fail(name, "truncated header");
    header_len = bytes[8] | (static_cast<std::size_t>(bytes[9]) << 8) |
                 (static_cast<std::size_t>(bytes[10]) << 16) |
                 (static_cast<std::size_t>(bytes[11]) << 24);
    header_start = 12;
  } else {
    fail(name, "unsupported NPY version " + std::to_string(major));
  }
  if (bytes.size() < header_start + header_len) fail(name, "truncated header");
  const std::string header(bytes.begin() + static_cast<std::ptrdiff_t>(header_start),
                           bytes.begin() + static_cast<std::ptrdiff_t>(header_start + header_len));

  std::smatch m;
  static const std::regex descr_re(R"('descr'\s*:\s*'([^']*)')");
  static const std::regex order_re(R"('fortran_order'\s*:\s*(True|False))");
  static const std::regex shape_re(R"('shape'\s*:\s*\(([^)]*)\))");
  if (!std::regex_search(header, m, descr_re)) fail(name, "header lacks 'descr'");
  const std::string d = m[1];
  Array a;
  if (d == "<f8") {
    a.dtype = Dtype::f8;
  } else if (d == "<f4") {
    a.dtype = Dtype::f4;
  } else if (d == "|u1" || d == "<u1" || d == "|b1") {
    a.dtype = Dtype::u1;
  } else {
    fail(name, "unsupported dtype '" + d + "' (expected <f4, <f8 or |u1)");
  }
  if (!std::regex_search(header, m, order_re)) fail(name, "header lacks 'fortran_order'");
  if (m[1] == "True") fail(name, "Fortran-ordered arrays are not supported");
  if (!std::regex_search(header, m, shape_re)) fail(name, "header lacks 'shape'");
  const std::string dims = m[1];
  static const std::regex int_re(R"(\d+)");
  for (auto it = std::sregex_iterator(dims.begin(), dims.end(), int_re);
       it != std::sregex_iterator(); ++it) {
    a.shape.push_back(static_cast<std::size_t>(std::stoull(it->str())));
  }

  const std::size_t payload = a.element_count() * item_size(a.dtype);
  const std::size_t start = header_start + header_len;
  if (bytes.size() - start != payload) {
    fail(name, "payload holds " + std::to_string(bytes.size() - start) +
                   " bytes, shape needs " + std::to_string(payload));
  }
  a.data.assign(bytes.begin() + static_cast<std::ptrdiff_t>(start), bytes.end());
  return a;
}

Array read(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(path.string(), "cannot open for reading");
  std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                                  std::istreambuf_iterator<char>());
  return parse(bytes, path.string());
}

std::vector<std::uint8_t> serialize(const Array& a) {
  std::string header = std::string("{'descr': '") + descr(a.dtype) +
                       "', 'fortran_order': False, 'shape': " + shape_tuple(a.shape) +
                       ", }";
  // Pad with spaces so the payload starts on a 64-byte boundary.
  const std::size_t unpadded = 10 + header.size() + 1;
  header.append((64 - unpadded % 64) % 64, ' ');
  header.push_back('\n');

  std::vector<std::uint8_t> out;
  out.reserve(10 + header.size() + a.data.size());
  out.insert(out.end(), kMagic, kMagic + kMagicLen);
  out.push_back(1);
  out.push_back(0);
  out.push_back(static_cast<std::uint8_t>(header.size() & 0xff));
  out.push_back(static_cast<std::uint8_t>(header.size() >> 8));
  out.insert(out.end(), header.begin(), header.end());
  out.insert(out.end(), a.data.begin(), a.data.end());
  return out;
}

void write(const std::filesystem::path& path, const Array& a) {
  const std::vector<std::uint8_t> bytes = serialize(a);
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) fail(path.string(), "cannot open for writing");
  out.write(reinterpret_cast<const char*>(bytes.data()),
            static_cast<std::streamsize>(bytes.size()));
  if (!out) fail(path.string(), "write failed");
}

}  // namespace rankseg::npy
