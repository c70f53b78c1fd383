// Copyright 2026 The gridpe Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "gridpe/checkpoint.hpp"

#include <cstdint>
#include <cstring>
#include <fstream>
#include <stdexcept>
#include <vector>

namespace gridpe {
namespace {

constexpr char kMagic[4] = {'G', 'P', 'C', 'K'};
constexpr std::uint32_t kVersion = 1;
constexpr std::uint32_t kLayerCount = 6;

void put_u32(std::ostream& out, std::uint32_t v) {
  const unsigned char bytes[4] = {
      static_cast<unsigned char>(v & 0xff),
      static_cast<unsigned char>((v >> 8) & 0xff),
      static_cast<unsigned char>((v >> 16) & 0xff),
      static_cast<unsigned char>((v >> 24) & 0xff)};
  out.write(reinterpret_cast<const char*>(bytes), 4);
}

void put_f32(std::ostream& out, float f) {
  std::uint32_t bits;
  std::memcpy(&bits, &f, 4);
  put_u32(out, bits);
}

std::uint32_t take_u32(std::istream& in, const std::string& path) {
  unsigned char bytes[4];
  in.read(reinterpret_cast<char*>(bytes), 4);
  if (!in) throw std::runtime_error("truncated checkpoint: " + path);
  return static_cast<std::uint32_t>(bytes[0]) |
         (static_cast<std::uint32_t>(bytes[1]) << 8) |
         (static_cast<std::uint32_t>(bytes[2]) << 16) |
         (static_cast<std::uint32_t>(bytes[3]) << 24);
}

float take_f32(std::istream& in, const std::string& path) {
  const std::uint32_t bits = take_u32(in, path);
  float f;
  std::memcpy(&f, &bits, 4);
  return f;
}

void write_layer_values(std::ostream& out, const LinearLayer& l) {
  for (Scalar v : l.w) put_f32(out, static_cast<float>(v));
  for (Scalar v : l.b) put_f32(out, static_cast<float>(v));
}

void read_layer_values(std::istream& in, const std::string& path,
                       LinearLayer* l) {
  for (Scalar& v : l->w) v = take_f32(in, path);
  for (Scalar& v : l->b) v = take_f32(in, path);
}

}  // namespace

void quantize_parameters(Mlp* net) {
  for (LinearLayer* l : {&net->l1, &net->l2, &net->l3}) {
    for (Scalar& v : l->w) v = static_cast<double>(static_cast<float>(v));
    for (Scalar& v : l->b) v = static_cast<double>(static_cast<float>(v));
  }
}

void save_checkpoint(const std::string& path, const Mlp& policy,
                     const Mlp& value) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open checkpoint for writing: " + path);
  out.write(kMagic, 4);
  put_u32(out, kVersion);
  put_u32(out, kLayerCount);
  const LinearLayer* layers[kLayerCount] = {&policy.l1, &policy.l2, &policy.l3,
                                            &value.l1, &value.l2, &value.l3};
  for (const LinearLayer* l : layers) {
    put_u32(out, static_cast<std::uint32_t>(l->out_dim));
    put_u32(out, static_cast<std::uint32_t>(l->in_dim));
  }
  for (const LinearLayer* l : layers) write_layer_values(out, *l);
  out.flush();
  if (!out) throw std::runtime_error("failed writing checkpoint: " + path);
}

AgentCheckpoint load_checkpoint(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open checkpoint: " + path);
  char magic[4];
  in.read(magic, 4);
  if (!in || std::memcmp(magic, kMagic, 4) != 0) {
    throw std::runtime_error("not a checkpoint file: " + path);
  }
  if (take_u32(in, path) != kVersion) {
    throw std::runtime_error("unsupported checkpoint version: " + path);
  }
  if (take_u32(in, path) != kLayerCount) {
    throw std::runtime_error("unexpected layer count: " + path);
  }
  std::uint32_t rows[kLayerCount];
  std::uint32_t cols[kLayerCount];
  for (std::uint32_t i = 0; i < kLayerCount; ++i) {
    rows[i] = take_u32(in, path);
    cols[i] = take_u32(in, path);
  }
  for (int net = 0; net < 2; ++net) {
    const std::uint32_t* r = rows + net * 3;
    const std::uint32_t* c = cols + net * 3;
    if (r[0] != static_cast<std::uint32_t>(kHidden1) ||
        r[1] != static_cast<std::uint32_t>(kHidden2) || c[1] != r[0] ||
        c[2] != r[1]) {
      throw std::runtime_error("checkpoint layer shapes do not chain: " + path);
    }
  }
  if (rows[2] != static_cast<std::uint32_t>(kActionCount) || rows[5] != 1 ||
      cols[0] != cols[3]) {
    throw std::runtime_error("checkpoint head shapes are wrong: " + path);
  }
  AgentCheckpoint ckpt;
  ckpt.policy = Mlp::zeros(static_cast<int>(cols[0]), static_cast<int>(rows[2]));
  ckpt.value = Mlp::zeros(static_cast<int>(cols[3]), static_cast<int>(rows[5]));
  LinearLayer* layers[kLayerCount] = {&ckpt.policy.l1, &ckpt.policy.l2,
                                      &ckpt.policy.l3, &ckpt.value.l1,
                                      &ckpt.value.l2, &ckpt.value.l3};
  for (LinearLayer* l : layers) read_layer_values(in, path, l);
  in.peek();
  if (!in.eof()) throw std::runtime_error("trailing bytes in checkpoint: " + path);
  return ckpt;
}

}  // namespace gridpe
