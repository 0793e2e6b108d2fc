/*******************************************************************************
* Copyright 2026 dconv Authors
*
* Licensed under the Apache License, Version 2.0 (the "License");
* you may not use this file except in compliance with the License.
* You may obtain a copy of the License at
*
*     http://www.apache.org/licenses/LICENSE-2.0
*
* Unless required by applicable law or agreed to in writing, software
* distributed under the License is distributed on an "AS IS" BASIS,
* WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
* See the License for the specific language governing permissions and
* limitations under the License.
*******************************************************************************/

#include "dconv/tensor.hpp"

#include <atomic>
#include <stdexcept>

namespace dconv {

namespace {

std::atomic<std::uint64_t> g_layout_transforms{0};

void require(bool ok, const char* what) {
  if (!ok) throw std::invalid_argument(what);
}

}  // namespace

FeatureMap::FeatureMap(int c, int h, int w)
    : channels(c), height(h), width(w) {
  require(c >= 1 && h >= 1 && w >= 1, "FeatureMap: dims must be >= 1");
  data.assign(std::size_t(c) * h * w, 0.0f);
}

BlockedFeatureMap::BlockedFeatureMap(int c, int h, int w, int cb)
    : channels(c), height(h), width(w), c_b(cb) {
  require(c >= 1 && h >= 1 && w >= 1, "BlockedFeatureMap: dims must be >= 1");
  require(cb >= 1, "BlockedFeatureMap: block size must be >= 1");
  padded_channels = detail::round_up(c, cb);
  data.assign(std::size_t(padded_channels) * h * w, 0.0f);
}

KernelTensor::KernelTensor(int ci, int co, int hf, int wf)
    : c_i(ci), c_o(co), h_f(hf), w_f(wf) {
  require(ci >= 1 && co >= 1 && hf >= 1 && wf >= 1,
          "KernelTensor: dims must be >= 1");
  data.assign(std::size_t(ci) * co * hf * wf, 0.0f);
}

BlockedKernel::BlockedKernel(int ci, int co, int hf, int wf, int cob, int cib)
    : c_i(ci), c_o(co), h_f(hf), w_f(wf), c_ob(cob), c_ib(cib) {
  require(ci >= 1 && co >= 1 && hf >= 1 && wf >= 1,
          "BlockedKernel: dims must be >= 1");
  require(cob >= 1 && cib >= 1, "BlockedKernel: block sizes must be >= 1");
  padded_c_i = detail::round_up(ci, cib);
  padded_c_o = detail::round_up(co, cob);
  data.assign(std::size_t(padded_c_i) * padded_c_o * hf * wf, 0.0f);
}

BlockedFeatureMap pack_feature_map(const FeatureMap& src, int c_b) {
  g_layout_transforms.fetch_add(1, std::memory_order_relaxed);
  BlockedFeatureMap dst(src.channels, src.height, src.width, c_b);
  for (int c = 0; c < src.channels; ++c)
    for (int y = 0; y < src.height; ++y)
      for (int x = 0; x < src.width; ++x)
        dst.data[dst.offset(c, y, x)] = src.data[src.offset(c, y, x)];
  return dst;
}

FeatureMap unpack_feature_map(const BlockedFeatureMap& src) {
  g_layout_transforms.fetch_add(1, std::memory_order_relaxed);
  FeatureMap dst(src.channels, src.height, src.width);
  for (int c = 0; c < src.channels; ++c)
    for (int y = 0; y < src.height; ++y)
      for (int x = 0; x < src.width; ++x)
        dst.data[dst.offset(c, y, x)] = src.data[src.offset(c, y, x)];
  return dst;
}

BlockedKernel pack_kernel(const KernelTensor& src, int c_ob, int c_ib) {
  g_layout_transforms.fetch_add(1, std::memory_order_relaxed);
  BlockedKernel dst(src.c_i, src.c_o, src.h_f, src.w_f, c_ob, c_ib);
  for (int i = 0; i < src.c_i; ++i)
    for (int j = 0; j < src.c_o; ++j)
      for (int n = 0; n < src.h_f; ++n)
        for (int m = 0; m < src.w_f; ++m)
          dst.data[dst.offset(j / c_ob, i / c_ib, n, m, i % c_ib, j % c_ob)] =
              src.data[src.offset(i, j, n, m)];
  return dst;
}

KernelTensor unpack_kernel(const BlockedKernel& src) {
  g_layout_transforms.fetch_add(1, std::memory_order_relaxed);
  KernelTensor dst(src.c_i, src.c_o, src.h_f, src.w_f);
  for (int i = 0; i < src.c_i; ++i)
    for (int j = 0; j < src.c_o; ++j)
      for (int n = 0; n < src.h_f; ++n)
        for (int m = 0; m < src.w_f; ++m)
          dst.data[dst.offset(i, j, n, m)] =
              src.data[src.offset(j / src.c_ob, i / src.c_ib, n, m,
                                  i % src.c_ib, j % src.c_ob)];
  return dst;
}

std::uint64_t layout_transform_count() {
  return g_layout_transforms.load(std::memory_order_relaxed);
}

}  // namespace dconv
