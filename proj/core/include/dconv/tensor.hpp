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

#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "dconv/shape.hpp"

namespace dconv {

namespace detail {
constexpr int round_up(int value, int block) {
  return (value + block - 1) / block * block;
}
}  // namespace detail

/// Dense channel-major feature map: offset(c, y, x) = (c*h + y)*w + x.
struct FeatureMap {
  int channels = 0;
  int height = 0;
  int width = 0;
  std::vector<float> data;

  FeatureMap() = default;
  FeatureMap(int c, int h, int w);

  std::size_t offset(int c, int y, int x) const {
    return (std::size_t(c) * height + y) * width + x;
  }
  float& at(int c, int y, int x) { return data[offset(c, y, x)]; }
  const float& at(int c, int y, int x) const { return data[offset(c, y, x)]; }
};

/// Channel-blocked feature map. Channels are grouped into blocks of c_b and
/// the channel-within-block coordinate is the fastest (unit-stride) dimension:
///
///   offset(c, y, x) = (c / c_b) * (h*w*c_b) + (y*w + x) * c_b + c % c_b
///
/// The buffer holds padded_channels = round_up(channels, c_b) channel slots
/// and exactly padded_channels*h*w elements; slots at c >= channels are kept
/// at exact zero so padded blocks contribute nothing to downstream layers.
struct BlockedFeatureMap {
  int channels = 0;
  int height = 0;
  int width = 0;
  int c_b = 1;
  int padded_channels = 0;
  std::vector<float> data;

  BlockedFeatureMap() = default;
  BlockedFeatureMap(int c, int h, int w, int cb);

  int block_count() const { return padded_channels / c_b; }
  std::size_t block_elems() const { return std::size_t(height) * width * c_b; }
  std::size_t offset(int c, int y, int x) const {
    return std::size_t(c / c_b) * block_elems() +
           (std::size_t(y) * width + x) * c_b + c % c_b;
  }
  float& at(int c, int y, int x) { return data[offset(c, y, x)]; }
  const float& at(int c, int y, int x) const { return data[offset(c, y, x)]; }
  float* block(int b) { return data.data() + std::size_t(b) * block_elems(); }
  const float* block(int b) const {
    return data.data() + std::size_t(b) * block_elems();
  }
};

/// Dense kernel weights, offset(i, j, n, m) = ((i*c_o + j)*h_f + n)*w_f + m
/// with i = input channel, j = output channel, n = filter row, m = filter
/// column.
struct KernelTensor {
  int c_i = 0;
  int c_o = 0;
  int h_f = 0;
  int w_f = 0;
  std::vector<float> data;

  KernelTensor() = default;
  KernelTensor(int ci, int co, int hf, int wf);

  std::size_t offset(int i, int j, int n, int m) const {
    return ((std::size_t(i) * c_o + j) * h_f + n) * w_f + m;
  }
  float& at(int i, int j, int n, int m) { return data[offset(i, j, n, m)]; }
  const float& at(int i, int j, int n, int m) const {
    return data[offset(i, j, n, m)];
  }
};

/// Blocked kernel weights, dimensions slowest to fastest:
///
///   [c_o/c_ob][c_i/c_ib][h_f][w_f][c_ib][c_ob]
///
/// so the blocked output channel jj is the unit-stride dimension. Channel
/// counts are padded up to block multiples; padded slots hold exact zeros.
struct BlockedKernel {
  int c_i = 0;
  int c_o = 0;
  int h_f = 0;
  int w_f = 0;
  int c_ob = 1;
  int c_ib = 1;
  int padded_c_i = 0;
  int padded_c_o = 0;
  std::vector<float> data;

  BlockedKernel() = default;
  BlockedKernel(int ci, int co, int hf, int wf, int cob, int cib);

  int in_blocks() const { return padded_c_i / c_ib; }
  int out_blocks() const { return padded_c_o / c_ob; }
  /// Contiguous weights for one (output block, input block) pair.
  std::size_t slab_elems() const {
    return std::size_t(h_f) * w_f * c_ib * c_ob;
  }
  std::size_t offset(int jb, int ib, int n, int m, int ii, int jj) const {
    return ((((std::size_t(jb) * in_blocks() + ib) * h_f + n) * w_f + m) *
                c_ib +
            ii) *
               c_ob +
           jj;
  }
  const float* slab(int jb, int ib) const {
    return data.data() + (std::size_t(jb) * in_blocks() + ib) * slab_elems();
  }
};

/// Copies src into the blocked layout with channel block size c_b;
/// channels are zero-padded up to the next multiple of c_b.
BlockedFeatureMap pack_feature_map(const FeatureMap& src, int c_b);

/// Inverse of pack_feature_map; padded channels are dropped.
FeatureMap unpack_feature_map(const BlockedFeatureMap& src);

/// One-time rearrangement of trained weights into the blocked layout.
BlockedKernel pack_kernel(const KernelTensor& src, int c_ob, int c_ib);

/// Inverse of pack_kernel; padded channel slots are dropped.
KernelTensor unpack_kernel(const BlockedKernel& src);

/// Process-wide count of pack/unpack calls. Chained layers are expected to
/// run without any layout transform in between; callers can snapshot this
/// counter around a pipeline to assert that.
std::uint64_t layout_transform_count();

}  // namespace dconv
