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

namespace dconv::detail {

/// Loop bounds and strides of one register-tile update, all in float counts.
struct TileShape {
  int h_f;        ///< filter rows (n loop)
  int w_f;        ///< filter columns (m loop)
  int c_ib;       ///< input channels in the block (ii loop)
  int row_pitch;  ///< distance between input rows: w_i * c_ib
  int col_stride; ///< distance between tile columns: stride * c_ib
};

/// One micro-kernel invocation. `out` points at a contiguous w_ob*c_ob tile
/// of the blocked output; `in` at input element (y*stride, x0*stride) of the
/// current input-channel block; `w` at the kernel slab for this
/// (output-block, input-block) pair. The tile is loaded into accumulators,
/// updated with the full (n, m, ii) reduction of the slab -- innermost jj
/// runs unit-stride through both kernel and output memory -- and stored
/// back; nothing else is written.
using TileKernelFn = void (*)(const float* in, const float* w, float* out,
                              const TileShape& ts);

inline constexpr int kMaxTileWidth = 16;   ///< largest specialized w_ob
inline constexpr int kMaxTileElems = 8192; ///< hard cap on w_ob*c_ob per tile

/// Compile-time specialized kernel for this (c_ob, w_ob), or nullptr when
/// the pair is outside the specialization table
/// (c_ob in {1,2,4,8,16,32,64} x w_ob in 1..kMaxTileWidth).
TileKernelFn find_tile_kernel(int c_ob, int w_ob);

/// Runtime-sized fallback with the identical accumulation order. Requires
/// c_ob*w_ob <= kMaxTileElems.
void tile_kernel_generic(const float* in, const float* w, float* out,
                         const TileShape& ts, int c_ob, int w_ob);

}  // namespace dconv::detail
