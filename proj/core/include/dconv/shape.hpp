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

#include <cstdint>

namespace dconv {

/// Geometry of one valid (unpadded) convolution layer.
///
/// Spatial coordinates are (row y, column x) everywhere in this library;
/// filter offsets use n for rows and m for columns. Output sizes are derived
/// as h_o = (h_i - h_f) / stride + 1 (and likewise for widths); shapes where
/// the division is not exact are rejected since no padding is ever applied.
struct ConvShape {
  int c_i;     ///< input channels
  int c_o;     ///< output channels
  int h_i;     ///< input height
  int w_i;     ///< input width
  int h_f;     ///< filter height
  int w_f;     ///< filter width
  int stride;  ///< spatial stride, >= 1
  int h_o;     ///< derived output height
  int w_o;     ///< derived output width

  /// Throws std::invalid_argument if any count is < 1, the filter does not
  /// fit inside the input, or the stride does not evenly tile the input.
  ConvShape(int ci, int co, int hi, int wi, int hf, int wf, int s = 1);

  friend bool operator==(const ConvShape&, const ConvShape&) = default;
};

}  // namespace dconv
