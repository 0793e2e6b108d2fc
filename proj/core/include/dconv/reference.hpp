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

#include "dconv/shape.hpp"
#include "dconv/tensor.hpp"

namespace dconv {

/// Lowered input matrix for the im2col + GEMM path. Row r = (i*h_f + n)*w_f + m
/// holds the input values that multiply kernel weight (i, *, n, m); column
/// q = y*w_o + x corresponds to output pixel (y, x). Row-major storage.
/// The buffer duplicates input elements whenever h_f*w_f > stride^2.
struct ColMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<float> data;

  ColMatrix() = default;
  ColMatrix(int r, int c) : rows(r), cols(c), data(std::size_t(r) * c, 0.0f) {}

  float& at(int r, int c) { return data[std::size_t(r) * cols + c]; }
  const float& at(int r, int c) const { return data[std::size_t(r) * cols + c]; }
};

/// Plain six-loop convolution, reduction loops ordered (i, m, n) outermost
/// first. This is the semantic definition the fast paths are checked against.
/// If `multiply_count` is non-null it is incremented once per multiply.
FeatureMap conv_naive(const FeatureMap& input, const KernelTensor& kernel,
                      const ConvShape& shape,
                      std::uint64_t* multiply_count = nullptr);

/// Same sum, loop order (y, n, m, i, x, j): output row outermost, output
/// channel innermost. Identical math, different accumulation order.
FeatureMap conv_reordered(const FeatureMap& input, const KernelTensor& kernel,
                          const ConvShape& shape);

/// conv_naive with all accumulation carried out in 64-bit, rounded to 32-bit
/// at the end. Referee for tolerance disputes between 32-bit paths.
FeatureMap conv_oracle64(const FeatureMap& input, const KernelTensor& kernel,
                         const ConvShape& shape);

/// Lowering step of the matrix-multiplication-based implementation.
ColMatrix im2col(const FeatureMap& input, const ConvShape& shape);

/// Total floating point operations of one convolution, counting each
/// multiply-accumulate as 2 FLOPs: 2 * c_i * c_o * h_o * w_o * h_f * w_f.
/// Every implementation in this library performs exactly this many.
std::int64_t conv_flops(const ConvShape& shape);

/// Throws std::invalid_argument unless input and kernel dims match shape.
void check_dims(const FeatureMap& input, const KernelTensor& kernel,
                const ConvShape& shape);

}  // namespace dconv
