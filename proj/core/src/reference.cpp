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

#include "dconv/reference.hpp"

#include <stdexcept>
#include <vector>

namespace dconv {

void check_dims(const FeatureMap& input, const KernelTensor& kernel,
                const ConvShape& shape) {
  if (input.channels != shape.c_i || input.height != shape.h_i ||
      input.width != shape.w_i)
    throw std::invalid_argument("conv: input dims do not match shape");
  if (kernel.c_i != shape.c_i || kernel.c_o != shape.c_o ||
      kernel.h_f != shape.h_f || kernel.w_f != shape.w_f)
    throw std::invalid_argument("conv: kernel dims do not match shape");
}

FeatureMap conv_naive(const FeatureMap& input, const KernelTensor& kernel,
                      const ConvShape& shape, std::uint64_t* multiply_count) {
  check_dims(input, kernel, shape);
  const int s = shape.stride;
  FeatureMap out(shape.c_o, shape.h_o, shape.w_o);
  std::uint64_t muls = 0;
  for (int i = 0; i < shape.c_i; ++i)
    for (int j = 0; j < shape.c_o; ++j)
      for (int x = 0; x < shape.w_o; ++x)
        for (int y = 0; y < shape.h_o; ++y)
          for (int m = 0; m < shape.w_f; ++m)
            for (int n = 0; n < shape.h_f; ++n) {
              out.at(j, y, x) +=
                  input.at(i, y * s + n, x * s + m) * kernel.at(i, j, n, m);
              ++muls;
            }
  if (multiply_count) *multiply_count += muls;
  return out;
}

FeatureMap conv_reordered(const FeatureMap& input, const KernelTensor& kernel,
                          const ConvShape& shape) {
  check_dims(input, kernel, shape);
  const int s = shape.stride;
  FeatureMap out(shape.c_o, shape.h_o, shape.w_o);
  for (int y = 0; y < shape.h_o; ++y)
    for (int n = 0; n < shape.h_f; ++n)
      for (int m = 0; m < shape.w_f; ++m)
        for (int i = 0; i < shape.c_i; ++i)
          for (int x = 0; x < shape.w_o; ++x)
            for (int j = 0; j < shape.c_o; ++j)
              out.at(j, y, x) +=
                  input.at(i, y * s + n, x * s + m) * kernel.at(i, j, n, m);
  return out;
}

FeatureMap conv_oracle64(const FeatureMap& input, const KernelTensor& kernel,
                         const ConvShape& shape) {
  check_dims(input, kernel, shape);
  const int s = shape.stride;
  std::vector<double> acc(std::size_t(shape.c_o) * shape.h_o * shape.w_o, 0.0);
  for (int i = 0; i < shape.c_i; ++i)
    for (int j = 0; j < shape.c_o; ++j)
      for (int x = 0; x < shape.w_o; ++x)
        for (int y = 0; y < shape.h_o; ++y)
          for (int m = 0; m < shape.w_f; ++m)
            for (int n = 0; n < shape.h_f; ++n)
              acc[(std::size_t(j) * shape.h_o + y) * shape.w_o + x] +=
                  double(input.at(i, y * s + n, x * s + m)) *
                  double(kernel.at(i, j, n, m));
  FeatureMap out(shape.c_o, shape.h_o, shape.w_o);
  for (std::size_t k = 0; k < acc.size(); ++k) out.data[k] = float(acc[k]);
  return out;
}

ColMatrix im2col(const FeatureMap& input, const ConvShape& shape) {
  if (input.channels != shape.c_i || input.height != shape.h_i ||
      input.width != shape.w_i)
    throw std::invalid_argument("im2col: input dims do not match shape");
  const int s = shape.stride;
  ColMatrix mat(shape.h_f * shape.w_f * shape.c_i, shape.h_o * shape.w_o);
  for (int i = 0; i < shape.c_i; ++i)
    for (int n = 0; n < shape.h_f; ++n)
      for (int m = 0; m < shape.w_f; ++m) {
        const int r = (i * shape.h_f + n) * shape.w_f + m;
        for (int y = 0; y < shape.h_o; ++y)
          for (int x = 0; x < shape.w_o; ++x)
            mat.at(r, y * shape.w_o + x) = input.at(i, y * s + n, x * s + m);
      }
  return mat;
}

std::int64_t conv_flops(const ConvShape& shape) {
  return 2LL * shape.c_i * shape.c_o * shape.h_o * shape.w_o * shape.h_f *
         shape.w_f;
}

}  // namespace dconv
