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

#include "dconv/shape.hpp"

#include <stdexcept>
#include <string>

namespace dconv {

namespace {
void require(bool ok, const char* what) {
  if (!ok) throw std::invalid_argument(std::string("ConvShape: ") + what);
}
}  // namespace

ConvShape::ConvShape(int ci, int co, int hi, int wi, int hf, int wf, int s)
    : c_i(ci), c_o(co), h_i(hi), w_i(wi), h_f(hf), w_f(wf), stride(s) {
  require(ci >= 1 && co >= 1 && hi >= 1 && wi >= 1 && hf >= 1 && wf >= 1,
          "all counts must be >= 1");
  require(s >= 1, "stride must be >= 1");
  require(hf <= hi && wf <= wi, "filter must fit inside the input");
  require((hi - hf) % s == 0, "(h_i - h_f) must be divisible by stride");
  require((wi - wf) % s == 0, "(w_i - w_f) must be divisible by stride");
  h_o = (hi - hf) / s + 1;
  w_o = (wi - wf) / s + 1;
}

}  // namespace dconv
