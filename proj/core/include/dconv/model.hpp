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
#include <vector>

#include "dconv/shape.hpp"

namespace dconv {

/// Analytical description of the target core, in the style of the blocked
/// matrix-multiplication performance models.
struct MachineModel {
  int n_vec = 1;       ///< scalar lanes per vector register (power of two)
  int n_reg = 16;      ///< addressable vector registers
  int n_fma = 1;       ///< pipelined FMA units
  int l_fma = 1;       ///< FMA latency in cycles
  int cores = 1;       ///< physical cores
  double freq_ghz = 0; ///< nominal frequency; 0 = unknown (peak-FLOPS reporting only)

  /// Throws std::invalid_argument unless all integer fields are >= 1 and
  /// n_vec is a power of two.
  void validate() const;

  friend bool operator==(const MachineModel&, const MachineModel&) = default;
};

/// Model for the build host. n_vec/n_reg reflect how this library was
/// compiled (AVX2: 8 lanes, 16 vector registers; SSE: 4 lanes). n_fma = 2 and
/// l_fma = 5 are typical of recent x86 cores but are placeholders the user
/// should confirm for their machine (config file keys n_fma / l_fma).
MachineModel default_machine_model();

/// Physical core count parsed from /proc/cpuinfo, falling back to
/// std::thread::hardware_concurrency() when the topology is unreadable.
int physical_core_count();

/// Register/cache tile sizes for the direct convolution.
struct BlockingParams {
  int c_ob = 1;  ///< output-channel tile (multiple of n_vec)
  int w_ob = 1;  ///< output-width tile
  int c_ib = 1;  ///< input-channel cache tile

  friend bool operator==(const BlockingParams&, const BlockingParams&) =
      default;
};

/// Minimum number of independent output elements that must be in flight to
/// keep every FMA unit busy: n_vec * n_fma * l_fma.
int min_independent_elements(const MachineModel& m);

/// Upper bound on elements that fit in the register file: n_reg * n_vec.
int max_register_elements(const MachineModel& m);

/// True when (c_ob, w_ob) fits the register file: c_ob is a positive multiple
/// of n_vec and (c_ob/n_vec)*w_ob accumulators plus 2 operand registers
/// (input broadcast + weight vector) do not exceed n_reg.
bool fits_register_file(const MachineModel& m, int c_ob, int w_ob);

/// Enumerates every register-feasible (c_ob, w_ob, c_ib) for this shape:
/// c_ob over multiples of n_vec up to the padded output channel count, w_ob
/// up to min(w_o, register bound), c_ib over multiples of n_vec up to the
/// padded input channel count. When at least one tuple reaches the
/// saturation bound c_ob*w_ob >= min_independent_elements, only saturating
/// tuples are returned; small layers that cannot saturate return all
/// feasible tuples. Order is deterministic (ascending c_ob, w_ob, c_ib).
std::vector<BlockingParams> feasible_params(const MachineModel& m,
                                            const ConvShape& shape);

/// Picks from feasible_params the tuple maximizing c_ob*w_ob, tie-broken by
/// larger c_ob (longer unit-stride runs), then the largest c_ib whose
/// working set (one kernel slab plus the input rows it touches) fits
/// l1_budget_bytes.
BlockingParams choose_params_analytical(const MachineModel& m,
                                        const ConvShape& shape,
                                        int l1_budget_bytes = 32 * 1024);

struct AutotuneRow {
  BlockingParams params;
  std::int64_t median_ns = 0;
};

struct AutotuneReport {
  BlockingParams best;
  std::vector<AutotuneRow> rows;  ///< every timed candidate
};

/// Times the direct convolution for up to `budget` feasible candidates
/// (median of `trials` runs each, after asserting the candidate computes
/// the correct result) and returns the fastest. The analytical choice is
/// always among the candidates. Falls back to (n_vec, 1, 1) if the shape
/// admits no feasible tuple.
AutotuneReport autotune(const ConvShape& shape, const MachineModel& m,
                        int budget = 24, int trials = 5, int workers = 1);

}  // namespace dconv
