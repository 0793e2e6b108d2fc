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

#include <atomic>
#include <condition_variable>
#include <cstdint>
#include <mutex>
#include <thread>
#include <vector>

namespace dconv {

/// Fixed set of worker threads executing fork/join chunk loops.
///
/// run() hands out chunk indices [0, chunks) to the workers plus the calling
/// thread and returns when all chunks completed. Dispatch uses a raw function
/// pointer and a context pointer; claiming a chunk is one CAS on a monotonic
/// cursor, so run() performs no heap allocation. Which thread executes which
/// chunk is unspecified; callers must encode determinism in the
/// chunk -> work mapping, not in thread identity.
class ThreadPool {
 public:
  using Task = void (*)(void* ctx, int chunk);

  explicit ThreadPool(int threads = 0);
  ~ThreadPool();

  ThreadPool(const ThreadPool&) = delete;
  ThreadPool& operator=(const ThreadPool&) = delete;

  /// Worker threads owned by the pool (the caller participates on top).
  int size() const { return int(workers_.size()); }

  /// Grows the pool to at least `threads` workers. Allocates; never call
  /// from inside a timed or allocation-free region.
  void ensure(int threads);

  /// Executes task(ctx, chunk) for every chunk in [0, chunks). Blocks until
  /// done. chunks == 1 (or an empty pool) runs entirely on the caller.
  void run(int chunks, Task task, void* ctx);

  /// Process-wide pool, lazily created with default_worker_count() workers.
  static ThreadPool& shared();

 private:
  void worker_loop();
  std::int64_t claim(std::int64_t end);

  std::vector<std::thread> workers_;
  std::mutex mutex_;
  std::condition_variable wake_;
  std::condition_variable done_;
  Task task_ = nullptr;
  void* ctx_ = nullptr;
  // Chunks are numbered on a cursor that only moves forward, so a worker
  // waking up late can never claim or re-run work from a previous run().
  std::atomic<std::int64_t> cursor_{0};
  std::int64_t end_ = 0;
  std::int64_t base_ = 0;
  std::atomic<int> pending_{0};
  std::uint64_t generation_ = 0;
  bool stop_ = false;
};

/// Worker count used when a caller passes 0: the DCONV_THREADS environment
/// variable if set, otherwise std::thread::hardware_concurrency().
int default_worker_count();

}  // namespace dconv
