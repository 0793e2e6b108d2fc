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

#include "dconv/thread_pool.hpp"

#include <cstdlib>

namespace dconv {

int default_worker_count() {
  if (const char* env = std::getenv("DCONV_THREADS")) {
    const int n = std::atoi(env);
    if (n >= 1) return n;
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw ? int(hw) : 1;
}

ThreadPool::ThreadPool(int threads) {
  if (threads < 0) threads = 0;
  workers_.reserve(threads);
  for (int t = 0; t < threads; ++t)
    workers_.emplace_back([this] { worker_loop(); });
}

ThreadPool::~ThreadPool() {
  {
    std::lock_guard lock(mutex_);
    stop_ = true;
  }
  wake_.notify_all();
  for (auto& w : workers_) w.join();
}

void ThreadPool::ensure(int threads) {
  std::lock_guard lock(mutex_);
  while (int(workers_.size()) < threads)
    workers_.emplace_back([this] { worker_loop(); });
}

std::int64_t ThreadPool::claim(std::int64_t end) {
  std::int64_t c = cursor_.load(std::memory_order_relaxed);
  while (c < end) {
    if (cursor_.compare_exchange_weak(c, c + 1, std::memory_order_acq_rel,
                                      std::memory_order_relaxed))
      return c;
  }
  return -1;
}

void ThreadPool::run(int chunks, Task task, void* ctx) {
  if (chunks <= 0) return;
  if (chunks == 1 || workers_.empty()) {
    for (int c = 0; c < chunks; ++c) task(ctx, c);
    return;
  }

  std::int64_t base, end;
  {
    std::lock_guard lock(mutex_);
    base = cursor_.load(std::memory_order_relaxed);
    end = base + chunks;
    base_ = base;
    end_ = end;
    task_ = task;
    ctx_ = ctx;
    pending_.store(chunks, std::memory_order_relaxed);
    ++generation_;
  }
  wake_.notify_all();

  // The caller works too; whoever finishes the last chunk signals done_.
  for (;;) {
    const std::int64_t c = claim(end);
    if (c < 0) break;
    task(ctx, int(c - base));
    pending_.fetch_sub(1, std::memory_order_acq_rel);
  }

  std::unique_lock lock(mutex_);
  done_.wait(lock,
             [this] { return pending_.load(std::memory_order_acquire) == 0; });
  task_ = nullptr;
}

void ThreadPool::worker_loop() {
  std::uint64_t seen = 0;
  for (;;) {
    Task task;
    void* ctx;
    std::int64_t base, end;
    {
      std::unique_lock lock(mutex_);
      wake_.wait(lock, [&] { return stop_ || generation_ != seen; });
      if (stop_) return;
      seen = generation_;
      task = task_;
      ctx = ctx_;
      base = base_;
      end = end_;
    }
    if (!task) continue;
    for (;;) {
      const std::int64_t c = claim(end);
      if (c < 0) break;
      task(ctx, int(c - base));
      if (pending_.fetch_sub(1, std::memory_order_acq_rel) == 1) {
        std::lock_guard lock(mutex_);
        done_.notify_all();
      }
    }
  }
}

ThreadPool& ThreadPool::shared() {
  static ThreadPool pool(default_worker_count());
  return pool;
}

}  // namespace dconv
