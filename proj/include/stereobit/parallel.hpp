// Copyright 2026 The StereoBit Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef STEREOBIT_PARALLEL_HPP
#define STEREOBIT_PARALLEL_HPP

#include <algorithm>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace stereobit {

/// 0 means "use the hardware", anything else is an explicit cap.
inline int resolve_threads(int requested) {
  if (requested > 0) return requested;
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

/// Runs body(i) for i in [begin, end) over contiguous index chunks.
///
/// Each index is touched by exactly one worker, so bodies that write only to
/// their own index are deterministic regardless of the thread count. The
/// first exception thrown by any worker is rethrown on the calling thread.
template <typename Body>
void parallel_for(int begin, int end, int threads, Body&& body) {
  const int n = end - begin;
  if (n <= 0) return;
  int workers = std::min(resolve_threads(threads), n);
  if (workers <= 1) {
    for (int i = begin; i < end; ++i) body(i);
    return;
  }

  std::exception_ptr first_error;
  std::mutex error_mutex;
  auto run_chunk = [&](int chunk) {
    const int lo = begin + static_cast<int>(static_cast<long long>(n) * chunk / workers);
    const int hi = begin + static_cast<int>(static_cast<long long>(n) * (chunk + 1) / workers);
    try {
      for (int i = lo; i < hi; ++i) body(i);
    } catch (...) {
      std::lock_guard<std::mutex> lock(error_mutex);
      if (!first_error) first_error = std::current_exception();
    }
  };

  std::vector<std::thread> pool;
  pool.reserve(workers - 1);
  for (int c = 1; c < workers; ++c) pool.emplace_back(run_chunk, c);
  run_chunk(0);
  for (auto& t : pool) t.join();
  if (first_error) std::rethrow_exception(first_error);
}

}  // namespace stereobit

#endif  // STEREOBIT_PARALLEL_HPP
