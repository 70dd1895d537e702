// SPDX-License-Identifier: Apache-2.0
//
// Deterministic chunked execution. Work is split into fixed-size chunks;
// each chunk owns the stream derived from its index and produces a
// partial result. Partials are handed to the consumer in chunk-index
// order on the calling thread, so the combined result is a function of
// (seed, n, chunk_size) alone -- never of the worker count or schedule.

#pragma once

#include <condition_variable>
#include <cstdint>
#include <exception>
#include <map>
#include <mutex>
#include <thread>
#include <vector>

#include "rebit/sampling.hpp"

namespace rebit {

inline unsigned effective_workers(unsigned requested) {
  if (requested > 0) return requested;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw > 0 ? hw : 1;
}

inline std::uint64_t chunk_count(std::uint64_t n_samples, std::uint64_t chunk_size) {
  return (n_samples + chunk_size - 1) / chunk_size;
}

/// Runs `chunk_fn(chunk_index, count, stream)` over every chunk of an
/// n-sample workload and feeds the partials to `consume(chunk_index,
/// partial)` in increasing chunk order. Exceptions from workers are
/// rethrown on the calling thread.
template <typename Partial, typename ChunkFn, typename ConsumeFn>
void for_each_chunk_ordered(std::uint64_t n_samples, const SeedSpec& seed, unsigned workers,
                            ChunkFn&& chunk_fn, ConsumeFn&& consume) {
  const std::uint64_t n_chunks = chunk_count(n_samples, seed.chunk_size);
  if (n_chunks == 0) return;

  const unsigned n_workers = effective_workers(workers);
  const std::uint64_t max_pending = static_cast<std::uint64_t>(n_workers) * 4 + 8;

  std::mutex mu;
  std::condition_variable cv;
  std::map<std::uint64_t, Partial> pending;
  std::uint64_t next_chunk = 0;
  std::uint64_t next_consume = 0;
  std::exception_ptr failure;

  auto work = [&] {
    for (;;) {
      std::uint64_t k;
      {
        std::lock_guard<std::mutex> lock(mu);
        if (failure || next_chunk >= n_chunks) return;
        k = next_chunk++;
      }
      const std::uint64_t begin = k * seed.chunk_size;
      const std::uint64_t count = std::min(seed.chunk_size, n_samples - begin);
      try {
        RandomStream stream = derive_stream(seed, k);
        Partial p = chunk_fn(k, count, stream);
        std::unique_lock<std::mutex> lock(mu);
        cv.wait(lock, [&] { return failure || k < next_consume + max_pending; });
        if (failure) return;
        pending.emplace(k, std::move(p));
        cv.notify_all();
      } catch (...) {
        std::lock_guard<std::mutex> lock(mu);
        if (!failure) failure = std::current_exception();
        cv.notify_all();
        return;
      }
    }
  };

  std::vector<std::thread> pool;
  pool.reserve(n_workers);
  for (unsigned t = 0; t < n_workers; ++t) pool.emplace_back(work);

  try {
    std::unique_lock<std::mutex> lock(mu);
    while (next_consume < n_chunks) {
      cv.wait(lock, [&] { return failure || pending.count(next_consume) > 0; });
      if (failure) break;
      auto node = pending.extract(next_consume);
      Partial p = std::move(node.mapped());
      lock.unlock();
      consume(next_consume, std::move(p));
      lock.lock();
      ++next_consume;
      cv.notify_all();
    }
  } catch (...) {
    {
      std::lock_guard<std::mutex> lock(mu);
      if (!failure) failure = std::current_exception();
      cv.notify_all();
    }
    for (auto& t : pool) t.join();
    std::rethrow_exception(failure);
  }

  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
}

}  // namespace rebit
