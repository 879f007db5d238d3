#include "multimod/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <limits>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

namespace multimod {

namespace {

constexpr std::size_t kChunk = 32;

std::size_t threads_for(std::size_t count) {
  return std::max<std::size_t>(1, std::min(worker_count(), count / kChunk));
}

}  // namespace

std::size_t worker_count() {
  if (const char* env = std::getenv("DCA_THREADS")) {
    try {
      long v = std::stol(env);
      if (v > 0) return static_cast<std::size_t>(v);
    } catch (const std::exception&) {
    }
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

SweepResult sweep_items(std::size_t count, const std::function<ItemScan(std::size_t)>& scan) {
  SweepResult result;
  const std::size_t threads = threads_for(count);
  if (threads == 1) {
    for (std::size_t i = 0; i < count; ++i) {
      ItemScan item = scan(i);
      result.checked += item.checked;
      if (item.witness) {
        result.witness = std::move(item.witness);
        break;
      }
    }
    return result;
  }

  std::vector<std::uint64_t> checked(count, 0);
  std::atomic<std::size_t> best{std::numeric_limits<std::size_t>::max()};
  std::atomic<std::size_t> next_chunk{0};
  std::mutex mutex;
  std::optional<Witness> best_witness;

  auto worker = [&] {
    for (;;) {
      const std::size_t begin = next_chunk.fetch_add(kChunk);
      if (begin >= count || begin > best.load()) return;
      const std::size_t end = std::min(count, begin + kChunk);
      for (std::size_t i = begin; i < end && i <= best.load(); ++i) {
        ItemScan item = scan(i);
        checked[i] = item.checked;
        if (item.witness) {
          std::lock_guard lock(mutex);
          if (i < best.load()) {
            best.store(i);
            best_witness = std::move(item.witness);
          }
          break;
        }
      }
    }
  };
  std::vector<std::jthread> pool;
  for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker);
  pool.clear();

  const std::size_t last = std::min(count, best.load() == std::numeric_limits<std::size_t>::max()
                                               ? count
                                               : best.load() + 1);
  for (std::size_t i = 0; i < last; ++i) result.checked += checked[i];
  result.witness = std::move(best_witness);
  return result;
}

void parallel_for(std::size_t count, const std::function<void(std::size_t)>& fn) {
  const std::size_t threads = threads_for(count);
  if (threads == 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next_chunk{0};
  auto worker = [&] {
    for (;;) {
      const std::size_t begin = next_chunk.fetch_add(kChunk);
      if (begin >= count) return;
      const std::size_t end = std::min(count, begin + kChunk);
      for (std::size_t i = begin; i < end; ++i) fn(i);
    }
  };
  std::vector<std::jthread> pool;
  for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker);
}

}  // namespace multimod
