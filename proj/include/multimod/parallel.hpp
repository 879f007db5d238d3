#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>

#include "multimod/witness.hpp"

namespace multimod {

// Worker cap: the DCA_THREADS environment variable when set to a positive
// integer, otherwise std::thread::hardware_concurrency().
std::size_t worker_count();

// Result of scanning one item of a sweep: how many inequalities were
// evaluated and the first violation met, if any.
struct ItemScan {
  std::uint64_t checked = 0;
  std::optional<Witness> witness;
};

struct SweepResult {
  std::uint64_t checked = 0;
  std::optional<Witness> witness;
};

// Scans items 0..count-1 and returns the witness of the lowest-index failing
// item, exactly as a sequential scan would. `checked` counts the inequalities
// of every item up to and including that one (all items when none fails).
// Items are distributed over worker_count() threads in contiguous chunks.
SweepResult sweep_items(std::size_t count, const std::function<ItemScan(std::size_t)>& scan);

// Runs fn(i) for i in [0, count) across workers; fn must only touch slot i.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& fn);

}  // namespace multimod
