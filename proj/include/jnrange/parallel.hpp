#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>

namespace jnrange {

/// Samples drawn from one RNG substream. Fixed so that output depends only on (seed, count).
inline constexpr std::size_t kSampleBlock = 4096;

/// Worker count from JNRANGE_WORKERS, falling back to hardware concurrency (at least 1).
std::size_t default_workers();

/// Runs body(block) for block in [0, num_blocks) on up to `workers` threads.
/// Blocks are handed out statically in round-robin order.
void parallel_blocks(std::size_t num_blocks, std::size_t workers,
                     const std::function<void(std::size_t)>& body);

}  // namespace jnrange
