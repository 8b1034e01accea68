// Copyright polycover contributors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <functional>

namespace polycover {

/// Worker count for parallel maps. Honors the VCC_THREADS environment
/// variable (0 or unset = hardware concurrency).
int worker_count();

/// Runs fn(i) for i in [0, n). Each index owns its output slot, so results
/// are deterministic regardless of scheduling. Exceptions from workers are
/// rethrown on the calling thread (first by index order).
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

}  // namespace polycover
