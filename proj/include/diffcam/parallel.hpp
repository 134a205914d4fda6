// Copyright (c) 2026 The diffcam authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <functional>

namespace diffcam {

/// Worker cap for parallel loops. Resolution order: set_max_threads() if
/// called, else DIFFCAM_THREADS, else hardware concurrency.
int max_threads();
void set_max_threads(int n);

/// Runs fn(begin, end) over disjoint chunks of [begin, end) on up to
/// max_threads() workers. Callers must only write to locations owned by
/// their own indices; under that contract results do not depend on the
/// thread count.
void parallel_for(int64_t begin, int64_t end,
                  const std::function<void(int64_t, int64_t)>& fn);

}  // namespace diffcam
