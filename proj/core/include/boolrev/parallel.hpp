// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <functional>

namespace boolrev {

/// Worker count: BOOLREV_THREADS when set to a positive integer, otherwise
/// the hardware concurrency.
int workerCount();

/// Runs body(0..count-1) on up to workerCount() threads. Results must be
/// written to index-addressed slots. If bodies throw, the exception of the
/// lowest failing index is rethrown after all workers stop.
void parallelFor(std::size_t count, const std::function<void(std::size_t)>& body);

}  // namespace boolrev
