#pragma once

#include <functional>

namespace dybx {

void setParallelism(int threads);
int parallelism();

/// Runs body(i) for 0 <= i < n on up to parallelism() threads. The first
/// exception thrown by any body is rethrown after all workers finish.
void parallelFor(int n, const std::function<void(int)>& body);

} // namespace dybx
