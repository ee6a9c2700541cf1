#include "dybx/parallel.hpp"

#include <atomic>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace dybx {

namespace {
std::atomic<int> gThreads{1};
}

void setParallelism(int threads) { gThreads = threads < 1 ? 1 : threads; }

int parallelism() { return gThreads; }

void parallelFor(int n, const std::function<void(int)>& body)
{
    int t = std::min(gThreads.load(), n);
    if (t <= 1) {
        for (int i = 0; i < n; ++i)
            body(i);
        return;
    }
    std::atomic<int> next{0};
    std::exception_ptr error;
    std::mutex m;
    auto worker = [&] {
        for (int i = next++; i < n; i = next++) {
            try {
                body(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(m);
                if (!error)
                    error = std::current_exception();
            }
        }
    };
    std::vector<std::thread> pool;
    for (int k = 0; k < t; ++k)
        pool.emplace_back(worker);
    for (auto& th : pool)
        th.join();
    if (error)
        std::rethrow_exception(error);
}

} // namespace dybx
