#include "facekit/parallel.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>
#include <thread>
#include <vector>

namespace facekit {

unsigned worker_threads() {
    if (const char* env = std::getenv("FACEKIT_THREADS")) {
        long v = std::strtol(env, nullptr, 10);
        if (v >= 1) return static_cast<unsigned>(v);
        return 1;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? hw : 1;
}

void parallel_chunks(std::uint64_t n,
                     const std::function<void(std::uint64_t, std::uint64_t,
                                              unsigned)>& fn) {
    if (n == 0) return;
    unsigned workers = std::min<std::uint64_t>(worker_threads(), n);
    if (workers <= 1) {
        fn(0, n, 0);
        return;
    }
    std::uint64_t chunk = (n + workers - 1) / workers;
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
        std::uint64_t b = w * chunk;
        std::uint64_t e = std::min(n, b + chunk);
        if (b >= e) break;
        pool.emplace_back([=, &fn] { fn(b, e, w); });
    }
    for (auto& t : pool) t.join();
}

}  // namespace facekit
