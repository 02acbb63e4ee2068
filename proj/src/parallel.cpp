#include "strutgeo/parallel.hpp"

#include <cstdlib>
#include <string>
#include <thread>
#include <vector>

namespace strutgeo {

int worker_count() {
    if (const char* env = std::getenv("STRUTGEO_THREADS")) {
        try {
            long n = std::stol(env);
            if (n >= 1) return static_cast<int>(n);
        } catch (...) {
            // fall through to hardware default
        }
    }
    unsigned hc = std::thread::hardware_concurrency();
    return hc == 0 ? 1 : static_cast<int>(hc);
}

void parallel_for_index(std::size_t n, const std::function<void(std::size_t)>& fn) {
    if (n == 0) return;
    std::size_t workers = static_cast<std::size_t>(worker_count());
    if (workers <= 1 || n == 1) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    if (workers > n) workers = n;
    // Contiguous index ranges: the set of calls is identical for any worker count,
    // so results assembled by index are deterministic.
    std::vector<std::thread> pool;
    pool.reserve(workers);
    std::size_t chunk = n / workers, rem = n % workers, begin = 0;
    for (std::size_t w = 0; w < workers; ++w) {
        std::size_t len = chunk + (w < rem ? 1 : 0);
        std::size_t end = begin + len;
        pool.emplace_back([&fn, begin, end] {
            for (std::size_t i = begin; i < end; ++i) fn(i);
        });
        begin = end;
    }
    for (std::thread& t : pool) t.join();
}

}  // namespace strutgeo
