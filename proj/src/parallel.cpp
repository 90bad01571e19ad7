#include "betaturan/detail/parallel.hpp"

#include <atomic>
#include <cstdlib>
#include <string>
#include <thread>
#include <vector>

namespace betaturan::detail {

unsigned worker_count() {
    unsigned n = std::thread::hardware_concurrency();
    if (n == 0) n = 1;
    if (const char* cap = std::getenv("BETA_TURAN_THREADS")) {
        char* end = nullptr;
        long v = std::strtol(cap, &end, 10);
        if (end != cap && v >= 1 && v < 1024) n = std::min<unsigned>(n, static_cast<unsigned>(v));
    }
    return n;
}

void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body) {
    const unsigned workers = std::min<std::size_t>(worker_count(), n);
    if (workers <= 1) {
        for (std::size_t i = 0; i < n; ++i) body(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(workers);
    std::exception_ptr failure;
    std::atomic<bool> failed{false};
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (;;) {
                std::size_t i = next.fetch_add(1);
                if (i >= n || failed.load()) return;
                try {
                    body(i);
                } catch (...) {
                    if (!failed.exchange(true)) failure = std::current_exception();
                    return;
                }
            }
        });
    }
    for (auto& t : pool) t.join();
    if (failure) std::rethrow_exception(failure);
}

}  // namespace betaturan::detail
