#ifndef XIZETA_PARALLEL_HPP
#define XIZETA_PARALLEL_HPP

#include <atomic>
#include <cstdlib>
#include <exception>
#include <functional>
#include <string>
#include <thread>
#include <vector>

namespace xizeta {

// Worker cap from XI_CONTOUR_THREADS (0 or unset = hardware auto).
inline unsigned thread_cap() {
    if (const char* env = std::getenv("XI_CONTOUR_THREADS")) {
        char* end = nullptr;
        long n = std::strtol(env, &end, 10);
        if (end != env && n > 0) return static_cast<unsigned>(n);
        if (end != env && n == 0) return std::max(1u, std::thread::hardware_concurrency());
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

namespace detail {
inline thread_local bool in_parallel_region = false;
}

// Runs fn(i) for i in [0, n) and collects results in index order, so output is
// deterministic regardless of scheduling. Nested calls degrade to serial.
template <typename R>
std::vector<R> parallel_map(std::size_t n, const std::function<R(std::size_t)>& fn) {
    std::vector<R> out(n);
    unsigned workers = detail::in_parallel_region ? 1u : std::min<unsigned>(thread_cap(), n ? n : 1u);
    if (workers <= 1 || n <= 1) {
        for (std::size_t i = 0; i < n; ++i) out[i] = fn(i);
        return out;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::exception_ptr> errs(n);
    auto body = [&] {
        detail::in_parallel_region = true;
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= n) break;
            try {
                out[i] = fn(i);
            } catch (...) {
                errs[i] = std::current_exception();
            }
        }
        detail::in_parallel_region = false;
    };
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned t = 0; t < workers; ++t) pool.emplace_back(body);
    for (auto& th : pool) th.join();
    // first error by index wins, deterministically
    for (std::size_t i = 0; i < n; ++i)
        if (errs[i]) std::rethrow_exception(errs[i]);
    return out;
}

}  // namespace xizeta

#endif
