#include "exchange/common.hpp"

#include <algorithm>
#include <cstdlib>
#include <thread>
#include <vector>

namespace exchange {

namespace {
int g_threads = 0;  // 0 = not yet resolved

int resolve_default() {
    if (const char* env = std::getenv("EXCHANGE_LAB_THREADS")) {
        int n = std::atoi(env);
        if (n > 0) return n;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? static_cast<int>(hw) : 1;
}
}  // namespace

int thread_budget() {
    if (g_threads <= 0) g_threads = resolve_default();
    if (const char* env = std::getenv("EXCHANGE_LAB_THREADS")) {
        int n = std::atoi(env);
        if (n > 0) return n;
    }
    return g_threads;
}

void set_thread_budget(int n) { g_threads = std::max(1, n); }

void parallel_for(std::int64_t begin, std::int64_t end,
                  const std::function<void(std::int64_t, std::int64_t)>& fn) {
    const std::int64_t total = end - begin;
    if (total <= 0) return;
    int nthreads = thread_budget();
    if (nthreads <= 1 || total < 1024) {
        fn(begin, end);
        return;
    }
    nthreads = static_cast<int>(std::min<std::int64_t>(nthreads, total));
    const std::int64_t chunk = (total + nthreads - 1) / nthreads;
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(nthreads));
    for (int t = 0; t < nthreads; ++t) {
        const std::int64_t lo = begin + t * chunk;
        const std::int64_t hi = std::min(end, lo + chunk);
        if (lo >= hi) break;
        pool.emplace_back([&fn, lo, hi] { fn(lo, hi); });
    }
    for (auto& th : pool) th.join();
}

std::string library_version() { return "0.1.0"; }

}  // namespace exchange
