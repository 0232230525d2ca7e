#include "outerspread/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

namespace osp {

int default_worker_count() {
    if (const char* env = std::getenv("OUTERSPREAD_WORKERS")) {
        try {
            const int k = std::stoi(env);
            if (k >= 1) return k;
        } catch (const std::exception&) {
        }
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw ? static_cast<int>(hw) : 1;
}

void parallel_for(long long count, int workers, const std::function<void(long long)>& fn) {
    if (count <= 0) return;
    if (workers <= 0) workers = default_worker_count();
    if (workers > count) workers = static_cast<int>(count);
    if (workers == 1) {
        for (long long i = 0; i < count; ++i) fn(i);
        return;
    }

    long long block = count / (8LL * workers);
    if (block < 1) block = 1;

    std::atomic<long long> next{0};
    std::atomic<bool> failed{false};
    std::exception_ptr first_error;
    std::mutex error_mutex;

    auto body = [&] {
        for (;;) {
            const long long lo = next.fetch_add(block);
            if (lo >= count || failed.load()) return;
            const long long hi = std::min(lo + block, count);
            try {
                for (long long i = lo; i < hi; ++i) fn(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!failed.exchange(true)) first_error = std::current_exception();
                return;
            }
        }
    };

    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int t = 0; t < workers; ++t) pool.emplace_back(body);
    for (std::thread& t : pool) t.join();
    if (first_error) std::rethrow_exception(first_error);
}

}  // namespace osp
