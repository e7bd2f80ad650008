#pragma once

#include <atomic>
#include <cmath>
#include <cstdint>
#include <exception>
#include <thread>
#include <vector>

namespace ffl {

// Neumaier compensated accumulator. Partial sums are combined in a fixed
// order, so totals are bit-identical for any thread count.
struct Kahan {
    double sum = 0.0;
    double comp = 0.0;

    void add(double x) {
        double t = sum + x;
        if (std::abs(sum) >= std::abs(x))
            comp += (sum - t) + x;
        else
            comp += (x - t) + sum;
        sum = t;
    }
    double total() const { return sum + comp; }
};

// Splits [0, total) into chunks whose boundaries depend only on `total`,
// runs `worker(chunk_index, lo, hi)` on up to `threads` threads, and returns
// nothing; workers write into caller-owned per-chunk slots which the caller
// then reduces in chunk order.
struct ChunkPlan {
    std::uint64_t total;
    std::uint64_t chunk_size;
    std::size_t chunk_count;

    static ChunkPlan make(std::uint64_t total) {
        ChunkPlan p;
        p.total = total;
        std::uint64_t target = total / 256;
        p.chunk_size = target < 4096 ? 4096 : target;
        p.chunk_count = total == 0 ? 0 : static_cast<std::size_t>((total + p.chunk_size - 1) / p.chunk_size);
        return p;
    }
    std::uint64_t lo(std::size_t i) const { return i * chunk_size; }
    std::uint64_t hi(std::size_t i) const {
        std::uint64_t h = (i + 1) * chunk_size;
        return h > total ? total : h;
    }
};

template <typename Worker>
void run_chunks(const ChunkPlan& plan, int threads, Worker&& worker) {
    if (threads < 1) threads = 1;
    if (plan.chunk_count == 0) return;
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::atomic<bool> failed{false};
    auto body = [&]() {
        while (true) {
            std::size_t i = next.fetch_add(1);
            if (i >= plan.chunk_count || failed.load()) return;
            try {
                worker(i, plan.lo(i), plan.hi(i));
            } catch (...) {
                if (!failed.exchange(true)) error = std::current_exception();
                return;
            }
        }
    };
    if (threads == 1 || plan.chunk_count == 1) {
        body();
    } else {
        std::vector<std::thread> pool;
        int n = threads;
        if (static_cast<std::size_t>(n) > plan.chunk_count) n = static_cast<int>(plan.chunk_count);
        pool.reserve(static_cast<size_t>(n));
        for (int i = 0; i < n; ++i) pool.emplace_back(body);
        for (auto& th : pool) th.join();
    }
    if (failed.load() && error) std::rethrow_exception(error);
}

}  // namespace ffl
