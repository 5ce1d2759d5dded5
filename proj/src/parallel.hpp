#pragma once

#include <algorithm>
#include <thread>
#include <vector>

#include "rational.hpp"

namespace cacti {

/// Global worker-count cap for the enumeration engines (0 = hardware).
void set_thread_count(int threads);
int thread_count();

/// Splits [0, jobs) into contiguous chunks, runs `body(job) -> BigInt
/// contribution` on workers, and adds per-chunk partial sums in chunk order so
/// the result is identical for every thread count.
template <typename Body>
BigInt parallel_count(size_t jobs, const Body& body) {
    size_t workers = static_cast<size_t>(thread_count());
    workers = std::max<size_t>(1, std::min(workers, jobs ? jobs : 1));
    if (workers == 1) {
        BigInt total = 0;
        for (size_t j = 0; j < jobs; ++j) total += body(j);
        return total;
    }
    std::vector<BigInt> partial(workers, BigInt(0));
    std::vector<std::thread> pool;
    size_t chunk = (jobs + workers - 1) / workers;
    for (size_t w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            size_t lo = w * chunk, hi = std::min(jobs, lo + chunk);
            BigInt acc = 0;
            for (size_t j = lo; j < hi; ++j) acc += body(j);
            partial[w] = std::move(acc);
        });
    }
    for (auto& t : pool) t.join();
    BigInt total = 0;
    for (const auto& p : partial) total += p;  // fixed order
    return total;
}

}  // namespace cacti
