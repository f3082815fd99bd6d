#pragma once

#include <algorithm>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace rcpr::detail
{

    /// Runs fn(begin, end) over contiguous chunks of [0, n). Rethrows the first worker exception.
    template < class F >
    void parallel_chunks(std::size_t n, unsigned threads, F && fn)
    {
        const std::size_t workers = std::min<std::size_t>(std::max(1U, threads), n);
        if (workers <= 1)
        {
            if (n > 0)
                fn(std::size_t{0}, n);
            return;
        }

        std::exception_ptr failure;
        std::mutex failure_mutex;
        std::vector<std::jthread> pool;
        pool.reserve(workers);
        const std::size_t chunk = (n + workers - 1) / workers;
        for (std::size_t w = 0; w < workers; ++w)
        {
            const std::size_t begin = w * chunk;
            const std::size_t end = std::min(n, begin + chunk);
            if (begin >= end)
                break;
            pool.emplace_back([&, begin, end] {
                try
                {
                    fn(begin, end);
                }
                catch (...)
                {
                    std::lock_guard lock(failure_mutex);
                    if (!failure)
                        failure = std::current_exception();
                }
            });
        }
        pool.clear();
        if (failure)
            std::rethrow_exception(failure);
    }

}
