#pragma once

#include <functional>
#include <thread>
#include <vector>

namespace cyclo {

/// Apply f to 0..count-1, writing results into a vector by index. Output is
/// independent of the worker count, so reports stay byte-identical across
/// --jobs settings.
template <class R, class F>
std::vector<R> parallel_map_indexed(std::size_t count, int jobs, F&& f) {
    std::vector<R> out(count);
    if (jobs <= 1 || count <= 1) {
        for (std::size_t i = 0; i < count; ++i) out[i] = f(i);
        return out;
    }
    std::vector<std::thread> workers;
    std::size_t nw = std::min<std::size_t>(jobs, count);
    for (std::size_t w = 0; w < nw; ++w) {
        workers.emplace_back([&, w] {
            for (std::size_t i = w; i < count; i += nw) out[i] = f(i);
        });
    }
    for (auto& t : workers) t.join();
    return out;
}

}  // namespace cyclo
