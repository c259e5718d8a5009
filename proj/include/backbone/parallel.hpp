#pragma once

#include <algorithm>
#include <cstddef>
#include <span>
#include <vector>

namespace backbone {

/// Caps the worker count for subsequent parallel regions. 0 restores the runtime default.
void setThreadCount(int threads);
int threadCount();

/// Scoped override of the worker count.
class ThreadCountGuard {
public:
    explicit ThreadCountGuard(int threads);
    ~ThreadCountGuard();
    ThreadCountGuard(const ThreadCountGuard&) = delete;
    ThreadCountGuard& operator=(const ThreadCountGuard&) = delete;

private:
    int previous_;
};

/**
 * Sums per-item contribution vectors of length `width` over items 0..count-1.
 *
 * Items are grouped into fixed blocks whose partial sums are formed in item
 * order and then added in block order, so the floating point result does not
 * depend on how many threads execute the blocks. `makeState()` builds one
 * scratch object per worker; `contribute(item, acc, state)` adds into `acc`.
 */
template <class MakeState, class Contribute>
std::vector<double> orderedVectorSum(std::size_t count, std::size_t width, MakeState makeState,
                                     Contribute contribute) {
    constexpr std::size_t kBlock = 16;
    constexpr std::size_t kWave = 16;
    std::vector<double> total(width, 0.0);
    const std::size_t blocks = (count + kBlock - 1) / kBlock;
    std::vector<std::vector<double>> partial(std::min(blocks, kWave), std::vector<double>(width));

    for (std::size_t waveStart = 0; waveStart < blocks; waveStart += kWave) {
        const auto waveSize = static_cast<std::ptrdiff_t>(std::min(kWave, blocks - waveStart));
#pragma omp parallel
        {
            auto state = makeState();
#pragma omp for schedule(dynamic, 1)
            for (std::ptrdiff_t b = 0; b < waveSize; ++b) {
                auto& acc = partial[static_cast<std::size_t>(b)];
                std::fill(acc.begin(), acc.end(), 0.0);
                const std::size_t first = (waveStart + static_cast<std::size_t>(b)) * kBlock;
                const std::size_t last = std::min(count, first + kBlock);
                for (std::size_t item = first; item < last; ++item)
                    contribute(item, std::span<double>(acc), state);
            }
        }
        for (std::ptrdiff_t b = 0; b < waveSize; ++b) {
            const auto& acc = partial[static_cast<std::size_t>(b)];
            for (std::size_t i = 0; i < width; ++i)
                total[i] += acc[i];
        }
    }
    return total;
}

} // namespace backbone
