#include "backbone/parallel.hpp"

#include <omp.h>

namespace backbone {

namespace {
const int defaultThreads = omp_get_max_threads();
}

void setThreadCount(int threads) { omp_set_num_threads(threads > 0 ? threads : defaultThreads); }

int threadCount() { return omp_get_max_threads(); }

ThreadCountGuard::ThreadCountGuard(int threads) : previous_(omp_get_max_threads()) { setThreadCount(threads); }

ThreadCountGuard::~ThreadCountGuard() { omp_set_num_threads(previous_); }

} // namespace backbone
