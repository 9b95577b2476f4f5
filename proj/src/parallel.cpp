#include "stratavol/parallel.hpp"

#include <algorithm>
#include <atomic>

namespace stratavol {

namespace {
std::atomic<int> g_workers{1};
}

void set_worker_threads(int n) { g_workers.store(std::max(1, n)); }

int worker_threads() { return g_workers.load(); }

}  // namespace stratavol
