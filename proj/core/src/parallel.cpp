#include "mpr/parallel.hpp"

#include <stdexcept>

namespace mpr {

namespace {
std::atomic<int> g_workers{1};
}

int worker_count() { return g_workers.load(); }

void set_worker_count(int n) {
  if (n < 1) throw std::invalid_argument("worker count must be positive");
  g_workers.store(n);
}

}  // namespace mpr
