#include "ambig/sweep.hpp"

#include <cstdlib>
#include <string>

namespace ambig {

namespace {

std::atomic<unsigned> g_override{0};

unsigned default_workers() {
  if (const char* env = std::getenv("AMBIG_THREADS")) {
    try {
      long v = std::stol(env);
      if (v > 0) return static_cast<unsigned>(v);
    } catch (const std::exception&) {
    }
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

}  // namespace

unsigned worker_count() {
  unsigned n = g_override.load(std::memory_order_relaxed);
  return n != 0 ? n : default_workers();
}

void set_worker_count(unsigned n) { g_override.store(n, std::memory_order_relaxed); }

}  // namespace ambig
