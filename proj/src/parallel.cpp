#include "epwlab/parallel.hpp"

#include <atomic>
#include <cstdlib>
#include <exception>
#include <thread>
#include <vector>

namespace epw {

namespace {
int g_budget = 0;  // 0 = resolve from environment / hardware

int resolve_budget() {
  if (g_budget > 0) return g_budget;
  if (const char* env = std::getenv("EPWLAB_THREADS")) {
    int n = std::atoi(env);
    if (n > 0) return n;
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw ? static_cast<int>(hw) : 1;
}
}  // namespace

void set_thread_budget(int n) { g_budget = n > 0 ? n : 0; }

int thread_budget() { return resolve_budget(); }

void parallel_for_index(int n, const std::function<void(int)>& fn) {
  if (n <= 0) return;
  int workers = resolve_budget();
  if (workers > n) workers = n;
  if (workers <= 1 || n < 4) {
    for (int i = 0; i < n; ++i) fn(i);
    return;
  }

  std::atomic<int> next{0};
  std::vector<std::exception_ptr> errors(static_cast<size_t>(n));
  auto body = [&]() {
    for (;;) {
      int i = next.fetch_add(1);
      if (i >= n) return;
      try {
        fn(i);
      } catch (...) {
        errors[static_cast<size_t>(i)] = std::current_exception();
      }
    }
  };

  std::vector<std::thread> pool;
  pool.reserve(static_cast<size_t>(workers) - 1);
  for (int w = 1; w < workers; ++w) pool.emplace_back(body);
  body();
  for (auto& th : pool) th.join();

  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

}  // namespace epw
