#include "casimir/parallel.hpp"

#include <atomic>
#include <cstdlib>
#include <thread>
#include <vector>

namespace casimir {

namespace {

int g_max_threads = 0;  // 0 = not initialized yet

int initial_thread_count() {
  if (const char* env = std::getenv("CASIMIR_THREADS")) {
    int n = std::atoi(env);
    if (n >= 1) return n;
  }
  return 1;
}

constexpr std::size_t kBlock = 4096;

// Compensated sum of term(i) over [begin, end).
double block_sum(std::size_t begin, std::size_t end,
                 const std::function<double(std::size_t)>& term) {
  double s = 0.0, c = 0.0;
  for (std::size_t i = begin; i < end; ++i) {
    double y = term(i) - c;
    double t = s + y;
    c = (t - s) - y;
    s = t;
  }
  return s;
}

}  // namespace

void set_max_threads(int n) { g_max_threads = n >= 1 ? n : 1; }

int max_threads() {
  if (g_max_threads == 0) g_max_threads = initial_thread_count();
  return g_max_threads;
}

double parallel_block_sum(std::size_t count,
                          const std::function<double(std::size_t)>& term) {
  if (count == 0) return 0.0;
  const std::size_t n_blocks = (count + kBlock - 1) / kBlock;
  std::vector<double> partial(n_blocks, 0.0);

  const int threads = max_threads();
  if (threads <= 1 || n_blocks == 1) {
    for (std::size_t b = 0; b < n_blocks; ++b) {
      partial[b] = block_sum(b * kBlock, std::min(count, (b + 1) * kBlock), term);
    }
  } else {
    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
      for (;;) {
        std::size_t b = next.fetch_add(1);
        if (b >= n_blocks) return;
        partial[b] = block_sum(b * kBlock, std::min(count, (b + 1) * kBlock), term);
      }
    };
    std::vector<std::thread> pool;
    int n_workers = std::min<std::size_t>(threads, n_blocks);
    pool.reserve(n_workers);
    for (int t = 0; t < n_workers; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  // Fixed-order reduction over block partials keeps the result independent
  // of the thread count.
  double s = 0.0, c = 0.0;
  for (double p : partial) {
    double y = p - c;
    double t = s + y;
    c = (t - s) - y;
    s = t;
  }
  return s;
}

}  // namespace casimir
