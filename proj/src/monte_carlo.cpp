#include "mvsf/monte_carlo.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

#include "mvsf/errors.hpp"

namespace mvsf {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

Rng make_stream(std::uint64_t seed, std::uint64_t stream) {
  return Rng(splitmix64(seed ^ splitmix64(stream + 0x9e3779b97f4a7c15ULL)));
}

void validate(const McConfig& cfg) {
  if (cfg.samples < 10'000) throw DomainError("McConfig: samples must be at least 10^4");
  if (cfg.batch_size == 0) throw DomainError("McConfig: batch_size must be positive");
}

std::size_t worker_count() {
  std::size_t n = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("MVSF_THREADS")) {
    char* end = nullptr;
    const long cap = std::strtol(env, &end, 10);
    if (end != env && cap > 0) n = std::min<std::size_t>(n, static_cast<std::size_t>(cap));
  }
  return n;
}

void parallel_for(std::size_t count, const std::function<void(std::size_t)>& fn) {
  const std::size_t workers = std::min(worker_count(), count);
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w)
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) {
        try {
          fn(i);
        } catch (...) {
          std::lock_guard lock(error_mutex);
          if (!error) error = std::current_exception();
          next = count;
        }
      }
    });
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

McRun run_monte_carlo(const McConfig& cfg, const BatchFn& batch) {
  validate(cfg);
  const std::uint64_t n_batches = (cfg.samples + cfg.batch_size - 1) / cfg.batch_size;
  std::vector<BatchResult> results(n_batches);
  parallel_for(n_batches, [&](std::size_t b) {
    const std::uint64_t begin = b * cfg.batch_size;
    const std::uint64_t count = std::min(cfg.batch_size, cfg.samples - begin);
    Rng rng = make_stream(cfg.seed, b);
    results[b] = batch(rng, count);
  });

  double total = 0.0;
  std::uint64_t accepted = 0;
  for (const auto& r : results) {
    total += r.sum;
    accepted += r.accepted;
  }
  const double n = static_cast<double>(cfg.samples);
  const double mean = total / n;

  double se = 0.0;
  if (n_batches > 1) {
    // Weighted batch-means variance of the overall mean.
    double ss = 0.0;
    for (std::uint64_t b = 0; b < n_batches; ++b) {
      const double nb = static_cast<double>(std::min(cfg.batch_size, cfg.samples - b * cfg.batch_size));
      const double d = results[b].sum / nb - mean;
      ss += nb * d * d;
    }
    se = std::sqrt(ss / (static_cast<double>(n_batches - 1) * n));
  }
  return {{mean, se, cfg.samples}, accepted};
}

}  // namespace mvsf
