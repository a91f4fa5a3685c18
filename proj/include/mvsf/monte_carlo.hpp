#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <random>

namespace mvsf {

/// Generator behind every random stream. Each stream is an mt19937_64
/// seeded with splitmix64(seed ^ splitmix64(stream + golden)), so a
/// (seed, stream) pair always yields the same sequence on one platform.
using Rng = std::mt19937_64;

std::uint64_t splitmix64(std::uint64_t x);

Rng make_stream(std::uint64_t seed, std::uint64_t stream);

struct McConfig {
  std::uint64_t samples = 1'000'000;
  std::uint64_t seed = 0;
  std::uint64_t batch_size = 10'000;
};

/// Throws DomainError unless samples >= 1e4 and batch_size >= 1.
void validate(const McConfig& cfg);

struct McEstimate {
  double value = 0.0;
  double std_error = 0.0;
  std::uint64_t n = 0;
};

struct BatchResult {
  double sum = 0.0;
  std::uint64_t accepted = 0;
};

struct McRun {
  McEstimate estimate;
  std::uint64_t accepted = 0;
};

/// Fills one batch of `count` draws from the stream for that batch.
using BatchFn = std::function<BatchResult(Rng& rng, std::uint64_t count)>;

/// Splits cfg.samples into batches of cfg.batch_size (the last one may be
/// partial), runs batch b on stream (cfg.seed, b), and reduces in batch
/// order. The standard error comes from batch means; with a single batch
/// it falls back to zero. Results do not depend on the worker count.
McRun run_monte_carlo(const McConfig& cfg, const BatchFn& batch);

/// Worker count: hardware concurrency, capped by the MVSF_THREADS
/// environment variable when it is set to a positive integer.
std::size_t worker_count();

/// Calls fn(i) for i in [0, count) across worker_count() threads.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& fn);

}  // namespace mvsf
