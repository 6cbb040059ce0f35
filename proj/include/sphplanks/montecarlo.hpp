#ifndef SPHPLANKS_MONTECARLO_HPP
#define SPHPLANKS_MONTECARLO_HPP

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <string>
#include <thread>
#include <vector>

#include "sphplanks/random.hpp"

namespace sphplanks {

enum class Quantity { Volume, MeanWidth, Uf, MeasureSj, SjAverage, Exact };

std::string to_string(Quantity q);

/// Monte Carlo (or exact) value with its standard error.
struct Estimate {
  double value = 0.0;
  double std_error = 0.0;
  std::size_t samples = 0;
  std::uint64_t seed = 0;
  Quantity quantity = Quantity::Exact;

  static Estimate exact(double v) { return Estimate{v, 0.0, 0, 0, Quantity::Exact}; }
};

/// Sample budget and reproducibility controls for every estimator.
struct McOptions {
  std::size_t samples = 1'000'000;
  std::uint64_t seed = 1;
  /// Worker threads; results do not depend on this value.
  unsigned threads = 1;
};

/// Running sums for a batch of samples.
struct Accumulator {
  double sum = 0.0;
  double sum_sq = 0.0;
  std::size_t count = 0;

  void add(double x) {
    sum += x;
    sum_sq += x * x;
    ++count;
  }
  void merge(const Accumulator& o) {
    sum += o.sum;
    sum_sq += o.sum_sq;
    count += o.count;
  }
  double mean() const { return count ? sum / static_cast<double>(count) : 0.0; }
  /// Standard error of the mean from the unbiased sample variance.
  double std_error() const {
    if (count < 2) return 0.0;
    const double n = static_cast<double>(count);
    const double var = std::max(0.0, (sum_sq - sum * sum / n) / (n - 1.0));
    return std::sqrt(var / n);
  }
};

/// Fixed number of batches a sample budget is split into. Independent of
/// the worker count so merged results are bit-reproducible.
inline constexpr std::size_t kBatchCount = 64;

/// Runs `kernel(stream, count, acc)` over kBatchCount batches, batch b using
/// Stream(seed).split(b), and merges the accumulators in batch order. `Acc`
/// needs a default constructor and `merge(const Acc&)`.
template <typename Acc = Accumulator, typename Kernel>
Acc run_batches(const McOptions& opt, Kernel&& kernel) {
  const std::size_t batches = std::min<std::size_t>(kBatchCount, std::max<std::size_t>(opt.samples, 1));
  std::vector<Acc> parts(batches);
  const Stream root(opt.seed);
  auto run_one = [&](std::size_t b) {
    Stream stream = root.split(b);
    const std::size_t count = opt.samples / batches + (b < opt.samples % batches ? 1 : 0);
    kernel(stream, count, parts[b]);
  };
  const unsigned workers = std::max(1u, std::min<unsigned>(opt.threads, static_cast<unsigned>(batches)));
  if (workers == 1) {
    for (std::size_t b = 0; b < batches; ++b) run_one(b);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w)
      pool.emplace_back([&] {
        for (std::size_t b = next++; b < batches; b = next++) run_one(b);
      });
  }
  Acc total;
  for (const auto& p : parts) total.merge(p);
  return total;
}

/// Estimate of scale * E[integrand]; for 0/1 integrands this is the
/// binomial estimate with the sample-standard-deviation error.
inline Estimate scaled_estimate(const Accumulator& acc, double scale, const McOptions& opt, Quantity q) {
  return Estimate{scale * acc.mean(), scale * acc.std_error(), acc.count, opt.seed, q};
}

/// Options for a named sub-estimate; keeps its random numbers disjoint
/// from sibling estimates that share the caller's seed.
inline McOptions sub_options(const McOptions& opt, std::uint64_t purpose) {
  McOptions o = opt;
  o.seed = derive_seed(opt.seed, purpose);
  return o;
}

/// Three-sigma tolerance for a difference of independent estimates.
inline double combined_sigma(const Estimate& a, const Estimate& b) {
  return std::sqrt(a.std_error * a.std_error + b.std_error * b.std_error);
}

}  // namespace sphplanks

#endif  // SPHPLANKS_MONTECARLO_HPP
