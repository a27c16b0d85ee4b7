#include <algorithm>
#include <cmath>
#include <exception>
#include <thread>

#include "discbound/errors.hpp"
#include "discbound/verify.hpp"

namespace discbound {

double coverage_tolerance(double delta, std::uint64_t trials) {
  return delta + 3.0 * std::sqrt(delta * (1.0 - delta) / static_cast<double>(trials));
}

namespace {

bool misses(const BoundInterval& b, double truth, Side side) {
  switch (side) {
    case Side::upper: return truth > b.upper;
    case Side::lower: return truth < b.lower;
    case Side::two_sided: return truth > b.upper || truth < b.lower;
  }
  return false;
}

std::uint64_t count_failures(const MethodConfig& config, const TrueDistribution& d,
                             std::int64_t n, double delta, std::uint64_t seed,
                             std::uint64_t first, std::uint64_t stride, std::uint64_t trials) {
  std::uint64_t failures = 0;
  for (std::uint64_t t = first; t < trials; t += stride) {
    auto stream = trial_stream(seed, t);
    CategorizedSample sample(sample_multinomial(n, d, stream), d.values());
    if (misses(compute_bound(config, sample, delta), d.true_mean(), config.side)) ++failures;
  }
  return failures;
}

}  // namespace

CoverageReport coverage_estimate(const MethodConfig& config, const TrueDistribution& d,
                                 std::int64_t n, double delta, std::uint64_t trials,
                                 std::uint64_t seed, unsigned threads) {
  config.validate();
  if (trials < 1) throw ValidationError("coverage: trials must be positive");
  if (n < 1) throw ValidationError("coverage: n must be positive");
  if (d.size() < 2) throw ValidationError("coverage: need at least two categories");
  if (!(delta > 0.0 && delta < 1.0)) throw ValidationError("coverage: delta must lie in (0, 1)");

  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::uint64_t>(threads, trials));

  std::uint64_t failures = 0;
  if (threads == 1) {
    failures = count_failures(config, d, n, delta, seed, 0, 1, trials);
  } else {
    std::vector<std::uint64_t> partial(threads, 0);
    std::vector<std::exception_ptr> errors(threads);
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (unsigned w = 0; w < threads; ++w) {
      pool.emplace_back([&, w] {
        try {
          partial[w] = count_failures(config, d, n, delta, seed, w, threads, trials);
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    }
    for (auto& th : pool) th.join();
    for (const auto& e : errors) {
      if (e) std::rethrow_exception(e);
    }
    for (auto f : partial) failures += f;
  }

  return CoverageReport{
      .trials = trials,
      .failures = failures,
      .failure_rate = static_cast<double>(failures) / static_cast<double>(trials),
      .delta = delta,
      .method = config,
      .seed = seed,
  };
}

}  // namespace discbound
