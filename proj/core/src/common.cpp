#include "hdlab/common.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <thread>
#include <vector>

namespace hdlab {

namespace {

constexpr std::size_t kPairwiseBlock = 32;

double pairwise_range(const double* data, std::size_t n) {
  if (n <= kPairwiseBlock) {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) s += data[i];
    return s;
  }
  const std::size_t half = n / 2;
  return pairwise_range(data, half) + pairwise_range(data + half, n - half);
}

unsigned default_budget() {
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1u : hw;
}

std::atomic<unsigned> g_thread_budget{default_budget()};

}  // namespace

double pairwise_sum(std::span<const double> values) {
  return pairwise_range(values.data(), values.size());
}

double pairwise_mean(std::span<const double> values) {
  if (values.empty()) return 0.0;
  return pairwise_sum(values) / static_cast<double>(values.size());
}

void set_thread_budget(unsigned threads) { g_thread_budget = std::max(1u, threads); }

unsigned thread_budget() { return g_thread_budget.load(); }

void parallel_rows(std::size_t rows, const std::function<void(std::size_t)>& body) {
  const std::size_t workers = std::min<std::size_t>(thread_budget(), rows);
  if (workers <= 1) {
    for (std::size_t r = 0; r < rows; ++r) body(r);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      for (std::size_t r = w; r < rows; r += workers) body(r);
    });
  }
  for (auto& t : pool) t.join();
}

double chord(double a, double b) { return 2.0 * std::abs(std::sin(0.5 * (a - b))); }

double wrap_angle(double theta) {
  double t = std::fmod(theta, kTwoPi);
  if (t < 0.0) t += kTwoPi;
  if (t >= kTwoPi) t = 0.0;
  return t;
}

bool is_power_of_two(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

}  // namespace hdlab
