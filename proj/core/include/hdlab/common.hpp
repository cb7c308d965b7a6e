#pragma once

#include <cstddef>
#include <functional>
#include <numbers>
#include <span>
#include <stdexcept>
#include <string>

namespace hdlab {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// Raised when an argument violates an operation's precondition. The message
/// names the violated condition (e.g. "γ > 0") so the CLI can echo it verbatim.
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline void require(bool condition, const std::string& what) {
  if (!condition) throw ValidationError(what);
}

/// Pairwise (cascade) summation with a fixed split order. Results depend only
/// on the input order, never on thread count.
double pairwise_sum(std::span<const double> values);

/// Pairwise sum of term(i), i ∈ [0, n), without materializing the terms.
template <class Term>
double pairwise_generate(std::size_t begin, std::size_t end, const Term& term) {
  if (end - begin <= 32) {
    double s = 0.0;
    for (std::size_t i = begin; i < end; ++i) s += term(i);
    return s;
  }
  const std::size_t mid = begin + (end - begin) / 2;
  return pairwise_generate(begin, mid, term) + pairwise_generate(mid, end, term);
}

/// Mean via pairwise_sum.
double pairwise_mean(std::span<const double> values);

/// Process-wide parallelism budget for the O(M^2) kernels. Defaults to the
/// hardware concurrency; 0 is clamped to 1.
void set_thread_budget(unsigned threads);
unsigned thread_budget();

/// Runs body(row) for row in [0, rows) on up to thread_budget() threads.
/// Rows are dealt round-robin so triangular workloads stay balanced. Bodies
/// must write only to per-row outputs.
void parallel_rows(std::size_t rows, const std::function<void(std::size_t)>& body);

/// Chordal distance |e^{ia} - e^{ib}| = 2|sin((a-b)/2)|.
double chord(double a, double b);

/// Angle reduced to [0, 2π).
double wrap_angle(double theta);

bool is_power_of_two(std::size_t n);

}  // namespace hdlab
