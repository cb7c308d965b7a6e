#include "fft.hpp"

#include <fftw3.h>

#include <cstring>
#include <map>
#include <memory>
#include <mutex>

namespace hdlab::detail {

namespace {

struct FftwFree {
  void operator()(fftw_complex* p) const { fftw_free(p); }
};
using Buffer = std::unique_ptr<fftw_complex[], FftwFree>;

Buffer make_buffer(std::size_t n) {
  return Buffer(static_cast<fftw_complex*>(fftw_malloc(sizeof(fftw_complex) * n)));
}

struct PlanPair {
  fftw_plan forward = nullptr;
  fftw_plan inverse = nullptr;
};

// Planning is not thread-safe in FFTW; execution with new-array execute is.
class PlanCache {
 public:
  ~PlanCache() {
    for (auto& [n, p] : plans_) {
      fftw_destroy_plan(p.forward);
      fftw_destroy_plan(p.inverse);
    }
  }

  PlanPair get(std::size_t n) {
    std::lock_guard lock(mutex_);
    auto it = plans_.find(n);
    if (it != plans_.end()) return it->second;
    Buffer in = make_buffer(n);
    Buffer out = make_buffer(n);
    const int len = static_cast<int>(n);
    const unsigned flags = FFTW_ESTIMATE | FFTW_UNALIGNED;
    PlanPair p;
    p.forward = fftw_plan_dft_1d(len, in.get(), out.get(), FFTW_FORWARD, flags);
    p.inverse = fftw_plan_dft_1d(len, in.get(), out.get(), FFTW_BACKWARD, flags);
    plans_.emplace(n, p);
    return p;
  }

 private:
  std::mutex mutex_;
  std::map<std::size_t, PlanPair> plans_;
};

PlanCache& cache() {
  static PlanCache instance;
  return instance;
}

std::vector<cplx> execute(std::span<const cplx> x, bool forward) {
  const std::size_t n = x.size();
  if (n == 0) return {};
  const PlanPair plans = cache().get(n);
  Buffer in = make_buffer(n);
  Buffer out = make_buffer(n);
  std::memcpy(in.get(), x.data(), sizeof(fftw_complex) * n);
  fftw_execute_dft(forward ? plans.forward : plans.inverse, in.get(), out.get());
  std::vector<cplx> result(n);
  std::memcpy(static_cast<void*>(result.data()), out.get(), sizeof(fftw_complex) * n);
  return result;
}

}  // namespace

std::vector<cplx> dft_forward(std::span<const cplx> x) { return execute(x, true); }
std::vector<cplx> dft_inverse(std::span<const cplx> x) { return execute(x, false); }

}  // namespace hdlab::detail
