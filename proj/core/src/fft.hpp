#pragma once

#include <complex>
#include <span>
#include <vector>

namespace hdlab::detail {

using cplx = std::complex<double>;

// Unnormalized DFT: forward X_m = Σ_k x_k e^{-2πi mk/n}, inverse with e^{+}.
std::vector<cplx> dft_forward(std::span<const cplx> x);
std::vector<cplx> dft_inverse(std::span<const cplx> x);

}  // namespace hdlab::detail
