#pragma once

// Thin RAII wrapper over FFTW's 1-D complex transform.

#include <complex>
#include <span>
#include <vector>

namespace gabc::detail {

/// Unnormalized forward DFT: X_k = sum_m x_m exp(-2 pi i k m / N).
std::vector<std::complex<double>> dft_forward(std::span<const std::complex<double>> x);
/// Unnormalized inverse DFT: x_m = sum_k X_k exp(+2 pi i k m / N).
std::vector<std::complex<double>> dft_backward(std::span<const std::complex<double>> x);

}  // namespace gabc::detail
