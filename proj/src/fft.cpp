#include "fft.hpp"

#include <fftw3.h>

#include <memory>
#include <mutex>

namespace gabc::detail {
namespace {

// Planner calls are not thread-safe in FFTW; execution is.
std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}

struct PlanDeleter {
  void operator()(fftw_plan_s* plan) const {
    std::lock_guard lock(planner_mutex());
    fftw_destroy_plan(plan);
  }
};

std::vector<std::complex<double>> run(std::span<const std::complex<double>> x, int sign) {
  std::vector<std::complex<double>> in(x.begin(), x.end());
  std::vector<std::complex<double>> out(x.size());
  if (x.empty()) return out;
  std::unique_ptr<fftw_plan_s, PlanDeleter> plan;
  {
    std::lock_guard lock(planner_mutex());
    plan.reset(fftw_plan_dft_1d(static_cast<int>(x.size()), reinterpret_cast<fftw_complex*>(in.data()),
                                reinterpret_cast<fftw_complex*>(out.data()), sign, FFTW_ESTIMATE));
  }
  fftw_execute(plan.get());
  return out;
}

}  // namespace

std::vector<std::complex<double>> dft_forward(std::span<const std::complex<double>> x) {
  return run(x, FFTW_FORWARD);
}

std::vector<std::complex<double>> dft_backward(std::span<const std::complex<double>> x) {
  return run(x, FFTW_BACKWARD);
}

}  // namespace gabc::detail
