#include "dsm/fft.hpp"

#include <fftw3.h>

#include <mutex>
#include <stdexcept>

namespace dsm {

namespace {
// FFTW planning is not thread-safe; execution of a ready plan is.
std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}
}  // namespace

Fft2D::Fft2D(int width, int height) : width_(width), height_(height) {
  if (width <= 0 || height <= 0) throw std::invalid_argument("Fft2D: dimensions must be positive");
  const std::size_t n = static_cast<std::size_t>(width) * height;
  scratch_in_.resize(n);
  scratch_out_.resize(n);
  std::lock_guard<std::mutex> lock(planner_mutex());
  // FFTW is row-major: n0 = rows = height, n1 = cols = width.
  const unsigned flags = FFTW_ESTIMATE | FFTW_UNALIGNED;
  plan_forward_ = fftw_plan_dft_2d(height, width,
                                   reinterpret_cast<fftw_complex*>(scratch_in_.data()),
                                   reinterpret_cast<fftw_complex*>(scratch_out_.data()),
                                   FFTW_FORWARD, flags);
  plan_inverse_ = fftw_plan_dft_2d(height, width,
                                   reinterpret_cast<fftw_complex*>(scratch_in_.data()),
                                   reinterpret_cast<fftw_complex*>(scratch_out_.data()),
                                   FFTW_BACKWARD, flags);
  if (!plan_forward_ || !plan_inverse_) throw std::runtime_error("Fft2D: planning failed");
}

Fft2D::~Fft2D() {
  std::lock_guard<std::mutex> lock(planner_mutex());
  fftw_destroy_plan(static_cast<fftw_plan>(plan_forward_));
  fftw_destroy_plan(static_cast<fftw_plan>(plan_inverse_));
}

void Fft2D::forward(std::complex<double>* in, std::complex<double>* out) const {
  fftw_execute_dft(static_cast<fftw_plan>(plan_forward_), reinterpret_cast<fftw_complex*>(in),
                   reinterpret_cast<fftw_complex*>(out));
}

void Fft2D::inverse(std::complex<double>* in, std::complex<double>* out) const {
  fftw_execute_dft(static_cast<fftw_plan>(plan_inverse_), reinterpret_cast<fftw_complex*>(in),
                   reinterpret_cast<fftw_complex*>(out));
}

}  // namespace dsm
