#pragma once

#include <complex>
#include <vector>

namespace dsm {

// 2D complex DFT pair for one grid size, backed by FFTW. Plans use
// FFTW_ESTIMATE | FFTW_UNALIGNED, so the chosen algorithm — and therefore
// the floating-point result — depends only on the transform size, and any
// buffer may be passed to execute. Plans are created in the constructor;
// forward()/inverse() on distinct buffers are safe to call concurrently.
class Fft2D {
 public:
  Fft2D(int width, int height);
  ~Fft2D();

  Fft2D(const Fft2D&) = delete;
  Fft2D& operator=(const Fft2D&) = delete;

  int width() const { return width_; }
  int height() const { return height_; }

  // Out-of-place transforms, unnormalized (inverse leaves the width*height
  // factor to the caller). in and out must not overlap.
  void forward(std::complex<double>* in, std::complex<double>* out) const;
  void inverse(std::complex<double>* in, std::complex<double>* out) const;

 private:
  int width_;
  int height_;
  void* plan_forward_;
  void* plan_inverse_;
  std::vector<std::complex<double>> scratch_in_;
  std::vector<std::complex<double>> scratch_out_;
};

}  // namespace dsm
