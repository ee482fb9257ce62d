#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "dsm/frame_sequence.hpp"
#include "dsm/grid.hpp"

namespace dsm {

using ComplexField = Grid2D<std::complex<double>>;

// Per-pixel temporal correlation radius tau_c in units of dt, at camera
// resolution. Upsampled x2 by nearest neighbor onto the half-pitch object
// grid where the phase lives, so sharp region borders stay sharp.
class TauField {
 public:
  explicit TauField(Grid2D<double> tau_c);

  static TauField constant(int nx, int ny, double tau_c);

  const Grid2D<double>& values() const { return tau_c_; }
  int nx() const { return tau_c_.width(); }
  int ny() const { return tau_c_.height(); }

  Grid2D<double> upsampled_2x() const;

 private:
  Grid2D<double> tau_c_;
};

// Beam intensity profile on the object. Gaussian follows
// I0 = exp(-((x - Nx/2)^2 + (y - Ny/2)^2) / Omega^2) with x, y and Omega in
// camera-pixel units.
struct IlluminationProfile {
  enum class Kind { uniform, gaussian };

  Kind kind = Kind::uniform;
  double omega = 0.0;  // beam spread in units of the camera pitch

  static IlluminationProfile uniform() { return {Kind::uniform, 0.0}; }
  static IlluminationProfile gaussian(double omega);

  // sqrt(I0) at an object-grid point of a (2*nx) x (2*ny) field.
  double amplitude_at(int x_delta, int y_delta, int nx, int ny) const;
};

// Diffraction-limited 4f capture: binary circular aperture in the Fourier
// plane. cutoff is the aperture radius as a fraction of the object-grid
// sampling frequency, in (0, 0.5].
struct OpticalSystem {
  double cutoff = 0.0;
  double wavelength_nm = 532.0;  // metadata only

  explicit OpticalSystem(double cutoff_radius, double wavelength = 532.0);

  // Aperture presets bracketing the two speckle-contrast regimes.
  static constexpr double kHighContrastCutoff = 0.08;
  static constexpr double kLowContrastCutoff = 0.40;
  static OpticalSystem high_contrast(double wavelength = 532.0) {
    return OpticalSystem(kHighContrastCutoff, wavelength);
  }
  static OpticalSystem low_contrast(double wavelength = 532.0) {
    return OpticalSystem(kLowContrastCutoff, wavelength);
  }
};

struct SynthesisConfig {
  int nx = 0;
  int ny = 0;
  int n_frames = 0;
  double dt = 1.0;
  TauField tau_field;
  IlluminationProfile illumination = IlluminationProfile::uniform();
  OpticalSystem optics = OpticalSystem(kDefaultCutoff);
  std::uint64_t seed = 0;

  static constexpr double kDefaultCutoff = OpticalSystem::kHighContrastCutoff;

  void validate() const;
};

// Accumulated surface phase on the (2*nx) x (2*ny) object grid. Values are
// unwrapped; they grow without bound as frames advance.
struct PhaseField {
  Grid2D<double> values;
  int frame_index = 0;
};

// Camera-plane float frames before 8-bit quantization, plus the global
// stretch that was applied.
struct QuantizeResult {
  FrameSequence sequence;
  double p_lo = 0.0;
  double p_hi = 0.0;
  bool degenerate_range = false;  // constant stack; output forced to zero
};

// Uniform [0, 2pi) phase for the first frame; one draw per object-grid cell
// in row-major order, addressed by (seed, cell, frame=0).
PhaseField gen_initial_phase(const SynthesisConfig& config);

// Random-walk phase update: next = prev + sqrt(dt / tau_c) * N(0,1) with an
// independent normal per cell, addressed by (seed, cell, frame), so the
// result is the same for any execution order. tau_delta must already be on
// the object grid (see TauField::upsampled_2x).
PhaseField evolve_phase(const PhaseField& prev, const Grid2D<double>& tau_delta, double dt,
                        std::uint64_t seed);

// Object-surface complex amplitude sqrt(I0) * exp(-j*phase).
ComplexField surface_amplitude(const PhaseField& phase, const IlluminationProfile& illum, int nx,
                               int ny);

// 4f propagation: FFT, binary circ mask of the given cutoff around DC,
// inverse FFT (normalized).
ComplexField propagate_4f(const ComplexField& field, const OpticalSystem& optics);

// Camera pixel integration: sum of |U|^2 over non-overlapping 2x2 blocks of
// the object grid. Input dimensions must be even.
Grid2D<double> bin_intensity(const ComplexField& field);

// One global linear stretch to 8 bits for the whole stack, anchored at the
// 0.1% / 99.9% intensity percentiles so a single hot pixel cannot compress
// the useful range. The same map applies to every frame.
QuantizeResult quantize_sequence(const std::vector<Grid2D<double>>& stack, double dt = 1.0,
                                 double pixel_pitch = 1.0);

// Full pipeline: initial phase, per-frame phase evolution, surface
// amplitude, 4f propagation, 2x2 binning, global quantization. Deterministic
// per seed, independent of thread count.
FrameSequence synthesize(const SynthesisConfig& config);

// Same, but also returns the pre-quantization float frames (used by tests
// and calibration).
QuantizeResult synthesize_with_floats(const SynthesisConfig& config,
                                      std::vector<Grid2D<double>>* float_stack);

}  // namespace dsm
