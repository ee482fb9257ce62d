#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "dsm/compression_spec.hpp"
#include "dsm/grid.hpp"

namespace dsm {

enum class Channels { gray, rgb };

// Where a sequence came from; decompressed sequences remember their codec.
struct Provenance {
  enum class Kind { synthetic, ingested, decompressed };

  Kind kind = Kind::synthetic;
  std::optional<CompressionSpec> codec;

  static Provenance synthetic() { return {Kind::synthetic, std::nullopt}; }
  static Provenance ingested() { return {Kind::ingested, std::nullopt}; }
  static Provenance decompressed(const CompressionSpec& spec) { return {Kind::decompressed, spec}; }

  std::string to_string() const;
};

// Time-ordered stack of 8-bit intensity frames. All estimators consume this.
// Frames are stored single-channel; `channels` records the source layout
// (color inputs are reduced to one channel at ingestion).
struct FrameSequence {
  std::vector<Grid2D<std::uint8_t>> frames;
  double dt = 1.0;
  double pixel_pitch = 1.0;
  Channels channels = Channels::gray;
  Provenance provenance = Provenance::synthetic();

  int width() const { return frames.empty() ? 0 : frames.front().width(); }
  int height() const { return frames.empty() ? 0 : frames.front().height(); }
  int n_frames() const { return static_cast<int>(frames.size()); }

  // All frames share one geometry; enforced wherever a sequence is built.
  void validate() const {
    if (frames.empty()) throw std::invalid_argument("FrameSequence: no frames");
    for (const auto& f : frames)
      if (!f.same_dims(frames.front()))
        throw std::invalid_argument("FrameSequence: frame dimensions differ");
  }
};

}  // namespace dsm
