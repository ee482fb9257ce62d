#pragma once

#include <stdexcept>
#include <string>

namespace dsm {

// Codec selection: lossless BMP reference, JPEG at quality Q in [1, 100],
// or JPEG2000 at a requested compression ratio eta >= 1.
struct CompressionSpec {
  enum class Format { bmp, jpeg, jpeg2000 };

  Format format = Format::bmp;
  int jpeg_quality = 0;
  double jp2_ratio = 0.0;

  static CompressionSpec bmp() { return {Format::bmp, 0, 0.0}; }

  static CompressionSpec jpeg(int quality) {
    if (quality < 1 || quality > 100)
      throw std::invalid_argument("CompressionSpec: JPEG quality must be in [1, 100]");
    return {Format::jpeg, quality, 0.0};
  }

  static CompressionSpec jpeg2000(double ratio) {
    if (!(ratio >= 1.0))
      throw std::invalid_argument("CompressionSpec: JPEG2000 ratio must be >= 1");
    return {Format::jpeg2000, 0, ratio};
  }

  bool lossless() const { return format == Format::bmp; }

  const char* extension() const {
    switch (format) {
      case Format::bmp: return "bmp";
      case Format::jpeg: return "jpg";
      case Format::jpeg2000: return "jp2";
    }
    return "bmp";
  }

  // Stable label used for directory names and report rows, e.g. "jpg_q70".
  std::string label() const;

  // Inverse of label(); throws on an unrecognized string.
  static CompressionSpec from_label(const std::string& label);

  bool operator==(const CompressionSpec& o) const {
    return format == o.format && jpeg_quality == o.jpeg_quality && jp2_ratio == o.jp2_ratio;
  }
};

}  // namespace dsm
