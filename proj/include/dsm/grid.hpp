#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace dsm {

// Row-major 2D array. x runs over columns (width, the paper-facing Nx axis),
// y over rows (height, Ny). Linear index of (x, y) is y * width + x.
template <typename T>
class Grid2D {
 public:
  Grid2D() = default;

  Grid2D(int width, int height, T fill = T{})
      : width_(width), height_(height), data_(checked_extent(width, height), fill) {}

  int width() const { return width_; }
  int height() const { return height_; }
  std::size_t size() const { return data_.size(); }
  bool empty() const { return data_.empty(); }

  T& operator()(int x, int y) { return data_[static_cast<std::size_t>(y) * width_ + x]; }
  const T& operator()(int x, int y) const {
    return data_[static_cast<std::size_t>(y) * width_ + x];
  }

  T* row(int y) { return data_.data() + static_cast<std::size_t>(y) * width_; }
  const T* row(int y) const { return data_.data() + static_cast<std::size_t>(y) * width_; }

  T* data() { return data_.data(); }
  const T* data() const { return data_.data(); }

  bool same_dims(const Grid2D& other) const {
    return width_ == other.width_ && height_ == other.height_;
  }

  bool operator==(const Grid2D& other) const {
    return width_ == other.width_ && height_ == other.height_ && data_ == other.data_;
  }

 private:
  static std::size_t checked_extent(int width, int height) {
    if (width <= 0 || height <= 0)
      throw std::invalid_argument("Grid2D: dimensions must be positive");
    return static_cast<std::size_t>(width) * static_cast<std::size_t>(height);
  }

  int width_ = 0;
  int height_ = 0;
  std::vector<T> data_;
};

// Axis-aligned pixel rectangle, used for ROI statistics.
struct Roi {
  int x0 = 0;
  int y0 = 0;
  int width = 0;
  int height = 0;

  bool contained_in(int grid_width, int grid_height) const {
    return x0 >= 0 && y0 >= 0 && width > 0 && height > 0 && x0 + width <= grid_width &&
           y0 + height <= grid_height;
  }
};

}  // namespace dsm
