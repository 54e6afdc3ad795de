#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tcnn/errors.hpp"

namespace tcnn {

/// Dimensions of a 4-D tensor in (samples, channels, rows, cols) order.
struct Shape4 {
  int64_t n = 0;
  int64_t c = 0;
  int64_t h = 0;
  int64_t w = 0;

  bool valid() const { return n >= 1 && c >= 1 && h >= 1 && w >= 1; }
  int64_t numel() const { return n * c * h * w; }
  bool operator==(const Shape4&) const = default;
  std::string str() const;
};

/// Dense 4-D array of 64-bit floats, row-major in n, then c, then h, then w.
///
/// This is the universal value type: activations, feature maps, parameters
/// and gradients are all Tensor4. Values are owned and contiguous; the
/// element at (n,c,h,w) lives at data[((n*C + c)*H + h)*W + w].
class Tensor4 {
 public:
  Tensor4() = default;
  explicit Tensor4(Shape4 shape, double fill = 0.0);

  const Shape4& shape() const { return shape_; }
  int64_t numel() const { return static_cast<int64_t>(data_.size()); }
  bool empty() const { return data_.empty(); }

  int64_t index_of(int64_t n, int64_t c, int64_t h, int64_t w) const {
    return ((n * shape_.c + c) * shape_.h + h) * shape_.w + w;
  }
  double& at(int64_t n, int64_t c, int64_t h, int64_t w) {
    return data_[static_cast<size_t>(index_of(n, c, h, w))];
  }
  double at(int64_t n, int64_t c, int64_t h, int64_t w) const {
    return data_[static_cast<size_t>(index_of(n, c, h, w))];
  }
  double& operator[](int64_t i) { return data_[static_cast<size_t>(i)]; }
  double operator[](int64_t i) const { return data_[static_cast<size_t>(i)]; }

  double* data() { return data_.data(); }
  const double* data() const { return data_.data(); }
  std::vector<double>& values() { return data_; }
  const std::vector<double>& values() const { return data_; }

  void fill(double v);
  /// Reinterprets the same linear data under a new shape of equal numel.
  Tensor4 reshaped(Shape4 shape) const;

  double sum() const;
  double mean() const;
  double max() const;
  bool all_finite() const;

  bool operator==(const Tensor4&) const = default;

 private:
  Shape4 shape_{};
  std::vector<double> data_;
};

/// Throws ShapeError unless every dimension is >= 1.
void check_shape(Shape4 shape, const std::string& what);

Tensor4 zeros(Shape4 shape);
Tensor4 constant_init(Shape4 shape, double value);

}  // namespace tcnn
