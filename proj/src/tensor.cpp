#include "tcnn/tensor.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace tcnn {

std::string Shape4::str() const {
  std::ostringstream os;
  os << "(" << n << "," << c << "," << h << "," << w << ")";
  return os.str();
}

void check_shape(Shape4 shape, const std::string& what) {
  if (!shape.valid()) {
    throw ShapeError(what + ": all dimensions must be >= 1, got " + shape.str());
  }
}

Tensor4::Tensor4(Shape4 shape, double fill) : shape_(shape) {
  check_shape(shape, "Tensor4");
  data_.assign(static_cast<size_t>(shape.numel()), fill);
}

void Tensor4::fill(double v) { std::fill(data_.begin(), data_.end(), v); }

Tensor4 Tensor4::reshaped(Shape4 shape) const {
  check_shape(shape, "reshape");
  if (shape.numel() != numel()) {
    throw ShapeError("reshape: element count mismatch, " + shape_.str() + " -> " + shape.str());
  }
  Tensor4 out(shape);
  out.data_ = data_;
  return out;
}

double Tensor4::sum() const {
  double s = 0.0;
  for (double v : data_) s += v;
  return s;
}

double Tensor4::mean() const { return sum() / static_cast<double>(data_.size()); }

double Tensor4::max() const {
  double m = data_[0];
  for (double v : data_) m = std::max(m, v);
  return m;
}

bool Tensor4::all_finite() const {
  for (double v : data_) {
    if (!std::isfinite(v)) return false;
  }
  return true;
}

Tensor4 zeros(Shape4 shape) { return Tensor4(shape, 0.0); }

Tensor4 constant_init(Shape4 shape, double value) { return Tensor4(shape, value); }

}  // namespace tcnn
