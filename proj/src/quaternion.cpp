#include "slopecert/quaternion.hpp"

#include <stdexcept>

namespace slopecert {

Quaternion Quaternion::normalized() const {
  const double n = norm();
  if (n == 0.0) throw std::domain_error("cannot normalize the zero quaternion");
  return *this * (1.0 / n);
}

Quaternion exp_i(double theta) { return {std::cos(theta), std::sin(theta), 0.0, 0.0}; }

}  // namespace slopecert
