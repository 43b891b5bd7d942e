#pragma once

#include <algorithm>
#include <cmath>
#include <vector>

#include "cubicdisc/matrix.hpp"
#include "cubicdisc/scalar.hpp"

namespace cubicdisc {

// Size of a difference that ought to vanish. In exact mode only `zero` decides;
// in float mode the Frobenius norm relative to max(1, reference norm) is compared to a tolerance.
struct Residual {
  bool exact = true;
  bool zero = true;
  double norm = 0;
  double scale = 0;

  double relative() const { return norm / std::max(1.0, scale); }
  bool passes(double tol) const { return exact ? zero : relative() < tol; }

  // Combine two residuals of the same backend, keeping the worse relative size.
  Residual& merge(const Residual& o) {
    zero = zero && o.zero;
    if (o.relative() > relative()) {
      norm = o.norm;
      scale = o.scale;
    }
    return *this;
  }
};

inline constexpr double kDefaultTolerance = 1e-9;

template <class T>
Residual measure(const std::vector<T>& diff, double scale) {
  Residual r;
  r.exact = is_exact_v<T>;
  double s = 0;
  for (const auto& x : diff) {
    if (!x.is_zero()) r.zero = false;
    double m = x.magnitude();
    s += m * m;
  }
  r.norm = std::sqrt(s);
  r.scale = scale;
  return r;
}

template <class T>
double norm_of(const std::vector<T>& v) {
  double s = 0;
  for (const auto& x : v) {
    double m = x.magnitude();
    s += m * m;
  }
  return std::sqrt(s);
}

template <class T>
Residual measure_difference(const std::vector<T>& lhs, const std::vector<T>& rhs) {
  std::vector<T> d(lhs.size());
  for (std::size_t k = 0; k < lhs.size(); ++k) d[k] = lhs[k] - rhs[k];
  return measure(d, std::max(norm_of(lhs), norm_of(rhs)));
}

template <class T>
Residual measure_difference(const Matrix<T>& lhs, const Matrix<T>& rhs) {
  return measure_difference(lhs.data(), rhs.data());
}

}  // namespace cubicdisc
