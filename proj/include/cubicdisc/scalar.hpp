#pragma once

#include <gmpxx.h>

#include <complex>
#include <optional>
#include <stdexcept>
#include <string>

namespace cubicdisc {

class DivisionByZero : public std::domain_error {
 public:
  DivisionByZero() : std::domain_error("division by zero in Q(i, sqrt3)") {}
};

// Complex double with the same interface as ExactScalar.
class FloatScalar {
 public:
  FloatScalar() = default;
  FloatScalar(double re) : v_(re, 0.0) {}  // NOLINT(google-explicit-constructor)
  FloatScalar(double re, double im) : v_(re, im) {}
  explicit FloatScalar(std::complex<double> v) : v_(v) {}

  static FloatScalar rational(long p, long q) { return FloatScalar(double(p) / double(q)); }
  static FloatScalar imag_unit() { return {0.0, 1.0}; }
  static FloatScalar sqrt3();

  double re() const { return v_.real(); }
  double im() const { return v_.imag(); }
  std::complex<double> value() const { return v_; }

  FloatScalar conj() const { return FloatScalar(std::conj(v_)); }
  bool is_zero() const { return v_ == std::complex<double>{}; }
  bool is_finite() const;
  double magnitude() const { return std::abs(v_); }
  FloatScalar inverse() const;
  std::optional<FloatScalar> try_inverse() const;
  FloatScalar real_part() const { return FloatScalar(v_.real()); }
  FloatScalar imag_part() const { return FloatScalar(v_.imag()); }

  FloatScalar& operator+=(const FloatScalar& o) { v_ += o.v_; return *this; }
  FloatScalar& operator-=(const FloatScalar& o) { v_ -= o.v_; return *this; }
  FloatScalar& operator*=(const FloatScalar& o) { v_ *= o.v_; return *this; }
  FloatScalar& operator/=(const FloatScalar& o) { return *this *= o.inverse(); }
  FloatScalar operator-() const { return FloatScalar(-v_); }

  friend FloatScalar operator+(FloatScalar x, const FloatScalar& y) { return x += y; }
  friend FloatScalar operator-(FloatScalar x, const FloatScalar& y) { return x -= y; }
  friend FloatScalar operator*(FloatScalar x, const FloatScalar& y) { return x *= y; }
  friend FloatScalar operator/(FloatScalar x, const FloatScalar& y) { return x /= y; }
  friend bool operator==(const FloatScalar& x, const FloatScalar& y) { return x.v_ == y.v_; }

  std::string to_string() const;

 private:
  std::complex<double> v_{};
};

// Element a + b i + c sqrt3 + d i sqrt3 of Q(i, sqrt3), coefficients kept in lowest terms.
class ExactScalar {
 public:
  ExactScalar() = default;
  ExactScalar(long n) : a_(n) {}  // NOLINT(google-explicit-constructor)
  ExactScalar(mpq_class a, mpq_class b, mpq_class c, mpq_class d);

  static ExactScalar rational(long p, long q);
  static ExactScalar imag_unit() { return {0, 1, 0, 0}; }
  static ExactScalar sqrt3() { return {0, 0, 1, 0}; }

  const mpq_class& a() const { return a_; }
  const mpq_class& b() const { return b_; }
  const mpq_class& c() const { return c_; }
  const mpq_class& d() const { return d_; }

  ExactScalar conj() const { return {a_, -b_, c_, -d_}; }
  // Image under sqrt3 -> -sqrt3.
  ExactScalar sqrt3_conj() const { return {a_, b_, -c_, -d_}; }
  bool is_zero() const { return sgn(a_) == 0 && sgn(b_) == 0 && sgn(c_) == 0 && sgn(d_) == 0; }
  bool is_rational() const { return sgn(b_) == 0 && sgn(c_) == 0 && sgn(d_) == 0; }
  bool is_real() const { return sgn(b_) == 0 && sgn(d_) == 0; }
  double magnitude() const { return std::abs(to_complex()); }
  std::complex<double> to_complex() const;
  FloatScalar to_float() const { return FloatScalar(to_complex()); }
  ExactScalar inverse() const;
  std::optional<ExactScalar> try_inverse() const;
  ExactScalar real_part() const { return {a_, 0, c_, 0}; }
  ExactScalar imag_part() const { return {b_, 0, d_, 0}; }

  ExactScalar& operator+=(const ExactScalar& o);
  ExactScalar& operator-=(const ExactScalar& o);
  ExactScalar& operator*=(const ExactScalar& o);
  ExactScalar& operator/=(const ExactScalar& o) { return *this *= o.inverse(); }
  ExactScalar operator-() const { return {-a_, -b_, -c_, -d_}; }

  friend ExactScalar operator+(ExactScalar x, const ExactScalar& y) { return x += y; }
  friend ExactScalar operator-(ExactScalar x, const ExactScalar& y) { return x -= y; }
  friend ExactScalar operator*(ExactScalar x, const ExactScalar& y) { return x *= y; }
  friend ExactScalar operator/(ExactScalar x, const ExactScalar& y) { return x /= y; }
  friend bool operator==(const ExactScalar& x, const ExactScalar& y) {
    return x.a_ == y.a_ && x.b_ == y.b_ && x.c_ == y.c_ && x.d_ == y.d_;
  }

  std::string to_string() const;

 private:
  mpq_class a_, b_, c_, d_;
};

template <class T>
struct ScalarTraits;

template <>
struct ScalarTraits<ExactScalar> {
  static constexpr bool exact = true;
  static constexpr const char* name = "exact";
};

template <>
struct ScalarTraits<FloatScalar> {
  static constexpr bool exact = false;
  static constexpr const char* name = "float";
  // Pivot threshold relative to the largest entry in elimination.
  static constexpr double pivot_eps = 1e-10;
};

template <class T>
inline constexpr bool is_exact_v = ScalarTraits<T>::exact;

template <class T>
T frac(long p, long q = 1) {
  return T::rational(p, q);
}

template <class T>
T imag_unit() {
  return T::imag_unit();
}

template <class T>
T sqrt3() {
  return T::sqrt3();
}

}  // namespace cubicdisc
