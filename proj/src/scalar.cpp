#include "cubicdisc/scalar.hpp"

#include <cmath>
#include <sstream>

namespace cubicdisc {

namespace {

const double kSqrt3 = std::sqrt(3.0);

// Gaussian rational helpers: (re, im) pairs.
struct Gauss {
  mpq_class re, im;
  bool zero() const { return sgn(re) == 0 && sgn(im) == 0; }
};

Gauss mul(const Gauss& x, const Gauss& y) {
  if (x.zero() || y.zero()) return {};
  if (sgn(x.im) == 0 && sgn(y.im) == 0) return {x.re * y.re, 0};
  return {x.re * y.re - x.im * y.im, x.re * y.im + x.im * y.re};
}

std::string rational_text(const mpq_class& q) { return q.get_str(); }

}  // namespace

FloatScalar FloatScalar::sqrt3() { return FloatScalar(kSqrt3); }

bool FloatScalar::is_finite() const { return std::isfinite(v_.real()) && std::isfinite(v_.imag()); }

FloatScalar FloatScalar::inverse() const {
  if (is_zero()) throw DivisionByZero();
  return FloatScalar(1.0 / v_);
}

std::optional<FloatScalar> FloatScalar::try_inverse() const {
  if (is_zero()) return std::nullopt;
  return FloatScalar(1.0 / v_);
}

std::string FloatScalar::to_string() const {
  std::ostringstream os;
  os.precision(17);
  os << v_.real();
  if (v_.imag() != 0.0) os << (v_.imag() < 0 ? " - " : " + ") << std::abs(v_.imag()) << "i";
  return os.str();
}

ExactScalar::ExactScalar(mpq_class a, mpq_class b, mpq_class c, mpq_class d)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {
  a_.canonicalize();
  b_.canonicalize();
  c_.canonicalize();
  d_.canonicalize();
}

ExactScalar ExactScalar::rational(long p, long q) {
  if (q == 0) throw DivisionByZero();
  mpq_class r(p, q);
  r.canonicalize();
  return {r, 0, 0, 0};
}

std::complex<double> ExactScalar::to_complex() const {
  return {a_.get_d() + c_.get_d() * kSqrt3, b_.get_d() + d_.get_d() * kSqrt3};
}

ExactScalar& ExactScalar::operator+=(const ExactScalar& o) {
  a_ += o.a_;
  b_ += o.b_;
  c_ += o.c_;
  d_ += o.d_;
  return *this;
}

ExactScalar& ExactScalar::operator-=(const ExactScalar& o) {
  a_ -= o.a_;
  b_ -= o.b_;
  c_ -= o.c_;
  d_ -= o.d_;
  return *this;
}

// (u1 + v1 sqrt3)(u2 + v2 sqrt3) = (u1 u2 + 3 v1 v2) + (u1 v2 + v1 u2) sqrt3
ExactScalar& ExactScalar::operator*=(const ExactScalar& o) {
  if (is_zero()) return *this;
  if (o.is_zero()) return *this = ExactScalar();
  if (o.is_rational()) {
    const mpq_class& r = o.a_;
    a_ *= r;
    b_ *= r;
    c_ *= r;
    d_ *= r;
    return *this;
  }
  const Gauss u1{a_, b_}, v1{c_, d_}, u2{o.a_, o.b_}, v2{o.c_, o.d_};
  const Gauss uu = mul(u1, u2);
  const Gauss vv = mul(v1, v2);
  const Gauss uv = mul(u1, v2);
  const Gauss vu = mul(v1, u2);
  a_ = uu.re + 3 * vv.re;
  b_ = uu.im + 3 * vv.im;
  c_ = uv.re + vu.re;
  d_ = uv.im + vu.im;
  return *this;
}

std::optional<ExactScalar> ExactScalar::try_inverse() const {
  if (is_zero()) return std::nullopt;
  // w = u^2 - 3 v^2 lies in Q(i); x^{-1} = (u - v sqrt3) conj(w) / |w|^2.
  const Gauss u{a_, b_}, v{c_, d_};
  const Gauss uu = mul(u, u);
  const Gauss vv = mul(v, v);
  const Gauss w{uu.re - 3 * vv.re, uu.im - 3 * vv.im};
  const mpq_class norm = w.re * w.re + w.im * w.im;
  const Gauss wbar{w.re / norm, -w.im / norm};
  const Gauss p = mul(u, wbar);
  const Gauss q = mul(v, wbar);
  return ExactScalar(p.re, p.im, -q.re, -q.im);
}

ExactScalar ExactScalar::inverse() const {
  auto r = try_inverse();
  if (!r) throw DivisionByZero();
  return *r;
}

std::string ExactScalar::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  auto term = [&](const mpq_class& q, const char* unit) {
    if (sgn(q) == 0) return;
    mpq_class m = abs(q);
    if (!first) os << (sgn(q) < 0 ? " - " : " + ");
    else if (sgn(q) < 0) os << "-";
    first = false;
    bool unit_one = (m == 1) && unit[0] != '\0';
    if (!unit_one) os << rational_text(m);
    os << unit;
  };
  term(a_, "");
  term(b_, "i");
  term(c_, "√3");
  term(d_, "i√3");
  return os.str();
}

}  // namespace cubicdisc
