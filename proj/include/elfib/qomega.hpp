#pragma once

#include <string>

#include "elfib/rational.hpp"

namespace elfib {

/// The field Q(w) with w a primitive cube root of unity (w^2 = -1 - w).
/// Needed because six of the nine Hesse-pencil base points live here.
struct QOmega {
  Rational a, b;  // a + b w

  QOmega() : a(0), b(0) {}
  QOmega(Rational r) : a(std::move(r)), b(0) {}  // NOLINT
  QOmega(long n) : a(n), b(0) {}                 // NOLINT
  QOmega(int n) : a(n), b(0) {}                  // NOLINT
  QOmega(Rational re, Rational im) : a(std::move(re)), b(std::move(im)) {}

  static QOmega omega() { return QOmega(Rational(0), Rational(1)); }

  bool is_zero() const { return a.is_zero() && b.is_zero(); }

  QOmega operator-() const { return QOmega(-a, -b); }

  friend QOmega operator+(const QOmega& x, const QOmega& y) {
    return QOmega(x.a + y.a, x.b + y.b);
  }
  friend QOmega operator-(const QOmega& x, const QOmega& y) {
    return QOmega(x.a - y.a, x.b - y.b);
  }
  friend QOmega operator*(const QOmega& x, const QOmega& y) {
    // (a + b w)(c + d w) = ac + (ad + bc) w + bd w^2,  w^2 = -1 - w
    Rational bd = x.b * y.b;
    return QOmega(x.a * y.a - bd, x.a * y.b + x.b * y.a - bd);
  }
  friend QOmega operator/(const QOmega& x, const QOmega& y) {
    // conj(c + d w) = (c - d) - d w;  norm = c^2 - cd + d^2
    Rational n = y.a * y.a - y.a * y.b + y.b * y.b;
    if (n.is_zero()) throw std::domain_error("QOmega: division by zero");
    QOmega conj(y.a - y.b, -y.b);
    QOmega num = x * conj;
    return QOmega(num.a / n, num.b / n);
  }

  QOmega& operator+=(const QOmega& y) { return *this = *this + y; }
  QOmega& operator-=(const QOmega& y) { return *this = *this - y; }
  QOmega& operator*=(const QOmega& y) { return *this = *this * y; }
  QOmega& operator/=(const QOmega& y) { return *this = *this / y; }

  friend bool operator==(const QOmega& x, const QOmega& y) {
    return x.a == y.a && x.b == y.b;
  }
  friend bool operator!=(const QOmega& x, const QOmega& y) { return !(x == y); }

  std::string str() const {
    if (b.is_zero()) return a.str();
    std::string s = "(" + a.str() + (b < Rational(0) ? "-" : "+");
    Rational ab = b < Rational(0) ? -b : b;
    if (ab != Rational(1)) s += ab.str() + "*";
    return s + "w)";
  }
};

inline bool scalar_is_zero(const Rational& x) { return x.is_zero(); }
inline bool scalar_is_zero(const QOmega& x) { return x.is_zero(); }
inline std::string scalar_str(const Rational& x) { return x.str(); }
inline std::string scalar_str(const QOmega& x) { return x.str(); }

}  // namespace elfib
