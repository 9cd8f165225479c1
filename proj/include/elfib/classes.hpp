#pragma once

#include <cstdint>
#include <map>
#include <string>

#include <Eigen/Core>

#include "elfib/basis.hpp"
#include "elfib/rational.hpp"

namespace elfib {

using Int = std::int64_t;
using NSVector = Eigen::Matrix<Int, kNSRank, 1>;
using H2Vector = Eigen::Matrix<Int, kH2Rank, 1>;
using BaseVector = Eigen::Matrix<Rational, kBaseRank, 1>;
using PairingMatrix = Eigen::Matrix<Int, kNSRank, kH2Rank>;
using BaseFormMatrix = Eigen::Matrix<Rational, kBaseRank, kBaseRank>;

struct StructuralError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Divisor class: integer vector over the 21-generator NS basis.
struct DivisorClass {
  NSVector c = NSVector::Zero();

  static DivisorClass basis(int i) {
    DivisorClass d;
    d.c[NSBasis::check(i, kNSRank)] = 1;
    return d;
  }

  friend DivisorClass operator+(DivisorClass a, const DivisorClass& b) { a.c += b.c; return a; }
  friend DivisorClass operator-(DivisorClass a, const DivisorClass& b) { a.c -= b.c; return a; }
  friend DivisorClass operator*(Int m, DivisorClass a) { a.c *= m; return a; }
  DivisorClass operator-() const { DivisorClass d; d.c = -c; return d; }
  friend bool operator==(const DivisorClass& a, const DivisorClass& b) { return a.c == b.c; }
};

/// Curve class: integer vector over the 21-generator H2 basis.
struct CurveClass {
  H2Vector c = H2Vector::Zero();

  static CurveClass basis(int i) {
    CurveClass v;
    v.c[NSBasis::check(i, kH2Rank)] = 1;
    return v;
  }

  friend CurveClass operator+(CurveClass a, const CurveClass& b) { a.c += b.c; return a; }
  friend CurveClass operator-(CurveClass a, const CurveClass& b) { a.c -= b.c; return a; }
  friend CurveClass operator*(Int m, CurveClass a) { a.c *= m; return a; }
  CurveClass operator-() const { CurveClass v; v.c = -c; return v; }
  friend bool operator==(const CurveClass& a, const CurveClass& b) { return a.c == b.c; }
};

/// Rational vector over the 10-generator Picard basis {f, s0..s8} of the base.
struct BaseClass {
  BaseVector c = BaseVector::Constant(Rational(0));

  static BaseClass basis(int i) {
    BaseClass b;
    b.c[NSBasis::check(i, kBaseRank)] = Rational(1);
    return b;
  }
  static BaseClass zero() { return BaseClass{}; }

  bool is_zero() const {
    for (int i = 0; i < kBaseRank; ++i)
      if (!c[i].is_zero()) return false;
    return true;
  }

  friend BaseClass operator+(BaseClass a, const BaseClass& b) { a.c += b.c; return a; }
  friend BaseClass operator-(BaseClass a, const BaseClass& b) { a.c -= b.c; return a; }
  friend BaseClass operator*(const Rational& m, BaseClass a) {
    for (int i = 0; i < kBaseRank; ++i) a.c[i] *= m;
    return a;
  }
  BaseClass operator-() const { return Rational(-1) * *this; }
  friend bool operator==(const BaseClass& a, const BaseClass& b) { return a.c == b.c; }

  std::string str() const;
};

/// Curve class extended by auxiliary generators.  The aux part carries only a
/// declared pushforward; it has no H2 expansion.
struct CurveExpression {
  CurveClass pure;
  std::map<int, Int> aux;  // AuxGen id -> coefficient, nonzero entries only

  CurveExpression() = default;
  CurveExpression(CurveClass p) : pure(std::move(p)) {}  // NOLINT

  static CurveExpression aux_gen(int id, Int coeff = 1) {
    CurveExpression e;
    if (coeff != 0) e.aux[NSBasis::check(id, AuxGen::Count)] = coeff;
    return e;
  }

  bool has_aux() const { return !aux.empty(); }

  CurveExpression& add_scaled(const CurveExpression& o, Int m) {
    pure.c += m * o.pure.c;
    for (const auto& [id, coeff] : o.aux) {
      Int v = aux[id] + m * coeff;
      if (v == 0) aux.erase(id); else aux[id] = v;
    }
    return *this;
  }

  friend CurveExpression operator+(CurveExpression a, const CurveExpression& b) { return a.add_scaled(b, 1); }
  friend CurveExpression operator-(CurveExpression a, const CurveExpression& b) { return a.add_scaled(b, -1); }
  friend CurveExpression operator*(Int m, CurveExpression a) {
    a.pure.c *= m;
    if (m == 0) a.aux.clear();
    else for (auto& [id, coeff] : a.aux) coeff *= m;
    return a;
  }
  friend bool operator==(const CurveExpression& a, const CurveExpression& b) {
    return a.pure == b.pure && a.aux == b.aux;
  }

  std::string str() const;
};

/// "c0*g0 + c1*g1 - ..." over named generators; "0" for the zero expression.
std::string format_linear(const std::map<std::string, Rational>& terms);

}  // namespace elfib
