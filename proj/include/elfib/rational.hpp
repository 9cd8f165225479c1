#pragma once

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

#include <Eigen/Core>

namespace elfib {

/// Exact rational number, always in lowest terms with positive denominator.
/// Thin value wrapper over GMP's mpq_class; no floating point anywhere.
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(long n) : v_(n) {}            // NOLINT: implicit by design
  Rational(int n) : v_(n) {}             // NOLINT
  Rational(long n, long d) : v_(n, d) {
    if (d == 0) throw std::domain_error("Rational: zero denominator");
    v_.canonicalize();
  }
  explicit Rational(const mpq_class& q) : v_(q) { v_.canonicalize(); }
  explicit Rational(const mpz_class& n) : v_(n) {}

  /// Parses "p", "-p" or "p/q" in decimal.
  static Rational parse(const std::string& s) {
    mpq_class q;
    if (q.set_str(s, 10) != 0)
      throw std::invalid_argument("Rational: cannot parse '" + s + "'");
    q.canonicalize();
    if (q.get_den() == 0) throw std::domain_error("Rational: zero denominator");
    return Rational(q);
  }

  mpz_class num() const { return v_.get_num(); }
  mpz_class den() const { return v_.get_den(); }

  bool is_zero() const { return v_ == 0; }
  bool is_integer() const { return v_.get_den() == 1; }

  /// Integer value; throws unless denominator is 1.
  std::int64_t to_int() const {
    if (!is_integer()) throw std::domain_error("Rational: not an integer: " + str());
    if (!v_.get_num().fits_slong_p())
      throw std::overflow_error("Rational: integer out of range");
    return v_.get_num().get_si();
  }

  std::string str() const {
    return v_.get_den() == 1 ? v_.get_num().get_str() : v_.get_str();
  }

  Rational operator-() const { return Rational(mpq_class(-v_)); }
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("Rational: division by zero");
    v_ /= o.v_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r);

 private:
  mpq_class v_;
};

inline std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.str();
}

inline Rational abs(const Rational& r) { return r < Rational(0) ? -r : r; }

}  // namespace elfib

namespace Eigen {

template <>
struct NumTraits<elfib::Rational> : GenericNumTraits<elfib::Rational> {
  typedef elfib::Rational Real;
  typedef elfib::Rational NonInteger;
  typedef elfib::Rational Nested;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 2,
    AddCost = 10,
    MulCost = 12,
  };
  static inline Real epsilon() { return elfib::Rational(0); }
  static inline Real dummy_precision() { return elfib::Rational(0); }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen
