#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "elfib/kodaira.hpp"
#include "elfib/qomega.hpp"
#include "elfib/rational.hpp"

namespace elfib {

struct PolyError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Sparse multivariate polynomial over an exact scalar field, graded-exact:
/// either homogeneous of a fixed total degree or flagged affine.  Zero
/// coefficients are never stored; the zero polynomial is degree-wildcard.
template <class Scalar>
class Poly {
 public:
  using Exponents = std::vector<int>;
  using TermMap = std::map<Exponents, Scalar>;

  explicit Poly(int nvars = 3) : nvars_(nvars), affine_(false), degree_(-1) {}

  static Poly zero(int nvars) { return Poly(nvars); }

  static Poly constant(int nvars, Scalar c) {
    Poly p(nvars);
    p.affine_ = false;
    p.degree_ = scalar_is_zero(c) ? -1 : 0;
    if (!scalar_is_zero(c)) p.terms_[Exponents(nvars, 0)] = std::move(c);
    return p;
  }

  static Poly variable(int nvars, int i) {
    if (i < 0 || i >= nvars) throw PolyError("variable index out of range");
    Poly p(nvars);
    p.degree_ = 1;
    Exponents e(nvars, 0);
    e[i] = 1;
    p.terms_[std::move(e)] = Scalar(1);
    return p;
  }

  static Poly monomial(int nvars, Exponents exps, Scalar c) {
    if (static_cast<int>(exps.size()) != nvars) throw PolyError("exponent arity mismatch");
    Poly p(nvars);
    if (scalar_is_zero(c)) return p;
    p.degree_ = std::accumulate(exps.begin(), exps.end(), 0);
    p.terms_[std::move(exps)] = std::move(c);
    return p;
  }

  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_affine() const { return affine_; }
  /// Declared homogeneous degree; -1 for the zero polynomial (any degree).
  int degree() const { return degree_; }
  const TermMap& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }

  int min_total_degree() const {
    if (is_zero()) return kInfiniteOrder;
    int best = kInfiniteOrder;
    for (const auto& [e, c] : terms_)
      best = std::min(best, std::accumulate(e.begin(), e.end(), 0));
    return best;
  }

  friend Poly operator+(const Poly& a, const Poly& b) { return combine(a, b, Scalar(1)); }
  friend Poly operator-(const Poly& a, const Poly& b) { return combine(a, b, Scalar(-1)); }
  Poly operator-() const {
    Poly p = *this;
    for (auto& [e, c] : p.terms_) c = -c;
    return p;
  }

  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.nvars_ != b.nvars_) throw PolyError("variable arity mismatch");
    Poly p(a.nvars_);
    if (a.is_zero() || b.is_zero()) return p;
    for (const auto& [ea, ca] : a.terms_) {
      for (const auto& [eb, cb] : b.terms_) {
        Exponents e(a.nvars_);
        for (int i = 0; i < a.nvars_; ++i) e[i] = ea[i] + eb[i];
        Scalar v = ca * cb;
        auto it = p.terms_.find(e);
        if (it == p.terms_.end()) {
          if (!scalar_is_zero(v)) p.terms_.emplace(std::move(e), std::move(v));
        } else {
          it->second += v;
          if (scalar_is_zero(it->second)) p.terms_.erase(it);
        }
      }
    }
    p.affine_ = a.affine_ || b.affine_;
    if (!p.affine_ && !p.is_zero()) p.degree_ = a.degree_ + b.degree_;
    return p;
  }

  friend Poly operator*(const Scalar& c, const Poly& a) {
    return Poly::constant(a.nvars_, c) * a;
  }

  Poly pow(int n) const {
    if (n < 0) throw PolyError("negative power");
    Poly r = Poly::constant(nvars_, Scalar(1));
    for (int i = 0; i < n; ++i) r = r * *this;
    return r;
  }

  /// Substitutes subs[i] for variable i.  All substituted polynomials share
  /// one variable context.  Homogeneity is tracked: a homogeneous polynomial
  /// composed with equal-degree homogeneous substitutes stays homogeneous.
  Poly compose(const std::vector<Poly>& subs) const {
    if (static_cast<int>(subs.size()) != nvars_) throw PolyError("compose: wrong substitute count");
    if (subs.empty()) throw PolyError("compose: no variables");
    const int m = subs.front().nvars_;
    for (const auto& s : subs)
      if (s.nvars_ != m) throw PolyError("compose: substitutes disagree on arity");
    Poly out(m);
    for (const auto& [e, c] : terms_) {
      Poly t = Poly::constant(m, c);
      for (int i = 0; i < nvars_; ++i)
        if (e[i] > 0) t = t * subs[i].pow(e[i]);
      out = unchecked_sum(out, t);
    }
    // degree bookkeeping
    bool hom = !affine_;
    int sub_deg = -1;
    for (const auto& s : subs) {
      if (s.affine_) hom = false;
      if (!s.is_zero()) {
        if (sub_deg == -1) sub_deg = s.degree_;
        else if (s.degree_ != sub_deg) hom = false;
      }
    }
    out.affine_ = !hom;
    out.degree_ = (hom && !out.is_zero()) ? degree_ * sub_deg : -1;
    if (out.affine_) out.degree_ = -1;
    return out;
  }

  Scalar evaluate(const std::vector<Scalar>& point) const {
    if (static_cast<int>(point.size()) != nvars_) throw PolyError("evaluate: arity mismatch");
    Scalar total(0);
    for (const auto& [e, c] : terms_) {
      Scalar t = c;
      for (int i = 0; i < nvars_; ++i)
        for (int k = 0; k < e[i]; ++k) t *= point[i];
      total += t;
    }
    return total;
  }

  /// Sets variable m to 1; the result is affine in the remaining variables.
  Poly dehomogenize(int m) const {
    if (m < 0 || m >= nvars_) throw PolyError("dehomogenize: bad variable");
    Poly p(nvars_);
    p.affine_ = true;
    for (const auto& [e, c] : terms_) {
      Exponents e2 = e;
      e2[m] = 0;
      auto it = p.terms_.find(e2);
      if (it == p.terms_.end()) p.terms_.emplace(std::move(e2), c);
      else {
        it->second += c;
        if (scalar_is_zero(it->second)) p.terms_.erase(it);
      }
    }
    return p;
  }

  /// Substitutes x_i -> x_i + shift[i] for every variable.
  Poly translate(const std::vector<Scalar>& shift) const {
    if (static_cast<int>(shift.size()) != nvars_) throw PolyError("translate: arity mismatch");
    std::vector<Poly> subs;
    subs.reserve(nvars_);
    for (int i = 0; i < nvars_; ++i){
      Poly s = variable(nvars_, i);
      s.affine_ = true;
      s.degree_ = -1;
      if (!scalar_is_zero(shift[i])) s = unchecked_sum(s, constant(nvars_, shift[i]));
      subs.push_back(std::move(s));
    }
    Poly out = compose(subs);
    out.affine_ = true;
    out.degree_ = -1;
    return out;
  }

  friend bool operator==(const Poly& a, const Poly& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }

 private:
  static Poly combine(const Poly& a, const Poly& b, Scalar sign) {
    if (a.nvars_ != b.nvars_) throw PolyError("variable arity mismatch");
    if (!a.affine_ && !b.affine_ && !a.is_zero() && !b.is_zero() && a.degree_ != b.degree_)
      throw PolyError("degree mismatch: adding homogeneous polynomials of degrees " +
                      std::to_string(a.degree_) + " and " + std::to_string(b.degree_));
    Poly p = a;
    for (const auto& [e, c] : b.terms_) {
      Scalar v = sign * c;
      auto it = p.terms_.find(e);
      if (it == p.terms_.end()) p.terms_.emplace(e, std::move(v));
      else {
        it->second += v;
        if (scalar_is_zero(it->second)) p.terms_.erase(it);
      }
    }
    p.affine_ = a.affine_ || b.affine_;
    if (p.is_zero() && !p.affine_) p.degree_ = -1;
    else if (!p.affine_) p.degree_ = a.is_zero() ? b.degree_ : a.degree_;
    return p;
  }

  // sum without the homogeneity check (internal, compose/translate)
  static Poly unchecked_sum(const Poly& a, const Poly& b) {
    Poly p = a;
    p.affine_ = true;
    for (const auto& [e, c] : b.terms_) {
      auto it = p.terms_.find(e);
      if (it == p.terms_.end()) p.terms_.emplace(e, c);
      else {
        it->second += c;
        if (scalar_is_zero(it->second)) p.terms_.erase(it);
      }
    }
    return p;
  }

  int nvars_;
  bool affine_;
  int degree_;
  TermMap terms_;
};

/// Vanishing order of a homogeneous polynomial at a projective point:
/// dehomogenize in a chart where the point is finite, translate to the origin,
/// take the minimal total degree.  kInfiniteOrder for the zero polynomial.
template <class Scalar>
int vanishing_order(const Poly<Scalar>& p, const std::vector<Scalar>& point) {
  if (static_cast<int>(point.size()) != p.nvars())
    throw PolyError("vanishing_order: point arity mismatch");
  int m = -1;
  for (int i = 0; i < p.nvars() && m < 0; ++i)
    if (!scalar_is_zero(point[i])) m = i;
  if (m < 0) throw PolyError("vanishing_order: all-zero projective point");
  if (p.is_affine()) throw PolyError("vanishing_order: polynomial must be homogeneous");
  if (p.is_zero()) return kInfiniteOrder;
  // normalize so coordinate m is 1, then shift the remaining coordinates
  std::vector<Scalar> shift(p.nvars(), Scalar(0));
  for (int i = 0; i < p.nvars(); ++i)
    if (i != m) shift[i] = point[i] / point[m];
  return p.dehomogenize(m).translate(shift).min_total_degree();
}

/// Weierstrass discriminant 4 a^3 + 27 b^2 for y^2 = x^3 + a x + b.
/// Nonzero homogeneous inputs must satisfy 2 deg(b) = 3 deg(a).
template <class Scalar>
Poly<Scalar> discriminant(const Poly<Scalar>& alpha, const Poly<Scalar>& beta) {
  if (!alpha.is_zero() && !beta.is_zero() && !alpha.is_affine() && !beta.is_affine() &&
      2 * beta.degree() != 3 * alpha.degree())
    throw PolyError("discriminant: incompatible degrees (need 2 deg b = 3 deg a)");
  return Scalar(4) * alpha.pow(3) + Scalar(27) * beta.pow(2);
}

/// Parsing and canonical printing (rational coefficients, named variables).
Poly<Rational> parse_poly(const std::string& s,
                          const std::vector<std::string>& vars = {"s", "t", "u"});
std::string format_poly(const Poly<Rational>& p,
                        const std::vector<std::string>& vars = {"s", "t", "u"});

}  // namespace elfib
