#pragma once

#include <utility>
#include <vector>

#include "elfib/poly.hpp"

namespace elfib {

/// A point of P^2 with coordinates in the scalar field.
template <class Scalar>
using ProjPoint = std::vector<Scalar>;

/// Projective equality after normalizing the first nonzero coordinate to 1.
template <class Scalar>
bool proj_equal(const ProjPoint<Scalar>& p, const ProjPoint<Scalar>& q) {
  if (p.size() != q.size()) return false;
  int mp = -1, mq = -1;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (mp < 0 && !scalar_is_zero(p[i])) mp = static_cast<int>(i);
    if (mq < 0 && !scalar_is_zero(q[i])) mq = static_cast<int>(i);
  }
  if (mp < 0 || mq < 0) throw PolyError("proj_equal: all-zero point");
  if (mp != mq) return false;
  for (std::size_t i = 0; i < p.size(); ++i)
    if (p[i] / p[mp] != q[i] / q[mq]) return false;
  return true;
}

/// A Weierstrass model y^2 = x^3 + alpha x + beta over P^2 built from a cubic
/// pencil: alpha = 0 and beta the product of six pencil members.
template <class Scalar>
struct PencilWeierstrass {
  Poly<Scalar> alpha;
  Poly<Scalar> beta;
  std::vector<ProjPoint<Scalar>> base_points;
};

/// Pencil parameter [nu : mu]; the member is mu G - nu F.
template <class Scalar>
using PencilRoot = std::pair<Scalar, Scalar>;

/// Builds beta = prod_j (mu_j G - nu_j F) of degree 18 from a cubic pencil
/// with the given 9-point base locus.  The base points are verified (distinct,
/// common zeros of F and G) rather than solved for; by Bezout nine distinct
/// common points are the entire transverse base locus.
template <class Scalar>
PencilWeierstrass<Scalar> build_namikawa_p2(const Poly<Scalar>& F, const Poly<Scalar>& G,
                                            const std::vector<ProjPoint<Scalar>>& base_points,
                                            const std::vector<PencilRoot<Scalar>>& roots) {
  if (F.is_affine() || F.degree() != 3 || G.is_affine() || G.degree() != 3)
    throw PolyError("build_namikawa_p2: pencil members must be homogeneous cubics");
  if (roots.size() != 6) throw PolyError("build_namikawa_p2: need 6 pencil parameters");
  for (std::size_t i = 0; i < roots.size(); ++i) {
    if (scalar_is_zero(roots[i].first) && scalar_is_zero(roots[i].second))
      throw PolyError("build_namikawa_p2: zero pencil parameter");
    for (std::size_t j = i + 1; j < roots.size(); ++j) {
      // [nu:mu] equal iff nu_i mu_j - nu_j mu_i = 0
      if (scalar_is_zero(roots[i].first * roots[j].second - roots[j].first * roots[i].second))
        throw PolyError("build_namikawa_p2: b not squarefree (repeated pencil parameter)");
    }
  }
  if (base_points.size() != 9)
    throw PolyError("build_namikawa_p2: base locus not 9 distinct points");
  for (std::size_t i = 0; i < base_points.size(); ++i) {
    if (!scalar_is_zero(F.evaluate(base_points[i])) ||
        !scalar_is_zero(G.evaluate(base_points[i])))
      throw PolyError("build_namikawa_p2: claimed base point not on the pencil");
    for (std::size_t j = i + 1; j < base_points.size(); ++j)
      if (proj_equal(base_points[i], base_points[j]))
        throw PolyError("build_namikawa_p2: base locus not 9 distinct points");
  }

  Poly<Scalar> beta = Poly<Scalar>::constant(F.nvars(), Scalar(1));
  for (const auto& [nu, mu] : roots)
    beta = beta * (mu * G - nu * F);

  PencilWeierstrass<Scalar> w;
  w.alpha = Poly<Scalar>::zero(F.nvars());
  w.beta = std::move(beta);
  w.base_points = base_points;
  return w;
}

/// Vanishing triple of (alpha, beta) at a point, with ord delta computed from
/// the discriminant.
template <class Scalar>
VanishingTriple vanishing_triple(const Poly<Scalar>& alpha, const Poly<Scalar>& beta,
                                 const ProjPoint<Scalar>& point) {
  VanishingTriple t;
  t.ord_a = vanishing_order(alpha, point);
  t.ord_b = vanishing_order(beta, point);
  t.ord_delta = vanishing_order(discriminant(alpha, beta), point);
  return t;
}

/// The Hesse pencil (s^3 + t^3 + u^3, s t u) with its nine base points, six of
/// which involve the cube root of unity.  Scalar must embed Q(w).
struct HessePencil {
  Poly<QOmega> F;
  Poly<QOmega> G;
  std::vector<ProjPoint<QOmega>> base_points;
};

HessePencil hesse_pencil();

}  // namespace elfib
