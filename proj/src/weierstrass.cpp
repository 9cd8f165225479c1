#include "elfib/weierstrass.hpp"

namespace elfib {

HessePencil hesse_pencil() {
  using P = Poly<QOmega>;
  const P s = P::variable(3, 0), t = P::variable(3, 1), u = P::variable(3, 2);
  HessePencil h;
  h.F = s.pow(3) + t.pow(3) + u.pow(3);
  h.G = s * t * u;

  const QOmega zero(0), one(1);
  const QOmega w = QOmega::omega();
  const QOmega w2 = w * w;  // = -1 - w
  h.base_points = {
      {zero, one, -one}, {zero, one, -w}, {zero, one, -w2},
      {one, zero, -one}, {one, zero, -w}, {one, zero, -w2},
      {one, -one, zero}, {one, -w, zero}, {one, -w2, zero},
  };
  return h;
}

}  // namespace elfib
