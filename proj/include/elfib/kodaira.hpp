#pragma once

#include <climits>
#include <stdexcept>
#include <string>

namespace elfib {

/// Vanishing order that may be infinite (identically vanishing coefficient).
inline constexpr int kInfiniteOrder = INT_MAX / 2;

enum class KodairaTag {
  I0smooth,
  In,
  II,
  III,
  IV,
  I0star,
  Instar,
  IVstar,
  IIIstar,
  IIstar,
  NonMinimal,
};

struct KodairaType {
  KodairaTag tag = KodairaTag::I0smooth;
  int n = 0;  // only for In / Instar

  friend bool operator==(const KodairaType& a, const KodairaType& b) {
    return a.tag == b.tag && a.n == b.n;
  }
  std::string str() const;
};

KodairaType parse_kodaira(const std::string& s);

/// Euler number of the Kodaira fiber: e(I_n)=n, e(II)=2, e(III)=3, e(IV)=4,
/// e(I*_n)=n+6, e(IV*)=8, e(III*)=9, e(II*)=10, e(smooth)=0.
int kodaira_euler(const KodairaType& t);

/// Vanishing orders (ord alpha, ord beta, ord delta) of a local Weierstrass
/// equation y^2 = x^3 + alpha x + beta at a point.
struct VanishingTriple {
  int ord_a = 0;  // kInfiniteOrder when alpha vanishes identically
  int ord_b = 0;
  int ord_delta = 0;

  std::string str() const;  // "(a, b, d)" with "inf" for infinite orders
};

struct UnclassifiableTriple : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Standard Kodaira-Neron lookup.  NonMinimal (ord_a >= 4 and ord_b >= 6)
/// takes precedence, so (*, 6, 12) is NonMinimal rather than an I*_n.
KodairaType kodaira_classify(const VanishingTriple& t);

}  // namespace elfib
