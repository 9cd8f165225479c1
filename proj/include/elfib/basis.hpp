#pragma once

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace elfib {

// Basis conventions for the rank-21 lattices of the elliptic threefold and
// the rank-10 Picard lattice of its rational-elliptic-surface base.
//
// NS(X), 21 generators:   pif, pis0..pis8, S0..S8, D, D1
//   pif    = pullback of the base fiber class f
//   pisk   = pullback of the base section class s_k
//   Sl     = the nine sections pulled back from the second surface
//   D, D1  = the two extra diagonal-type sections
//
// H2(X), 21 generators:   E, fhat, shat0..shat8, lhat1..lhat8, PA, PB
//   E      = class of the generic fiber
//   fhat   = S0 . pif,  shatk = S0 . pisk,  lhatl = Sl . pis0
//   PA, PB = the two exceptional fibral curves of the Type IV loci
//
// Pic(B), 10 generators:  f, s0..s8.

inline constexpr int kNSRank = 21;
inline constexpr int kH2Rank = 21;
inline constexpr int kBaseRank = 10;
inline constexpr int kMWRank = 10;

struct NSBasis {
  static constexpr int PullbackFiber = 0;
  static constexpr int PullbackSection(int k) { return 1 + check(k, 9); }  // s_k, k=0..8
  static constexpr int Section(int l) { return 10 + check(l, 9); }         // S_l, l=0..8
  static constexpr int DPrimary = 19;                                      // D
  static constexpr int DSecondary = 20;                                    // D1

  static constexpr int check(int i, int n) {
    return (i >= 0 && i < n) ? i : throw std::out_of_range("NS basis index");
  }
};

struct H2Basis {
  static constexpr int FiberE = 0;
  static constexpr int FhatCurve = 1;
  static constexpr int ShatCurve(int k) { return 2 + NSBasis::check(k, 9); }   // k=0..8
  static constexpr int LhatCurve(int l) { return 11 + NSBasis::check(l - 1, 8); }  // l=1..8
  static constexpr int PA = 19;
  static constexpr int PB = 20;
};

struct BaseBasis {
  static constexpr int Fiber = 0;
  static constexpr int Section(int k) { return 1 + NSBasis::check(k, 9); }  // s_k, k=0..8
};

// Auxiliary curve generators: never expanded in the H2 basis, they exist only
// to carry a declared pushforward to Pic(B).  Ids 0..28.
struct AuxGen {
  static constexpr int ChatCurve = 0;       // genus-4 curve, pushes to 3 s0 + 3 f
  static constexpr int FiberOverF_D = 1;    // pif . D      -> f
  static constexpr int FiberOverF_D1 = 2;   // pif . D1     -> f
  static constexpr int FiberOverF_S(int k) { return 3 + NSBasis::check(k - 1, 8); }  // pif . Sk -> f
  static constexpr int SectionOverS0_D = 11;   // pis0 . D   -> s0
  static constexpr int SectionOverS0_D1 = 12;  // pis0 . D1  -> s0
  static constexpr int FCurve(int k) { return 13 + NSBasis::check(k - 1, 8); }   // Sk . D  -> s_k
  static constexpr int F1Curve(int k) { return 21 + NSBasis::check(k - 1, 8); }  // Sk . D1 -> s_k
  static constexpr int Count = 29;
};

const std::array<std::string, kNSRank>& ns_names();
const std::array<std::string, kH2Rank>& h2_names();
const std::array<std::string, kBaseRank>& base_names();
const std::array<std::string, AuxGen::Count>& aux_names();

std::optional<int> ns_index(const std::string& name);
std::optional<int> h2_index(const std::string& name);
std::optional<int> base_index(const std::string& name);
std::optional<int> aux_index(const std::string& name);

}  // namespace elfib
