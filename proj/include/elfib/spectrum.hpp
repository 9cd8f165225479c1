#pragma once

#include <map>
#include <string>
#include <vector>

#include "elfib/shioda.hpp"

namespace elfib {

/// 6d F-theory massless field content.
struct ChargedState {
  std::array<Int, kMWRank> charges{};
  Int multiplicity = 0;
};

struct Spectrum {
  int tensors = 0;            // T
  int vectors = 0;            // V
  Int hypers_uncharged = 0;   // H_unch
  std::vector<ChargedState> charged_states;

  Int hypers_charged() const {
    Int n = 0;
    for (const auto& s : charged_states) n += s.multiplicity;
    return n;
  }
};

/// T = rk Pic(B) - 1; V = Shioda-Tate rank; H_unch = h21 + 1; one charged
/// state per fibral curve class with nonzero GV invariant, multiplicity
/// GV x locus multiplicity, charges from the Shioda images.
Spectrum assemble_spectrum(const FibrationModel& m);

struct CheckEntry {
  std::string name;
  Rational lhs = Rational(0);
  Rational rhs = Rational(0);
  bool pass = false;
};

inline CheckEntry make_check(std::string name, Rational lhs, Rational rhs) {
  bool ok = lhs == rhs;
  return CheckEntry{std::move(name), std::move(lhs), std::move(rhs), ok};
}

/// H - V + 29 T = 273.
CheckEntry check_gravitational(const Spectrum& s);

/// Mixed gravitational-abelian:  (-K_B) . b_{a,b} = (1/6) sum_I N_I q_a q_b,
/// over all 100 ordered pairs.
std::vector<CheckEntry> check_mixed(const Spectrum& s, const HeightMatrix& h,
                                    const FibrationModel& m);

/// Quartic abelian identity evaluated literally over all ordered multisets
/// {a,b,c,d} of 1..10:
///   b_ab.b_cd + b_ac.b_db + b_ad.b_cb = sum_I N_I q_a q_b q_c q_d.
std::vector<CheckEntry> check_quartic(const Spectrum& s, const HeightMatrix& h,
                                      const FibrationModel& m);

/// The unsymmetrized scalar equations quoted per U(1) combination
/// (single-term convention at repeated indices).
std::vector<CheckEntry> check_quartic_unsymmetrized(const HeightMatrix& h,
                                                    const FibrationModel& m);

/// Generalized gravitational formula for trivial non-abelian gauge algebra:
///   30 K_B^2 + chi/2 = sum of charged-point multiplicities.
CheckEntry check_generalized_grav(const FibrationModel& m);

/// Stratified Euler characteristic:
///   chi = sum over loci of mult x (chi(open stratum) e(generic) + e(point)).
int stratified_euler(const FibrationModel& m);

struct AnomalyReport {
  CheckEntry gravitational;
  std::vector<CheckEntry> mixed;
  std::vector<CheckEntry> quartic;
  std::vector<CheckEntry> quartic_unsymmetrized;
  CheckEntry generalized_grav;

  bool all_pass() const;
};

AnomalyReport run_anomaly_report(const FibrationModel& m);

/// Deterministic renderings consumed by the CLI.
std::string report_text(const AnomalyReport& r, bool full = false);
std::string report_json(const AnomalyReport& r);

}  // namespace elfib
