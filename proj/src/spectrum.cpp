#include "elfib/spectrum.hpp"

#include <sstream>

#include <json.hpp>

namespace elfib {

namespace {

std::string quad_name(const char* head, std::initializer_list<int> idx) {
  std::string s = head;
  s += '[';
  bool first = true;
  for (int i : idx) {
    if (!first) s += ',';
    s += std::to_string(i);
    first = false;
  }
  s += ']';
  return s;
}

Rational charge_sum(const Spectrum& s, std::initializer_list<int> idx) {
  Rational out(0);
  for (const auto& st : s.charged_states) {
    Rational term(st.multiplicity);
    for (int a : idx) term *= Rational(st.charges[a - 1]);
    out += term;
  }
  return out;
}

}  // namespace

Spectrum assemble_spectrum(const FibrationModel& m) {
  Spectrum s;
  s.tensors = m.base.picard_rank - 1;
  s.vectors = shioda_tate_rank(m);
  s.hypers_uncharged = m.hodge.h21 + 1;
  for (const auto& locus : m.fibral_loci) {
    for (const auto& [curve, gv] : locus.gv_invariants) {
      if (gv == 0) continue;
      ChargedState st;
      st.multiplicity = gv * locus.multiplicity;
      for (int a = 1; a <= kMWRank; ++a) st.charges[a - 1] = charge(a, curve, m);
      s.charged_states.push_back(std::move(st));
    }
  }
  return s;
}

CheckEntry check_gravitational(const Spectrum& s) {
  Rational h = Rational(s.hypers_uncharged) + Rational(s.hypers_charged());
  Rational lhs = h - Rational(s.vectors) + Rational(29) * Rational(s.tensors);
  return make_check("gravitational: H - V + 29T", lhs, Rational(273));
}

std::vector<CheckEntry> check_mixed(const Spectrum& s, const HeightMatrix& h,
                                    const FibrationModel& m) {
  std::vector<CheckEntry> out;
  out.reserve(kMWRank * kMWRank);
  for (int a = 1; a <= kMWRank; ++a)
    for (int b = 1; b <= kMWRank; ++b) {
      Rational lhs = base_pair(m.base.anticanonical, h(a, b), m.base.intersection_form);
      Rational rhs = charge_sum(s, {a, b}) / Rational(6);
      out.push_back(make_check(quad_name("mixed", {a, b}), lhs, rhs));
    }
  return out;
}

std::vector<CheckEntry> check_quartic(const Spectrum& s, const HeightMatrix& h,
                                      const FibrationModel& m) {
  const BaseFormMatrix& form = m.base.intersection_form;
  std::vector<CheckEntry> out;
  for (int a = 1; a <= kMWRank; ++a)
    for (int b = a; b <= kMWRank; ++b)
      for (int c = b; c <= kMWRank; ++c)
        for (int d = c; d <= kMWRank; ++d) {
          Rational lhs = base_pair(h(a, b), h(c, d), form) +
                         base_pair(h(a, c), h(d, b), form) +
                         base_pair(h(a, d), h(c, b), form);
          Rational rhs = charge_sum(s, {a, b, c, d});
          out.push_back(make_check(quad_name("quartic", {a, b, c, d}), lhs, rhs));
        }
  return out;
}

std::vector<CheckEntry> check_quartic_unsymmetrized(const HeightMatrix& h,
                                                    const FibrationModel& m) {
  const Spectrum s = assemble_spectrum(m);
  const BaseFormMatrix& form = m.base.intersection_form;
  std::vector<CheckEntry> out;
  for (int a = 1; a <= kMWRank; ++a)
    for (int b = a; b <= kMWRank; ++b)
      for (int c = b; c <= kMWRank; ++c)
        for (int d = c; d <= kMWRank; ++d) {
          Rational lhs, rhs;
          if (a == b && b == c && c == d) {
            // pure fourth power: single term, one third of the charge sum
            lhs = base_pair(h(a, a), h(a, a), form);
            rhs = charge_sum(s, {a, a, a, a}) / Rational(3);
          } else if (a == b && b == c) {
            lhs = base_pair(h(a, a), h(a, d), form);
            rhs = charge_sum(s, {a, a, a, d}) / Rational(3);
          } else if (b == c && c == d) {
            lhs = base_pair(h(b, b), h(a, b), form);
            rhs = charge_sum(s, {a, b, b, b}) / Rational(3);
          } else {
            lhs = base_pair(h(a, b), h(c, d), form) + base_pair(h(a, c), h(d, b), form) +
                  base_pair(h(a, d), h(c, b), form);
            rhs = charge_sum(s, {a, b, c, d});
          }
          out.push_back(make_check(quad_name("quartic-u", {a, b, c, d}), lhs, rhs));
        }
  return out;
}

CheckEntry check_generalized_grav(const FibrationModel& m) {
  Rational lhs = Rational(30) * m.base.kb_squared + Rational(m.euler) / Rational(2);
  Rational rhs(0);
  const Spectrum s = assemble_spectrum(m);
  for (const auto& st : s.charged_states) rhs += Rational(st.multiplicity);
  return make_check("generalized gravitational: 30 K^2 + chi/2", lhs, rhs);
}

int stratified_euler(const FibrationModel& m) {
  int chi = 0;
  for (const auto& locus : m.fibral_loci)
    chi += locus.multiplicity *
           (locus.stratum_euler_open_curve * kodaira_euler(locus.generic_fiber_type_on_curve) +
            kodaira_euler(locus.fiber_type_at_point));
  return chi;
}

bool AnomalyReport::all_pass() const {
  auto ok = [](const std::vector<CheckEntry>& v) {
    for (const auto& e : v)
      if (!e.pass) return false;
    return true;
  };
  return gravitational.pass && ok(mixed) && ok(quartic) && ok(quartic_unsymmetrized) &&
         generalized_grav.pass;
}

AnomalyReport run_anomaly_report(const FibrationModel& m) {
  const Spectrum s = assemble_spectrum(m);
  const HeightMatrix h = height_matrix(m);
  AnomalyReport r;
  r.gravitational = check_gravitational(s);
  r.mixed = check_mixed(s, h, m);
  r.quartic = check_quartic(s, h, m);
  r.quartic_unsymmetrized = check_quartic_unsymmetrized(h, m);
  r.generalized_grav = check_generalized_grav(m);
  return r;
}

namespace {

void render_entry(std::ostream& os, const CheckEntry& e) {
  os << (e.pass ? "  pass  " : "  FAIL  ") << e.name << ": " << e.lhs.str()
     << (e.pass ? " == " : " != ") << e.rhs.str() << "\n";
}

void render_group(std::ostream& os, const char* title, const std::vector<CheckEntry>& v,
                  bool full) {
  int failed = 0;
  for (const auto& e : v)
    if (!e.pass) ++failed;
  os << title << ": " << (v.size() - failed) << "/" << v.size() << " pass\n";
  for (const auto& e : v)
    if (full || !e.pass) render_entry(os, e);
}

}  // namespace

std::string report_text(const AnomalyReport& r, bool full) {
  std::ostringstream os;
  os << "gravitational: " << (r.gravitational.pass ? "pass" : "FAIL") << "\n";
  render_entry(os, r.gravitational);
  render_group(os, "mixed", r.mixed, full);
  render_group(os, "quartic", r.quartic, full);
  render_group(os, "quartic-unsymmetrized", r.quartic_unsymmetrized, full);
  os << "generalized-gravitational: " << (r.generalized_grav.pass ? "pass" : "FAIL") << "\n";
  render_entry(os, r.generalized_grav);
  os << "overall: " << (r.all_pass() ? "pass" : "FAIL") << "\n";
  return os.str();
}

std::string report_json(const AnomalyReport& r) {
  using nlohmann::ordered_json;
  auto entry = [](const CheckEntry& e) {
    return ordered_json{{"name", e.name}, {"lhs", e.lhs.str()}, {"rhs", e.rhs.str()},
                        {"pass", e.pass}};
  };
  auto group = [&](const std::vector<CheckEntry>& v) {
    ordered_json arr = ordered_json::array();
    for (const auto& e : v) arr.push_back(entry(e));
    return arr;
  };
  ordered_json j;
  j["gravitational"] = entry(r.gravitational);
  j["mixed"] = group(r.mixed);
  j["quartic"] = group(r.quartic);
  j["quartic_unsymmetrized"] = group(r.quartic_unsymmetrized);
  j["generalized_gravitational"] = entry(r.generalized_grav);
  j["overall_pass"] = r.all_pass();
  return j.dump(2) + "\n";
}

}  // namespace elfib
