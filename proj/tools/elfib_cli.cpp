// elfib: verification front end for the rank-10 elliptic Calabi-Yau engine.
//
// Subcommands:
//   elfib verify      [--model builtin:namikawa|path] [--check list] [--format text|json] [--out p]
//   elfib model export [--model ...] [--out p]
//   elfib model check  --model path
//   elfib weierstrass build [--out p]
//
// Exit codes: 0 all selected checks pass, 1 a check failed, 2 bad flags,
// 3 model load failure.

#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "elfib/lattice.hpp"
#include "elfib/model_io.hpp"
#include "elfib/spectrum.hpp"
#include "elfib/weierstrass.hpp"

namespace {

using namespace elfib;
using nlohmann::ordered_json;

struct Line {
  std::string name;
  std::string lhs;
  std::string rhs;
  bool pass = false;
};

struct Suite {
  std::string name;
  std::vector<Line> lines;

  int failed() const {
    int n = 0;
    for (const auto& l : lines)
      if (!l.pass) ++n;
    return n;
  }
};

Line line(std::string name, std::string lhs, std::string rhs) {
  bool ok = lhs == rhs;
  return Line{std::move(name), std::move(lhs), std::move(rhs), ok};
}

Line line(std::string name, const Rational& lhs, const Rational& rhs) {
  return line(std::move(name), lhs.str(), rhs.str());
}

// --- the seven verification suites -----------------------------------------

Suite suite_intersections(const FibrationModel& m) {
  Suite s{"intersections", {}};
  Rational det = pairing_determinant(m);
  Line d{"pairing determinant nonzero", det.str(), "nonzero", !det.is_zero()};
  s.lines.push_back(std::move(d));
  CurveClass fiber = CurveClass::basis(m.fiber_class);
  s.lines.push_back(line("zero section . fiber",
                         Rational(pair_divisor_curve(DivisorClass::basis(m.zero_section), fiber, m)),
                         Rational(1)));
  for (int a = 0; a < kMWRank; ++a)
    s.lines.push_back(
        line("section " + ns_names()[m.mw_generators[a]] + " . fiber",
             Rational(pair_divisor_curve(DivisorClass::basis(m.mw_generators[a]), fiber, m)),
             Rational(1)));
  s.lines.push_back(line("pullback pif . fiber",
                         Rational(pair_divisor_curve(DivisorClass::basis(NSBasis::PullbackFiber), fiber, m)),
                         Rational(0)));
  for (int k = 0; k < 9; ++k)
    s.lines.push_back(
        line("pullback pis" + std::to_string(k) + " . fiber",
             Rational(pair_divisor_curve(DivisorClass::basis(NSBasis::PullbackSection(k)), fiber, m)),
             Rational(0)));
  s.lines.push_back(line("derived D+3 . fiber",
                         Rational(pair_divisor_curve(derived_divisor(DerivedDivisor::DPlus3, m), fiber, m)),
                         Rational(1)));
  s.lines.push_back(line("derived D+4 . fiber",
                         Rational(pair_divisor_curve(derived_divisor(DerivedDivisor::DPlus4, m), fiber, m)),
                         Rational(1)));
  return s;
}

Suite suite_shioda(const FibrationModel& m) {
  Suite s{"shioda", {}};
  CurveClass fiber = CurveClass::basis(m.fiber_class);
  DivisorClass s0 = DivisorClass::basis(m.zero_section);
  for (int a = 1; a <= kMWRank; ++a) {
    DivisorClass sig = shioda(a, m).divisor;
    s.lines.push_back(line("sigma(" + std::to_string(a) + ") . fiber",
                           Rational(pair_divisor_curve(sig, fiber, m)), Rational(0)));
    s.lines.push_back(line("push(sigma(" + std::to_string(a) + ") . zero section)",
                           pushforward(multiply_divisors(sig, s0, m), m).str(), "0"));
  }
  return s;
}

Suite suite_heights(const FibrationModel& m) {
  Suite s{"heights", {}};
  HeightMatrix h = height_matrix(m);
  BaseClass f = BaseClass::basis(BaseBasis::Fiber);
  BaseClass base_s0 = BaseClass::basis(BaseBasis::Section(0));
  auto sk = [](int k) { return BaseClass::basis(BaseBasis::Section(k)); };
  for (int a = 1; a <= kMWRank; ++a)
    for (int b = a + 1; b <= kMWRank; ++b)
      s.lines.push_back(line("symmetry b(" + std::to_string(a) + "," + std::to_string(b) + ")",
                             h(a, b).str(), h(b, a).str()));
  for (int k = 1; k <= 8; ++k)
    for (int l = k; l <= 8; ++l)
      s.lines.push_back(line("b(" + std::to_string(k) + "," + std::to_string(l) + ")",
                             h(k, l).str(), (k == l ? Rational(2) * f : f).str()));
  for (int k = 1; k <= 8; ++k) {
    BaseClass exp = base_s0 - sk(k) + f;
    s.lines.push_back(line("b(" + std::to_string(k) + ",9)", h(k, 9).str(), exp.str()));
    s.lines.push_back(line("b(" + std::to_string(k) + ",10)", h(k, 10).str(), exp.str()));
  }
  BaseClass diag = Rational(2) * base_s0 + Rational(2) * f;
  s.lines.push_back(line("b(9,9)", h(9, 9).str(), diag.str()));
  s.lines.push_back(line("b(10,10)", h(10, 10).str(), diag.str()));
  s.lines.push_back(line("b(9,10)", h(9, 10).str(), (base_s0 + f).str()));
  return s;
}

Suite suite_charges(const FibrationModel& m) {
  Suite s{"charges", {}};
  CurveClass pa = CurveClass::basis(H2Basis::PA);
  CurveClass pb = CurveClass::basis(H2Basis::PB);
  const std::vector<std::pair<std::string, CurveClass>> curves = {
      {"PA", pa}, {"PB", pb}, {"PA+PB", pa + pb}};
  for (int a = 1; a <= kMWRank; ++a) {
    for (const auto& [cname, c] : curves) {
      Int expected = 0;
      if (a == 9) expected = (cname == "PB") ? 0 : -1;
      if (a == 10) expected = (cname == "PA") ? 0 : -1;
      s.lines.push_back(line("q" + std::to_string(a) + "(" + cname + ")",
                             Rational(charge(a, c, m)), Rational(expected)));
    }
  }
  return s;
}

Suite suite_rank(const FibrationModel& m) {
  Suite s{"rank", {}};
  s.lines.push_back(line("Shioda-Tate rank", Rational(shioda_tate_rank(m)), Rational(10)));
  return s;
}

Suite suite_spectrum(const FibrationModel& m, bool include_rank) {
  Suite s{"spectrum", {}};
  Spectrum sp = assemble_spectrum(m);
  s.lines.push_back(line("tensors T", Rational(sp.tensors), Rational(9)));
  s.lines.push_back(line("vectors V", Rational(sp.vectors), Rational(10)));
  s.lines.push_back(line("uncharged hypers", Rational(sp.hypers_uncharged), Rational(4)));
  s.lines.push_back(line("charged hypers", Rational(sp.hypers_charged()), Rational(18)));
  if (include_rank)
    s.lines.push_back(line("Shioda-Tate rank", Rational(shioda_tate_rank(m)), Rational(10)));
  return s;
}

Suite suite_euler(const FibrationModel& m) {
  Suite s{"euler", {}};
  int chi = stratified_euler(m);
  s.lines.push_back(line("stratified Euler characteristic", Rational(chi), Rational(m.euler)));
  s.lines.push_back(line("2 (h11 - h21)", Rational(2 * (m.hodge.h11 - m.hodge.h21)),
                         Rational(m.euler)));
  return s;
}

Suite suite_anomalies(const FibrationModel& m, bool include_euler) {
  Suite s{"anomalies", {}};
  AnomalyReport r = run_anomaly_report(m);
  auto add = [&](const CheckEntry& e) {
    s.lines.push_back(Line{e.name, e.lhs.str(), e.rhs.str(), e.pass});
  };
  add(r.gravitational);
  for (const auto& e : r.mixed) add(e);
  for (const auto& e : r.quartic) add(e);
  for (const auto& e : r.quartic_unsymmetrized) add(e);
  add(r.generalized_grav);
  if (include_euler)
    for (auto& l : suite_euler(m).lines) s.lines.push_back(std::move(l));
  return s;
}

Suite suite_weierstrass() {
  Suite s{"weierstrass", {}};
  HessePencil h = hesse_pencil();
  // six distinct pencil members; [0:1] picks G = s t u itself, giving easy
  // rational smooth points on one discriminant component
  std::vector<PencilRoot<QOmega>> roots = {
      {QOmega(0), QOmega(1)}, {QOmega(1), QOmega(1)}, {QOmega(1), QOmega(2)},
      {QOmega(1), QOmega(3)}, {QOmega(1), QOmega(4)}, {QOmega(1), QOmega(5)}};
  PencilWeierstrass<QOmega> w = build_namikawa_p2(h.F, h.G, h.base_points, roots);
  for (std::size_t i = 0; i < w.base_points.size(); ++i) {
    VanishingTriple t = vanishing_triple(w.alpha, w.beta, w.base_points[i]);
    std::string p = "base point " + std::to_string(i + 1);
    s.lines.push_back(line(p + " triple", t.str(), "(inf, 6, 12)"));
    s.lines.push_back(line(p + " type", kodaira_classify(t).str(), "non-minimal"));
  }
  // smooth points of the component {s t u = 0} away from the base locus
  std::vector<ProjPoint<QOmega>> samples = {
      {QOmega(1), QOmega(1), QOmega(0)},
      {QOmega(1), QOmega(2), QOmega(0)},
      {QOmega(0), QOmega(1), QOmega(1)}};
  for (std::size_t i = 0; i < samples.size(); ++i) {
    VanishingTriple t = vanishing_triple(w.alpha, w.beta, samples[i]);
    s.lines.push_back(line("component sample " + std::to_string(i + 1) + " type",
                           kodaira_classify(t).str(), "II"));
  }
  return s;
}

// --- report assembly --------------------------------------------------------

std::string render_text(const std::vector<Suite>& suites) {
  std::ostringstream os;
  bool all = true;
  for (const auto& s : suites) {
    int bad = s.failed();
    os << "suite " << s.name << ": " << (s.lines.size() - bad) << "/" << s.lines.size()
       << " pass\n";
    for (const auto& l : s.lines)
      if (!l.pass) os << "  FAIL  " << l.name << ": " << l.lhs << " != " << l.rhs << "\n";
    all = all && bad == 0;
  }
  os << "overall: " << (all ? "pass" : "FAIL") << "\n";
  return os.str();
}

std::string render_json(const std::vector<Suite>& suites) {
  ordered_json out;
  bool all = true;
  out["suites"] = ordered_json::array();
  for (const auto& s : suites) {
    ordered_json js;
    js["name"] = s.name;
    js["passed"] = s.lines.size() - s.failed();
    js["total"] = s.lines.size();
    js["checks"] = ordered_json::array();
    for (const auto& l : s.lines)
      js["checks"].push_back(
          ordered_json{{"name", l.name}, {"lhs", l.lhs}, {"rhs", l.rhs}, {"pass", l.pass}});
    out["suites"].push_back(std::move(js));
    all = all && s.failed() == 0;
  }
  out["overall_pass"] = all;
  return out.dump(2) + "\n";
}

int emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return 0;
  }
  std::ofstream f(out_path);
  if (!f) {
    std::cerr << "error: cannot write " << out_path << "\n";
    return 2;
  }
  f << text;
  return 0;
}

// Loads the requested model; returns false (after printing) on failure.
bool resolve_model(const std::string& spec, FibrationModel& out) {
  if (spec == "builtin:namikawa") {
    out = builtin_namikawa();
    return true;
  }
  std::ifstream f(spec);
  if (!f) {
    std::cerr << "error: cannot open model file '" << spec << "'\n";
    return false;
  }
  std::stringstream buf;
  buf << f.rdbuf();
  try {
    out = load_model(buf.str());
  } catch (const std::exception& e) {
    std::cerr << "error: model load failed: " << e.what() << "\n";
    return false;
  }
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact verification engine for rank-10 elliptic Calabi-Yau threefolds"};
  app.require_subcommand(1);

  std::string model_spec = "builtin:namikawa";
  std::string check_list = "all";
  std::string format = "text";
  std::string out_path;

  auto* verify = app.add_subcommand("verify", "run verification suites against a model");
  verify->add_option("--model", model_spec, "builtin:namikawa or a model file path");
  verify->add_option("--check", check_list,
                     "comma list of intersections,shioda,heights,charges,spectrum,"
                     "anomalies,euler,rank,weierstrass,all");
  verify->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
  verify->add_option("--out", out_path, "write the report to a file instead of stdout");

  auto* model_cmd = app.add_subcommand("model", "model file operations");
  auto* model_export = model_cmd->add_subcommand("export", "serialize a model");
  model_export->add_option("--model", model_spec);
  model_export->add_option("--out", out_path);
  auto* model_check = model_cmd->add_subcommand("check", "load a model file and validate it");
  model_check->add_option("--model", model_spec)->required();

  auto* wst = app.add_subcommand("weierstrass", "Weierstrass-model operations");
  auto* wst_build = wst->add_subcommand("build", "build the Hesse-pencil model and report orders");
  wst_build->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
  wst_build->add_option("--out", out_path);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (verify->parsed()) {
    FibrationModel m;
    if (!resolve_model(model_spec, m)) return 3;

    std::set<std::string> picked;
    std::stringstream cs(check_list);
    for (std::string tok; std::getline(cs, tok, ',');)
      if (!tok.empty()) picked.insert(tok);
    static const std::set<std::string> known = {"intersections", "shioda",  "heights",
                                               "charges",       "spectrum", "anomalies",
                                               "euler",         "rank",     "weierstrass", "all"};
    for (const auto& p : picked)
      if (!known.count(p)) {
        std::cerr << "error: unknown check '" << p << "'\n" << app.help();
        return 2;
      }
    if (picked.empty()) {
      std::cerr << "error: empty check selection\n" << app.help();
      return 2;
    }
    bool all = picked.count("all") > 0;

    std::vector<Suite> suites;
    if (all || picked.count("intersections")) suites.push_back(suite_intersections(m));
    if (all || picked.count("shioda")) suites.push_back(suite_shioda(m));
    if (all || picked.count("heights")) suites.push_back(suite_heights(m));
    if (all || picked.count("charges")) suites.push_back(suite_charges(m));
    if (all || picked.count("spectrum"))
      suites.push_back(suite_spectrum(m, all || !picked.count("rank")));
    else if (picked.count("rank"))
      suites.push_back(suite_rank(m));
    if (picked.count("rank") && picked.count("spectrum")) suites.push_back(suite_rank(m));
    if (all || picked.count("anomalies"))
      suites.push_back(suite_anomalies(m, all || !picked.count("euler")));
    else if (picked.count("euler"))
      suites.push_back(suite_euler(m));
    if (picked.count("euler") && picked.count("anomalies")) suites.push_back(suite_euler(m));
    if (all || picked.count("weierstrass")) suites.push_back(suite_weierstrass());

    std::string text = format == "json" ? render_json(suites) : render_text(suites);
    int rc = emit(text, out_path);
    if (rc != 0) return rc;
    for (const auto& s : suites)
      if (s.failed() > 0) return 1;
    return 0;
  }

  if (model_export->parsed()) {
    FibrationModel m;
    if (!resolve_model(model_spec, m)) return 3;
    return emit(save_model(m), out_path);
  }

  if (model_check->parsed()) {
    FibrationModel m;
    if (!resolve_model(model_spec, m)) return 3;
    std::cout << "model ok\n";
    return 0;
  }

  if (wst_build->parsed()) {
    Suite s = suite_weierstrass();
    std::string text = format == "json" ? render_json({s}) : render_text({s});
    int rc = emit(text, out_path);
    if (rc != 0) return rc;
    return s.failed() == 0 ? 0 : 1;
  }

  std::cerr << app.help();
  return 2;
}
