#include "elfib/model_io.hpp"

#include <cctype>
#include <sstream>
#include <vector>

namespace elfib {

namespace {

std::string trim(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split_ws(const std::string& s) {
  std::istringstream is(s);
  std::vector<std::string> out;
  for (std::string tok; is >> tok;) out.push_back(tok);
  return out;
}

struct Term {
  Rational coeff;
  std::string name;  // empty for a bare constant
};

// "c0*g0 + c1*g1 - g2" -> signed terms; a bare "0" yields no terms.
std::vector<Term> parse_terms(const std::string& s) {
  std::vector<Term> out;
  std::string text = trim(s);
  if (text.empty()) throw std::invalid_argument("empty expression");
  std::size_t pos = 0;
  bool first = true;
  while (pos < text.size()) {
    int sign = 1;
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '+' || text[pos] == '-')) {
      if (text[pos] == '-') sign = -sign;
      if (text[pos] == '+' && first && pos == 0) {}  // leading + allowed
      ++pos;
    }
    if (pos >= text.size()) {
      if (first) throw std::invalid_argument("empty expression");
      throw std::invalid_argument("trailing sign in '" + s + "'");
    }
    std::size_t end = pos;
    while (end < text.size() && text[end] != '+' && text[end] != '-' && text[end] != ' ') ++end;
    std::string tok = text.substr(pos, end - pos);
    pos = end;
    first = false;

    Term t;
    t.coeff = Rational(sign);
    std::size_t star = tok.find('*');
    std::string body = tok;
    if (star != std::string::npos) {
      t.coeff *= Rational::parse(tok.substr(0, star));
      body = tok.substr(star + 1);
      if (body.empty()) throw std::invalid_argument("dangling '*' in '" + s + "'");
    }
    if (!body.empty() && (std::isdigit(static_cast<unsigned char>(body[0])) || body[0] == '-') &&
        star == std::string::npos &&
        body.find_first_not_of("-0123456789/") == std::string::npos) {
      // bare constant: only zero is a legal class
      Rational c = Rational::parse(body);
      if (!c.is_zero()) throw std::invalid_argument("nonzero constant term in '" + s + "'");
      continue;
    }
    t.name = body;
    out.push_back(std::move(t));
  }
  return out;
}

Int to_int_coeff(const Rational& c, const std::string& ctx) {
  if (!c.is_integer())
    throw std::invalid_argument("non-integer coefficient " + c.str() + " in '" + ctx + "'");
  return c.to_int();
}

}  // namespace

CurveExpression parse_curve_expression(const std::string& s) {
  CurveExpression e;
  for (const auto& t : parse_terms(s)) {
    Int c = to_int_coeff(t.coeff, s);
    if (auto i = h2_index(t.name)) e.pure.c[*i] += c;
    else if (auto j = aux_index(t.name)) {
      Int v = e.aux[*j] + c;
      if (v == 0) e.aux.erase(*j); else e.aux[*j] = v;
    } else
      throw std::invalid_argument("unknown curve generator '" + t.name + "' in '" + s + "'");
  }
  return e;
}

std::string format_curve_expression(const CurveExpression& e) { return e.str(); }

BaseClass parse_base_class(const std::string& s) {
  BaseClass b;
  for (const auto& t : parse_terms(s)) {
    auto i = base_index(t.name);
    if (!i) throw std::invalid_argument("unknown base generator '" + t.name + "' in '" + s + "'");
    b.c[*i] += t.coeff;
  }
  return b;
}

std::string format_base_class(const BaseClass& b) { return b.str(); }

std::string save_model(const FibrationModel& m) {
  std::ostringstream os;
  os << "# elfib fibration model, format 1\n\n";

  os << "[basis]\n";
  auto join = [&](const auto& names) {
    std::string out;
    for (const auto& n : names) { if (!out.empty()) out += ' '; out += n; }
    return out;
  };
  os << "ns = " << join(ns_names()) << "\n";
  os << "h2 = " << join(h2_names()) << "\n";
  os << "base = " << join(base_names()) << "\n";
  os << "aux = " << join(aux_names()) << "\n\n";

  os << "[pairing]\n";
  for (int i = 0; i < kNSRank; ++i) {
    os << ns_names()[i] << " =";
    for (int j = 0; j < kH2Rank; ++j) os << ' ' << m.pairing(i, j);
    os << "\n";
  }
  os << "\n[products]\n";
  for (const auto& [key, expr] : m.products)
    os << ns_names()[key.first] << "*" << ns_names()[key.second] << " = " << expr.str() << "\n";

  os << "\n[pushforward]\n";
  for (int j = 0; j < kH2Rank; ++j)
    os << h2_names()[j] << " = " << m.h2_pushforward[j].str() << "\n";
  for (int j = 0; j < AuxGen::Count; ++j)
    os << aux_names()[j] << " = " << m.aux_pushforward[j].str() << "\n";

  os << "\n[sections]\n";
  os << "zero = " << ns_names()[m.zero_section] << "\n";
  os << "mw =";
  for (int g : m.mw_generators) os << ' ' << ns_names()[g];
  os << "\nfiber = " << h2_names()[m.fiber_class] << "\n";

  os << "\n[base]\n";
  os << "picard_rank = " << m.base.picard_rank << "\n";
  os << "anticanonical = " << m.base.anticanonical.str() << "\n";
  os << "kb_squared = " << m.base.kb_squared.str() << "\n";
  for (int i = 0; i < kBaseRank; ++i) {
    os << "form." << base_names()[i] << " =";
    for (int j = 0; j < kBaseRank; ++j) os << ' ' << m.base.intersection_form(i, j).str();
    os << "\n";
  }

  os << "\n[fibral]\n";
  os << "count = " << m.fibral_loci.size() << "\n";
  for (std::size_t n = 0; n < m.fibral_loci.size(); ++n) {
    const auto& L = m.fibral_loci[n];
    std::string p = "locus" + std::to_string(n + 1) + ".";
    os << p << "multiplicity = " << L.multiplicity << "\n";
    os << p << "type_at_point = " << L.fiber_type_at_point.str() << "\n";
    os << p << "generic_type = " << L.generic_fiber_type_on_curve.str() << "\n";
    os << p << "chi_open = " << L.stratum_euler_open_curve << "\n";
    os << p << "curves =";
    for (std::size_t k = 0; k < L.component_curves.size(); ++k)
      os << (k ? " | " : " ") << CurveExpression(L.component_curves[k]).str();
    os << "\n" << p << "gv =";
    for (const auto& [c, gv] : L.gv_invariants) os << ' ' << gv;
    os << "\n";
  }
  os << "fibral_divisors = " << m.fibral_divisor_classes << "\n";

  os << "\n[hodge]\n";
  os << "h11 = " << m.hodge.h11 << "\n";
  os << "h21 = " << m.hodge.h21 << "\n";
  os << "euler = " << m.euler << "\n";
  return os.str();
}

namespace {

struct Document {
  // section -> ordered (key, value) pairs
  std::map<std::string, std::vector<std::pair<std::string, std::string>>> sections;

  const std::string& require(const std::string& sec, const std::string& key) const {
    auto it = sections.find(sec);
    if (it == sections.end()) throw SchemaError("[" + sec + "]", "missing section");
    for (const auto& [k, v] : it->second)
      if (k == key) return v;
    throw SchemaError("[" + sec + "]/" + key, "missing key");
  }
};

Document parse_document(const std::string& text) {
  Document doc;
  std::istringstream is(text);
  std::string line, section;
  int lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    if (t.front() == '[') {
      if (t.back() != ']') throw SchemaError("line " + std::to_string(lineno), "malformed section header");
      section = t.substr(1, t.size() - 2);
      doc.sections[section];
      continue;
    }
    std::size_t eq = t.find('=');
    if (eq == std::string::npos || section.empty())
      throw SchemaError("line " + std::to_string(lineno), "expected 'key = value'");
    doc.sections[section].emplace_back(trim(t.substr(0, eq)), trim(t.substr(eq + 1)));
  }
  return doc;
}

int parse_int_field(const std::string& v, const std::string& path) {
  try {
    std::size_t used = 0;
    int out = std::stoi(v, &used);
    if (used != v.size()) throw std::invalid_argument("trailing junk");
    return out;
  } catch (const std::exception&) {
    throw SchemaError(path, "expected an integer, got '" + v + "'");
  }
}

}  // namespace

FibrationModel load_model(const std::string& text) {
  Document doc = parse_document(text);
  FibrationModel m;

  // [basis]: the generator orders are part of the format and must match
  auto check_names = [&](const char* key, const auto& names) {
    auto toks = split_ws(doc.require("basis", key));
    if (toks.size() != names.size())
      throw SchemaError(std::string("[basis]/") + key, "wrong generator count");
    for (std::size_t i = 0; i < names.size(); ++i)
      if (toks[i] != names[i])
        throw SchemaError(std::string("[basis]/") + key,
                          "generator " + std::to_string(i) + " is '" + toks[i] +
                              "', expected '" + names[i] + "'");
  };
  check_names("ns", ns_names());
  check_names("h2", h2_names());
  check_names("base", base_names());
  check_names("aux", aux_names());

  for (int i = 0; i < kNSRank; ++i) {
    std::string path = "[pairing]/" + ns_names()[i];
    auto toks = split_ws(doc.require("pairing", ns_names()[i]));
    if (toks.size() != kH2Rank) throw SchemaError(path, "expected 21 integers");
    for (int j = 0; j < kH2Rank; ++j) m.pairing(i, j) = parse_int_field(toks[j], path);
  }

  auto prods = doc.sections.find("products");
  if (prods == doc.sections.end()) throw SchemaError("[products]", "missing section");
  for (const auto& [key, value] : prods->second) {
    std::string path = "[products]/" + key;
    std::size_t star = key.find('*');
    if (star == std::string::npos) throw SchemaError(path, "key must be 'A*B'");
    auto a = ns_index(trim(key.substr(0, star)));
    auto b = ns_index(trim(key.substr(star + 1)));
    if (!a || !b) throw SchemaError(path, "unknown divisor generator");
    auto k = std::minmax(*a, *b);
    try {
      m.products[{k.first, k.second}] = parse_curve_expression(value);
    } catch (const std::invalid_argument& e) {
      throw SchemaError(path, e.what());
    }
  }

  for (int j = 0; j < kH2Rank; ++j) {
    std::string path = "[pushforward]/" + h2_names()[j];
    try {
      m.h2_pushforward[j] = parse_base_class(doc.require("pushforward", h2_names()[j]));
    } catch (const std::invalid_argument& e) {
      throw SchemaError(path, e.what());
    }
  }
  for (int j = 0; j < AuxGen::Count; ++j) {
    std::string path = "[pushforward]/" + aux_names()[j];
    try {
      m.aux_pushforward[j] = parse_base_class(doc.require("pushforward", aux_names()[j]));
    } catch (const std::invalid_argument& e) {
      throw SchemaError(path, e.what());
    }
  }

  auto zero = ns_index(doc.require("sections", "zero"));
  if (!zero) throw SchemaError("[sections]/zero", "unknown generator");
  m.zero_section = *zero;
  auto mw = split_ws(doc.require("sections", "mw"));
  if (mw.size() != kMWRank) throw SchemaError("[sections]/mw", "expected 10 generators");
  for (int a = 0; a < kMWRank; ++a) {
    auto g = ns_index(mw[a]);
    if (!g) throw SchemaError("[sections]/mw", "unknown generator '" + mw[a] + "'");
    m.mw_generators[a] = *g;
  }
  auto fib = h2_index(doc.require("sections", "fiber"));
  if (!fib) throw SchemaError("[sections]/fiber", "unknown curve generator");
  m.fiber_class = *fib;

  m.base.picard_rank = parse_int_field(doc.require("base", "picard_rank"), "[base]/picard_rank");
  try {
    m.base.anticanonical = parse_base_class(doc.require("base", "anticanonical"));
  } catch (const std::invalid_argument& e) {
    throw SchemaError("[base]/anticanonical", e.what());
  }
  try {
    m.base.kb_squared = Rational::parse(doc.require("base", "kb_squared"));
  } catch (const std::exception& e) {
    throw SchemaError("[base]/kb_squared", e.what());
  }
  for (int i = 0; i < kBaseRank; ++i) {
    std::string path = "[base]/form." + base_names()[i];
    auto toks = split_ws(doc.require("base", "form." + base_names()[i]));
    if (toks.size() != kBaseRank) throw SchemaError(path, "expected 10 rationals");
    for (int j = 0; j < kBaseRank; ++j) {
      try {
        m.base.intersection_form(i, j) = Rational::parse(toks[j]);
      } catch (const std::exception& e) {
        throw SchemaError(path, e.what());
      }
    }
  }

  int count = parse_int_field(doc.require("fibral", "count"), "[fibral]/count");
  if (count < 0) throw SchemaError("[fibral]/count", "negative locus count");
  for (int n = 1; n <= count; ++n) {
    std::string p = "locus" + std::to_string(n) + ".";
    FibralLocus L;
    L.multiplicity =
        parse_int_field(doc.require("fibral", p + "multiplicity"), "[fibral]/" + p + "multiplicity");
    try {
      L.fiber_type_at_point = parse_kodaira(doc.require("fibral", p + "type_at_point"));
      L.generic_fiber_type_on_curve = parse_kodaira(doc.require("fibral", p + "generic_type"));
    } catch (const UnclassifiableTriple& e) {
      throw SchemaError("[fibral]/" + p + "type", e.what());
    }
    L.stratum_euler_open_curve =
        parse_int_field(doc.require("fibral", p + "chi_open"), "[fibral]/" + p + "chi_open");
    std::string curves = doc.require("fibral", p + "curves");
    std::size_t pos = 0;
    while (pos <= curves.size()) {
      std::size_t bar = curves.find('|', pos);
      std::string piece = trim(bar == std::string::npos ? curves.substr(pos)
                                                        : curves.substr(pos, bar - pos));
      if (!piece.empty()) {
        CurveExpression e;
        try {
          e = parse_curve_expression(piece);
        } catch (const std::invalid_argument& err) {
          throw SchemaError("[fibral]/" + p + "curves", err.what());
        }
        if (e.has_aux())
          throw SchemaError("[fibral]/" + p + "curves", "fibral curve must live in H2");
        L.component_curves.push_back(e.pure);
      }
      if (bar == std::string::npos) break;
      pos = bar + 1;
    }
    auto gv = split_ws(doc.require("fibral", p + "gv"));
    if (gv.size() != L.component_curves.size())
      throw SchemaError("[fibral]/" + p + "gv", "one invariant per component curve required");
    for (std::size_t k = 0; k < gv.size(); ++k)
      L.gv_invariants.emplace_back(L.component_curves[k],
                                   parse_int_field(gv[k], "[fibral]/" + p + "gv"));
    m.fibral_loci.push_back(std::move(L));
  }
  m.fibral_divisor_classes =
      parse_int_field(doc.require("fibral", "fibral_divisors"), "[fibral]/fibral_divisors");

  m.hodge.h11 = parse_int_field(doc.require("hodge", "h11"), "[hodge]/h11");
  m.hodge.h21 = parse_int_field(doc.require("hodge", "h21"), "[hodge]/h21");
  m.euler = parse_int_field(doc.require("hodge", "euler"), "[hodge]/euler");

  try {
    validate_model(m);
  } catch (const StructuralError& e) {
    throw SchemaError("model", e.what());
  }
  return m;
}

}  // namespace elfib
