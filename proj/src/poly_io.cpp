#include "elfib/poly.hpp"

#include <cctype>
#include <sstream>

namespace elfib {

namespace {

std::string trim(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

int var_index(const std::string& name, const std::vector<std::string>& vars) {
  for (std::size_t i = 0; i < vars.size(); ++i)
    if (vars[i] == name) return static_cast<int>(i);
  throw PolyError("unknown variable '" + name + "'");
}

// one monomial: factors joined by '*', each "<rational>" or "<var>[^<exp>]"
Poly<Rational> parse_monomial(const std::string& tok, const std::vector<std::string>& vars) {
  const int n = static_cast<int>(vars.size());
  Rational coeff(1);
  std::vector<int> exps(n, 0);
  std::size_t pos = 0;
  while (pos < tok.size()) {
    std::size_t star = tok.find('*', pos);
    std::string factor = trim(star == std::string::npos ? tok.substr(pos)
                                                        : tok.substr(pos, star - pos));
    pos = star == std::string::npos ? tok.size() : star + 1;
    if (factor.empty()) throw PolyError("empty factor in '" + tok + "'");
    if (std::isdigit(static_cast<unsigned char>(factor[0]))) {
      coeff *= Rational::parse(factor);
      continue;
    }
    std::size_t caret = factor.find('^');
    std::string name = caret == std::string::npos ? factor : factor.substr(0, caret);
    int e = 1;
    if (caret != std::string::npos) {
      std::string d = factor.substr(caret + 1);
      if (d.empty() || d.find_first_not_of("0123456789") != std::string::npos)
        throw PolyError("bad exponent in '" + factor + "'");
      e = std::stoi(d);
    }
    exps[var_index(trim(name), vars)] += e;
  }
  return Poly<Rational>::monomial(n, std::move(exps), coeff);
}

}  // namespace

Poly<Rational> parse_poly(const std::string& s, const std::vector<std::string>& vars) {
  const int n = static_cast<int>(vars.size());
  std::string text = trim(s);
  if (text.empty()) throw PolyError("empty polynomial");
  if (text == "0") return Poly<Rational>::zero(n);
  Poly<Rational> out = Poly<Rational>::zero(n);
  std::size_t pos = 0;
  while (pos < text.size()) {
    int sign = 1;
    while (pos < text.size() &&
           (text[pos] == ' ' || text[pos] == '+' || text[pos] == '-')) {
      if (text[pos] == '-') sign = -sign;
      ++pos;
    }
    if (pos >= text.size()) throw PolyError("trailing sign in '" + s + "'");
    std::size_t end = pos;
    while (end < text.size() && text[end] != '+' && text[end] != '-' && text[end] != ' ') ++end;
    Poly<Rational> mono = parse_monomial(text.substr(pos, end - pos), vars);
    if (sign < 0) mono = -mono;
    out = out + mono;  // throws on inhomogeneous input
    pos = end;
  }
  return out;
}

std::string format_poly(const Poly<Rational>& p, const std::vector<std::string>& vars) {
  if (static_cast<int>(vars.size()) != p.nvars())
    throw PolyError("format_poly: variable-name arity mismatch");
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const auto& [e, c] = *it;
    Rational a = c;
    if (first) {
      if (a < Rational(0)) { os << "-"; a = -a; }
    } else {
      os << (a < Rational(0) ? " - " : " + ");
      if (a < Rational(0)) a = -a;
    }
    first = false;
    bool constant_only = true;
    std::ostringstream body;
    bool first_factor = true;
    for (int i = 0; i < p.nvars(); ++i) {
      if (e[i] == 0) continue;
      constant_only = false;
      if (!first_factor) body << "*";
      body << vars[i];
      if (e[i] > 1) body << "^" << e[i];
      first_factor = false;
    }
    if (constant_only) os << a.str();
    else if (a == Rational(1)) os << body.str();
    else os << a.str() << "*" << body.str();
  }
  return os.str();
}

}  // namespace elfib
