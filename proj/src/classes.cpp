#include "elfib/classes.hpp"

#include <sstream>
#include <vector>

namespace elfib {

namespace {

std::string format_terms(const std::vector<std::pair<std::string, Rational>>& terms) {
  std::ostringstream os;
  bool first = true;
  for (const auto& [name, coeff] : terms) {
    if (coeff.is_zero()) continue;
    Rational a = coeff;
    if (first) {
      if (a < Rational(0)) { os << "-"; a = -a; }
    } else {
      os << (a < Rational(0) ? " - " : " + ");
      if (a < Rational(0)) a = -a;
    }
    if (a != Rational(1)) os << a.str() << "*";
    os << name;
    first = false;
  }
  if (first) return "0";
  return os.str();
}

}  // namespace

std::string format_linear(const std::map<std::string, Rational>& terms) {
  return format_terms({terms.begin(), terms.end()});
}

std::string BaseClass::str() const {
  std::vector<std::pair<std::string, Rational>> terms;
  for (int i = 0; i < kBaseRank; ++i)
    if (!c[i].is_zero()) terms.emplace_back(base_names()[i], c[i]);
  return format_terms(terms);
}

std::string CurveExpression::str() const {
  std::vector<std::pair<std::string, Rational>> terms;
  for (int i = 0; i < kH2Rank; ++i)
    if (pure.c[i] != 0) terms.emplace_back(h2_names()[i], Rational(static_cast<long>(pure.c[i])));
  for (const auto& [id, coeff] : aux)
    terms.emplace_back(aux_names()[id], Rational(static_cast<long>(coeff)));
  return format_terms(terms);
}

}  // namespace elfib
