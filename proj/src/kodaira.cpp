#include "elfib/kodaira.hpp"

#include <sstream>

namespace elfib {

std::string KodairaType::str() const {
  switch (tag) {
    case KodairaTag::I0smooth: return "I0";
    case KodairaTag::In: return "I" + std::to_string(n);
    case KodairaTag::II: return "II";
    case KodairaTag::III: return "III";
    case KodairaTag::IV: return "IV";
    case KodairaTag::I0star: return "I0*";
    case KodairaTag::Instar: return "I" + std::to_string(n) + "*";
    case KodairaTag::IVstar: return "IV*";
    case KodairaTag::IIIstar: return "III*";
    case KodairaTag::IIstar: return "II*";
    case KodairaTag::NonMinimal: return "non-minimal";
  }
  return "?";
}

KodairaType parse_kodaira(const std::string& s) {
  if (s == "non-minimal") return {KodairaTag::NonMinimal, 0};
  if (s == "II") return {KodairaTag::II, 0};
  if (s == "III") return {KodairaTag::III, 0};
  if (s == "IV") return {KodairaTag::IV, 0};
  if (s == "II*") return {KodairaTag::IIstar, 0};
  if (s == "III*") return {KodairaTag::IIIstar, 0};
  if (s == "IV*") return {KodairaTag::IVstar, 0};
  if (s.size() >= 2 && s[0] == 'I') {
    bool star = s.back() == '*';
    std::string digits = s.substr(1, s.size() - 1 - (star ? 1 : 0));
    if (!digits.empty() && digits.find_first_not_of("0123456789") == std::string::npos) {
      int n = std::stoi(digits);
      if (star) return n == 0 ? KodairaType{KodairaTag::I0star, 0}
                              : KodairaType{KodairaTag::Instar, n};
      return n == 0 ? KodairaType{KodairaTag::I0smooth, 0} : KodairaType{KodairaTag::In, n};
    }
  }
  throw UnclassifiableTriple("cannot parse Kodaira type '" + s + "'");
}

int kodaira_euler(const KodairaType& t) {
  switch (t.tag) {
    case KodairaTag::I0smooth: return 0;
    case KodairaTag::In: return t.n;
    case KodairaTag::II: return 2;
    case KodairaTag::III: return 3;
    case KodairaTag::IV: return 4;
    case KodairaTag::I0star: return 6;
    case KodairaTag::Instar: return 6 + t.n;
    case KodairaTag::IVstar: return 8;
    case KodairaTag::IIIstar: return 9;
    case KodairaTag::IIstar: return 10;
    case KodairaTag::NonMinimal:
      throw UnclassifiableTriple("non-minimal fiber has no Euler number");
  }
  throw UnclassifiableTriple("bad tag");
}

std::string VanishingTriple::str() const {
  auto fmt = [](int v) {
    return v >= kInfiniteOrder ? std::string("inf") : std::to_string(v);
  };
  return "(" + fmt(ord_a) + ", " + fmt(ord_b) + ", " + fmt(ord_delta) + ")";
}

KodairaType kodaira_classify(const VanishingTriple& t) {
  const int a = t.ord_a, b = t.ord_b, d = t.ord_delta;
  if (a < 0 || b < 0 || d < 0)
    throw UnclassifiableTriple("negative vanishing order in " + t.str());
  // non-minimality takes precedence over every Kodaira pattern
  if (a >= 4 && b >= 6) return {KodairaTag::NonMinimal, 0};
  if (d == 0) return {KodairaTag::I0smooth, 0};
  if (a == 0 && b == 0 && d >= 1) return {KodairaTag::In, d};
  if (a >= 1 && b == 1 && d == 2) return {KodairaTag::II, 0};
  if (a == 1 && b >= 2 && d == 3) return {KodairaTag::III, 0};
  if (a >= 2 && b == 2 && d == 4) return {KodairaTag::IV, 0};
  if (a >= 2 && b >= 3 && d == 6) return {KodairaTag::I0star, 0};
  if (a == 2 && b == 3 && d > 6) return {KodairaTag::Instar, d - 6};
  if (a >= 3 && b == 4 && d == 8) return {KodairaTag::IVstar, 0};
  if (a == 3 && b >= 5 && d == 9) return {KodairaTag::IIIstar, 0};
  if (a >= 4 && b == 5 && d == 10) return {KodairaTag::IIstar, 0};
  throw UnclassifiableTriple("vanishing orders " + t.str() +
                             " match no Kodaira pattern");
}

}  // namespace elfib
