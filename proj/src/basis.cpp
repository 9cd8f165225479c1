#include "elfib/basis.hpp"

#include <map>

namespace elfib {

namespace {

std::map<std::string, int> index_of(const auto& names) {
  std::map<std::string, int> m;
  for (std::size_t i = 0; i < names.size(); ++i) m[names[i]] = static_cast<int>(i);
  return m;
}

}  // namespace

const std::array<std::string, kNSRank>& ns_names() {
  static const std::array<std::string, kNSRank> names = [] {
    std::array<std::string, kNSRank> n;
    n[NSBasis::PullbackFiber] = "pif";
    for (int k = 0; k < 9; ++k) n[NSBasis::PullbackSection(k)] = "pis" + std::to_string(k);
    for (int l = 0; l < 9; ++l) n[NSBasis::Section(l)] = "S" + std::to_string(l);
    n[NSBasis::DPrimary] = "D";
    n[NSBasis::DSecondary] = "D1";
    return n;
  }();
  return names;
}

const std::array<std::string, kH2Rank>& h2_names() {
  static const std::array<std::string, kH2Rank> names = [] {
    std::array<std::string, kH2Rank> n;
    n[H2Basis::FiberE] = "E";
    n[H2Basis::FhatCurve] = "fhat";
    for (int k = 0; k < 9; ++k) n[H2Basis::ShatCurve(k)] = "shat" + std::to_string(k);
    for (int l = 1; l <= 8; ++l) n[H2Basis::LhatCurve(l)] = "lhat" + std::to_string(l);
    n[H2Basis::PA] = "PA";
    n[H2Basis::PB] = "PB";
    return n;
  }();
  return names;
}

const std::array<std::string, kBaseRank>& base_names() {
  static const std::array<std::string, kBaseRank> names = [] {
    std::array<std::string, kBaseRank> n;
    n[BaseBasis::Fiber] = "f";
    for (int k = 0; k < 9; ++k) n[BaseBasis::Section(k)] = "s" + std::to_string(k);
    return n;
  }();
  return names;
}

const std::array<std::string, AuxGen::Count>& aux_names() {
  static const std::array<std::string, AuxGen::Count> names = [] {
    std::array<std::string, AuxGen::Count> n;
    n[AuxGen::ChatCurve] = "Chat";
    n[AuxGen::FiberOverF_D] = "fD";
    n[AuxGen::FiberOverF_D1] = "fD1";
    for (int k = 1; k <= 8; ++k) n[AuxGen::FiberOverF_S(k)] = "fS" + std::to_string(k);
    n[AuxGen::SectionOverS0_D] = "s0D";
    n[AuxGen::SectionOverS0_D1] = "s0D1";
    for (int k = 1; k <= 8; ++k) n[AuxGen::FCurve(k)] = "F" + std::to_string(k);
    for (int k = 1; k <= 8; ++k) n[AuxGen::F1Curve(k)] = "Fp" + std::to_string(k);
    return n;
  }();
  return names;
}

std::optional<int> ns_index(const std::string& name) {
  static const auto idx = index_of(ns_names());
  auto it = idx.find(name);
  if (it == idx.end()) return std::nullopt;
  return it->second;
}

std::optional<int> h2_index(const std::string& name) {
  static const auto idx = index_of(h2_names());
  auto it = idx.find(name);
  if (it == idx.end()) return std::nullopt;
  return it->second;
}

std::optional<int> base_index(const std::string& name) {
  static const auto idx = index_of(base_names());
  auto it = idx.find(name);
  if (it == idx.end()) return std::nullopt;
  return it->second;
}

std::optional<int> aux_index(const std::string& name) {
  static const auto idx = index_of(aux_names());
  auto it = idx.find(name);
  if (it == idx.end()) return std::nullopt;
  return it->second;
}

}  // namespace elfib
