#pragma once

#include <string>

#include "elfib/model.hpp"

namespace elfib {

/// Schema or invariant violation on load; `path` locates the offending field
/// ("[section]/key").
struct SchemaError : std::runtime_error {
  std::string path;
  SchemaError(std::string p, const std::string& what)
      : std::runtime_error(p + ": " + what), path(std::move(p)) {}
};

/// Deterministic human-readable serialization (stable key ordering).
std::string save_model(const FibrationModel& m);

/// Parses the model document format and validates structural invariants.
/// Product-table completeness is deliberately not checked here.
FibrationModel load_model(const std::string& text);

/// Parses a curve-expression string over named H2 and auxiliary generators,
/// e.g. "shat0 + 6*PA + 6*PB" or "2*fD + 3*shat0 - Chat".
CurveExpression parse_curve_expression(const std::string& s);
std::string format_curve_expression(const CurveExpression& e);

/// Parses a base-class string over {f, s0..s8}, rationals as p/q.
BaseClass parse_base_class(const std::string& s);
std::string format_base_class(const BaseClass& b);

}  // namespace elfib
