#pragma once

#include <map>
#include <stdexcept>
#include <string>

#include "nefkit/bundle.hpp"

namespace nefkit {

/// Malformed input: JSON syntax errors (with position), missing sections,
/// unparsable rationals. Distinct from ModelError, which covers documents
/// that parse but violate model invariants.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ModelDocument {
  BundleModel model;
  std::map<std::string, BundleClass> classes;
};

/// Parses the model document
///   {"base": {"rank", "dim", "nef_generators" | "nef_facets",
///             "canonical"?, "nef_equals_psef"},
///    "fibers": [[...], ...],
///    "classes": {name: {"beta": [...], "lambda": ...}}}
/// with every rational given as integer or "p/q" text. Round-trips exactly
/// through serialize_model.
ModelDocument parse_model_text(const std::string& text);
ModelDocument parse_model_file(const std::string& path);

/// Canonical serialization: sorted keys, all rationals as text. Re-parsing
/// yields an identical model regardless of the input section order.
std::string serialize_model(const BundleModel& model,
                            const std::map<std::string, BundleClass>& classes);

}  // namespace nefkit
