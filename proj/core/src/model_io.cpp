#include "nefkit/model_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace nefkit {

namespace {

using nlohmann::json;

Rational rational_from_json(const json& j, const std::string& where) {
  try {
    if (j.is_number_integer()) return Rational(j.get<long long>());
    if (j.is_string()) return parse_rational(j.get<std::string>());
  } catch (const std::invalid_argument& e) {
    throw ParseError(where + ": " + e.what());
  }
  throw ParseError(where + ": rationals must be integers or \"p/q\" text");
}

Vec vec_from_json(const json& j, const std::string& where) {
  if (!j.is_array()) throw ParseError(where + ": expected an array");
  Vec v(j.size());
  for (std::size_t i = 0; i < j.size(); ++i) {
    v[i] = rational_from_json(j[i], where + "[" + std::to_string(i) + "]");
  }
  return v;
}

std::vector<Vec> vec_list_from_json(const json& j, const std::string& where) {
  if (!j.is_array()) throw ParseError(where + ": expected an array of vectors");
  std::vector<Vec> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    out.push_back(vec_from_json(j[i], where + "[" + std::to_string(i) + "]"));
  }
  return out;
}

const json& field(const json& j, const std::string& name,
                  const std::string& where) {
  const auto it = j.find(name);
  if (it == j.end()) throw ParseError(where + ": missing \"" + name + "\"");
  return *it;
}

json vec_to_json(const Vec& v) {
  json out = json::array();
  for (const auto& e : v) out.push_back(to_string(e));
  return out;
}

}  // namespace

ModelDocument parse_model_text(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(e.what());  // carries the byte position
  }
  if (!doc.is_object()) throw ParseError("document: expected an object");

  const json& base_j = field(doc, "base", "document");
  BaseGeometry base;
  const json& rank_j = field(base_j, "rank", "base");
  const json& dim_j = field(base_j, "dim", "base");
  if (!rank_j.is_number_unsigned() || !dim_j.is_number_unsigned()) {
    throw ParseError("base: rank and dim must be nonnegative integers");
  }
  base.picard_rank = rank_j.get<std::size_t>();
  base.dim = dim_j.get<std::size_t>();
  if (base.picard_rank == 0) throw ParseError("base: rank must be >= 1");

  const bool has_gens = base_j.contains("nef_generators");
  const bool has_facets = base_j.contains("nef_facets");
  if (has_gens == has_facets) {
    throw ParseError(
        "base: exactly one of \"nef_generators\" or \"nef_facets\" required");
  }
  try {
    if (has_gens) {
      base.nef_cone = Cone::from_generators(
          base.picard_rank,
          vec_list_from_json(base_j["nef_generators"], "base.nef_generators"));
    } else {
      base.nef_cone = Cone::from_facets(
          base.picard_rank,
          vec_list_from_json(base_j["nef_facets"], "base.nef_facets"));
    }
  } catch (const DimensionError& e) {
    throw ParseError(std::string("base nef cone: ") + e.what());
  }

  const json& flag_j = field(base_j, "nef_equals_psef", "base");
  if (!flag_j.is_boolean()) {
    throw ParseError("base.nef_equals_psef: expected a boolean");
  }
  base.nef_equals_psef = flag_j.get<bool>();
  if (base_j.contains("canonical")) {
    base.canonical = vec_from_json(base_j["canonical"], "base.canonical");
  }

  std::vector<Vec> fibers =
      vec_list_from_json(field(doc, "fibers", "document"), "fibers");

  std::map<std::string, BundleClass> classes;
  if (doc.contains("classes")) {
    const json& classes_j = doc["classes"];
    if (!classes_j.is_object()) throw ParseError("classes: expected an object");
    for (const auto& [name, body] : classes_j.items()) {
      BundleClass cls;
      cls.beta = vec_from_json(field(body, "beta", "classes." + name),
                               "classes." + name + ".beta");
      cls.lambda = rational_from_json(field(body, "lambda", "classes." + name),
                                      "classes." + name + ".lambda");
      classes.emplace(name, std::move(cls));
    }
  }

  // Model invariants (validated in the BundleModel constructor) are a
  // different failure class than malformed input; let ModelError escape.
  ModelDocument out{BundleModel(std::move(base), std::move(fibers)),
                    std::move(classes)};
  for (const auto& [name, cls] : out.classes) {
    if (cls.beta.size() != out.model.base().picard_rank) {
      throw ParseError("classes." + name + ".beta: wrong rank");
    }
  }
  return out;
}

ModelDocument parse_model_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read model file '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_model_text(buffer.str());
}

std::string serialize_model(
    const BundleModel& model,
    const std::map<std::string, BundleClass>& classes) {
  json doc;
  json base;
  base["rank"] = model.base().picard_rank;
  base["dim"] = model.base().dim;
  json gens = json::array();
  for (const auto& g : model.base().nef_cone.generators()) {
    gens.push_back(vec_to_json(g));
  }
  base["nef_generators"] = gens;
  base["nef_equals_psef"] = model.base().nef_equals_psef;
  if (model.base().canonical) {
    base["canonical"] = vec_to_json(*model.base().canonical);
  }
  doc["base"] = base;

  json fibers = json::array();
  for (const auto& l : model.fibers()) fibers.push_back(vec_to_json(l));
  doc["fibers"] = fibers;

  json classes_j = json::object();
  for (const auto& [name, cls] : classes) {
    json body;
    body["beta"] = vec_to_json(cls.beta);
    body["lambda"] = to_string(cls.lambda);
    classes_j[name] = body;
  }
  doc["classes"] = classes_j;
  return doc.dump(2) + "\n";
}

}  // namespace nefkit
