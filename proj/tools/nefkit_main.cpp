// Command-line surface over the positivity toolkit: load a bundle model
// from JSON, run membership / multiplicity / decomposition queries, and
// print human tables or machine-readable JSON with exact certificates.

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "nefkit/bundle.hpp"
#include "nefkit/instances.hpp"
#include "nefkit/linprog.hpp"
#include "nefkit/model_io.hpp"

namespace {

using nlohmann::json;
using namespace nefkit;

json vec_to_json(const Vec& v) {
  json out = json::array();
  for (const auto& e : v) out.push_back(to_string(e));
  return out;
}

json class_to_json(const BundleClass& c) {
  return {{"beta", vec_to_json(c.beta)}, {"lambda", to_string(c.lambda)}};
}

json stratum_to_json(const Stratum& s) {
  json out = json::array();
  for (std::size_t i : s.indices) out.push_back(i);
  return out;
}

json outcome_to_json(const LinearProgram& lp, const LPOutcome& out) {
  json c;
  switch (out.status) {
    case LPStatus::Optimal:
      c["status"] = "optimal";
      c["value"] = to_string(out.value);
      c["primal"] = vec_to_json(out.primal);
      c["dual"] = vec_to_json(out.dual);
      break;
    case LPStatus::Infeasible:
      c["status"] = "infeasible";
      c["farkas"] = vec_to_json(out.farkas);
      break;
    case LPStatus::Unbounded:
      c["status"] = "unbounded";
      c["ray"] = vec_to_json(out.ray);
      break;
  }
  c["verified"] = verify_certificate(lp, out);
  return c;
}

struct Query {
  ModelDocument doc;
  bool as_json = false;
  bool with_certificates = false;
};

BundleClass resolve_class(const Query& q, const std::string& class_name,
                          const std::string& coeffs) {
  if (class_name.empty() == coeffs.empty()) {
    throw std::out_of_range("exactly one of --class or --coeffs is required");
  }
  if (!class_name.empty()) {
    const auto it = q.doc.classes.find(class_name);
    if (it == q.doc.classes.end()) {
      throw std::out_of_range("unknown class '" + class_name + "'");
    }
    return it->second;
  }
  // "b1,b2,...;lambda"
  const auto semi = coeffs.find(';');
  if (semi == std::string::npos) {
    throw std::out_of_range("--coeffs expects \"b1,b2,...;lambda\"");
  }
  std::vector<Rational> beta;
  std::string part;
  std::istringstream beta_in(coeffs.substr(0, semi));
  try {
    while (std::getline(beta_in, part, ',')) beta.push_back(parse_rational(part));
    BundleClass cls{Vec(std::move(beta)), parse_rational(coeffs.substr(semi + 1))};
    q.doc.model.check_class(cls);
    return cls;
  } catch (const std::invalid_argument& e) {
    throw std::out_of_range(std::string("--coeffs: ") + e.what());
  }
}

Stratum resolve_stratum(const Query& q, const std::string& text) {
  Stratum s;
  if (!text.empty()) {
    std::istringstream in(text);
    std::string part;
    while (std::getline(in, part, ',')) {
      try {
        const long value = std::stol(part);
        if (value < 0) throw std::invalid_argument("negative");
        s.indices.push_back(static_cast<std::size_t>(value));
      } catch (const std::exception&) {
        throw std::out_of_range("--stratum expects comma-separated indices");
      }
    }
  }
  try {
    q.doc.model.check_stratum(s);
  } catch (const std::domain_error& e) {
    throw std::out_of_range(std::string("--stratum: ") + e.what());
  }
  return s;
}

void emit(const json& doc, bool as_json, const std::string& human) {
  if (as_json) {
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << human;
  }
}

int run_check(const Query& q, const std::string& class_name,
              const std::string& coeffs) {
  const BundleModel& model = q.doc.model;
  const BundleClass cls = resolve_class(q, class_name, coeffs);
  const bool psef = model.is_psef(cls);
  const bool nef = model.is_nef(cls);
  const bool big = model.is_big(cls);
  const auto codim = model.nef_codim(cls);

  json result{{"psef", psef}, {"nef", nef}, {"big", big}};
  if (codim) {
    result["nef_codim"] = *codim;
  } else {
    result["nef_codim"] = nullptr;
  }
  json doc{{"query", "check"},
           {"inputs", {{"class", class_to_json(cls)}}},
           {"result", result}};
  if (q.with_certificates) {
    const LinearProgram lp = model.multiplicity_lp(cls, Stratum{});
    doc["certificates"] = {{"psef", outcome_to_json(lp, solve_lp(lp))}};
  }

  std::ostringstream human;
  human << "class: beta=" << to_string(cls.beta)
        << " lambda=" << to_string(cls.lambda) << "\n"
        << "psef: " << (psef ? "true" : "false") << "\n"
        << "nef: " << (nef ? "true" : "false") << "\n"
        << "big: " << (big ? "true" : "false") << "\n"
        << "nef_codim: " << (codim ? std::to_string(*codim) : "NotPsef")
        << "\n";
  emit(doc, q.as_json, human.str());
  return 0;
}

int run_mult(const Query& q, const std::string& class_name,
             const std::string& coeffs, const std::string& stratum_text) {
  const BundleModel& model = q.doc.model;
  const BundleClass cls = resolve_class(q, class_name, coeffs);
  const Stratum stratum = resolve_stratum(q, stratum_text);
  const MultiplicityResult m = model.min_multiplicity(cls, stratum);

  json result;
  std::ostringstream human;
  if (m.psef) {
    result["status"] = "value";
    result["nu"] = to_string(m.nu);
    result["witness"] = {{"stratum_weights", vec_to_json(m.weights_stratum)},
                         {"rest_weights", vec_to_json(m.weights_rest)},
                         {"nef_point", vec_to_json(m.nef_point)}};
    human << "nu(alpha, " << stratum.label() << ") = " << to_string(m.nu)
          << "\n"
          << "weights on stratum: " << to_string(m.weights_stratum) << "\n"
          << "weights elsewhere:  " << to_string(m.weights_rest) << "\n"
          << "nef point reached:  " << to_string(m.nef_point) << "\n";
  } else {
    result["status"] = "not_psef";
    human << "class is not psef; no multiplicity\n";
  }
  json doc{{"query", "mult"},
           {"inputs",
            {{"class", class_to_json(cls)}, {"stratum", stratum_to_json(stratum)}}},
           {"result", result}};
  if (q.with_certificates) {
    doc["certificates"] = {
        {"multiplicity",
         outcome_to_json(model.multiplicity_lp(cls, stratum), m.lp_outcome)}};
  }
  emit(doc, q.as_json, human.str());
  return 0;
}

int run_table(const Query& q, const std::string& class_name,
              const std::string& coeffs) {
  const BundleModel& model = q.doc.model;
  const BundleClass cls = resolve_class(q, class_name, coeffs);
  const auto table = model.non_nef_table(cls);

  json result;
  std::ostringstream human;
  if (table) {
    result["status"] = "value";
    json rows = json::array();
    json locus = json::array();
    human << "stratum      codim  nu\n";
    for (const auto& [stratum, nu] : *table) {
      rows.push_back({{"stratum", stratum_to_json(stratum)},
                      {"codim", stratum.codim()},
                      {"nu", to_string(nu)}});
      if (nu > 0) locus.push_back(stratum_to_json(stratum));
      human << stratum.label();
      for (std::size_t pad = stratum.label().size(); pad < 13; ++pad) human << ' ';
      human << stratum.codim() << "      " << to_string(nu) << "\n";
    }
    result["rows"] = rows;
    result["non_nef_locus"] = locus;
  } else {
    result["status"] = "not_psef";
    human << "class is not psef; no table\n";
  }
  json doc{{"query", "table"},
           {"inputs", {{"class", class_to_json(cls)}}},
           {"result", result}};
  emit(doc, q.as_json, human.str());
  return 0;
}

int run_zariski(const Query& q, const std::string& class_name,
                const std::string& coeffs) {
  const BundleModel& model = q.doc.model;
  const BundleClass cls = resolve_class(q, class_name, coeffs);
  const auto dec = model.zariski(cls);

  json result;
  std::ostringstream human;
  if (dec) {
    result["status"] = "value";
    json coefficients = json::array();
    for (const auto& c : dec->coefficients) coefficients.push_back(to_string(c));
    result["coefficients"] = coefficients;
    result["negative"] = class_to_json(dec->negative);
    result["projection"] = class_to_json(dec->projection);
    result["projection_nef"] = model.is_nef(dec->projection);
    human << "coefficients: ";
    for (std::size_t i = 0; i < dec->coefficients.size(); ++i) {
      human << (i ? ", " : "") << to_string(dec->coefficients[i]);
    }
    human << "\nN = beta=" << to_string(dec->negative.beta)
          << " lambda=" << to_string(dec->negative.lambda)
          << "\nZ = beta=" << to_string(dec->projection.beta)
          << " lambda=" << to_string(dec->projection.lambda) << "\nZ nef: "
          << (model.is_nef(dec->projection) ? "true" : "false") << "\n";
  } else {
    result["status"] = "not_psef";
    human << "class is not psef; no decomposition\n";
  }
  json doc{{"query", "zariski"},
           {"inputs", {{"class", class_to_json(cls)}}},
           {"result", result}};
  if (q.with_certificates && dec) {
    json certs = json::array();
    for (std::size_t i = 0; i <= model.r(); ++i) {
      const Stratum s{{i}};
      certs.push_back(outcome_to_json(model.multiplicity_lp(cls, s),
                                      model.min_multiplicity(cls, s).lp_outcome));
    }
    doc["certificates"] = {{"divisorial_multiplicities", certs}};
  }
  emit(doc, q.as_json, human.str());
  return 0;
}

int run_cone(const Query& q, std::size_t codim, bool facets_only,
             bool generators_only) {
  const BundleModel& model = q.doc.model;
  if (codim > model.dim()) {
    throw std::out_of_range("--codim must lie in 0.." +
                            std::to_string(model.dim()));
  }
  const Cone cone = model.positivity_cone(codim);

  json result;
  std::ostringstream human;
  if (!facets_only) {
    json gens = json::array();
    for (const auto& g : cone.generators()) gens.push_back(vec_to_json(g));
    result["generators"] = gens;
    human << "generators:\n";
    for (const auto& g : cone.generators()) human << "  " << to_string(g) << "\n";
  }
  if (!generators_only) {
    json facets = json::array();
    for (const auto& f : cone.facets()) facets.push_back(vec_to_json(f));
    result["facets"] = facets;
    human << "facets:\n";
    for (const auto& f : cone.facets()) human << "  " << to_string(f) << "\n";
  }
  json doc{{"query", "cone"},
           {"inputs", {{"codim", codim}}},
           {"result", result}};
  emit(doc, q.as_json, human.str());
  return 0;
}

int run_example(const std::string& name, bool selftest, bool do_emit,
                bool as_json) {
  const ExampleInstance& instance = instance_by_name(name);
  if (do_emit) {
    std::cout << serialize_model(instance.model, instance.classes);
    return 0;
  }
  const Report report = verify_expectations(instance);
  if (as_json) {
    json checks = json::array();
    for (const auto& c : report.checks) {
      checks.push_back({{"description", c.description},
                        {"passed", c.passed},
                        {"expected", c.expected},
                        {"actual", c.actual}});
    }
    json doc{{"query", "example"},
             {"inputs", {{"name", name}}},
             {"result",
              {{"all_passed", report.all_passed()}, {"checks", checks}}}};
    std::cout << doc.dump(2) << "\n";
  } else {
    for (const auto& c : report.checks) {
      std::cout << (c.passed ? "pass" : "FAIL") << "  " << c.description
                << "  expected " << c.expected;
      if (!c.passed) std::cout << ", got " << c.actual;
      std::cout << "\n";
    }
    std::cout << (report.all_passed() ? "all expectations hold"
                                      : "EXPECTATION FAILURES")
              << "\n";
  }
  return selftest && !report.all_passed() ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact positivity invariants on projectivized split bundles"};
  app.require_subcommand(1);

  std::string model_path, class_name, coeffs, stratum_text, example_name;
  std::size_t codim = 0;
  bool as_json = false, with_certificates = false;
  bool facets_only = false, generators_only = false;
  bool selftest = false, do_emit = false;

  auto add_common = [&](CLI::App* cmd, bool needs_class) {
    cmd->add_option("--model", model_path, "model JSON file")->required();
    cmd->add_flag("--json", as_json, "machine-readable output");
    if (needs_class) {
      cmd->add_option("--class", class_name, "named class from the model");
      cmd->add_option("--coeffs", coeffs, "inline class \"b1,b2,...;lambda\"");
    }
  };

  CLI::App* check = app.add_subcommand("check", "psef/nef/big/nef_codim of a class");
  add_common(check, true);
  check->add_flag("--certificates", with_certificates, "attach LP certificates");

  CLI::App* mult = app.add_subcommand("mult", "minimal multiplicity along a stratum");
  add_common(mult, true);
  mult->add_option("--stratum", stratum_text, "comma-separated indices, e.g. 1,2")
      ->required();
  mult->add_flag("--certificates", with_certificates, "attach LP certificates");

  CLI::App* table = app.add_subcommand("table", "multiplicities along every stratum");
  add_common(table, true);

  CLI::App* zariski = app.add_subcommand("zariski", "divisorial Zariski decomposition");
  add_common(zariski, true);
  zariski->add_flag("--certificates", with_certificates, "attach LP certificates");

  CLI::App* cone = app.add_subcommand("cone", "cone of classes nef in codimension k");
  add_common(cone, false);
  cone->add_option("--codim", codim, "codimension k")->required();
  cone->add_flag("--facets", facets_only, "facet representation only");
  cone->add_flag("--generators", generators_only, "generator representation only");

  CLI::App* example = app.add_subcommand("example", "bundled worked examples");
  example->add_option("name", example_name, "example name")->required();
  example->add_flag("--selftest", selftest, "exit nonzero unless all expectations hold");
  example->add_flag("--emit", do_emit, "print the model document");
  example->add_flag("--json", as_json, "machine-readable output");

  try {
    app.parse(argc, argv);

    if (example->parsed()) {
      return run_example(example_name, selftest, do_emit, as_json);
    }

    Query q{parse_model_file(model_path), as_json, with_certificates};
    if (check->parsed()) return run_check(q, class_name, coeffs);
    if (mult->parsed()) return run_mult(q, class_name, coeffs, stratum_text);
    if (table->parsed()) return run_table(q, class_name, coeffs);
    if (zariski->parsed()) return run_zariski(q, class_name, coeffs);
    if (cone->parsed()) return run_cone(q, codim, facets_only, generators_only);
    return 1;
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 1;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const DimensionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const ModelError& e) {
    std::cerr << "model validation error: " << e.what() << "\n";
    return 2;
  }
}
