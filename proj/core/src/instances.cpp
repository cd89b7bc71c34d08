#include "nefkit/instances.hpp"

#include <algorithm>
#include <stdexcept>

namespace nefkit {

bool Report::all_passed() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const CheckResult& c) { return c.passed; });
}

namespace {

std::string bool_text(bool b) { return b ? "true" : "false"; }

CheckResult check_flag(const std::string& description, bool expected,
                       bool actual) {
  return {description, expected == actual, bool_text(expected),
          bool_text(actual)};
}

}  // namespace

Report verify_expectations(const ExampleInstance& instance) {
  Report report;
  const BundleModel& model = instance.model;
  auto named = [&](const std::string& name) -> const BundleClass& {
    return instance.classes.at(name);
  };

  for (const Expectation& e : instance.expectations) {
    switch (e.kind) {
      case Expectation::Kind::Psef:
        report.checks.push_back(check_flag("psef(" + e.class_name + ")",
                                           e.flag, model.is_psef(named(e.class_name))));
        break;
      case Expectation::Kind::Nef:
        report.checks.push_back(check_flag("nef(" + e.class_name + ")", e.flag,
                                           model.is_nef(named(e.class_name))));
        break;
      case Expectation::Kind::Big:
        report.checks.push_back(check_flag("big(" + e.class_name + ")", e.flag,
                                           model.is_big(named(e.class_name))));
        break;
      case Expectation::Kind::NefCodim: {
        const auto actual = model.nef_codim(named(e.class_name));
        report.checks.push_back({"nef_codim(" + e.class_name + ")",
                                 actual.has_value() && *actual == e.codim,
                                 std::to_string(e.codim),
                                 actual ? std::to_string(*actual) : "NotPsef"});
        break;
      }
      case Expectation::Kind::Multiplicity: {
        const MultiplicityResult m =
            model.min_multiplicity(named(e.class_name), e.stratum);
        report.checks.push_back({"nu(" + e.class_name + ", " +
                                     e.stratum.label() + ")",
                                 m.psef && m.nu == e.value, to_string(e.value),
                                 m.psef ? to_string(m.nu) : "NotPsef"});
        break;
      }
      case Expectation::Kind::ZariskiCoefficients: {
        const auto dec = model.zariski(named(e.class_name));
        std::string expected = "(";
        for (std::size_t i = 0; i < e.coefficients.size(); ++i) {
          if (i) expected += ", ";
          expected += to_string(e.coefficients[i]);
        }
        expected += ")";
        std::string actual = "NotPsef";
        bool ok = false;
        if (dec) {
          actual = "(";
          for (std::size_t i = 0; i < dec->coefficients.size(); ++i) {
            if (i) actual += ", ";
            actual += to_string(dec->coefficients[i]);
          }
          actual += ")";
          ok = dec->coefficients == e.coefficients;
        }
        report.checks.push_back({"zariski(" + e.class_name + ")", ok, expected,
                                 actual});
        break;
      }
      case Expectation::Kind::ConeMember: {
        const bool actual = model.positivity_cone(e.level_a)
                                .contains(named(e.class_name).coordinates());
        report.checks.push_back(check_flag(
            e.class_name + " in positivity_cone(" + std::to_string(e.level_a) +
                ")",
            e.flag, actual));
        break;
      }
      case Expectation::Kind::ConeEqual: {
        const bool actual = model.positivity_cone(e.level_a)
                                .equals(model.positivity_cone(e.level_b));
        report.checks.push_back(check_flag(
            "positivity_cone(" + std::to_string(e.level_a) +
                ") == positivity_cone(" + std::to_string(e.level_b) + ")",
            e.flag, actual));
        break;
      }
    }
  }
  return report;
}

namespace {

Expectation expect_flag(Expectation::Kind kind, std::string name, bool flag) {
  Expectation e;
  e.kind = kind;
  e.class_name = std::move(name);
  e.flag = flag;
  return e;
}

Expectation expect_nu(std::string name, Stratum stratum, Rational value) {
  Expectation e;
  e.kind = Expectation::Kind::Multiplicity;
  e.class_name = std::move(name);
  e.stratum = std::move(stratum);
  e.value = std::move(value);
  return e;
}

Expectation expect_codim(std::string name, std::size_t codim) {
  Expectation e;
  e.kind = Expectation::Kind::NefCodim;
  e.class_name = std::move(name);
  e.codim = codim;
  return e;
}

Expectation expect_cone_member(std::string name, std::size_t level, bool flag) {
  Expectation e;
  e.kind = Expectation::Kind::ConeMember;
  e.class_name = std::move(name);
  e.level_a = level;
  e.flag = flag;
  return e;
}

Expectation expect_cone_equal(std::size_t a, std::size_t b, bool flag) {
  Expectation e;
  e.kind = Expectation::Kind::ConeEqual;
  e.level_a = a;
  e.level_b = b;
  e.flag = flag;
  return e;
}

Expectation expect_zariski(std::string name, std::vector<Rational> coeffs) {
  Expectation e;
  e.kind = Expectation::Kind::ZariskiCoefficients;
  e.class_name = std::move(name);
  e.coefficients = std::move(coeffs);
  return e;
}

}  // namespace

ExampleInstance build_hierarchy(std::size_t k, const Rational& a,
                                const Rational& b) {
  if (k < 1) throw std::domain_error("hierarchy depth k must be >= 1");
  if (a <= 0) throw std::domain_error("ample degree a must be positive");
  if (b > 0) throw std::domain_error("b must be <= 0 (beta may not be ample)");
  if (b + a < 0) throw std::domain_error("b + a must be >= 0");

  std::vector<Vec> fibers{Vec{0}};
  for (std::size_t i = 0; i < k + 1; ++i) fibers.push_back(Vec{a});
  ExampleInstance instance{"hierarchy-" + std::to_string(k),
                           BundleModel(BaseGeometry::curve(), fibers),
                           {},
                           {}};
  instance.classes.emplace("alpha", BundleClass{Vec{b}, 1});

  const std::size_t n = 1 + (k + 1);  // curve base: n = m + r
  if (b == 0) {
    instance.expectations.push_back(expect_flag(Expectation::Kind::Nef, "alpha", true));
    instance.expectations.push_back(expect_flag(Expectation::Kind::Big, "alpha", true));
    instance.expectations.push_back(expect_codim("alpha", n));
    for (const Stratum& s : instance.model.strata()) {
      instance.expectations.push_back(expect_nu("alpha", s, 0));
    }
    return instance;
  }

  instance.expectations.push_back(expect_flag(Expectation::Kind::Psef, "alpha", true));
  instance.expectations.push_back(expect_flag(Expectation::Kind::Nef, "alpha", false));
  instance.expectations.push_back(
      expect_flag(Expectation::Kind::Big, "alpha", b + a > 0));
  instance.expectations.push_back(expect_codim("alpha", k));

  // The one stratum avoiding every ample summand carries -b/a; the rest
  // vanish because some degree-a summand remains available at t = 0.
  Stratum deepest;
  for (std::size_t i = 1; i <= k + 1; ++i) deepest.indices.push_back(i);
  for (const Stratum& s : instance.model.strata()) {
    instance.expectations.push_back(
        expect_nu("alpha", s, s == deepest ? -b / a : Rational(0)));
  }

  // Chain collapse: psef down to depth k, nef from depth k+1 on, witnessed
  // by alpha sitting strictly between.
  instance.expectations.push_back(expect_cone_equal(0, k, true));
  instance.expectations.push_back(expect_cone_equal(k + 1, n, true));
  instance.expectations.push_back(expect_cone_equal(k, k + 1, false));
  instance.expectations.push_back(expect_cone_member("alpha", k, true));
  instance.expectations.push_back(expect_cone_member("alpha", k + 1, false));
  return instance;
}

ExampleInstance build_ample_pair(const Rational& t) {
  if (t <= 0 || t > 2) throw std::domain_error("t must lie in (0, 2]");

  BaseGeometry base;
  base.picard_rank = 2;
  base.dim = 2;
  base.nef_cone = Cone::from_generators(2, {Vec{1, 0}, Vec{0, 1}});
  ExampleInstance instance{
      "ample-pair",
      BundleModel(base, {Vec{1, 1}, Vec{2, 1}}),
      {},
      {}};
  const Vec beta{-2, 0};
  const Rational t0 = 2;
  instance.classes.emplace("alpha", BundleClass{beta, t});
  instance.classes.emplace("h", BundleClass{Vec{0, 0}, 1});
  instance.classes.emplace("alpha_nef", BundleClass{beta, t0});

  instance.expectations.push_back(expect_flag(Expectation::Kind::Nef, "alpha_nef", true));
  instance.expectations.push_back(expect_flag(Expectation::Kind::Psef, "h", true));
  if (t == t0) {
    instance.expectations.push_back(expect_flag(Expectation::Kind::Nef, "alpha", true));
    instance.expectations.push_back(expect_nu("alpha", Stratum{{0}}, 0));
    instance.expectations.push_back(expect_nu("alpha", Stratum{{1}}, 0));
  } else if (t > 1) {
    // alpha_nef = alpha + (t0 - t) h by construction: a nef class written
    // as a not-nef-in-codimension-1 class plus a psef one.
    instance.expectations.push_back(expect_flag(Expectation::Kind::Big, "alpha", true));
    instance.expectations.push_back(expect_flag(Expectation::Kind::Nef, "alpha", false));
    instance.expectations.push_back(expect_nu("alpha", Stratum{{0}}, 0));
    instance.expectations.push_back(expect_nu("alpha", Stratum{{1}}, t0 - t));
    instance.expectations.push_back(expect_codim("alpha", 0));
  } else if (t == 1) {
    instance.expectations.push_back(expect_flag(Expectation::Kind::Psef, "alpha", true));
    instance.expectations.push_back(expect_flag(Expectation::Kind::Big, "alpha", false));
  } else {
    instance.expectations.push_back(expect_flag(Expectation::Kind::Psef, "alpha", false));
  }
  return instance;
}

ExampleInstance build_anticanonical(std::size_t g, std::size_t p,
                                    std::size_t q) {
  if (g < 2) throw std::domain_error("genus must be >= 2");
  if (p < 1) throw std::domain_error("p must be >= 1");
  if (q <= p) throw std::domain_error("q must exceed p");
  const Rational genus_part = Rational(2) * g - 2;
  if (Rational(p) + q <= genus_part) {
    throw std::domain_error("p + q must exceed 2g - 2 for a big anticanonical");
  }

  ExampleInstance instance{
      "anticanonical",
      BundleModel(BaseGeometry::curve(genus_part),
                  {Vec{Rational(p)}, Vec{-Rational(q)}}),
      {},
      {}};
  instance.classes.emplace(
      "minus_k", BundleClass{Vec{Rational(q) - p - genus_part}, 2});

  instance.expectations.push_back(expect_flag(Expectation::Kind::Big, "minus_k", true));
  instance.expectations.push_back(expect_flag(Expectation::Kind::Nef, "minus_k", false));
  // min{t : -K_Y + (q-p)A + t p A - (2-t) q A nef} = 1 + (2g-2)/(p+q).
  instance.expectations.push_back(expect_nu(
      "minus_k", Stratum{{0}}, 1 + genus_part / (Rational(p) + q)));
  instance.expectations.push_back(expect_nu("minus_k", Stratum{{1}}, 0));
  instance.expectations.push_back(expect_codim("minus_k", 0));
  return instance;
}

ExampleInstance build_no_zariski_threefold() {
  ExampleInstance instance = build_hierarchy(1, 2, -1);
  instance.name = "no-zariski";
  // All divisorial multiplicities vanish, so the unique divisorial
  // decomposition is alpha = alpha + 0 with alpha not nef: no classical
  // Zariski decomposition can exist on this threefold.
  instance.expectations.push_back(
      expect_zariski("alpha", {Rational(0), Rational(0), Rational(0)}));
  return instance;
}

ExampleInstance build_ruled_surface() {
  ExampleInstance instance{
      "ruled-surface",
      BundleModel(BaseGeometry::curve(), {Vec{0}, Vec{2}}),
      {},
      {}};
  instance.classes.emplace("alpha", BundleClass{Vec{-1}, 1});
  // Frozen from the bisection oracle: nu = (0, 1/2), so N = (-1, 1/2)
  // and Z = (0, 1/2).
  instance.classes.emplace("zariski_projection",
                           BundleClass{Vec{0}, Rational(1, 2)});

  instance.expectations.push_back(expect_flag(Expectation::Kind::Psef, "alpha", true));
  instance.expectations.push_back(expect_flag(Expectation::Kind::Big, "alpha", true));
  instance.expectations.push_back(expect_flag(Expectation::Kind::Nef, "alpha", false));
  instance.expectations.push_back(expect_nu("alpha", Stratum{{0}}, 0));
  instance.expectations.push_back(expect_nu("alpha", Stratum{{1}}, Rational(1, 2)));
  instance.expectations.push_back(
      expect_zariski("alpha", {Rational(0), Rational(1, 2)}));
  instance.expectations.push_back(
      expect_flag(Expectation::Kind::Nef, "zariski_projection", true));
  instance.expectations.push_back(expect_codim("alpha", 0));
  return instance;
}

const std::vector<ExampleInstance>& all_instances() {
  static const std::vector<ExampleInstance> instances = [] {
    std::vector<ExampleInstance> out;
    out.push_back(build_hierarchy(1, 2, -1));
    out.push_back(build_hierarchy(2, 2, -1));
    out.push_back(build_hierarchy(3, 2, -1));
    out.push_back(build_ruled_surface());
    out.push_back(build_no_zariski_threefold());
    out.push_back(build_ample_pair(Rational(3, 2)));
    {
      ExampleInstance nef_end = build_ample_pair(2);
      nef_end.name = "ample-pair-nef";
      out.push_back(std::move(nef_end));
    }
    out.push_back(build_anticanonical(2, 1, 5));
    return out;
  }();
  return instances;
}

const ExampleInstance& instance_by_name(const std::string& name) {
  for (const ExampleInstance& instance : all_instances()) {
    if (instance.name == name) return instance;
  }
  std::string known;
  for (const ExampleInstance& instance : all_instances()) {
    if (!known.empty()) known += ", ";
    known += instance.name;
  }
  throw std::out_of_range("unknown example '" + name + "' (known: " + known +
                          ")");
}

}  // namespace nefkit
