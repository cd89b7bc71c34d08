#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "nefkit/bundle.hpp"

namespace nefkit {

/// One machine-checkable assertion about a named class of an instance.
/// Every kind is decidable by calling BundleModel operations alone.
struct Expectation {
  enum class Kind {
    Psef,
    Nef,
    Big,
    NefCodim,
    Multiplicity,
    ZariskiCoefficients,
    ConeMember,  // class membership in positivity_cone(level_a)
    ConeEqual,   // positivity_cone(level_a) vs positivity_cone(level_b)
  };

  Kind kind;
  std::string class_name;  // unused for ConeEqual
  bool flag = true;        // expected truth for Psef/Nef/Big/ConeMember/ConeEqual
  std::size_t codim = 0;   // NefCodim
  Stratum stratum;         // Multiplicity
  Rational value;          // Multiplicity
  std::vector<Rational> coefficients;  // ZariskiCoefficients
  std::size_t level_a = 0, level_b = 0;
};

/// A worked model together with the exact values it is expected to produce.
/// The recorded numbers are derived from the independent oracles, never from
/// the operations they are meant to test.
struct ExampleInstance {
  std::string name;
  BundleModel model;
  std::map<std::string, BundleClass> classes;
  std::vector<Expectation> expectations;
};

struct CheckResult {
  std::string description;
  bool passed = false;
  std::string expected;
  std::string actual;
};

struct Report {
  std::vector<CheckResult> checks;
  bool all_passed() const;
};

/// Evaluates every expectation; failures are reported, not thrown.
Report verify_expectations(const ExampleInstance& instance);

/// P(O + O(a) + ... + O(a)) over a curve with k+1 ample summands of degree
/// a > 0 and the class alpha = (b, 1) with b <= 0, b + a >= 0. For b < 0 the
/// class is nef in codimension exactly k with multiplicity -b/a along the
/// deepest stratum {1,...,k+1}; for b = 0 it is nef.
ExampleInstance build_hierarchy(std::size_t k, const Rational& a,
                                const Rational& b);

/// P(A_1 + A_2) over a base with two-dimensional class lattice whose nef
/// cone is the first quadrant; fibers (1,1) and (2,1), beta = (-2,0) and the
/// family alpha_t = (beta, t) for 0 < t <= 2. At t = 2 the class is nef;
/// below it, one hypersurface stratum picks up multiplicity 2 - t, so a nef
/// class splits as a non-modified-nef class plus the psef class (2 - t) h.
ExampleInstance build_ample_pair(const Rational& t);

/// P(A^p + A^(-q)) over a curve of genus g >= 2, classes identified with
/// degrees (deg K_Y = 2g - 2, deg A = 1). The anticanonical class
/// (q - p - (2g - 2), 2) is big when p + q > 2g - 2 but carries multiplicity
/// 1 + (2g - 2)/(p + q) > 1 along the section cut out by the first summand,
/// hence is not even nef in codimension 1.
ExampleInstance build_anticanonical(std::size_t g, std::size_t p,
                                    std::size_t q);

/// The k = 1 hierarchy threefold: all divisorial multiplicities vanish, so
/// the divisorial Zariski decomposition is alpha = alpha + 0 with alpha not
/// nef - no decomposition with nef positive part can exist.
ExampleInstance build_no_zariski_threefold();

/// P(O + O(2)) over a curve with alpha = (-1, 1): the surface case where the
/// decomposition works, with N = (-1, 1/2) and nef projection Z = (0, 1/2).
ExampleInstance build_ruled_surface();

/// Every instance shipped with the repository, keyed by CLI name.
const std::vector<ExampleInstance>& all_instances();

/// Lookup by name; throws std::out_of_range with the known names listed.
const ExampleInstance& instance_by_name(const std::string& name);

}  // namespace nefkit
