#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

#include "nefkit/cone.hpp"
#include "nefkit/linprog.hpp"
#include "nefkit/rational.hpp"

namespace nefkit {

/// Thrown when a model violates its standing assumptions (non-salient nef
/// cone, nef cone != psef cone, shape mismatches between base and fibers).
class ModelError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The base manifold Y: just its class-lattice rank, dimension and nef cone.
/// The standing assumption is that the nef and psef cones of Y coincide, so
/// every base positivity question is a nef-cone membership test.
struct BaseGeometry {
  std::size_t picard_rank = 1;  // rank of the class lattice of Y
  std::size_t dim = 1;          // complex dimension m of Y
  Cone nef_cone = Cone::from_generators(1, {Vec{1}});
  bool nef_equals_psef = true;
  std::optional<Vec> canonical;  // class of K_Y, when known

  /// Curve bases identify classes with their degree, which unlocks the
  /// top self-intersection formula.
  bool is_curve() const { return picard_rank == 1 && dim == 1; }

  static BaseGeometry curve(std::optional<Rational> canonical_degree = {});

  void validate() const;
};

/// A class pi^* beta + lambda h on the projectivized bundle, in the
/// coordinates of the split class lattice N^1(Y) + Q h.
struct BundleClass {
  Vec beta;
  Rational lambda;

  BundleClass operator+(const BundleClass& other) const;
  BundleClass operator-(const BundleClass& other) const;
  BundleClass operator*(const Rational& scalar) const;
  bool operator==(const BundleClass& other) const = default;

  Vec coordinates() const { return append(beta, lambda); }
};

/// Index set I of coordinate hypersurfaces; the stratum is the intersection
/// of the D_i over I and has codimension |I|. I must be a proper subset of
/// {0,...,r}; the empty set denotes the whole space.
struct Stratum {
  std::vector<std::size_t> indices;  // strictly increasing

  std::size_t codim() const { return indices.size(); }
  bool contains(std::size_t i) const;
  bool subset_of(const Stratum& other) const;
  std::string label() const;

  bool operator==(const Stratum& other) const = default;
};

/// Empty-or-value outcome of a generic minimal multiplicity query. Value
/// outcomes carry the optimal weights split along the stratum and the nef
/// point of the base they produce; NotPsef outcomes carry the Farkas
/// certificate of the underlying linear program.
struct MultiplicityResult {
  bool psef = false;
  Rational nu;          // Value only
  Vec weights_stratum;  // u over I (Value only)
  Vec weights_rest;     // v over J (Value only)
  Vec nef_point;        // beta + sum u_i l_i + sum v_j l_j (Value only)
  LPOutcome lp_outcome;  // full certificate either way
};

struct ZariskiDecomposition {
  std::vector<Rational> coefficients;  // nu_i along each divisorial stratum
  BundleClass negative;                // N = sum nu_i (-l_i, 1)
  BundleClass projection;              // Z = alpha - N
};

/// X = P(L_0 + ... + L_r) over the base, encoded by the first Chern classes
/// l_i of the summands. Immutable after construction; the psef cone of X is
/// computed once, eagerly, so all queries are pure and thread-safe.
class BundleModel {
 public:
  BundleModel(BaseGeometry base, std::vector<Vec> fibers);

  const BaseGeometry& base() const { return base_; }
  const std::vector<Vec>& fibers() const { return fibers_; }

  std::size_t r() const { return fibers_.size() - 1; }
  std::size_t dim() const { return base_.dim + r(); }       // n = m + r
  std::size_t class_rank() const { return base_.picard_rank + 1; }

  /// Pseudo-effective cone of X in (beta, lambda) coordinates:
  /// the nef cone of the base at lambda = 0 swept by the rays (-l_i, 1).
  const Cone& psef_cone() const { return psef_cone_; }

  bool is_psef(const BundleClass& alpha) const;
  /// Nef iff lambda >= 0 and beta + lambda l_i is nef on the base for
  /// every summand; convexity of the nef cone reduces the hull condition
  /// to its vertices.
  bool is_nef(const BundleClass& alpha) const;
  /// Big iff interior point of the psef cone.
  bool is_big(const BundleClass& alpha) const;

  /// The exact linear program behind min_multiplicity, exposed so results
  /// can be re-verified independently of this class: variables w_0..w_r >= 0,
  /// sum w = lambda, beta + sum w_k l_k in the base nef cone, minimizing the
  /// weight that falls on the stratum indices.
  LinearProgram multiplicity_lp(const BundleClass& alpha,
                                const Stratum& stratum) const;

  /// Generic minimal multiplicity of alpha along the stratum.
  MultiplicityResult min_multiplicity(const BundleClass& alpha,
                                      const Stratum& stratum) const;

  /// Largest k such that the multiplicity vanishes along every stratum of
  /// codimension <= k; returns n when they all vanish (the class is then
  /// nef), and nullopt when alpha is not psef.
  std::optional<std::size_t> nef_codim(const BundleClass& alpha) const;

  /// Divisorial Zariski decomposition alpha = Z + N with
  /// N = sum nu_i (-l_i, 1); nullopt when alpha is not psef.
  std::optional<ZariskiDecomposition> zariski(const BundleClass& alpha) const;

  /// Multiplicities along every proper nonempty stratum, ordered by
  /// codimension then lexicographically; nullopt when alpha is not psef.
  std::optional<std::vector<std::pair<Stratum, Rational>>> non_nef_table(
      const BundleClass& alpha) const;

  /// The cone of classes nef in codimension k, 0 <= k <= n. k = 0 is the
  /// psef cone and k = n the nef cone.
  Cone positivity_cone(std::size_t k) const;

  /// -K_X = (-K_Y - sum l_i, r + 1); requires the base canonical class.
  BundleClass anticanonical() const;

  /// alpha^n over a curve base:
  /// lambda^(r+1) sum_i deg l_i + (r+1) lambda^r deg beta.
  Rational top_degree(const BundleClass& alpha) const;

  /// All proper nonempty strata in canonical order (|I| ascending, then
  /// lexicographic).
  std::vector<Stratum> strata() const;

  void check_class(const BundleClass& alpha) const;
  void check_stratum(const Stratum& stratum) const;

 private:
  BaseGeometry base_;
  std::vector<Vec> fibers_;
  Cone psef_cone_ = Cone::zero(1);
};

}  // namespace nefkit
