#pragma once

#include <cstddef>
#include <vector>

#include "nefkit/rational.hpp"

namespace nefkit {

/// Closed polyhedral cone with both descriptions kept in canonical form:
/// generators are the extreme rays (plus +/- pairs spanning the lineality
/// space), facets are primitive inward normals f meaning f.x >= 0 (plus
/// +/- pairs cutting out the linear span when the cone is not
/// full-dimensional). Both lists are computed eagerly at construction, so
/// instances are immutable and freely shareable across threads.
class Cone {
 public:
  static Cone from_generators(std::size_t rank, std::vector<Vec> generators);
  static Cone from_facets(std::size_t rank, std::vector<Vec> facets);
  static Cone zero(std::size_t rank);
  static Cone full_space(std::size_t rank);

  std::size_t rank() const { return rank_; }
  const std::vector<Vec>& generators() const { return generators_; }
  const std::vector<Vec>& facets() const { return facets_; }

  /// Dimension of the linear span.
  std::size_t dim() const { return dim_; }
  /// Dimension of the largest linear subspace contained in the cone.
  std::size_t lineality_dim() const { return lineality_dim_; }

  bool is_salient() const { return lineality_dim_ == 0; }
  bool is_full_dimensional() const { return dim_ == rank_; }

  /// Membership via the facet inequalities.
  bool contains(const Vec& x) const;
  /// Membership via an exact LP over nonnegative generator combinations;
  /// must agree with contains() on every input.
  bool contains_via_generators(const Vec& x) const;
  /// Interior relative to the full ambient space: every facet strict.
  /// Non-full-dimensional cones have no such points.
  bool contains_interior(const Vec& x) const;

  bool equals(const Cone& other) const;

 private:
  Cone() = default;

  std::size_t rank_ = 0;
  std::vector<Vec> generators_;
  std::vector<Vec> facets_;
  std::size_t dim_ = 0;
  std::size_t lineality_dim_ = 0;
};

/// Identity conversion kept for symmetry with construction from a single
/// representation; idempotent because both lists are always present.
Cone dual_description(const Cone& c);

/// Minkowski sum: the cone generated by the union of the generator sets.
Cone sum(const Cone& a, const Cone& b);

/// Intersection: the cone cut out by the union of the facet sets.
Cone intersect(const Cone& a, const Cone& b);

}  // namespace nefkit
