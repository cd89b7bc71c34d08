#include "nefkit/cone.hpp"

#include <algorithm>
#include <numeric>

#include "nefkit/linprog.hpp"

namespace nefkit {

namespace {

// Positive rescale to a primitive integer vector; direction is preserved
// (rays and facet normals are oriented objects).
Vec canonical_scale(const Vec& v) {
  Integer lcm_den = 1;
  for (const auto& e : v) {
    lcm_den = boost::multiprecision::lcm(lcm_den, denominator(e));
  }
  Integer gcd_num = 0;
  std::vector<Integer> scaled(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    scaled[i] = numerator(v[i]) * (lcm_den / denominator(v[i]));
    gcd_num = boost::multiprecision::gcd(gcd_num, scaled[i]);
  }
  Vec out(v.size());
  if (gcd_num == 0) return out;
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = Rational(scaled[i] / gcd_num);
  return out;
}

void sort_dedupe(std::vector<Vec>& vecs) {
  std::sort(vecs.begin(), vecs.end(),
            [](const Vec& a, const Vec& b) { return a.lex_less(b); });
  vecs.erase(std::unique(vecs.begin(), vecs.end()), vecs.end());
}

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(std::vector<Vec>& m) {
  std::vector<std::size_t> pivots;
  if (m.empty()) return pivots;
  const std::size_t cols = m[0].size();
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < m.size(); ++col) {
    std::size_t sel = row;
    while (sel < m.size() && m[sel][col] == 0) ++sel;
    if (sel == m.size()) continue;
    std::swap(m[row], m[sel]);
    const Rational inv = 1 / m[row][col];
    m[row] = m[row] * inv;
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r != row && m[r][col] != 0) m[r] = m[r] - m[row] * m[r][col];
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

std::size_t rank_of(std::vector<Vec> m) { return rref(m).size(); }

// Basis of {x : row . x = 0 for every row}.
std::vector<Vec> nullspace(std::size_t dim, std::vector<Vec> rows) {
  const std::vector<std::size_t> pivots = rref(rows);
  std::vector<bool> is_pivot(dim, false);
  for (std::size_t p : pivots) is_pivot[p] = true;
  std::vector<Vec> basis;
  for (std::size_t col = 0; col < dim; ++col) {
    if (is_pivot[col]) continue;
    Vec v(dim);
    v[col] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) {
      v[pivots[r]] = -rows[r][col];
    }
    basis.push_back(canonical_scale(v));
  }
  return basis;
}

// Generators of the cone {x : row . x >= 0 for every row}: one +/- pair per
// lineality basis vector plus the extreme rays of the pointed part. Extreme
// rays are found by brute-force enumeration of tight-row subsets, which is
// exact and entirely adequate at the ranks that occur here.
std::vector<Vec> polar_rays(std::size_t dim, const std::vector<Vec>& rows_in) {
  std::vector<Vec> rows;
  for (const auto& r : rows_in) {
    if (!r.is_zero()) rows.push_back(r);
  }
  const std::vector<Vec> lineality = nullspace(dim, rows);
  const std::size_t pointed_dim = dim - lineality.size();

  std::vector<Vec> out;
  for (const auto& v : lineality) {
    out.push_back(v);
    out.push_back(canonical_scale(-v));
  }
  if (pointed_dim == 0) {
    sort_dedupe(out);
    return out;
  }

  const std::size_t subset_size = pointed_dim - 1;
  if (subset_size > rows.size()) {
    sort_dedupe(out);
    return out;
  }
  const auto feasible = [&](const Vec& v) {
    return std::all_of(rows.begin(), rows.end(),
                       [&](const Vec& r) { return dot(r, v) >= 0; });
  };

  std::vector<std::size_t> pick(subset_size);
  std::iota(pick.begin(), pick.end(), 0);
  std::vector<Vec> rays;
  bool more = true;
  while (more) {
    std::vector<Vec> system = lineality;  // stay inside the pointed part
    for (std::size_t idx : pick) system.push_back(rows[idx]);
    const std::vector<Vec> sol = nullspace(dim, std::move(system));
    if (sol.size() == 1) {
      const Vec& candidate = sol[0];
      if (feasible(candidate)) rays.push_back(candidate);
      const Vec negated = canonical_scale(-candidate);
      if (feasible(negated)) rays.push_back(negated);
    }

    more = false;
    for (std::size_t i = subset_size; i-- > 0;) {
      if (pick[i] + (subset_size - i) < rows.size()) {
        ++pick[i];
        for (std::size_t j = i + 1; j < subset_size; ++j) pick[j] = pick[j - 1] + 1;
        more = true;
        break;
      }
    }
  }
  out.insert(out.end(), rays.begin(), rays.end());
  sort_dedupe(out);
  return out;
}

std::vector<Vec> checked_canonical(std::size_t rank, std::vector<Vec> vecs) {
  std::vector<Vec> out;
  for (auto& v : vecs) {
    if (v.size() != rank) {
      throw DimensionError("cone data of length " + std::to_string(v.size()) +
                           " in ambient rank " + std::to_string(rank));
    }
    Vec scaled = canonical_scale(v);
    if (!scaled.is_zero()) out.push_back(std::move(scaled));
  }
  sort_dedupe(out);
  return out;
}

}  // namespace

Cone Cone::from_generators(std::size_t rank, std::vector<Vec> generators) {
  Cone c;
  c.rank_ = rank;
  const std::vector<Vec> gens = checked_canonical(rank, std::move(generators));
  c.facets_ = polar_rays(rank, gens);
  c.generators_ = polar_rays(rank, c.facets_);
  c.dim_ = rank_of(c.generators_);
  c.lineality_dim_ = rank - rank_of(c.facets_);
  return c;
}

Cone Cone::from_facets(std::size_t rank, std::vector<Vec> facets) {
  Cone c;
  c.rank_ = rank;
  const std::vector<Vec> rows = checked_canonical(rank, std::move(facets));
  c.generators_ = polar_rays(rank, rows);
  c.facets_ = polar_rays(rank, c.generators_);
  c.dim_ = rank_of(c.generators_);
  c.lineality_dim_ = rank - rank_of(c.facets_);
  return c;
}

Cone Cone::zero(std::size_t rank) { return from_generators(rank, {}); }

Cone Cone::full_space(std::size_t rank) { return from_facets(rank, {}); }

bool Cone::contains(const Vec& x) const {
  if (x.size() != rank_) throw DimensionError("point rank mismatch");
  return std::all_of(facets_.begin(), facets_.end(),
                     [&](const Vec& f) { return dot(f, x) >= 0; });
}

bool Cone::contains_via_generators(const Vec& x) const {
  if (x.size() != rank_) throw DimensionError("point rank mismatch");
  LinearProgram lp;
  lp.objective = Vec(generators_.size());
  lp.nonneg.assign(generators_.size(), true);
  for (std::size_t i = 0; i < rank_; ++i) {
    LPRow row;
    row.coeffs = Vec(generators_.size());
    for (std::size_t g = 0; g < generators_.size(); ++g) {
      row.coeffs[g] = generators_[g][i];
    }
    row.rhs = x[i];
    row.rel = Relation::Equal;
    lp.rows.push_back(std::move(row));
  }
  return solve_lp(lp).status == LPStatus::Optimal;
}

bool Cone::contains_interior(const Vec& x) const {
  if (x.size() != rank_) throw DimensionError("point rank mismatch");
  if (!is_full_dimensional()) return false;
  return std::all_of(facets_.begin(), facets_.end(),
                     [&](const Vec& f) { return dot(f, x) > 0; });
}

bool Cone::equals(const Cone& other) const {
  if (rank_ != other.rank_) return false;
  return std::all_of(generators_.begin(), generators_.end(),
                     [&](const Vec& g) { return other.contains(g); }) &&
         std::all_of(other.generators_.begin(), other.generators_.end(),
                     [&](const Vec& g) { return contains(g); });
}

Cone dual_description(const Cone& c) { return c; }

Cone sum(const Cone& a, const Cone& b) {
  if (a.rank() != b.rank()) throw DimensionError("cone rank mismatch in sum");
  std::vector<Vec> gens = a.generators();
  gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  return Cone::from_generators(a.rank(), std::move(gens));
}

Cone intersect(const Cone& a, const Cone& b) {
  if (a.rank() != b.rank()) throw DimensionError("cone rank mismatch in intersect");
  std::vector<Vec> facets = a.facets();
  facets.insert(facets.end(), b.facets().begin(), b.facets().end());
  return Cone::from_facets(a.rank(), std::move(facets));
}

}  // namespace nefkit
