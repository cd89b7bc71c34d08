#include "nefkit/bundle.hpp"

#include <algorithm>
#include <string>

namespace nefkit {

BaseGeometry BaseGeometry::curve(std::optional<Rational> canonical_degree) {
  BaseGeometry base;
  base.picard_rank = 1;
  base.dim = 1;
  base.nef_cone = Cone::from_generators(1, {Vec{1}});
  base.nef_equals_psef = true;
  if (canonical_degree) base.canonical = Vec{*canonical_degree};
  return base;
}

void BaseGeometry::validate() const {
  if (picard_rank == 0) throw ModelError("base picard rank must be >= 1");
  if (dim == 0) throw ModelError("base dimension must be >= 1");
  if (!nef_equals_psef) {
    throw ModelError("model requires the base nef cone to equal its psef cone");
  }
  if (nef_cone.rank() != picard_rank) {
    throw ModelError("base nef cone lives in rank " +
                     std::to_string(nef_cone.rank()) + ", expected " +
                     std::to_string(picard_rank));
  }
  if (!nef_cone.is_salient()) throw ModelError("base nef cone is not salient");
  if (!nef_cone.is_full_dimensional()) {
    throw ModelError("base nef cone is not full-dimensional");
  }
  if (canonical && canonical->size() != picard_rank) {
    throw ModelError("base canonical class has wrong rank");
  }
}

BundleClass BundleClass::operator+(const BundleClass& other) const {
  return {beta + other.beta, lambda + other.lambda};
}

BundleClass BundleClass::operator-(const BundleClass& other) const {
  return {beta - other.beta, lambda - other.lambda};
}

BundleClass BundleClass::operator*(const Rational& scalar) const {
  return {beta * scalar, lambda * scalar};
}

bool Stratum::contains(std::size_t i) const {
  return std::binary_search(indices.begin(), indices.end(), i);
}

bool Stratum::subset_of(const Stratum& other) const {
  return std::includes(other.indices.begin(), other.indices.end(),
                       indices.begin(), indices.end());
}

std::string Stratum::label() const {
  std::string out = "{";
  for (std::size_t i = 0; i < indices.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(indices[i]);
  }
  return out + "}";
}

BundleModel::BundleModel(BaseGeometry base, std::vector<Vec> fibers)
    : base_(std::move(base)), fibers_(std::move(fibers)) {
  base_.validate();
  if (fibers_.empty()) throw ModelError("at least one bundle summand required");
  for (const auto& l : fibers_) {
    if (l.size() != base_.picard_rank) {
      throw ModelError("fiber class rank mismatch");
    }
  }
  // (beta, lambda) is psef iff it is a nonnegative combination of base nef
  // classes at lambda = 0 and the rays (-l_i, 1).
  std::vector<Vec> gens;
  for (const auto& g : base_.nef_cone.generators()) gens.push_back(append(g, 0));
  for (const auto& l : fibers_) gens.push_back(append(-l, 1));
  psef_cone_ = Cone::from_generators(class_rank(), std::move(gens));
}

void BundleModel::check_class(const BundleClass& alpha) const {
  if (alpha.beta.size() != base_.picard_rank) {
    throw DimensionError("class beta has rank " +
                         std::to_string(alpha.beta.size()) + ", expected " +
                         std::to_string(base_.picard_rank));
  }
}

void BundleModel::check_stratum(const Stratum& stratum) const {
  if (stratum.indices.size() > r()) {
    throw std::domain_error("stratum index set must be a proper subset");
  }
  std::size_t prev = 0;
  bool first = true;
  for (std::size_t i : stratum.indices) {
    if (i > r()) throw std::domain_error("stratum index out of range");
    if (!first && i <= prev) {
      throw std::domain_error("stratum indices must be strictly increasing");
    }
    prev = i;
    first = false;
  }
}

bool BundleModel::is_psef(const BundleClass& alpha) const {
  check_class(alpha);
  return psef_cone_.contains(alpha.coordinates());
}

bool BundleModel::is_nef(const BundleClass& alpha) const {
  check_class(alpha);
  if (alpha.lambda < 0) return false;
  return std::all_of(fibers_.begin(), fibers_.end(), [&](const Vec& l) {
    return base_.nef_cone.contains(alpha.beta + l * alpha.lambda);
  });
}

bool BundleModel::is_big(const BundleClass& alpha) const {
  check_class(alpha);
  return psef_cone_.contains_interior(alpha.coordinates());
}

LinearProgram BundleModel::multiplicity_lp(const BundleClass& alpha,
                                           const Stratum& stratum) const {
  check_class(alpha);
  check_stratum(stratum);
  const std::size_t k = fibers_.size();
  LinearProgram lp;
  lp.objective = Vec(k);
  for (std::size_t i : stratum.indices) lp.objective[i] = 1;
  lp.nonneg.assign(k, true);

  LPRow total;
  total.coeffs = Vec(k);
  for (std::size_t i = 0; i < k; ++i) total.coeffs[i] = 1;
  total.rhs = alpha.lambda;
  total.rel = Relation::Equal;
  lp.rows.push_back(std::move(total));

  for (const Vec& f : base_.nef_cone.facets()) {
    LPRow row;
    row.coeffs = Vec(k);
    for (std::size_t i = 0; i < k; ++i) row.coeffs[i] = dot(f, fibers_[i]);
    row.rhs = -dot(f, alpha.beta);
    row.rel = Relation::GreaterEqual;
    lp.rows.push_back(std::move(row));
  }
  return lp;
}

MultiplicityResult BundleModel::min_multiplicity(const BundleClass& alpha,
                                                 const Stratum& stratum) const {
  const LinearProgram lp = multiplicity_lp(alpha, stratum);
  MultiplicityResult result;
  result.lp_outcome = solve_lp(lp);
  // The weights are confined to a dilated simplex, so the program is never
  // unbounded: it is either solvable or alpha is not psef.
  if (result.lp_outcome.status != LPStatus::Optimal) {
    result.psef = false;
    return result;
  }
  result.psef = true;
  result.nu = result.lp_outcome.value;
  const Vec& w = result.lp_outcome.primal;
  std::vector<Rational> u, v;
  Vec point = alpha.beta;
  for (std::size_t i = 0; i < fibers_.size(); ++i) {
    point = point + fibers_[i] * w[i];
    (stratum.contains(i) ? u : v).push_back(w[i]);
  }
  result.weights_stratum = Vec(std::move(u));
  result.weights_rest = Vec(std::move(v));
  result.nef_point = std::move(point);
  return result;
}

std::vector<Stratum> BundleModel::strata() const {
  std::vector<Stratum> out;
  const std::size_t count = fibers_.size();
  for (std::size_t size = 1; size < count; ++size) {
    std::vector<std::size_t> pick(size);
    for (std::size_t i = 0; i < size; ++i) pick[i] = i;
    bool more = true;
    while (more) {
      out.push_back(Stratum{pick});
      more = false;
      for (std::size_t i = size; i-- > 0;) {
        if (pick[i] + (size - i) < count) {
          ++pick[i];
          for (std::size_t j = i + 1; j < size; ++j) pick[j] = pick[j - 1] + 1;
          more = true;
          break;
        }
      }
    }
  }
  return out;
}

std::optional<std::size_t> BundleModel::nef_codim(
    const BundleClass& alpha) const {
  if (!is_psef(alpha)) return std::nullopt;
  for (const Stratum& s : strata()) {
    const MultiplicityResult m = min_multiplicity(alpha, s);
    if (m.nu > 0) return s.codim() - 1;
  }
  // Vanishing multiplicity along every stratum forces an empty non-nef
  // locus, so the class is nef outright.
  return dim();
}

std::optional<ZariskiDecomposition> BundleModel::zariski(
    const BundleClass& alpha) const {
  if (!is_psef(alpha)) return std::nullopt;
  ZariskiDecomposition dec;
  BundleClass negative{Vec(base_.picard_rank), Rational(0)};
  for (std::size_t i = 0; i <= r(); ++i) {
    const MultiplicityResult m = min_multiplicity(alpha, Stratum{{i}});
    dec.coefficients.push_back(m.nu);
    negative = negative + BundleClass{-fibers_[i], Rational(1)} * m.nu;
  }
  dec.negative = negative;
  dec.projection = alpha - negative;
  return dec;
}

std::optional<std::vector<std::pair<Stratum, Rational>>>
BundleModel::non_nef_table(const BundleClass& alpha) const {
  if (!is_psef(alpha)) return std::nullopt;
  std::vector<std::pair<Stratum, Rational>> table;
  for (const Stratum& s : strata()) {
    table.emplace_back(s, min_multiplicity(alpha, s).nu);
  }
  return table;
}

Cone BundleModel::positivity_cone(std::size_t k) const {
  if (k > dim()) throw std::domain_error("codimension exceeds the dimension");
  // Nef in codimension k cuts the psef cone by the vanishing condition at
  // every stratum of codimension <= min(k, r): the weights must be able to
  // avoid the stratum entirely, i.e. (beta, lambda) lies in the cone swept
  // out by the complementary rays alone.
  Cone result = psef_cone_;
  const std::size_t depth = std::min(k, r());
  for (const Stratum& s : strata()) {
    if (s.codim() > depth) break;  // strata are ordered by codimension
    std::vector<Vec> gens;
    for (const auto& g : base_.nef_cone.generators()) gens.push_back(append(g, 0));
    for (std::size_t j = 0; j <= r(); ++j) {
      if (!s.contains(j)) gens.push_back(append(-fibers_[j], 1));
    }
    result = intersect(result, Cone::from_generators(class_rank(), std::move(gens)));
  }
  return result;
}

BundleClass BundleModel::anticanonical() const {
  if (!base_.canonical) {
    throw ModelError("base canonical class required for the anticanonical");
  }
  Vec beta = -*base_.canonical;
  for (const auto& l : fibers_) beta = beta - l;
  return {std::move(beta), Rational(fibers_.size())};
}

Rational BundleModel::top_degree(const BundleClass& alpha) const {
  check_class(alpha);
  if (!base_.is_curve()) {
    throw std::domain_error("top self-intersection needs a curve base");
  }
  // (pi^* beta)^2 = 0 over a curve, so only two terms of the expansion of
  // (pi^* beta + lambda h)^(r+1) survive.
  Rational sum_deg = 0;
  for (const auto& l : fibers_) sum_deg += l[0];
  Rational lambda_pow_r = 1;
  for (std::size_t i = 0; i < r(); ++i) lambda_pow_r *= alpha.lambda;
  return lambda_pow_r * alpha.lambda * sum_deg +
         Rational(fibers_.size()) * lambda_pow_r * alpha.beta[0];
}

}  // namespace nefkit
