#include "freiman/ideal.hpp"

#include <algorithm>
#include <numeric>

#include "freiman/error.hpp"
#include "freiman/exact_linalg.hpp"

namespace freiman {

namespace {

Int weighted_degree(std::span<const Int> weights, std::span<const Int> c) {
  Int s = 0;
  for (std::size_t i = 0; i < c.size(); ++i) s = checked_add(s, checked_mul(weights[i], c[i]));
  return s;
}

bool is_unit(std::span<const Int> c) {
  return std::all_of(c.begin(), c.end(), [](Int v) { return v == 0; });
}

}  // namespace

bool divides(std::span<const Int> a, std::span<const Int> b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

bool is_antichain(const PointSet& points) {
  for (std::size_t i = 0; i < points.size(); ++i)
    for (std::size_t j = 0; j < points.size(); ++j)
      if (i != j && divides(points[i], points[j])) return false;
  return true;
}

MonomialIdeal::MonomialIdeal(PointSet generators, std::optional<Witness> witness)
    : generators_(std::move(generators)), witness_(std::move(witness)) {
  if (generators_.empty()) throw PreconditionError("the zero ideal is not supported");
  for (std::size_t i = 0; i < generators_.size(); ++i)
    if (is_unit(generators_[i])) throw PreconditionError("the unit ideal is not supported");
  if (witness_) {
    if (witness_->weights.size() != ambient_dim())
      throw PreconditionError("witness length does not match the ambient dimension");
    for (Int a : witness_->weights)
      if (a <= 0) throw PreconditionError("witness weights must be strictly positive");
    for (std::size_t i = 0; i < generators_.size(); ++i)
      if (weighted_degree(witness_->weights, generators_[i]) != witness_->degree)
        throw PreconditionError("witness degree does not hold for every generator");
  } else if (!is_antichain(generators_)) {
    throw PreconditionError("generators do not form an antichain under divisibility");
  }
}

MonomialIdeal minimalize(const std::vector<Monomial>& monomials) {
  if (monomials.empty()) throw PreconditionError("cannot build an ideal from no monomials");
  const std::size_t dim = monomials.front().exponent.dim();
  std::vector<ExponentVector> points;
  points.reserve(monomials.size());
  for (const auto& m : monomials) {
    if (m.exponent.dim() != dim) throw PreconditionError("monomials have different numbers of variables");
    points.push_back(m.exponent);
  }
  PointSet unique(dim, points);
  // Divisors have smaller total degree, so scanning by degree lets each
  // candidate be tested against the already kept generators only.
  std::vector<std::size_t> order(unique.size());
  std::iota(order.begin(), order.end(), 0);
  std::vector<Int> degree(unique.size());
  for (std::size_t i = 0; i < unique.size(); ++i) degree[i] = unique.point(i).total_degree();
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return degree[a] < degree[b]; });
  std::vector<Int> kept;
  std::size_t kept_count = 0;
  for (std::size_t idx : order) {
    auto c = unique[idx];
    bool redundant = false;
    for (std::size_t k = 0; k < kept_count && !redundant; ++k)
      redundant = divides(std::span<const Int>(kept.data() + k * dim, dim), c);
    if (!redundant) {
      kept.insert(kept.end(), c.begin(), c.end());
      ++kept_count;
    }
  }
  return MonomialIdeal(PointSet::from_rows(dim, std::move(kept)));
}

MonomialIdeal power_by_products(const MonomialIdeal& ideal, Int k) {
  if (k < 1) throw PreconditionError("power exponent must be at least 1");
  const std::size_t dim = ideal.ambient_dim();
  const PointSet& g = ideal.generators();
  std::vector<Int> current(g.flat().begin(), g.flat().end());
  for (Int step = 2; step <= k; ++step) {
    std::vector<Int> next;
    for (std::size_t i = 0; i < current.size(); i += dim)
      for (std::size_t j = 0; j < g.size(); ++j) {
        auto b = g[j];
        for (std::size_t c = 0; c < dim; ++c) next.push_back(checked_add(current[i + c], b[c]));
      }
    current = std::move(next);
  }
  std::vector<Monomial> monomials;
  for (std::size_t i = 0; i < current.size(); i += dim)
    monomials.push_back({ExponentVector(std::vector<Int>(current.begin() + static_cast<std::ptrdiff_t>(i),
                                                         current.begin() + static_cast<std::ptrdiff_t>(i + dim)))});
  return minimalize(monomials);
}

MonomialIdeal power(const MonomialIdeal& ideal, Int k) {
  if (k < 1) throw PreconditionError("power exponent must be at least 1");
  if (!ideal.witness()) return power_by_products(ideal, k);
  // Equal weighted degree rules out strict divisibility, so kG(I) is
  // already minimal.
  Witness w = *ideal.witness();
  w.degree = checked_mul(w.degree, k);
  return MonomialIdeal(dilate(ideal.generators(), k), std::move(w));
}

std::optional<Witness> quasi_equigenerated_witness(const MonomialIdeal& ideal) {
  const PointSet& g = ideal.generators();
  const std::size_t dim = g.dim();
  const Int d0 = g.point(0).total_degree();
  bool equigenerated = true;
  for (std::size_t i = 1; i < g.size() && equigenerated; ++i) equigenerated = g.point(i).total_degree() == d0;
  if (equigenerated) return Witness{std::vector<Int>(dim, 1), d0};

  IntMatrix directions(0, 0);
  std::vector<Int> diff(dim);
  for (std::size_t i = 1; i < g.size(); ++i) {
    for (std::size_t c = 0; c < dim; ++c) diff[c] = checked_sub(g[i][c], g[0][c]);
    directions.append_row(diff);
  }
  auto weights = positive_kernel_vector(directions);
  if (!weights) return std::nullopt;
  const Int degree = weighted_degree(*weights, g[0]);
  return Witness{std::move(*weights), degree};
}

Witness require_witness(const MonomialIdeal& ideal) {
  if (ideal.witness()) return *ideal.witness();
  auto w = quasi_equigenerated_witness(ideal);
  if (!w) throw PreconditionError("ideal is not quasi-equigenerated: no positive weight vector levels its generators");
  return *w;
}

MonomialIdeal with_witness(const MonomialIdeal& ideal) {
  if (ideal.witness()) return ideal;
  return MonomialIdeal(ideal.generators(), require_witness(ideal));
}

}  // namespace freiman
