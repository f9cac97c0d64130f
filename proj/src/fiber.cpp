#include "freiman/fiber.hpp"

#include "freiman/error.hpp"

namespace freiman {

Int analytic_spread(const MonomialIdeal& ideal) {
  require_witness(ideal);
  return static_cast<Int>(affine_dim(ideal.generators())) + 1;
}

std::vector<Int> mu_series(const MonomialIdeal& ideal, Int max_power, std::size_t cap) {
  if (max_power < 1) throw PreconditionError("series length must be at least 1");
  require_witness(ideal);
  const PointSet& g = ideal.generators();
  if (g.size() > cap) throw ResourceError("point set size exceeds the cap of " + std::to_string(cap));
  std::vector<Int> mu{1, static_cast<Int>(g.size())};
  PointSet acc = g;
  for (Int k = 2; k <= max_power; ++k) {
    acc = sumset(acc, g, cap);
    mu.push_back(static_cast<Int>(acc.size()));
  }
  return mu;
}

std::vector<Int> h_vector(std::span<const Int> mu, Int ell) {
  if (mu.empty() || mu[0] != 1) throw PreconditionError("a fiber cone series must start with 1");
  if (ell < 1) throw PreconditionError("analytic spread must be positive");
  std::vector<Int> h;
  h.reserve(mu.size());
  for (std::size_t k = 0; k < mu.size(); ++k) {
    Int v = mu[k];
    for (std::size_t i = 0; i < k; ++i) {
      const Int kk = static_cast<Int>(k - i);
      v = checked_sub(v, checked_mul(binomial(ell + kk - 1, kk), h[i]));
    }
    h.push_back(v);
  }
  return h;
}

std::vector<Int> mu_from_h(std::span<const Int> h, Int ell) {
  std::vector<Int> mu;
  mu.reserve(h.size());
  for (std::size_t k = 0; k < h.size(); ++k) {
    Int v = 0;
    for (std::size_t i = 0; i <= k; ++i) {
      const Int kk = static_cast<Int>(k - i);
      v = checked_add(v, checked_mul(binomial(ell + kk - 1, kk), h[i]));
    }
    mu.push_back(v);
  }
  return mu;
}

FiberProfile is_freiman(const MonomialIdeal& ideal, std::size_t cap) {
  FiberProfile p;
  p.ell = analytic_spread(ideal);
  p.mu_series = mu_series(ideal, 2, cap);
  p.h_partial = h_vector(p.mu_series, p.ell);
  p.bound2 = generalized_lower_bound(p.mu_series[1], p.ell, 2);
  p.h2 = checked_sub(p.mu_series[2], p.bound2);
  p.freiman = p.h2 == 0;
  return p;
}

GrowthReport growth_report_from_series(std::vector<Int> mu, Int ell) {
  GrowthReport r;
  r.ell = ell;
  r.h = h_vector(mu, ell);
  for (std::size_t k = 2; k < mu.size(); ++k) {
    GrowthRow row;
    row.k = static_cast<Int>(k);
    row.mu = mu[k];
    row.bound = generalized_lower_bound(mu[1], ell, row.k);
    row.equality = row.mu == row.bound;
    for (std::size_t i = 2; i <= k; ++i) {
      const Int kk = static_cast<Int>(k - i);
      row.partial_sum = checked_add(row.partial_sum, checked_mul(binomial(ell + kk - 1, kk), r.h[i]));
    }
    row.nonnegative = row.partial_sum >= 0;
    r.rows.push_back(row);
  }
  r.mu_series = std::move(mu);
  return r;
}

GrowthReport check_growth_identities(const MonomialIdeal& ideal, Int max_power, std::size_t cap) {
  if (max_power < 2) throw PreconditionError("growth identities need at least the second power");
  return growth_report_from_series(mu_series(ideal, max_power, cap), analytic_spread(ideal));
}

}  // namespace freiman
