#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "freiman/ideal.hpp"

namespace freiman {

/// Default guard on the size of any intermediate power I^k.
inline constexpr std::size_t kDefaultPointCap = 5'000'000;

/// Growth data of the fiber cone F(I) up to I^2, and the Freiman verdict.
struct FiberProfile {
  Int ell = 0;
  std::vector<Int> mu_series;  // [1, mu(I), mu(I^2)]
  std::vector<Int> h_partial;  // [1, h1, h2]
  bool freiman = false;
  Int bound2 = 0;
  Int h2 = 0;
};

/// One row of the growth table, 2 <= k <= K.
struct GrowthRow {
  Int k = 0;
  Int mu = 0;
  Int bound = 0;        // generalized_lower_bound(mu(I), ell, k)
  bool equality = false;
  Int partial_sum = 0;  // sum_{i=2}^{k} binomial(ell+k-i-1, k-i) h_i
  bool nonnegative = false;
};

struct GrowthReport {
  Int ell = 0;
  std::vector<Int> mu_series;
  std::vector<Int> h;
  std::vector<GrowthRow> rows;
};

/// Krull dimension of F(I): affine dimension of G(I) plus one. Throws
/// PreconditionError for ideals that are not quasi-equigenerated.
Int analytic_spread(const MonomialIdeal& ideal);

/// [1, mu(I), ..., mu(I^K)] by incremental dilation of G(I).
std::vector<Int> mu_series(const MonomialIdeal& ideal, Int max_power, std::size_t cap = kDefaultPointCap);

/// Coefficients h_0..h_{len-1} of the numerator of sum_k mu_k t^k written
/// over (1-t)^ell.
std::vector<Int> h_vector(std::span<const Int> mu, Int ell);

/// Inverse of h_vector: mu_k = sum_{i<=k} binomial(ell+k-i-1, k-i) h_i.
std::vector<Int> mu_from_h(std::span<const Int> h, Int ell);

/// Decides mu(I^2) == ell mu(I) - binomial(ell, 2).
FiberProfile is_freiman(const MonomialIdeal& ideal, std::size_t cap = kDefaultPointCap);

/// Compares mu(I^k) with the generalized lower bound and evaluates the
/// h-vector partial sums for 2 <= k <= K.
GrowthReport check_growth_identities(const MonomialIdeal& ideal, Int max_power, std::size_t cap = kDefaultPointCap);

/// Same table built from an already computed series.
GrowthReport growth_report_from_series(std::vector<Int> mu, Int ell);

}  // namespace freiman
