#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "freiman/error.hpp"
#include "freiman/fiber.hpp"
#include "freiman/graph.hpp"
#include "support.hpp"

using namespace freiman;

namespace {

const MonomialIdeal kPrincipal(support::points(2, {{1, 1}}));

MonomialIdeal random_equigenerated(std::mt19937_64& rng) {
  const std::size_t dim = 2 + rng() % 3;
  const Int degree = 1 + static_cast<Int>(rng() % 3);
  std::vector<Int> flat;
  for (std::size_t i = 0, count = 1 + rng() % 7; i < count; ++i) {
    std::vector<Int> c(dim, 0);
    for (Int d = 0; d < degree; ++d) ++c[rng() % dim];
    flat.insert(flat.end(), c.begin(), c.end());
  }
  return MonomialIdeal(PointSet::from_rows(dim, flat));
}

}  // namespace

TEST_CASE("analytic spread fixed values") {
  CHECK(analytic_spread(kPrincipal) == 1);
  CHECK(analytic_spread(edge_ideal(support::cycle(4))) == 3);
  CHECK(analytic_spread(edge_ideal(support::complete(4))) == 4);
  CHECK_THROWS_AS(analytic_spread(MonomialIdeal(support::points(2, {{2, 0}, {1, 1}, {0, 3}}))), PreconditionError);
}

TEST_CASE("mu series fixed values") {
  CHECK(mu_series(edge_ideal(support::cycle(4)), 3) == std::vector<Int>{1, 4, 9, 16});
  CHECK(mu_series(edge_ideal(support::complete(4)), 2) == std::vector<Int>{1, 6, 19});
  CHECK(mu_series(kPrincipal, 5) == std::vector<Int>{1, 1, 1, 1, 1, 1});
  CHECK_THROWS_AS(mu_series(kPrincipal, 0), PreconditionError);
  CHECK_THROWS_AS(mu_series(edge_ideal(support::complete(4)), 3, 20), ResourceError);
}

TEST_CASE("h-vector fixed values") {
  CHECK(h_vector(std::vector<Int>{1, 4, 9, 16}, 3) == std::vector<Int>{1, 1, 0, 0});
  CHECK(h_vector(std::vector<Int>{1, 6, 19}, 4) == std::vector<Int>{1, 2, 1});
  CHECK(h_vector(std::vector<Int>{1, 1, 1}, 1) == std::vector<Int>{1, 0, 0});
  CHECK_THROWS_AS(h_vector(std::vector<Int>{2, 4}, 3), PreconditionError);
  CHECK(mu_from_h(std::vector<Int>{1, 1, 0, 0}, 3) == std::vector<Int>{1, 4, 9, 16});
}

TEST_CASE("Freiman predicate fixed values") {
  const auto c4 = is_freiman(edge_ideal(support::cycle(4)));
  CHECK(c4.freiman);
  CHECK(c4.mu_series == std::vector<Int>{1, 4, 9});
  CHECK(c4.bound2 == 9);
  CHECK(c4.h2 == 0);
  const auto k4 = is_freiman(edge_ideal(support::complete(4)));
  CHECK_FALSE(k4.freiman);
  CHECK(k4.h2 == 1);
  CHECK(k4.bound2 == 18);
  CHECK(k4.h_partial == std::vector<Int>{1, 2, 1});
  const auto p = is_freiman(kPrincipal);
  CHECK(p.freiman);
  CHECK(p.bound2 == 1);
}

TEST_CASE("growth identities fixed values") {
  const auto c4 = check_growth_identities(edge_ideal(support::cycle(4)), 4);
  REQUIRE(c4.rows.size() == 3);
  for (const auto& row : c4.rows) {
    CHECK(row.equality);
    CHECK(row.partial_sum == 0);
  }
  CHECK(c4.rows.back().mu == 25);
  const auto k4 = check_growth_identities(edge_ideal(support::complete(4)), 3);
  REQUIRE(k4.rows.size() == 2);
  for (const auto& row : k4.rows) {
    CHECK_FALSE(row.equality);
    CHECK(row.partial_sum >= 1);
    CHECK(row.partial_sum == row.mu - row.bound);
  }
  for (const auto& row : check_growth_identities(kPrincipal, 3).rows) CHECK(row.equality);
  CHECK_THROWS_AS(check_growth_identities(kPrincipal, 1), PreconditionError);
}

TEST_CASE("property: growth identities on random quasi-equigenerated ideals") {
  std::mt19937_64 rng(21);
  int freiman = 0, strict = 0;
  for (int trial = 0; trial < 250; ++trial) {
    const MonomialIdeal ideal = random_equigenerated(rng);
    const auto rows = support::generator_rows(ideal);
    const auto mu = mu_series(ideal, 4);
    CHECK(mu == oracle::series(rows, 4));
    const Int ell = analytic_spread(ideal);
    CHECK(ell == static_cast<Int>(oracle::affine_dim(rows)) + 1);
    CHECK(ell <= std::min<Int>(static_cast<Int>(ideal.mu()), static_cast<Int>(ideal.ambient_dim())));
    const auto h = h_vector(mu, ell);
    CHECK(h == oracle::h_by_convolution(mu, ell));
    CHECK(mu_from_h(h, ell) == mu);
    CHECK(h[1] == mu[1] - ell);
    CHECK(h[2] >= 0);
    const auto rep = growth_report_from_series(mu, ell);
    for (const auto& row : rep.rows) {
      CHECK(row.mu >= row.bound);
      CHECK(row.partial_sum >= 0);
      CHECK(row.partial_sum == row.mu - row.bound);
    }
    const auto profile = is_freiman(ideal);
    CHECK(profile.freiman == (profile.h2 == 0));
    CHECK(profile.freiman == (profile.mu_series[2] == profile.bound2));
    if (profile.freiman) {
      ++freiman;
      for (const auto& row : rep.rows) CHECK(row.equality);
      for (std::size_t i = 2; i < h.size(); ++i) CHECK(h[i] == 0);
    } else {
      ++strict;
      CHECK_FALSE(rep.rows.front().equality);
    }
  }
  CHECK(freiman > 20);
  CHECK(strict > 20);
}
