#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "freiman/error.hpp"
#include "freiman/ideal.hpp"
#include "freiman/matroid.hpp"
#include "support.hpp"

using namespace freiman;
using support::points;

namespace {

MonomialIdeal ideal_of(std::size_t dim, const std::vector<std::vector<Int>>& rows) {
  return MonomialIdeal(points(dim, rows));
}

std::vector<Monomial> monomials(const std::vector<std::vector<Int>>& rows) {
  std::vector<Monomial> out;
  for (const auto& r : rows) out.push_back({ExponentVector(r)});
  return out;
}

bool brute_antichain(const std::vector<std::vector<Int>>& rows) {
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows.size(); ++j) {
      if (i == j) continue;
      bool le = true;
      for (std::size_t k = 0; k < rows[i].size(); ++k) le = le && rows[i][k] <= rows[j][k];
      if (le) return false;
    }
  return true;
}

// Random equigenerated ideal: distinct monomials of one degree.
MonomialIdeal random_equigenerated(std::mt19937_64& rng, std::size_t dim, Int degree, std::size_t count) {
  std::vector<Int> flat;
  for (std::size_t i = 0; i < count; ++i) {
    std::vector<Int> c(dim, 0);
    for (Int d = 0; d < degree; ++d) ++c[rng() % dim];
    flat.insert(flat.end(), c.begin(), c.end());
  }
  return MonomialIdeal(PointSet::from_rows(dim, flat));
}

}  // namespace

TEST_CASE("construction rejects the zero and unit ideals and non-minimal sets") {
  CHECK_THROWS_AS(MonomialIdeal(PointSet(2)), PreconditionError);
  CHECK_THROWS_AS(ideal_of(2, {{0, 0}}), PreconditionError);
  CHECK_THROWS_AS(ideal_of(2, {{1, 0}, {1, 1}}), PreconditionError);
  CHECK_THROWS_AS(MonomialIdeal(points(2, {{1, 1}}), Witness{{1, 0}, 1}), PreconditionError);
  CHECK_THROWS_AS(MonomialIdeal(points(2, {{1, 1}, {2, 0}}), Witness{{1, 2}, 3}), PreconditionError);
  CHECK(ideal_of(2, {{1, 1}, {2, 0}}).mu() == 2);
}

TEST_CASE("minimalize fixed values") {
  CHECK(support::generator_rows(minimalize(monomials({{1, 0}, {1, 1}}))) == std::vector<std::vector<Int>>{{1, 0}});
  const auto c4 = minimalize(monomials({{1, 1, 0, 0}, {0, 1, 1, 0}, {0, 0, 1, 1}, {1, 0, 0, 1}}));
  CHECK(c4.mu() == 4);
  const auto trees = matroidal_ideal(support::complete(4));
  std::vector<Monomial> again;
  for (const auto& p : trees.generators().points()) again.push_back({p});
  CHECK(minimalize(again).mu() == 16);
  CHECK(minimalize(monomials({{2, 0}, {2, 0}, {0, 3}})).mu() == 2);
}

TEST_CASE("powers fixed values") {
  const auto principal = ideal_of(3, {{1, 2, 0}});
  for (Int k = 1; k <= 4; ++k) {
    const auto p = power(principal, k);
    CHECK(p.mu() == 1);
    CHECK(support::generator_rows(p) == std::vector<std::vector<Int>>{{k, 2 * k, 0}});
  }
  CHECK(power(edge_ideal(support::cycle(4)), 2).mu() == 9);
  CHECK(power(edge_ideal(support::complete(4)), 2).mu() == 19);
}

TEST_CASE("witness fixed values") {
  CHECK(quasi_equigenerated_witness(ideal_of(2, {{2, 0}, {1, 1}, {0, 2}})) == Witness{{1, 1}, 2});
  CHECK(quasi_equigenerated_witness(ideal_of(2, {{3, 0}, {0, 1}})) == Witness{{1, 3}, 3});
  CHECK(quasi_equigenerated_witness(ideal_of(2, {{1, 0}, {0, 2}})) == Witness{{2, 1}, 2});
  // x1, x2*x3 with a = (2,1,1)
  CHECK(quasi_equigenerated_witness(ideal_of(3, {{1, 0, 0}, {0, 1, 1}})));
  // x1^2, x1*x2, x2^3: 2 a1 = a1 + a2 = 3 a2 has no positive solution
  CHECK_FALSE(quasi_equigenerated_witness(ideal_of(2, {{2, 0}, {1, 1}, {0, 3}})));
  CHECK_THROWS_AS(require_witness(ideal_of(2, {{2, 0}, {1, 1}, {0, 3}})), PreconditionError);
}

TEST_CASE("property: witnesses are valid and found exactly when one exists") {
  std::mt19937_64 rng(5);
  int found = 0, absent = 0;
  for (int trial = 0; trial < 2000; ++trial) {
    const std::size_t dim = 1 + rng() % 3;
    std::vector<Int> flat;
    const std::size_t count = 3 + rng() % 5;
    for (std::size_t i = 0; i < count * dim; ++i) flat.push_back(static_cast<Int>(rng() % 4));
    // keep the minimal elements so the set is an antichain
    std::vector<std::vector<Int>> rows;
    const auto all = support::rows_of(PointSet::from_rows(dim, flat));
    for (const auto& r : all) {
      bool minimal = true;
      for (const auto& q : all) minimal = minimal && (q == r || !divides(q, r));
      if (minimal) rows.push_back(r);
    }
    bool has_zero = false;
    for (const auto& r : rows) has_zero = has_zero || std::all_of(r.begin(), r.end(), [](Int v) { return v == 0; });
    if (has_zero) continue;
    REQUIRE(brute_antichain(rows));
    const PointSet p = support::points(dim, rows);
    const MonomialIdeal ideal(p);
    const auto w = quasi_equigenerated_witness(ideal);
    // brute force over weights up to 20; kernels of direction rows with
    // entries in [-3, 3] have a solution that small
    bool brute = false;
    std::vector<Int> a(dim, 1);
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
      if (brute) return;
      if (i == dim) {
        std::set<Int> degrees;
        for (const auto& r : rows) degrees.insert(std::inner_product(r.begin(), r.end(), a.begin(), Int{0}));
        brute = degrees.size() == 1;
        return;
      }
      for (Int v = 1; v <= 20; ++v) {
        a[i] = v;
        rec(i + 1);
      }
    };
    rec(0);
    if (w) {
      ++found;
      for (Int v : w->weights) CHECK(v > 0);
      for (const auto& r : rows) CHECK(std::inner_product(r.begin(), r.end(), w->weights.begin(), Int{0}) == w->degree);
      CHECK(brute);
    } else {
      ++absent;
      CHECK_FALSE(brute);
    }
  }
  CHECK(found > 20);
  CHECK(absent > 20);
}

TEST_CASE("property: powers via dilation match products then minimalization") {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 60; ++trial) {
    const auto ideal = with_witness(random_equigenerated(rng, 2 + rng() % 3, 1 + static_cast<Int>(rng() % 3), 1 + rng() % 6));
    const Int d = ideal.witness()->degree;
    for (Int k = 1; k <= 3; ++k) {
      const auto fast = power(ideal, k);
      CHECK(fast == power_by_products(ideal, k));
      for (const auto& row : support::generator_rows(fast))
        CHECK(std::inner_product(row.begin(), row.end(), ideal.witness()->weights.begin(), Int{0}) == k * d);
    }
    CHECK(power(power(ideal, 2), 2) == power(ideal, 4));
    CHECK(power(power(ideal, 3), 1) == power(ideal, 3));
  }
  // a quasi-equigenerated but not equigenerated ideal
  const auto q = with_witness(ideal_of(2, {{3, 0}, {0, 1}}));
  for (Int k = 1; k <= 4; ++k) CHECK(power(q, k) == power_by_products(q, k));
}

TEST_CASE("property: minimalize is idempotent and yields antichains") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t dim = 1 + rng() % 3;
    std::vector<std::vector<Int>> rows;
    for (std::size_t i = 0; i < 1 + rng() % 7; ++i) {
      std::vector<Int> r(dim);
      for (auto& v : r) v = static_cast<Int>(rng() % 3);
      if (std::all_of(r.begin(), r.end(), [](Int v) { return v == 0; })) r[0] = 1;
      rows.push_back(r);
    }
    const auto once = minimalize(monomials(rows));
    CHECK(brute_antichain(support::generator_rows(once)));
    CHECK(minimalize(monomials(support::generator_rows(once))) == once);
    // every input is divisible by some generator
    for (const auto& r : rows) {
      bool covered = false;
      for (const auto& g : support::generator_rows(once)) covered = covered || divides(g, r);
      CHECK(covered);
    }
  }
}
