#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "freiman/error.hpp"
#include "freiman/exact_linalg.hpp"
#include "freiman/lattice.hpp"
#include "support.hpp"

using namespace freiman;
using support::points;

namespace {

const std::vector<std::vector<Int>> kC4 = {{1, 1, 0, 0}, {0, 1, 1, 0}, {0, 0, 1, 1}, {1, 0, 0, 1}};
const std::vector<std::vector<Int>> kK4 = {{1, 1, 0, 0}, {1, 0, 1, 0}, {1, 0, 0, 1},
                                           {0, 1, 1, 0}, {0, 1, 0, 1}, {0, 0, 1, 1}};

PointSet random_points(std::mt19937_64& rng, std::size_t dim, std::size_t count, Int max_coord) {
  std::vector<Int> flat;
  for (std::size_t i = 0; i < dim * count; ++i) flat.push_back(static_cast<Int>(rng() % static_cast<std::uint64_t>(max_coord + 1)));
  return PointSet::from_rows(dim, flat);
}

}  // namespace

TEST_CASE("exponent vectors reject negative coordinates") {
  CHECK_THROWS_AS(ExponentVector({1, -1}), PreconditionError);
  CHECK(ExponentVector({2, 0, 1}).total_degree() == 3);
}

TEST_CASE("point sets are sorted and duplicate free") {
  const PointSet p = PointSet::from_rows(2, {3, 1, 0, 0, 3, 1, 1, 2});
  REQUIRE(p.size() == 3);
  CHECK(support::rows_of(p) == std::vector<std::vector<Int>>{{0, 0}, {1, 2}, {3, 1}});
  CHECK(p.contains(std::vector<Int>{1, 2}));
  CHECK_FALSE(p.contains(std::vector<Int>{2, 1}));
  CHECK_THROWS_AS(PointSet(0), PreconditionError);
  CHECK_THROWS_AS(PointSet::from_rows(2, {1, 2, 3}), PreconditionError);
}

TEST_CASE("sumset fixed values") {
  CHECK(sumset(points(1, {{0}}), points(1, {{0}})).size() == 1);
  CHECK(sumset(points(4, kC4), points(4, kC4)).size() == 9);
  CHECK(sumset(points(4, kK4), points(4, kK4)).size() == 19);
  CHECK_THROWS_AS(sumset(points(1, {{0}}), points(2, {{0, 0}})), PreconditionError);
  CHECK_THROWS_AS(sumset(points(4, kK4), points(4, kK4), 10), ResourceError);
}

TEST_CASE("dilate fixed values") {
  const PointSet c4 = points(4, kC4);
  CHECK(dilate(c4, 1) == c4);
  CHECK(dilate(c4, 3).size() == 16);
  const auto c6 = support::edge_ideal_points(support::cycle(6));
  CHECK(dilate(c6, 2).size() == 21);
  CHECK_THROWS_AS(dilate(c4, 0), PreconditionError);
}

TEST_CASE("affine dimension fixed values") {
  CHECK(affine_dim(points(3, {{4, 1, 7}})) == 0);
  CHECK(affine_dim(points(4, kC4)) == 2);
  CHECK(affine_dim(points(4, kK4)) == 3);
}

TEST_CASE("lower bounds") {
  CHECK(freiman_lower_bound(1, 0) == 1);
  CHECK(freiman_lower_bound(4, 2) == 9);
  CHECK(freiman_lower_bound(6, 3) == 18);
  CHECK(generalized_lower_bound(5, 3, 1) == 5);
  CHECK(generalized_lower_bound(4, 3, 2) == 9);
  CHECK(generalized_lower_bound(4, 3, 3) == 16);
  // at k = 2 the generalized bound is Freiman's with d = ell - 1
  for (Int m = 1; m < 30; ++m)
    for (Int d = 0; d < 8; ++d) CHECK(generalized_lower_bound(m, d + 1, 2) == freiman_lower_bound(m, d));
}

TEST_CASE("binomial") {
  CHECK(binomial(0, 0) == 1);
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(5, 7) == 0);
  CHECK(binomial(5, -1) == 0);
  CHECK(binomial(66, 33) == 7219428434016265740LL);
  CHECK_THROWS_AS(binomial(70, 35), OverflowError);
  CHECK_THROWS_AS(binomial(-1, 0), PreconditionError);
  for (Int n = 1; n < 40; ++n)
    for (Int k = 1; k < n; ++k) CHECK(binomial(n, k) == binomial(n - 1, k - 1) + binomial(n - 1, k));
}

TEST_CASE("coordinate overflow is reported") {
  const Int big = std::numeric_limits<Int>::max() / 2 + 1;
  CHECK_THROWS_AS(sumset(points(1, {{big}}), points(1, {{big}})), OverflowError);
}

TEST_CASE("exact rank and determinant against rational elimination") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t rows = 1 + rng() % 6, cols = 1 + rng() % 6;
    IntMatrix m(rows, cols);
    std::vector<std::vector<oracle::Rational>> q(rows, std::vector<oracle::Rational>(cols));
    const bool huge = trial % 3 == 0;
    for (std::size_t r = 0; r < rows; ++r)
      for (std::size_t c = 0; c < cols; ++c) {
        Int v = static_cast<Int>(rng() % 7) - 3;
        if (huge) v *= Int{1} << 40;
        if (trial % 5 == 0 && r > 0) v = m(0, c) * 2;  // force dependence
        m(r, c) = v;
        q[r][c] = v;
      }
    CHECK(exact_rank(m) == oracle::rank(q));
  }
  IntMatrix a(3, 3);
  const Int vals[] = {2, -1, 0, -1, 2, -1, 0, -1, 2};
  for (std::size_t i = 0; i < 9; ++i) a(i / 3, i % 3) = vals[i];
  CHECK(exact_determinant(a) == 4);
  IntMatrix big(2, 2);
  big(0, 0) = Int{1} << 62;
  big(1, 1) = Int{1} << 62;
  CHECK(exact_determinant(big) == BigInt(1) << 124);
}

TEST_CASE("positive kernel vector") {
  // rows are directions; (3,0) - (0,1) needs a = (1,3)
  IntMatrix m(1, 2);
  m(0, 0) = 3;
  m(0, 1) = -1;
  const auto a = positive_kernel_vector(m);
  REQUIRE(a);
  CHECK(*a == std::vector<Int>{1, 3});
  IntMatrix none(1, 2);
  none(0, 0) = 1;
  none(0, 1) = 1;
  CHECK_FALSE(positive_kernel_vector(none));
}

TEST_CASE("property: sumset matches brute force and commutes") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t dim = 1 + rng() % 4;
    const PointSet x = random_points(rng, dim, 1 + rng() % 12, 3);
    const PointSet y = random_points(rng, dim, 1 + rng() % 12, 3);
    const PointSet s = sumset(x, y);
    CHECK(support::as_set(s) == oracle::sumset(support::as_set(x), support::as_set(y)));
    CHECK(s == sumset(y, x));
    CHECK(s.size() <= x.size() * y.size());
  }
}

TEST_CASE("property: dilation chain and growth bounds") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 150; ++trial) {
    const std::size_t dim = 1 + rng() % 4;
    const PointSet x = random_points(rng, dim, 1 + rng() % 9, 2);
    const auto d = static_cast<Int>(affine_dim(x));
    const auto rows = support::rows_of(x);
    CHECK(d == static_cast<Int>(oracle::affine_dim(rows)));
    CHECK(static_cast<Int>(sumset(x, x).size()) >= freiman_lower_bound(static_cast<Int>(x.size()), d));
    PointSet acc = x;
    for (Int k = 2; k <= 4; ++k) {
      const PointSet next = dilate(x, k);
      CHECK(next == sumset(acc, x));
      CHECK(support::as_set(next) == oracle::dilate(rows, static_cast<int>(k)));
      CHECK(static_cast<Int>(next.size()) >= generalized_lower_bound(static_cast<Int>(x.size()), d + 1, k));
      acc = next;
    }
  }
}

TEST_CASE("property: affine dimension is translation and permutation invariant") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t dim = 2 + rng() % 3;
    const PointSet x = random_points(rng, dim, 1 + rng() % 8, 4);
    std::vector<Int> shift(dim);
    for (auto& s : shift) s = static_cast<Int>(rng() % 5);
    std::vector<std::size_t> perm(dim);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<Int> moved, permuted;
    for (std::size_t i = 0; i < x.size(); ++i)
      for (std::size_t j = 0; j < dim; ++j) {
        moved.push_back(x[i][j] + shift[j]);
        permuted.push_back(x[i][perm[j]]);
      }
    CHECK(affine_dim(PointSet::from_rows(dim, moved)) == affine_dim(x));
    CHECK(affine_dim(PointSet::from_rows(dim, permuted)) == affine_dim(x));
  }
}
