#include "freiman/lattice.hpp"

#include <algorithm>
#include <cstring>
#include <numeric>

#include "freiman/error.hpp"
#include "freiman/exact_linalg.hpp"

namespace freiman {

namespace {
__extension__ using Wide = __int128;
}

Int binomial(Int n, Int k) {
  if (n < 0) throw PreconditionError("binomial with negative upper argument");
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  Int r = 1;
  for (Int i = 1; i <= k; ++i) {
    // r = binomial(n-k+i-1, i-1), so the division is exact.
    const Wide next = static_cast<Wide>(r) * (n - k + i) / i;
    if (next > std::numeric_limits<Int>::max()) throw OverflowError("binomial coefficient exceeds 64 bits");
    r = static_cast<Int>(next);
  }
  return r;
}

ExponentVector::ExponentVector(std::vector<Int> coords) : coords_(std::move(coords)) {
  for (Int c : coords_)
    if (c < 0) throw PreconditionError("exponent vectors must be nonnegative");
}

Int ExponentVector::total_degree() const {
  Int s = 0;
  for (Int c : coords_) s = checked_add(s, c);
  return s;
}

namespace {

std::uint64_t mix(std::uint64_t h) {
  h ^= h >> 33;
  h *= 0xff51afd7ed558ccdULL;
  h ^= h >> 33;
  h *= 0xc4ceb9fe1a85ec53ULL;
  h ^= h >> 33;
  return h;
}

std::uint64_t hash_row(std::span<const Int> row) {
  std::uint64_t h = 0x9e3779b97f4a7c15ULL;
  for (Int v : row) h = mix(h ^ static_cast<std::uint64_t>(v)) + 0x9e3779b97f4a7c15ULL;
  return h;
}

// Open-addressing set of fixed-width rows. Rows live contiguously in
// insertion order; the table holds indices into that buffer.
class RowSet {
 public:
  explicit RowSet(std::size_t dim, std::size_t expected = 16) : dim_(dim) {
    std::size_t cap = 16;
    while (cap < 2 * expected) cap <<= 1;
    slots_.assign(cap, kEmpty);
    rows_.reserve(expected * dim);
  }

  // Returns false if the row is already present.
  bool insert(std::span<const Int> row) {
    if (2 * (count_ + 1) > slots_.size()) grow();
    const std::uint64_t h = hash_row(row);
    std::size_t mask = slots_.size() - 1;
    for (std::size_t i = h & mask;; i = (i + 1) & mask) {
      if (slots_[i] == kEmpty) {
        slots_[i] = count_++;
        rows_.insert(rows_.end(), row.begin(), row.end());
        return true;
      }
      if (std::equal(row.begin(), row.end(), rows_.begin() + static_cast<std::ptrdiff_t>(slots_[i] * dim_)))
        return false;
    }
  }

  std::size_t size() const { return count_; }

  std::vector<Int> take_sorted() && {
    std::vector<std::size_t> order(count_);
    std::iota(order.begin(), order.end(), 0);
    auto row = [&](std::size_t i) { return rows_.begin() + static_cast<std::ptrdiff_t>(i * dim_); };
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      return std::lexicographical_compare(row(a), row(a) + static_cast<std::ptrdiff_t>(dim_), row(b),
                                          row(b) + static_cast<std::ptrdiff_t>(dim_));
    });
    std::vector<Int> out;
    out.reserve(rows_.size());
    for (std::size_t i : order) out.insert(out.end(), row(i), row(i) + static_cast<std::ptrdiff_t>(dim_));
    return out;
  }

 private:
  static constexpr std::size_t kEmpty = std::numeric_limits<std::size_t>::max();

  void grow() {
    std::vector<std::size_t> fresh(slots_.size() * 2, kEmpty);
    const std::size_t mask = fresh.size() - 1;
    for (std::size_t idx = 0; idx < count_; ++idx) {
      std::span<const Int> row(rows_.data() + idx * dim_, dim_);
      std::size_t i = hash_row(row) & mask;
      while (fresh[i] != kEmpty) i = (i + 1) & mask;
      fresh[i] = idx;
    }
    slots_.swap(fresh);
  }

  std::size_t dim_;
  std::size_t count_ = 0;
  std::vector<std::size_t> slots_;
  std::vector<Int> rows_;
};

}  // namespace

PointSet::PointSet(std::size_t dim) : dim_(dim) {
  if (dim == 0) throw PreconditionError("ambient dimension must be positive");
}

PointSet::PointSet(std::size_t dim, const std::vector<ExponentVector>& points) : PointSet(dim) {
  RowSet set(dim, points.size());
  for (const auto& p : points) {
    if (p.dim() != dim) throw PreconditionError("point dimension does not match the ambient dimension");
    set.insert(p.coords());
  }
  coords_ = std::move(set).take_sorted();
}

PointSet PointSet::from_rows(std::size_t dim, std::vector<Int> rows) {
  if (dim == 0) throw PreconditionError("ambient dimension must be positive");
  if (rows.size() % dim != 0) throw PreconditionError("row buffer is not a multiple of the dimension");
  RowSet set(dim, rows.size() / dim);
  for (std::size_t i = 0; i < rows.size(); i += dim) {
    std::span<const Int> row(rows.data() + i, dim);
    for (Int c : row)
      if (c < 0) throw PreconditionError("exponent vectors must be nonnegative");
    set.insert(row);
  }
  return PointSet(dim, std::move(set).take_sorted(), 0);
}

ExponentVector PointSet::point(std::size_t i) const {
  auto row = (*this)[i];
  return ExponentVector(std::vector<Int>(row.begin(), row.end()));
}

std::vector<ExponentVector> PointSet::points() const {
  std::vector<ExponentVector> out;
  out.reserve(size());
  for (std::size_t i = 0; i < size(); ++i) out.push_back(point(i));
  return out;
}

bool PointSet::contains(std::span<const Int> p) const {
  if (p.size() != dim_) return false;
  std::size_t lo = 0, hi = size();
  while (lo < hi) {
    const std::size_t mid = (lo + hi) / 2;
    auto row = (*this)[mid];
    if (std::lexicographical_compare(row.begin(), row.end(), p.begin(), p.end())) {
      lo = mid + 1;
    } else {
      hi = mid;
    }
  }
  return lo < size() && std::equal(p.begin(), p.end(), (*this)[lo].begin());
}

PointSet sumset(const PointSet& x, const PointSet& y, std::size_t cap) {
  if (x.dim() != y.dim()) throw PreconditionError("sumset of point sets with different dimensions");
  const std::size_t dim = x.dim();
  const bool same = &x == &y || x == y;
  RowSet set(dim, std::max(x.size(), y.size()) * 2);
  std::vector<Int> sum(dim);
  for (std::size_t i = 0; i < x.size(); ++i) {
    auto a = x[i];
    for (std::size_t j = same ? i : 0; j < y.size(); ++j) {
      auto b = y[j];
      for (std::size_t c = 0; c < dim; ++c) sum[c] = checked_add(a[c], b[c]);
      if (set.insert(sum) && set.size() > cap)
        throw ResourceError("point set size exceeds the cap of " + std::to_string(cap));
    }
  }
  return PointSet(dim, std::move(set).take_sorted(), 0);
}

PointSet dilate(const PointSet& x, Int k, std::size_t cap) {
  if (k < 1) throw PreconditionError("dilation factor must be at least 1");
  PointSet acc = x;
  for (Int i = 2; i <= k; ++i) acc = sumset(acc, x, cap);
  return acc;
}

std::size_t affine_dim(const PointSet& x) {
  if (x.empty()) throw PreconditionError("affine dimension of an empty set");
  if (x.size() == 1) return 0;
  IntMatrix m(0, 0);
  std::vector<Int> diff(x.dim());
  auto base = x[0];
  for (std::size_t i = 1; i < x.size(); ++i) {
    auto p = x[i];
    for (std::size_t c = 0; c < x.dim(); ++c) diff[c] = checked_sub(p[c], base[c]);
    m.append_row(diff);
  }
  return exact_rank(m);
}

Int freiman_lower_bound(Int m, Int d) {
  return checked_sub(checked_mul(d + 1, m), binomial(d + 1, 2));
}

Int generalized_lower_bound(Int m, Int ell, Int k) {
  if (ell < 1 || k < 1) throw PreconditionError("generalized bound needs ell >= 1 and k >= 1");
  return checked_sub(checked_mul(binomial(ell + k - 2, k - 1), m), checked_mul(k - 1, binomial(ell + k - 2, k)));
}

}  // namespace freiman
