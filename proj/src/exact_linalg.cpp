#include "freiman/exact_linalg.hpp"

#include <algorithm>
#include <numeric>
#include <utility>

#include <boost/multiprecision/cpp_int.hpp>

namespace freiman {

using Rational = boost::multiprecision::cpp_rational;

void IntMatrix::append_row(std::span<const Int> values) {
  if (rows_ == 0 && cols_ == 0) cols_ = values.size();
  if (values.size() != cols_) throw PreconditionError("row length does not match matrix width");
  data_.insert(data_.end(), values.begin(), values.end());
  ++rows_;
}

namespace {

struct CheckedOps {
  static Int mul(Int a, Int b) { return checked_mul(a, b); }
  static Int sub(Int a, Int b) { return checked_sub(a, b); }
};

struct BigOps {
  static BigInt mul(const BigInt& a, const BigInt& b) { return a * b; }
  static BigInt sub(const BigInt& a, const BigInt& b) { return a - b; }
};

// Fraction-free forward elimination. After processing, every entry is a
// minor of the input, so each division below is exact. Returns the rank and
// the sign-adjusted last pivot (the determinant when the matrix is square
// and nonsingular).
template <typename T, typename Ops>
std::pair<std::size_t, T> bareiss(std::vector<T> a, std::size_t rows, std::size_t cols) {
  auto at = [&](std::size_t r, std::size_t c) -> T& { return a[r * cols + c]; };
  T prev = 1;
  int sign = 1;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t p = rank;
    while (p < rows && at(p, c) == 0) ++p;
    if (p == rows) continue;
    if (p != rank) {
      for (std::size_t j = 0; j < cols; ++j) std::swap(at(p, j), at(rank, j));
      sign = -sign;
    }
    const T pivot = at(rank, c);
    for (std::size_t i = rank + 1; i < rows; ++i) {
      const T lead = at(i, c);
      for (std::size_t j = c + 1; j < cols; ++j) {
        at(i, j) = Ops::sub(Ops::mul(pivot, at(i, j)), Ops::mul(lead, at(rank, j))) / prev;
      }
      at(i, c) = 0;
    }
    prev = pivot;
    ++rank;
  }
  T last = prev;
  if (sign < 0) last = -last;
  return {rank, last};
}

std::vector<BigInt> widen(const IntMatrix& m) {
  std::vector<BigInt> out;
  out.reserve(m.rows() * m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (Int v : m.row(r)) out.emplace_back(v);
  return out;
}

std::vector<Int> flatten(const IntMatrix& m) {
  std::vector<Int> out;
  out.reserve(m.rows() * m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    auto row = m.row(r);
    out.insert(out.end(), row.begin(), row.end());
  }
  return out;
}

}  // namespace

std::size_t exact_rank(const IntMatrix& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  try {
    return bareiss<Int, CheckedOps>(flatten(m), m.rows(), m.cols()).first;
  } catch (const OverflowError&) {
    return bareiss<BigInt, BigOps>(widen(m), m.rows(), m.cols()).first;
  }
}

BigInt exact_determinant(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw PreconditionError("determinant of a non-square matrix");
  if (m.rows() == 0) return 1;
  auto [rank, last] = bareiss<BigInt, BigOps>(widen(m), m.rows(), m.cols());
  if (rank < m.rows()) return 0;
  return last;
}

namespace {

// Dense simplex tableau over exact rationals. Column `cols` holds the
// right-hand side.
class Tableau {
 public:
  Tableau(std::size_t rows, std::size_t cols)
      : cols_(cols), a_(rows, std::vector<Rational>(cols + 1)), basis_(rows) {}

  Rational& at(std::size_t r, std::size_t c) { return a_[r][c]; }
  Rational& rhs(std::size_t r) { return a_[r][cols_]; }
  std::size_t rows() const { return a_.size(); }
  std::vector<std::size_t>& basis() { return basis_; }

  void pivot(std::size_t r, std::size_t c) {
    const Rational p = a_[r][c];
    for (auto& v : a_[r]) v /= p;
    for (std::size_t i = 0; i < a_.size(); ++i) {
      if (i == r || a_[i][c] == 0) continue;
      const Rational f = a_[i][c];
      for (std::size_t j = 0; j <= cols_; ++j) a_[i][j] -= f * a_[r][j];
    }
    basis_[r] = c;
  }

  // Bland's rule; columns with allowed[j] == false never enter. Returns
  // false when the objective is unbounded.
  bool maximize(const std::vector<Rational>& objective, const std::vector<bool>& allowed) {
    for (;;) {
      std::size_t entering = cols_;
      for (std::size_t j = 0; j < cols_ && entering == cols_; ++j) {
        if (!allowed[j] || is_basic(j)) continue;
        Rational reduced = objective[j];
        for (std::size_t i = 0; i < a_.size(); ++i) reduced -= objective[basis_[i]] * a_[i][j];
        if (reduced > 0) entering = j;
      }
      if (entering == cols_) return true;
      std::size_t leaving = a_.size();
      Rational best;
      for (std::size_t i = 0; i < a_.size(); ++i) {
        if (a_[i][entering] <= 0) continue;
        Rational ratio = a_[i][cols_] / a_[i][entering];
        if (leaving == a_.size() || ratio < best || (ratio == best && basis_[i] < basis_[leaving])) {
          leaving = i;
          best = ratio;
        }
      }
      if (leaving == a_.size()) return false;
      pivot(leaving, entering);
    }
  }

  Rational value(const std::vector<Rational>& objective) const {
    Rational v = 0;
    for (std::size_t i = 0; i < a_.size(); ++i) v += objective[basis_[i]] * a_[i][cols_];
    return v;
  }

  void drop_row(std::size_t r) {
    a_.erase(a_.begin() + static_cast<std::ptrdiff_t>(r));
    basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(r));
  }

  bool is_basic(std::size_t j) const {
    return std::find(basis_.begin(), basis_.end(), j) != basis_.end();
  }

 private:
  std::size_t cols_;
  std::vector<std::vector<Rational>> a_;
  std::vector<std::size_t> basis_;
};

}  // namespace

std::optional<std::vector<Int>> positive_kernel_vector(const IntMatrix& m) {
  const std::size_t n = m.cols();
  if (n == 0) return std::nullopt;
  // Columns: 0 = t, 1..n = slack s_i with a_i = t + s_i, then one artificial
  // per constraint row.
  const std::size_t constraints = m.rows() + 1;
  const std::size_t structural = n + 1;
  const std::size_t total = structural + constraints;
  Tableau tab(constraints, total);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Rational row_sum = 0;
    for (std::size_t i = 0; i < n; ++i) {
      tab.at(r, 1 + i) = m(r, i);
      row_sum += m(r, i);
    }
    tab.at(r, 0) = row_sum;
    tab.rhs(r) = 0;
  }
  const std::size_t norm = m.rows();
  tab.at(norm, 0) = static_cast<long long>(n);
  for (std::size_t i = 0; i < n; ++i) tab.at(norm, 1 + i) = 1;
  tab.rhs(norm) = 1;
  for (std::size_t r = 0; r < constraints; ++r) {
    tab.at(r, structural + r) = 1;
    tab.basis()[r] = structural + r;
  }

  std::vector<bool> allowed(total, true);
  std::vector<Rational> phase1(total, 0);
  for (std::size_t j = structural; j < total; ++j) phase1[j] = -1;
  tab.maximize(phase1, allowed);
  if (tab.value(phase1) < 0) return std::nullopt;

  // Drive zero-level artificials out of the basis; rows where that is
  // impossible are redundant.
  for (std::size_t r = tab.rows(); r-- > 0;) {
    if (tab.basis()[r] < structural) continue;
    std::size_t col = structural;
    for (std::size_t j = 0; j < structural; ++j) {
      if (tab.at(r, j) != 0 && !tab.is_basic(j)) {
        col = j;
        break;
      }
    }
    if (col == structural) {
      tab.drop_row(r);
    } else {
      tab.pivot(r, col);
    }
  }
  for (std::size_t j = structural; j < total; ++j) allowed[j] = false;

  std::vector<Rational> phase2(total, 0);
  phase2[0] = 1;
  tab.maximize(phase2, allowed);
  std::vector<Rational> x(structural, 0);
  for (std::size_t r = 0; r < tab.rows(); ++r)
    if (tab.basis()[r] < structural) x[tab.basis()[r]] = tab.rhs(r);
  if (x[0] <= 0) return std::nullopt;

  std::vector<Rational> a(n);
  BigInt lcm = 1;
  for (std::size_t i = 0; i < n; ++i) {
    a[i] = x[0] + x[1 + i];
    lcm = boost::multiprecision::lcm(lcm, boost::multiprecision::denominator(a[i]));
  }
  std::vector<BigInt> scaled(n);
  BigInt g = 0;
  for (std::size_t i = 0; i < n; ++i) {
    scaled[i] = boost::multiprecision::numerator(a[i]) * (lcm / boost::multiprecision::denominator(a[i]));
    g = boost::multiprecision::gcd(g, scaled[i]);
  }
  std::vector<Int> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    BigInt v = scaled[i] / g;
    if (v > std::numeric_limits<Int>::max()) throw OverflowError("witness weight exceeds 64 bits");
    out[i] = static_cast<Int>(v);
  }
  return out;
}

}  // namespace freiman
