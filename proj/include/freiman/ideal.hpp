#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "freiman/lattice.hpp"

namespace freiman {

/// x^c for an exponent vector c.
struct Monomial {
  ExponentVector exponent;
};

/// Strictly positive weights a and degree d with <a, c> = d for every
/// generator exponent c.
struct Witness {
  std::vector<Int> weights;
  Int degree = 0;

  friend bool operator==(const Witness&, const Witness&) = default;
};

/// A proper nonzero monomial ideal, held as its minimal generating set G(I).
class MonomialIdeal {
 public:
  /// Validates that `generators` is a nonempty antichain not containing the
  /// unit monomial. With a witness, the antichain property follows from the
  /// witness and only the witness is checked.
  explicit MonomialIdeal(PointSet generators, std::optional<Witness> witness = std::nullopt);

  std::size_t ambient_dim() const noexcept { return generators_.dim(); }
  const PointSet& generators() const noexcept { return generators_; }
  std::size_t mu() const noexcept { return generators_.size(); }
  const std::optional<Witness>& witness() const noexcept { return witness_; }

  friend bool operator==(const MonomialIdeal& a, const MonomialIdeal& b) {
    return a.generators_ == b.generators_;
  }

 private:
  PointSet generators_;
  std::optional<Witness> witness_;
};

/// True if a <= b coordinatewise (x^a divides x^b).
bool divides(std::span<const Int> a, std::span<const Int> b);

/// True if no point of `points` divides a different one.
bool is_antichain(const PointSet& points);

/// The ideal generated by `monomials`, reduced to its minimal generators.
MonomialIdeal minimalize(const std::vector<Monomial>& monomials);

/// G(I^k). Uses k-fold dilation when I carries a witness, otherwise forms
/// all k-fold products and minimalizes.
MonomialIdeal power(const MonomialIdeal& ideal, Int k);

/// G(I^k) by products followed by minimalization, ignoring any witness.
MonomialIdeal power_by_products(const MonomialIdeal& ideal, Int k);

/// Searches for a quasi-equigeneration witness. Equigenerated ideals get the
/// all-ones weight vector; otherwise an exact LP over the orthogonal
/// complement of the generators' direction space decides.
std::optional<Witness> quasi_equigenerated_witness(const MonomialIdeal& ideal);

/// The ideal's own witness, or a computed one. Throws PreconditionError when
/// the ideal is not quasi-equigenerated.
Witness require_witness(const MonomialIdeal& ideal);

/// `ideal` with a witness attached (computed when missing).
MonomialIdeal with_witness(const MonomialIdeal& ideal);

}  // namespace freiman
