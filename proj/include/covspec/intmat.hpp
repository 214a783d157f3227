#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "covspec/rational.hpp"

namespace covspec {

using IntVector = std::vector<BigInt>;
using IntMatrix = std::vector<IntVector>;

/// Row-style Hermite normal form of the lattice spanned by a set of integer row vectors.
/// Rows are in echelon form with positive pivots and entries above each pivot reduced
/// into [0, pivot).
struct HermiteForm {
  std::size_t columns = 0;
  IntMatrix rows;
  std::vector<std::size_t> pivots;

  std::size_t rank() const { return rows.size(); }
  /// Exact membership of v in the row lattice.
  bool contains(std::span<const BigInt> v) const;
  /// True iff the lattice is all of Z^columns.
  bool is_full() const;
};

HermiteForm hermite_normal_form(const IntMatrix& rows, std::size_t columns);

/// Smith form D = P * M * Q with only the column transform Q kept. diagonal holds the
/// invariant factors d_0 | d_1 | ... of the nonzero part; Q is columns x columns unimodular.
struct SmithForm {
  std::vector<BigInt> diagonal;
  IntMatrix column_transform;
  std::size_t rank() const { return diagonal.size(); }
};

SmithForm smith_normal_form(const IntMatrix& rows, std::size_t columns);

/// Determinant of a square rational matrix (fraction-free elimination over Q).
Rational determinant(std::vector<std::vector<Rational>> m);

}  // namespace covspec
