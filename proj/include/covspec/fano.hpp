#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "covspec/fingroup.hpp"

namespace covspec {

/// 3x3 matrix over F2; row r is stored in the low three bits of rows[r], bit 2 = column 0.
class GF2Matrix {
 public:
  constexpr GF2Matrix() = default;
  constexpr explicit GF2Matrix(std::array<std::uint8_t, 3> rows) : rows_(rows) {}
  /// From a row-major bit string such as "110 001 010".
  static GF2Matrix parse(const std::string& bits);

  bool at(int r, int c) const { return rows_[r] >> (2 - c) & 1; }
  GF2Matrix operator*(const GF2Matrix& o) const;
  GF2Matrix transpose() const;
  bool determinant() const;
  GF2Matrix inverse() const;  // throws InputError if singular
  /// Row vector times matrix; vectors use the same 3-bit encoding.
  std::uint8_t apply_right(std::uint8_t v) const;

  friend bool operator==(const GF2Matrix&, const GF2Matrix&) = default;

 private:
  std::array<std::uint8_t, 3> rows_{};
};

/// F2 inner product of two 3-bit vectors.
bool gf2_dot(std::uint8_t a, std::uint8_t b);
/// "001" .. "111"
std::string bit_label(std::uint8_t v);

GF2Matrix fano_matrix_a();
GF2Matrix fano_matrix_b();

/// A G-invariant block [offset, offset + labels.size()) of a permutation group's domain.
struct ActionBlock {
  std::size_t offset = 0;
  std::vector<std::string> labels;

  std::size_t size() const { return labels.size(); }
  std::size_t image(const Permutation& g, std::size_t v) const { return g[offset + v] - offset; }
};

/// GL3(F2) acting on the Fano plane. The group is realized on 14 points: [0,7) are the
/// points, [7,14) the lines; vertex v in either block carries the label of the vector v+1.
struct FanoActions {
  FiniteGroup group;
  ActionBlock points;
  ActionBlock lines;
  Permutation a;  // element of `group` induced by A
  Permutation b;  // element of `group` induced by B

  /// Restrictions of a group element to one block.
  Permutation on_points(const Permutation& g) const;
  Permutation on_lines(const Permutation& g) const;
};

/// Builds the point action by right multiplication and derives the line action from it:
/// the image of a line is the line orthogonal to the images of its points.
FanoActions fano_actions();

/// Index of a Fano vertex from its bit label.
std::size_t fano_vertex(const std::string& label);

}  // namespace covspec
