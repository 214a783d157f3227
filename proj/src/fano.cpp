#include "covspec/fano.hpp"

#include <bit>

#include "covspec/error.hpp"

namespace covspec {

GF2Matrix GF2Matrix::parse(const std::string& bits) {
  std::array<std::uint8_t, 3> rows{};
  int n = 0;
  for (char c : bits) {
    if (c == ' ' || c == ';' || c == ',') continue;
    if (c != '0' && c != '1') throw InputError("GF2Matrix::parse: bad character");
    if (n >= 9) throw InputError("GF2Matrix::parse: too many entries");
    if (c == '1') rows[n / 3] |= static_cast<std::uint8_t>(1u << (2 - n % 3));
    ++n;
  }
  if (n != 9) throw InputError("GF2Matrix::parse: need 9 entries");
  return GF2Matrix(rows);
}

std::uint8_t GF2Matrix::apply_right(std::uint8_t v) const {
  std::uint8_t out = 0;
  for (int r = 0; r < 3; ++r)
    if (v >> (2 - r) & 1) out ^= rows_[r];
  return out;
}

GF2Matrix GF2Matrix::operator*(const GF2Matrix& o) const {
  std::array<std::uint8_t, 3> rows{};
  for (int r = 0; r < 3; ++r) rows[r] = o.apply_right(rows_[r]);
  return GF2Matrix(rows);
}

GF2Matrix GF2Matrix::transpose() const {
  std::array<std::uint8_t, 3> rows{};
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c)
      if (at(c, r)) rows[r] |= static_cast<std::uint8_t>(1u << (2 - c));
  return GF2Matrix(rows);
}

bool GF2Matrix::determinant() const {
  // over F2 the determinant is nonzero iff the rows are linearly independent
  std::uint8_t a = rows_[0], b = rows_[1], c = rows_[2];
  return a && b && c && a != b && (a ^ b) != c && a != c && b != c;
}

GF2Matrix GF2Matrix::inverse() const {
  if (!determinant()) throw InputError("singular GF2 matrix");
  GF2Matrix p = *this;
  // the group is finite, so some power is the identity
  GF2Matrix id(std::array<std::uint8_t, 3>{4, 2, 1});
  GF2Matrix prev = id;
  while (!(p == id)) {
    prev = p;
    p = p * *this;
  }
  return prev;
}

bool gf2_dot(std::uint8_t a, std::uint8_t b) { return std::popcount(static_cast<unsigned>(a & b)) & 1; }

std::string bit_label(std::uint8_t v) {
  std::string s(3, '0');
  for (int i = 0; i < 3; ++i)
    if (v >> (2 - i) & 1) s[i] = '1';
  return s;
}

GF2Matrix fano_matrix_a() { return GF2Matrix::parse("110 001 010"); }
GF2Matrix fano_matrix_b() { return GF2Matrix::parse("010 001 100"); }

std::size_t fano_vertex(const std::string& label) {
  if (label.size() != 3) throw InputError("bad Fano label '" + label + "'");
  std::uint8_t v = 0;
  for (char c : label) {
    if (c != '0' && c != '1') throw InputError("bad Fano label '" + label + "'");
    v = static_cast<std::uint8_t>(v << 1 | (c == '1'));
  }
  if (v == 0) throw InputError("zero vector is not a Fano vertex");
  return v - 1u;
}

namespace {

// Right action of M on the 7 points, then the induced action on lines: line w (the points
// orthogonal to w) goes to the unique w' orthogonal to all image points.
std::vector<std::uint32_t> combined_images(const GF2Matrix& m) {
  std::vector<std::uint32_t> im(14);
  for (std::uint8_t v = 1; v < 8; ++v) im[v - 1] = m.apply_right(v) - 1u;
  for (std::uint8_t w = 1; w < 8; ++w) {
    std::uint8_t target = 0;
    for (std::uint8_t cand = 1; cand < 8 && !target; ++cand) {
      bool ok = true;
      for (std::uint8_t v = 1; v < 8 && ok; ++v)
        if (!gf2_dot(v, w)) ok = !gf2_dot(m.apply_right(v), cand);
      if (ok) target = cand;
    }
    im[7 + w - 1] = 7u + target - 1u;
  }
  return im;
}

}  // namespace

Permutation FanoActions::on_points(const Permutation& g) const {
  std::vector<std::uint32_t> im(7);
  for (std::size_t v = 0; v < 7; ++v) im[v] = static_cast<std::uint32_t>(points.image(g, v));
  return Permutation(std::move(im));
}

Permutation FanoActions::on_lines(const Permutation& g) const {
  std::vector<std::uint32_t> im(7);
  for (std::size_t v = 0; v < 7; ++v) im[v] = static_cast<std::uint32_t>(lines.image(g, v));
  return Permutation(std::move(im));
}

FanoActions fano_actions() {
  Permutation a(combined_images(fano_matrix_a()));
  Permutation b(combined_images(fano_matrix_b()));
  std::vector<std::string> labels;
  for (std::uint8_t v = 1; v < 8; ++v) labels.push_back(bit_label(v));
  return FanoActions{FiniteGroup::closure({a, b}), ActionBlock{0, labels}, ActionBlock{7, labels}, a, b};
}

}  // namespace covspec
