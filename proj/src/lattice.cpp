#include <cmath>

#include "covspec/error.hpp"
#include "covspec/spectrum.hpp"

namespace covspec {

LatticeValue lattice_value(const Rational& squared) {
  LatticeValue v;
  v.squared = squared;
  Rational root;
  v.exact = rational_sqrt(squared, root) ? root.str() : "sqrt(" + squared.str() + ")";
  v.approx = std::sqrt(squared.to_double());
  return v;
}

namespace {

std::vector<std::vector<Rational>> invert(std::vector<std::vector<Rational>> m) {
  const std::size_t n = m.size();
  std::vector<std::vector<Rational>> inv(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t p = col;
    while (p < n && m[p][col].sign() == 0) ++p;
    if (p == n) throw InputError("lattice basis is singular");
    std::swap(m[p], m[col]);
    std::swap(inv[p], inv[col]);
    Rational s = m[col][col];
    for (std::size_t j = 0; j < n; ++j) {
      m[col][j] /= s;
      inv[col][j] /= s;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || m[r][col].sign() == 0) continue;
      Rational f = m[r][col];
      for (std::size_t j = 0; j < n; ++j) {
        m[r][j] -= f * m[col][j];
        inv[r][j] -= f * inv[col][j];
      }
    }
  }
  return inv;
}

}  // namespace

LatticeSpectrum covering_spectrum_lattice(const std::vector<std::vector<Rational>>& basis) {
  const std::size_t n = basis.size();
  if (n == 0) throw InputError("lattice basis is empty");
  for (const auto& row : basis)
    if (row.size() != n) throw InputError("lattice basis must be square");
  if (determinant(basis).sign() == 0) throw InputError("lattice basis is singular");
  const auto inv = invert(basis);

  std::vector<std::vector<Rational>> gram(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) gram[i][j] += basis[i][k] * basis[j][k];

  // The basis rows generate L, so every jump is at most the longest row.
  Rational radius2;
  for (std::size_t i = 0; i < n; ++i) radius2 = std::max(radius2, gram[i][i]);
  // c = v B^-1, so |c_i| <= |v| * |column i of B^-1|
  std::vector<long> bound(n);
  double box = 1;
  for (std::size_t i = 0; i < n; ++i) {
    Rational col2;
    for (std::size_t k = 0; k < n; ++k) col2 += inv[k][i] * inv[k][i];
    bound[i] = floor_sqrt(radius2 * col2).get_si();
    box *= 2.0 * static_cast<double>(bound[i]) + 1;
  }
  if (box > 2e7) throw CapExceeded("lattice search box too large");

  std::vector<std::pair<IntVector, Rational>> values;
  std::vector<long> c(n);
  for (std::size_t i = 0; i < n; ++i) c[i] = -bound[i];
  for (;;) {
    // keep one of each +-c pair: first nonzero coordinate positive
    std::size_t lead = 0;
    while (lead < n && c[lead] == 0) ++lead;
    if (lead < n && c[lead] > 0) {
      Rational norm2;
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          if (c[i] && c[j]) norm2 += gram[i][j] * Rational(c[i] * c[j]);
      if (norm2 <= radius2) {
        IntVector v;
        for (auto x : c) v.push_back(x);
        values.emplace_back(std::move(v), norm2);
      }
    }
    std::size_t k = 0;
    while (k < n && c[k] == bound[k]) c[k] = -bound[k], ++k;
    if (k == n) break;
    ++c[k];
  }

  IntMatrix gens;
  HermiteForm hnf = hermite_normal_form(gens, n);
  bool dirty = false;
  GenerationOracle<IntVector> oracle;
  oracle.contains = [&](const IntVector& v) {
    if (dirty) {
      hnf = hermite_normal_form(gens, n);
      dirty = false;
    }
    return hnf.contains(v);
  };
  oracle.add = [&](const IntVector& v) {
    gens.push_back(v);
    dirty = true;
  };

  LatticeSpectrum out;
  for (const auto& j : jump_set(std::move(values), oracle)) {
    out.jumps.push_back(lattice_value(j));
    out.covspec.push_back(lattice_value(j / Rational(4)));
  }
  return out;
}

}  // namespace covspec
