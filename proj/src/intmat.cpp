#include "covspec/intmat.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace covspec {

namespace {

void row_combine(IntVector& a, IntVector& b, const BigInt& p, const BigInt& q, const BigInt& r,
                 const BigInt& s) {
  // (a, b) <- (p a + q b, r a + s b)
  for (std::size_t j = 0; j < a.size(); ++j) {
    BigInt na = p * a[j] + q * b[j];
    BigInt nb = r * a[j] + s * b[j];
    a[j] = std::move(na);
    b[j] = std::move(nb);
  }
}

BigInt floor_div(const BigInt& a, const BigInt& b) {
  BigInt q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

}  // namespace

HermiteForm hermite_normal_form(const IntMatrix& input, std::size_t columns) {
  IntMatrix m;
  for (const auto& r : input) {
    if (r.size() != columns) throw std::invalid_argument("hermite_normal_form: ragged matrix");
    if (std::any_of(r.begin(), r.end(), [](const BigInt& x) { return x != 0; })) m.push_back(r);
  }
  HermiteForm h;
  h.columns = columns;
  std::size_t top = 0;
  for (std::size_t col = 0; col < columns && top < m.size(); ++col) {
    // gcd-combine every row below into row `top`
    for (std::size_t i = top + 1; i < m.size(); ++i) {
      if (m[i][col] == 0) continue;
      if (m[top][col] == 0) {
        std::swap(m[top], m[i]);
        continue;
      }
      BigInt g, x, y;
      mpz_gcdext(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t(), m[top][col].get_mpz_t(),
                 m[i][col].get_mpz_t());
      BigInt a = m[top][col] / g, b = m[i][col] / g;
      row_combine(m[top], m[i], x, y, -b, a);
    }
    if (m[top][col] == 0) continue;
    if (m[top][col] < 0)
      for (auto& x : m[top]) x = -x;
    for (std::size_t i = 0; i < top; ++i) {
      BigInt f = floor_div(m[i][col], m[top][col]);
      if (f != 0)
        for (std::size_t j = 0; j < columns; ++j) m[i][j] -= f * m[top][j];
    }
    h.pivots.push_back(col);
    ++top;
  }
  m.resize(top);
  h.rows = std::move(m);
  return h;
}

bool HermiteForm::contains(std::span<const BigInt> v) const {
  if (v.size() != columns) throw std::invalid_argument("HermiteForm::contains: dimension mismatch");
  IntVector w(v.begin(), v.end());
  for (std::size_t k = 0; k < rows.size(); ++k) {
    std::size_t p = pivots[k];
    for (std::size_t j = (k == 0 ? 0 : pivots[k - 1] + 1); j < p; ++j)
      if (w[j] != 0) return false;
    if (w[p] % rows[k][p] != 0) return false;
    BigInt f = w[p] / rows[k][p];
    if (f != 0)
      for (std::size_t j = p; j < columns; ++j) w[j] -= f * rows[k][j];
  }
  return std::all_of(w.begin(), w.end(), [](const BigInt& x) { return x == 0; });
}

bool HermiteForm::is_full() const {
  if (rows.size() != columns) return false;
  for (std::size_t k = 0; k < rows.size(); ++k)
    if (rows[k][pivots[k]] != 1) return false;
  return true;
}

SmithForm smith_normal_form(const IntMatrix& input, std::size_t columns) {
  IntMatrix m = input;
  for (const auto& r : m)
    if (r.size() != columns) throw std::invalid_argument("smith_normal_form: ragged matrix");
  const std::size_t nrows = m.size();
  IntMatrix q(columns, IntVector(columns, 0));
  for (std::size_t i = 0; i < columns; ++i) q[i][i] = 1;

  auto col_op = [&](std::size_t a, std::size_t b, const BigInt& p, const BigInt& qq, const BigInt& r,
                    const BigInt& s) {
    // (col a, col b) <- (p a + qq b, r a + s b), applied to m and q
    for (auto& row : m) {
      BigInt na = p * row[a] + qq * row[b], nb = r * row[a] + s * row[b];
      row[a] = std::move(na);
      row[b] = std::move(nb);
    }
    for (auto& row : q) {
      BigInt na = p * row[a] + qq * row[b], nb = r * row[a] + s * row[b];
      row[a] = std::move(na);
      row[b] = std::move(nb);
    }
  };
  auto swap_cols = [&](std::size_t a, std::size_t b) {
    if (a == b) return;
    for (auto& row : m) std::swap(row[a], row[b]);
    for (auto& row : q) std::swap(row[a], row[b]);
  };

  SmithForm out;
  std::size_t t = 0;
  while (t < nrows && t < columns) {
    // pivot: smallest nonzero |entry| in the lower-right block
    std::size_t pi = nrows, pj = columns;
    for (std::size_t i = t; i < nrows; ++i)
      for (std::size_t j = t; j < columns; ++j)
        if (m[i][j] != 0 && (pi == nrows || abs(m[i][j]) < abs(m[pi][pj]))) {
          pi = i;
          pj = j;
        }
    if (pi == nrows) break;
    std::swap(m[t], m[pi]);
    swap_cols(t, pj);

    bool clean = false;
    while (!clean) {
      clean = true;
      for (std::size_t i = t + 1; i < nrows; ++i) {
        if (m[i][t] == 0) continue;
        if (m[i][t] % m[t][t] == 0) {
          // plain elimination; gcdext can return x = 0 here and cycle forever
          BigInt f = m[i][t] / m[t][t];
          for (std::size_t k = 0; k < columns; ++k) m[i][k] -= f * m[t][k];
          continue;
        }
        BigInt g, x, y;
        mpz_gcdext(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t(), m[t][t].get_mpz_t(), m[i][t].get_mpz_t());
        BigInt a = m[t][t] / g, b = m[i][t] / g;
        row_combine(m[t], m[i], x, y, -b, a);
      }
      for (std::size_t j = t + 1; j < columns; ++j) {
        if (m[t][j] == 0) continue;
        if (m[t][j] % m[t][t] == 0) {
          BigInt f = m[t][j] / m[t][t];
          col_op(t, j, 1, 0, -f, 1);
          continue;
        }
        BigInt g, x, y;
        mpz_gcdext(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t(), m[t][t].get_mpz_t(), m[t][j].get_mpz_t());
        BigInt a = m[t][t] / g, b = m[t][j] / g;
        col_op(t, j, x, y, -b, a);
        clean = false;
      }
      if (clean) {
        for (std::size_t i = t + 1; i < nrows; ++i)
          if (m[i][t] != 0) clean = false;
      }
      if (clean) {
        // divisibility: fold a violating row into row t and go again
        for (std::size_t i = t + 1; i < nrows && clean; ++i)
          for (std::size_t j = t + 1; j < columns; ++j)
            if (m[i][j] % m[t][t] != 0) {
              for (std::size_t k = 0; k < columns; ++k) m[t][k] += m[i][k];
              clean = false;
              break;
            }
      }
    }
    if (m[t][t] < 0) {
      for (auto& row : m) row[t] = -row[t];
      for (auto& row : q) row[t] = -row[t];
    }
    out.diagonal.push_back(m[t][t]);
    ++t;
  }
  out.column_transform = std::move(q);
  return out;
}

Rational determinant(std::vector<std::vector<Rational>> m) {
  const std::size_t n = m.size();
  Rational det(1);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m[p][c].sign() == 0) ++p;
    if (p == n) return Rational(0);
    if (p != c) {
      std::swap(m[p], m[c]);
      det = -det;
    }
    det *= m[c][c];
    for (std::size_t i = c + 1; i < n; ++i) {
      if (m[i][c].sign() == 0) continue;
      Rational f = m[i][c] / m[c][c];
      for (std::size_t j = c; j < n; ++j) m[i][j] -= f * m[c][j];
    }
  }
  return det;
}

}  // namespace covspec
