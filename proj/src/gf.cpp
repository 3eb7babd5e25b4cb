#include "polyhom/gf.hpp"

#include <algorithm>
#include <numeric>

namespace polyhom::gf {

Matrix Matrix::identity(int p, int n) {
  Matrix m(p, n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

int inv_mod(int x, int p) {
  x %= p;
  if (x < 0) x += p;
  if (x == 0) throw NotInvertible();
  int r = 1, b = x, e = p - 2;  // Fermat; p is prime
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r;
}

Matrix mul(const Matrix& a, const Matrix& b) {
  if (a.cols != b.rows || a.p != b.p) throw Error("gf matrix dimension mismatch");
  Matrix out(a.p, a.rows, b.cols);
  for (int i = 0; i < a.rows; ++i)
    for (int k = 0; k < a.cols; ++k) {
      int aik = a.at(i, k);
      if (!aik) continue;
      for (int j = 0; j < b.cols; ++j)
        out.at(i, j) = (out.at(i, j) + aik * b.at(k, j)) % a.p;
    }
  return out;
}

Matrix transpose(const Matrix& m) {
  Matrix out(m.p, m.cols, m.rows);
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j) out.at(j, i) = m.at(i, j);
  return out;
}

Matrix submatrix(const Matrix& m, int r0, int r1, int c0, int c1) {
  Matrix out(m.p, r1 - r0, c1 - c0);
  for (int i = r0; i < r1; ++i)
    for (int j = c0; j < c1; ++j) out.at(i - r0, j - c0) = m.at(i, j);
  return out;
}

int rref_in_place(Matrix& m) {
  int p = m.p, pivot_row = 0;
  for (int col = 0; col < m.cols && pivot_row < m.rows; ++col) {
    int sel = -1;
    for (int r = pivot_row; r < m.rows; ++r)
      if (m.at(r, col) != 0) { sel = r; break; }
    if (sel < 0) continue;
    if (sel != pivot_row)
      for (int c = 0; c < m.cols; ++c) std::swap(m.at(sel, c), m.at(pivot_row, c));
    int inv = inv_mod(m.at(pivot_row, col), p);
    for (int c = 0; c < m.cols; ++c) m.at(pivot_row, c) = m.at(pivot_row, c) * inv % p;
    for (int r = 0; r < m.rows; ++r) {
      if (r == pivot_row) continue;
      int f = m.at(r, col);
      if (!f) continue;
      for (int c = 0; c < m.cols; ++c)
        m.at(r, c) = ((m.at(r, c) - f * m.at(pivot_row, c)) % p + p) % p;
    }
    ++pivot_row;
  }
  return pivot_row;
}

int rank(Matrix m) { return rref_in_place(m); }

bool is_invertible(const Matrix& m) { return m.rows == m.cols && rank(m) == m.rows; }

Matrix inverse(const Matrix& m) {
  if (m.rows != m.cols) throw NotInvertible();
  int n = m.rows;
  Matrix aug(m.p, n, 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, n + i) = 1;
  }
  if (rref_in_place(aug) != n) throw NotInvertible();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (aug.at(i, j) != (i == j ? 1 : 0)) throw NotInvertible();
  return submatrix(aug, 0, n, n, 2 * n);
}

std::vector<int> mul_row_vec(const std::vector<int>& v, const Matrix& m) {
  if ((int)v.size() != m.rows) throw Error("gf row-vector dimension mismatch");
  std::vector<int> out(m.cols, 0);
  for (int i = 0; i < m.rows; ++i) {
    if (!v[i]) continue;
    for (int j = 0; j < m.cols; ++j) out[j] = (out[j] + v[i] * m.at(i, j)) % m.p;
  }
  return out;
}

bool Subspace::contains(const std::vector<int>& v) const {
  if ((int)v.size() != ambient) throw Error("vector does not match the ambient dimension");
  std::vector<int> w = v;
  for (int r = 0; r < basis.rows; ++r) {
    int piv = -1;
    for (int c = 0; c < ambient; ++c)
      if (basis.at(r, c) != 0) { piv = c; break; }
    int f = w[piv];
    if (!f) continue;
    for (int c = 0; c < ambient; ++c) w[c] = ((w[c] - f * basis.at(r, c)) % p + p) % p;
  }
  return std::all_of(w.begin(), w.end(), [](int x) { return x == 0; });
}

Subspace make_subspace(int p, int ambient, const Matrix& spanning_rows) {
  if (spanning_rows.rows > 0 && spanning_rows.cols != ambient)
    throw Error("spanning rows do not match the ambient dimension");
  Matrix m = spanning_rows;
  m.p = p;
  int r = rref_in_place(m);
  Matrix basis(p, r, ambient);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < ambient; ++j) basis.at(i, j) = m.at(i, j);
  return Subspace{p, ambient, std::move(basis)};
}

Subspace zero_subspace(int p, int ambient) {
  return Subspace{p, ambient, Matrix(p, 0, ambient)};
}

Subspace full_space(int p, int ambient) {
  return Subspace{p, ambient, Matrix::identity(p, ambient)};
}

Subspace coordinate_subspace(int p, int ambient, const std::vector<int>& coords) {
  Matrix m(p, (int)coords.size(), ambient);
  for (int i = 0; i < (int)coords.size(); ++i) m.at(i, coords[i]) = 1;
  return make_subspace(p, ambient, m);
}

Subspace sum(const Subspace& a, const Subspace& b) {
  if (a.p != b.p || a.ambient != b.ambient) throw Error("subspace ambient mismatch");
  Matrix m(a.p, a.dim() + b.dim(), a.ambient);
  for (int i = 0; i < a.dim(); ++i)
    for (int j = 0; j < a.ambient; ++j) m.at(i, j) = a.basis.at(i, j);
  for (int i = 0; i < b.dim(); ++i)
    for (int j = 0; j < a.ambient; ++j) m.at(a.dim() + i, j) = b.basis.at(i, j);
  return make_subspace(a.p, a.ambient, m);
}

Subspace intersect(const Subspace& a, const Subspace& b) {
  if (a.p != b.p || a.ambient != b.ambient) throw Error("subspace ambient mismatch");
  int n = a.ambient;
  Matrix z(a.p, a.dim() + b.dim(), 2 * n);
  for (int i = 0; i < a.dim(); ++i)
    for (int j = 0; j < n; ++j) {
      z.at(i, j) = a.basis.at(i, j);
      z.at(i, n + j) = a.basis.at(i, j);
    }
  for (int i = 0; i < b.dim(); ++i)
    for (int j = 0; j < n; ++j) z.at(a.dim() + i, j) = b.basis.at(i, j);
  rref_in_place(z);
  Matrix rows(a.p, 0, n);
  for (int r = 0; r < z.rows; ++r) {
    bool left_zero = true;
    for (int j = 0; j < n && left_zero; ++j) left_zero = z.at(r, j) == 0;
    bool right_zero = true;
    for (int j = 0; j < n && right_zero; ++j) right_zero = z.at(r, n + j) == 0;
    if (left_zero && !right_zero) {
      rows.a.insert(rows.a.end(), z.a.begin() + r * 2 * n + n, z.a.begin() + (r + 1) * 2 * n);
      ++rows.rows;
    }
  }
  return make_subspace(a.p, n, rows);
}

Subspace project(const Subspace& s, const std::vector<int>& coords) {
  Matrix m(s.p, s.dim(), (int)coords.size());
  for (int i = 0; i < s.dim(); ++i)
    for (int j = 0; j < (int)coords.size(); ++j) m.at(i, j) = s.basis.at(i, coords[j]);
  return make_subspace(s.p, (int)coords.size(), m);
}

bool subspace_leq(const Subspace& inner, const Subspace& outer) {
  for (int i = 0; i < inner.dim(); ++i) {
    std::vector<int> row(inner.ambient);
    for (int j = 0; j < inner.ambient; ++j) row[j] = inner.basis.at(i, j);
    if (!outer.contains(row)) return false;
  }
  return true;
}

std::vector<std::vector<int>> points(const Subspace& s, long max_points) {
  long count = 1;
  for (int i = 0; i < s.dim(); ++i) {
    count *= s.p;
    if (count > max_points)
      throw TooLarge(std::to_string(s.p) + "^" + std::to_string(s.dim()));
  }
  std::vector<std::vector<int>> out;
  out.reserve(count);
  std::vector<int> coeff(s.dim(), 0);
  std::vector<int> v(s.ambient, 0);
  for (long it = 0; it < count; ++it) {
    out.push_back(v);
    // increment the coefficient vector and update v incrementally
    for (int d = 0; d < s.dim(); ++d) {
      for (int j = 0; j < s.ambient; ++j)
        v[j] = (v[j] + s.basis.at(d, j)) % s.p;
      coeff[d] = (coeff[d] + 1) % s.p;
      if (coeff[d] != 0) break;
      // wrapped to zero: the p additions cancelled; continue carrying
    }
  }
  return out;
}

}  // namespace polyhom::gf
