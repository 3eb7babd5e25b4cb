#pragma once

#include <vector>

#include "polyhom/rational.hpp"

namespace polyhom::gf {

struct NotInvertible : Error {
  NotInvertible() : Error("matrix is not invertible") {}
};
struct TooLarge : Error {
  explicit TooLarge(const std::string& what) : Error("enumeration too large: " + what) {}
};

// Dense matrix over GF(p), entries stored in [0, p).
struct Matrix {
  int p = 2;
  int rows = 0, cols = 0;
  std::vector<int> a;

  Matrix() = default;
  Matrix(int p_, int rows_, int cols_) : p(p_), rows(rows_), cols(cols_), a(rows_ * cols_, 0) {}
  static Matrix identity(int p, int n);

  int& at(int r, int c) { return a[r * cols + c]; }
  int at(int r, int c) const { return a[r * cols + c]; }
  bool operator==(const Matrix& o) const {
    return p == o.p && rows == o.rows && cols == o.cols && a == o.a;
  }
};

int inv_mod(int x, int p);
Matrix mul(const Matrix& a, const Matrix& b);
Matrix transpose(const Matrix& m);
Matrix submatrix(const Matrix& m, int r0, int r1, int c0, int c1);
// Full reduced row echelon form; returns the rank.
int rref_in_place(Matrix& m);
int rank(Matrix m);
bool is_invertible(const Matrix& m);
Matrix inverse(const Matrix& m);
std::vector<int> mul_row_vec(const std::vector<int>& v, const Matrix& m);

// A subspace of GF(p)^ambient in canonical reduced-row-echelon basis, so that
// equal subspaces compare equal structurally.
struct Subspace {
  int p = 2;
  int ambient = 0;
  Matrix basis;  // dim x ambient, RREF with no zero rows

  int dim() const { return basis.rows; }
  bool contains(const std::vector<int>& v) const;
  bool operator==(const Subspace& o) const {
    return p == o.p && ambient == o.ambient && basis == o.basis;
  }
};

Subspace make_subspace(int p, int ambient, const Matrix& spanning_rows);
Subspace zero_subspace(int p, int ambient);
Subspace full_space(int p, int ambient);
Subspace coordinate_subspace(int p, int ambient, const std::vector<int>& coords);
Subspace sum(const Subspace& a, const Subspace& b);
// Zassenhaus intersection of row spaces.
Subspace intersect(const Subspace& a, const Subspace& b);
// Image under the coordinate selection map.
Subspace project(const Subspace& s, const std::vector<int>& coords);
bool subspace_leq(const Subspace& inner, const Subspace& outer);
// All p^dim vectors; throws TooLarge beyond max_points.
std::vector<std::vector<int>> points(const Subspace& s, long max_points);

}  // namespace polyhom::gf
