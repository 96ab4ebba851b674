#pragma once

#include <string>
#include <vector>

#include "gdm/gf.hpp"

namespace gdm {

// Dense matrix over a GaloisField. Row/column ids are carried for display;
// all arithmetic is positional.
struct FieldMatrix {
  std::vector<std::string> row_ids, col_ids;
  int rows = 0, cols = 0;
  std::vector<GaloisField::Elem> a;  // row-major

  static FieldMatrix zero(int r, int c);
  static FieldMatrix identity(const GaloisField& f, int n);

  GaloisField::Elem& at(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
  GaloisField::Elem at(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }
};

FieldMatrix transpose(const FieldMatrix& m);
FieldMatrix matmul(const GaloisField& f, const FieldMatrix& a, const FieldMatrix& b);
FieldMatrix submatrix(const FieldMatrix& m, const std::vector<int>& rows,
                      const std::vector<int>& cols);

GaloisField::Elem det(const GaloisField& f, const FieldMatrix& m);  // square only
int rank(const GaloisField& f, FieldMatrix m);

// Inverse via Gauss-Jordan; empty result when singular.
bool try_inverse(const GaloisField& f, const FieldMatrix& m, FieldMatrix& out);

bool is_symmetric(const FieldMatrix& m);
// Skew-symmetric: transpose equals negation AND zero diagonal (the diagonal
// condition is required even in characteristic 2).
bool is_skew_symmetric(const GaloisField& f, const FieldMatrix& m);

// True iff the principal submatrix on `subset` is nonsingular; the empty
// subset counts as nonsingular.
bool feasible_by_minor(const GaloisField& f, const FieldMatrix& m, const std::vector<int>& subset);

// Principal pivot on X: with A ordered as (X, rest) blocks (alpha beta;
// gamma delta) and alpha = A[X] nonsingular, the result holds
// (alpha^-1, alpha^-1 beta; -gamma alpha^-1, delta - gamma alpha^-1 beta),
// written back in the original index order. Throws undefined_operation when
// A[X] is singular.
FieldMatrix pivot(const GaloisField& f, const FieldMatrix& m, const std::vector<int>& x);

}  // namespace gdm
