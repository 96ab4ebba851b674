#include "gdm/field_matrix.hpp"

#include <stdexcept>

#include "gdm/errors.hpp"

namespace gdm {

FieldMatrix FieldMatrix::zero(int r, int c) {
  FieldMatrix m;
  m.rows = r;
  m.cols = c;
  m.a.assign(static_cast<size_t>(r) * c, 0);
  return m;
}

FieldMatrix FieldMatrix::identity(const GaloisField& f, int n) {
  FieldMatrix m = zero(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = f.one();
  return m;
}

FieldMatrix transpose(const FieldMatrix& m) {
  FieldMatrix t = FieldMatrix::zero(m.cols, m.rows);
  t.row_ids = m.col_ids;
  t.col_ids = m.row_ids;
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j) t.at(j, i) = m.at(i, j);
  return t;
}

FieldMatrix matmul(const GaloisField& f, const FieldMatrix& a, const FieldMatrix& b) {
  if (a.cols != b.rows) throw std::invalid_argument("matrix dimension mismatch");
  FieldMatrix c = FieldMatrix::zero(a.rows, b.cols);
  c.row_ids = a.row_ids;
  c.col_ids = b.col_ids;
  for (int i = 0; i < a.rows; ++i)
    for (int k = 0; k < a.cols; ++k) {
      GaloisField::Elem aik = a.at(i, k);
      if (aik == 0) continue;
      for (int j = 0; j < b.cols; ++j)
        c.at(i, j) = f.add(c.at(i, j), f.mul(aik, b.at(k, j)));
    }
  return c;
}

FieldMatrix submatrix(const FieldMatrix& m, const std::vector<int>& rows,
                      const std::vector<int>& cols) {
  FieldMatrix s = FieldMatrix::zero(static_cast<int>(rows.size()), static_cast<int>(cols.size()));
  for (size_t i = 0; i < rows.size(); ++i) {
    if (!m.row_ids.empty()) s.row_ids.push_back(m.row_ids[rows[i]]);
    for (size_t j = 0; j < cols.size(); ++j) s.at(static_cast<int>(i), static_cast<int>(j)) =
        m.at(rows[i], cols[j]);
  }
  if (!m.col_ids.empty())
    for (int c : cols) s.col_ids.push_back(m.col_ids[c]);
  return s;
}

GaloisField::Elem det(const GaloisField& f, const FieldMatrix& m) {
  if (m.rows != m.cols) throw std::invalid_argument("determinant of a non-square matrix");
  int n = m.rows;
  FieldMatrix w = m;
  GaloisField::Elem d = f.one();
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int r = col; r < n; ++r)
      if (w.at(r, col) != 0) {
        piv = r;
        break;
      }
    if (piv < 0) return f.zero();
    if (piv != col) {
      for (int j = 0; j < n; ++j) std::swap(w.at(piv, j), w.at(col, j));
      d = f.neg(d);
    }
    GaloisField::Elem p = w.at(col, col);
    d = f.mul(d, p);
    GaloisField::Elem pinv = f.inv(p);
    for (int r = col + 1; r < n; ++r) {
      GaloisField::Elem factor = f.mul(w.at(r, col), pinv);
      if (factor == 0) continue;
      for (int j = col; j < n; ++j)
        w.at(r, j) = f.sub(w.at(r, j), f.mul(factor, w.at(col, j)));
    }
  }
  return d;
}

int rank(const GaloisField& f, FieldMatrix m) {
  int r = 0;
  for (int col = 0; col < m.cols && r < m.rows; ++col) {
    int piv = -1;
    for (int i = r; i < m.rows; ++i)
      if (m.at(i, col) != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != r)
      for (int j = 0; j < m.cols; ++j) std::swap(m.at(piv, j), m.at(r, j));
    GaloisField::Elem pinv = f.inv(m.at(r, col));
    for (int i = r + 1; i < m.rows; ++i) {
      GaloisField::Elem factor = f.mul(m.at(i, col), pinv);
      if (factor == 0) continue;
      for (int j = col; j < m.cols; ++j)
        m.at(i, j) = f.sub(m.at(i, j), f.mul(factor, m.at(r, j)));
    }
    ++r;
  }
  return r;
}

bool try_inverse(const GaloisField& f, const FieldMatrix& m, FieldMatrix& out) {
  if (m.rows != m.cols) throw std::invalid_argument("inverse of a non-square matrix");
  int n = m.rows;
  FieldMatrix w = m;
  out = FieldMatrix::identity(f, n);
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int r = col; r < n; ++r)
      if (w.at(r, col) != 0) {
        piv = r;
        break;
      }
    if (piv < 0) return false;
    if (piv != col)
      for (int j = 0; j < n; ++j) {
        std::swap(w.at(piv, j), w.at(col, j));
        std::swap(out.at(piv, j), out.at(col, j));
      }
    GaloisField::Elem pinv = f.inv(w.at(col, col));
    for (int j = 0; j < n; ++j) {
      w.at(col, j) = f.mul(w.at(col, j), pinv);
      out.at(col, j) = f.mul(out.at(col, j), pinv);
    }
    for (int r = 0; r < n; ++r) {
      if (r == col) continue;
      GaloisField::Elem factor = w.at(r, col);
      if (factor == 0) continue;
      for (int j = 0; j < n; ++j) {
        w.at(r, j) = f.sub(w.at(r, j), f.mul(factor, w.at(col, j)));
        out.at(r, j) = f.sub(out.at(r, j), f.mul(factor, out.at(col, j)));
      }
    }
  }
  return true;
}

bool is_symmetric(const FieldMatrix& m) {
  if (m.rows != m.cols) return false;
  for (int i = 0; i < m.rows; ++i)
    for (int j = i + 1; j < m.cols; ++j)
      if (m.at(i, j) != m.at(j, i)) return false;
  return true;
}

bool is_skew_symmetric(const GaloisField& f, const FieldMatrix& m) {
  if (m.rows != m.cols) return false;
  for (int i = 0; i < m.rows; ++i) {
    if (m.at(i, i) != 0) return false;
    for (int j = i + 1; j < m.cols; ++j)
      if (m.at(i, j) != f.neg(m.at(j, i))) return false;
  }
  return true;
}

bool feasible_by_minor(const GaloisField& f, const FieldMatrix& m,
                       const std::vector<int>& subset) {
  if (subset.empty()) return true;
  return det(f, submatrix(m, subset, subset)) != 0;
}

FieldMatrix pivot(const GaloisField& f, const FieldMatrix& m, const std::vector<int>& x) {
  if (m.rows != m.cols) throw std::invalid_argument("pivot of a non-square matrix");
  int n = m.rows;
  std::vector<unsigned char> in_x(n, 0);
  for (int i : x) {
    if (i < 0 || i >= n) throw std::invalid_argument("pivot index out of range");
    in_x[i] = 1;
  }
  std::vector<int> xs, ys;
  for (int i = 0; i < n; ++i) (in_x[i] ? xs : ys).push_back(i);

  FieldMatrix alpha = submatrix(m, xs, xs);
  FieldMatrix alpha_inv;
  if (!try_inverse(f, alpha, alpha_inv))
    throw undefined_operation("pivot undefined: the selected principal submatrix is singular");

  FieldMatrix beta = submatrix(m, xs, ys);
  FieldMatrix gamma = submatrix(m, ys, xs);
  FieldMatrix ainv_beta = matmul(f, alpha_inv, beta);
  FieldMatrix gamma_ainv = matmul(f, gamma, alpha_inv);
  FieldMatrix schur = matmul(f, gamma_ainv, beta);

  FieldMatrix out = m;  // keeps ids and shape
  int k = static_cast<int>(xs.size());
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) out.at(xs[i], xs[j]) = alpha_inv.at(i, j);
  for (int i = 0; i < k; ++i)
    for (size_t j = 0; j < ys.size(); ++j)
      out.at(xs[i], ys[j]) = ainv_beta.at(i, static_cast<int>(j));
  for (size_t i = 0; i < ys.size(); ++i)
    for (int j = 0; j < k; ++j)
      out.at(ys[i], xs[j]) = f.neg(gamma_ainv.at(static_cast<int>(i), j));
  for (size_t i = 0; i < ys.size(); ++i)
    for (size_t j = 0; j < ys.size(); ++j)
      out.at(ys[i], ys[j]) =
          f.sub(m.at(ys[i], ys[j]), schur.at(static_cast<int>(i), static_cast<int>(j)));
  return out;
}

}  // namespace gdm
