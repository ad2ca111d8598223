#include "mpflow/matrix.hpp"

#include "mpflow/errors.hpp"

namespace mpf {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = static_cast<int>(rows.size());
  cols_ = rows_ ? static_cast<int>(rows.begin()->size()) : 0;
  a_.reserve(static_cast<size_t>(rows_) * cols_);
  for (const auto& r : rows) {
    if (static_cast<int>(r.size()) != cols_)
      fail(Err::length_mismatch, "ragged initializer");
    for (long v : r) a_.emplace_back(v);
  }
}

IntMatrix IntMatrix::identity(int n) {
  IntMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntVec IntMatrix::column(int j) const {
  IntVec v(rows_);
  for (int i = 0; i < rows_; ++i) v[i] = at(i, j);
  return v;
}

IntVec IntMatrix::row(int i) const {
  IntVec v(cols_);
  for (int j = 0; j < cols_; ++j) v[j] = at(i, j);
  return v;
}

IntMatrix IntMatrix::select_columns(const std::vector<int>& cols) const {
  IntMatrix m(rows_, static_cast<int>(cols.size()));
  for (int j = 0; j < static_cast<int>(cols.size()); ++j)
    for (int i = 0; i < rows_; ++i) m.at(i, j) = at(i, cols[j]);
  return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& rhs) const {
  if (cols_ != rhs.rows_) fail(Err::length_mismatch, "matrix product shape mismatch");
  IntMatrix out(rows_, rhs.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const Int& aik = at(i, k);
      if (aik == 0) continue;
      for (int j = 0; j < rhs.cols_; ++j) out.at(i, j) += aik * rhs.at(k, j);
    }
  return out;
}

IntVec IntMatrix::operator*(const IntVec& v) const {
  if (cols_ != static_cast<int>(v.size()))
    fail(Err::length_mismatch, "matrix-vector shape mismatch");
  IntVec out(rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) out[i] += at(i, j) * v[j];
  return out;
}

Int dot(const IntVec& a, const IntVec& b) {
  if (a.size() != b.size()) fail(Err::length_mismatch, "dot length mismatch");
  Int s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Int bareiss_det(const IntMatrix& m) {
  if (m.rows() != m.cols()) fail(Err::length_mismatch, "determinant of non-square matrix");
  const int n = m.rows();
  if (n == 0) return 1;
  IntMatrix a = m;
  Int prev = 1;
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (a.at(k, k) == 0) {
      int p = -1;
      for (int i = k + 1; i < n; ++i)
        if (a.at(i, k) != 0) { p = i; break; }
      if (p < 0) return 0;
      for (int j = 0; j < n; ++j) std::swap(a.at(k, j), a.at(p, j));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j) {
        Int t = a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j);
        mpz_divexact(a.at(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
    prev = a.at(k, k);
  }
  return sign > 0 ? a.at(n - 1, n - 1) : Int(-a.at(n - 1, n - 1));
}

int int_rank(const IntMatrix& m) {
  // Fraction-free forward elimination; rank is the number of pivots.
  IntMatrix a = m;
  int rank = 0;
  Int prev = 1;
  for (int col = 0; col < a.cols() && rank < a.rows(); ++col) {
    int p = -1;
    for (int i = rank; i < a.rows(); ++i)
      if (a.at(i, col) != 0) { p = i; break; }
    if (p < 0) continue;
    if (p != rank)
      for (int j = 0; j < a.cols(); ++j) std::swap(a.at(rank, j), a.at(p, j));
    for (int i = rank + 1; i < a.rows(); ++i)
      for (int j = col + 1; j < a.cols(); ++j) {
        Int t = a.at(i, j) * a.at(rank, col) - a.at(i, col) * a.at(rank, j);
        mpz_divexact(a.at(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
    for (int i = rank + 1; i < a.rows(); ++i) a.at(i, col) = 0;
    prev = a.at(rank, col);
    ++rank;
  }
  return rank;
}

IntMatrix invert_unimodular(const IntMatrix& b) {
  Int det = bareiss_det(b);
  if (det != 1 && det != -1)
    fail(Err::not_unimodular, "determinant is " + det.get_str() + ", expected +/-1");
  const int n = b.rows();
  // Adjugate via cofactors; n is small (number of nodes minus one).
  IntMatrix inv(n, n);
  if (n == 1) {
    inv.at(0, 0) = det;  // det = b(0,0) = +/-1, and 1/det = det
    return inv;
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      IntMatrix minor(n - 1, n - 1);
      for (int r = 0, rr = 0; r < n; ++r) {
        if (r == i) continue;
        for (int c = 0, cc = 0; c < n; ++c) {
          if (c == j) continue;
          minor.at(rr, cc) = b.at(r, c);
          ++cc;
        }
        ++rr;
      }
      Int cof = bareiss_det(minor);
      if ((i + j) % 2 != 0) cof = -cof;
      inv.at(j, i) = det == 1 ? cof : Int(-cof);
    }
  return inv;
}

}  // namespace mpf
