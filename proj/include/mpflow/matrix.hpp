#ifndef MPFLOW_MATRIX_HPP
#define MPFLOW_MATRIX_HPP

#include <initializer_list>
#include <vector>

#include "mpflow/numbers.hpp"

namespace mpf {

using IntVec = std::vector<Int>;

/// Dense matrix of exact integers. Row-major, value semantics.
class IntMatrix {
 public:
  IntMatrix() : rows_(0), cols_(0) {}
  IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols) {}
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Int& at(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
  const Int& at(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }

  IntVec column(int j) const;
  IntVec row(int i) const;

  /// Submatrix made of the given columns, in the given order.
  IntMatrix select_columns(const std::vector<int>& cols) const;

  IntMatrix operator*(const IntMatrix& rhs) const;
  IntVec operator*(const IntVec& v) const;
  bool operator==(const IntMatrix& rhs) const = default;

 private:
  int rows_, cols_;
  std::vector<Int> a_;
};

Int dot(const IntVec& a, const IntVec& b);

/// Exact determinant by Bareiss fraction-free elimination.
Int bareiss_det(const IntMatrix& m);

/// Exact rank over the rationals.
int int_rank(const IntMatrix& m);

/// Integer inverse of a matrix with |det| = 1. Throws Error{not_unimodular}.
IntMatrix invert_unimodular(const IntMatrix& b);

}  // namespace mpf

#endif
