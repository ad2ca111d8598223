#include "mpflow/linalg.hpp"

#include <algorithm>
#include <numeric>

#include "mpflow/errors.hpp"

namespace mpf {

namespace {

bool is_incidence(const IntMatrix& A) {
  // Each column of an m x n system obtained by dropping the last row of an
  // incidence matrix has entries in {-1,0,1} with at most one +1 and one -1.
  for (int j = 0; j < A.cols(); ++j) {
    int pos = 0, neg = 0;
    for (int i = 0; i < A.rows(); ++i) {
      const Int& v = A.at(i, j);
      if (v == 1) ++pos;
      else if (v == -1) ++neg;
      else if (v != 0) return false;
    }
    if (pos > 1 || neg > 1) return false;
  }
  return true;
}

std::vector<int> spanning_tree_basis(const IntMatrix& A) {
  // Treat column j as an edge between its +1 row and -1 row; a missing
  // nonzero means the edge touches the dropped last node (index m).
  const int m = A.rows();
  std::vector<int> parent(m + 1);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::vector<int> cols;
  for (int j = 0; j < A.cols() && static_cast<int>(cols.size()) < m; ++j) {
    int a = m, b = m;
    for (int i = 0; i < m; ++i) {
      if (A.at(i, j) == 1) a = i;
      else if (A.at(i, j) == -1) b = i;
    }
    if (a == m && b == m) continue;  // zero column: both ends dropped
    int ra = find(a), rb = find(b);
    if (ra == rb) continue;
    parent[ra] = rb;
    cols.push_back(j);
  }
  if (static_cast<int>(cols.size()) != m)
    fail(Err::no_unimodular_basis, "no spanning tree covers all nodes");
  return cols;
}

std::vector<int> make_perm(int n, const std::vector<int>& basis) {
  std::vector<bool> in_basis(n, false);
  for (int c : basis) in_basis[c] = true;
  std::vector<int> perm = basis;
  for (int j = 0; j < n; ++j)
    if (!in_basis[j]) perm.push_back(j);
  return perm;
}

}  // namespace

std::pair<std::vector<int>, std::vector<int>> find_unimodular_basis(
    const IntMatrix& A, const BasisOptions& opts) {
  const int m = A.rows();
  const int n = A.cols();
  if (n < m) fail(Err::no_unimodular_basis, "fewer columns than rows");
  if (int_rank(A) != m)
    fail(Err::no_unimodular_basis, "matrix is not full row rank");

  if (opts.pin) {
    std::vector<int> cols = *opts.pin;
    if (static_cast<int>(cols.size()) != m)
      fail(Err::length_mismatch, "basis hint must list exactly m columns");
    Int det = bareiss_det(A.select_columns(cols));
    if (det != 1 && det != -1)
      fail(Err::not_unimodular, "pinned basis has determinant " + det.get_str());
    return {cols, make_perm(n, cols)};
  }

  if (opts.incidence || is_incidence(A)) {
    std::vector<int> cols = spanning_tree_basis(A);
    Int det = bareiss_det(A.select_columns(cols));
    if (det != 1 && det != -1)
      fail(Err::internal, "spanning-tree basis not unimodular");
    return {cols, make_perm(n, cols)};
  }

  // Greedy: keep each column that grows the rank, then check the determinant.
  std::vector<int> greedy;
  for (int j = 0; j < n && static_cast<int>(greedy.size()) < m; ++j) {
    greedy.push_back(j);
    if (int_rank(A.select_columns(greedy)) != static_cast<int>(greedy.size()))
      greedy.pop_back();
  }
  Int det = bareiss_det(A.select_columns(greedy));
  if (det == 1 || det == -1) return {greedy, make_perm(n, greedy)};

  // Bounded exhaustive search over m-subsets in lexicographic order.
  std::vector<int> idx(m);
  std::iota(idx.begin(), idx.end(), 0);
  long tried = 0;
  while (true) {
    if (++tried > opts.exhaustive_cap)
      fail(Err::no_unimodular_basis,
           "inconclusive: subset search cap reached without finding a basis");
    Int dd = bareiss_det(A.select_columns(idx));
    if (dd == 1 || dd == -1) return {idx, make_perm(n, idx)};
    // next combination
    int k = m - 1;
    while (k >= 0 && idx[k] == n - m + k) --k;
    if (k < 0) break;
    ++idx[k];
    for (int t = k + 1; t < m; ++t) idx[t] = idx[t - 1] + 1;
  }
  fail(Err::no_unimodular_basis, "no unimodular basis exists");
}

std::pair<IntMatrix, IntVec> reduce_system(const IntMatrix& A, const IntVec& b,
                                           const std::vector<int>& perm,
                                           const IntMatrix& B_inv) {
  IntMatrix A_perm = A.select_columns(perm);
  IntMatrix C = B_inv * A_perm;
  IntVec d = B_inv * b;
  for (int i = 0; i < C.rows(); ++i)
    for (int j = 0; j < C.rows(); ++j)
      if (C.at(i, j) != (i == j ? 1 : 0))
        fail(Err::internal, "reduced system leading block is not identity");
  return {std::move(C), std::move(d)};
}

IntMatrix hermite_reduce(const IntMatrix& C) {
  const int m = C.rows();
  const int n = C.cols();
  IntMatrix work = C;
  IntMatrix U = IntMatrix::identity(n);
  for (int i = 0; i < m; ++i)
    for (int j = m; j < n; ++j) {
      Int factor = work.at(i, j);
      if (factor == 0) continue;
      for (int r = 0; r < m; ++r) work.at(r, j) -= factor * work.at(r, i);
      for (int r = 0; r < n; ++r) U.at(r, j) -= factor * U.at(r, i);
    }
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j)
      if (work.at(i, j) != (i == j ? 1 : 0))
        fail(Err::internal, "column reduction did not reach [I|0]");
  // Closed form: U = [[I, -R], [0, I]] with R the right block of C.
  IntMatrix closed = IntMatrix::identity(n);
  for (int i = 0; i < m; ++i)
    for (int j = m; j < n; ++j) closed.at(i, j) = -C.at(i, j);
  if (!(U == closed))
    fail(Err::internal, "elementary-product U disagrees with closed form");
  return U;
}

TransformData transform(const IntMatrix& A, const IntVec& b,
                        const BasisOptions& opts) {
  TransformData t;
  std::tie(t.basis_cols, t.perm) = find_unimodular_basis(A, opts);
  IntMatrix B = A.select_columns(t.basis_cols);
  t.B_inv = invert_unimodular(B);
  if (!(B * t.B_inv == IntMatrix::identity(A.rows())))
    fail(Err::internal, "B * B_inv != I");
  std::tie(t.C, t.d) = reduce_system(A, b, t.perm, t.B_inv);
  const int m = A.rows();
  const int n = A.cols();
  t.H = IntMatrix(m, n - m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n - m; ++j) t.H.at(i, j) = t.C.at(i, m + j);
  t.U = hermite_reduce(t.C);
  return t;
}

IntVec apply_transform(const TransformData& t, const IntVec& z) {
  const int m = t.H.rows();
  const int n = static_cast<int>(t.perm.size());
  if (static_cast<int>(z.size()) != n - m)
    fail(Err::length_mismatch, "z has wrong length");
  IntVec x(n);
  IntVec hz = t.H * z;
  for (int i = 0; i < m; ++i) x[t.perm[i]] = t.d[i] - hz[i];
  for (int i = 0; i < n - m; ++i) x[t.perm[m + i]] = z[i];
  return x;
}

}  // namespace mpf
