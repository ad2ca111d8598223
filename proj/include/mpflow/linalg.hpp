#ifndef MPFLOW_LINALG_HPP
#define MPFLOW_LINALG_HPP

#include <optional>
#include <vector>

#include "mpflow/matrix.hpp"

namespace mpf {

/// Everything the variable change x -> z needs. In the reindexed frame
/// (basis columns first) the map is x_i = d_i - h_i^T z for i in [m] and
/// x_{m+i} = z_i; perm translates reindexed positions back to original
/// column indices (perm[k] = original index of reindexed column k).
struct TransformData {
  std::vector<int> basis_cols;  // 0-based original column indices, size m
  std::vector<int> perm;        // size n
  IntMatrix B_inv;              // m x m
  IntMatrix C;                  // m x n, leading block I
  IntVec d;                     // length m
  IntMatrix H;                  // m x (n-m), row i = h_i^T
  IntMatrix U;                  // n x n unimodular, C*U = [I|0]
};

struct BasisOptions {
  bool incidence = false;               // spanning-tree strategy applies
  std::optional<std::vector<int>> pin;  // explicit 0-based basis columns
  long exhaustive_cap = 200000;         // subsets tried before giving up
};

/// Picks m columns with |det| = 1 and the permutation putting them first,
/// remaining columns in original relative order. For incidence matrices the
/// lexicographically smallest spanning tree is used. For general matrices:
/// greedy rank growth, then bounded exhaustive search over column subsets.
/// Throws Error{no_unimodular_basis}; the message says "inconclusive" when
/// the search cap was hit before exhausting all subsets.
std::pair<std::vector<int>, std::vector<int>> find_unimodular_basis(
    const IntMatrix& A, const BasisOptions& opts = {});

/// C = B^-1 * A(permuted), d = B^-1 * b.
std::pair<IntMatrix, IntVec> reduce_system(const IntMatrix& A, const IntVec& b,
                                           const std::vector<int>& perm,
                                           const IntMatrix& B_inv);

/// For C = [I|R] returns unimodular U with C*U = [I|0], built from the
/// elementary column operations C_j := C_j - C_{i,j} e_i and cross-checked
/// against the closed form [[I, -R], [0, I]].
IntMatrix hermite_reduce(const IntMatrix& C);

TransformData transform(const IntMatrix& A, const IntVec& b,
                        const BasisOptions& opts = {});

/// x in ORIGINAL column indexing for a given z.
IntVec apply_transform(const TransformData& t, const IntVec& z);

}  // namespace mpf

#endif
