#ifndef MPFLOW_POLY_HPP
#define MPFLOW_POLY_HPP

#include <map>
#include <vector>

#include "mpflow/decoupled.hpp"
#include "mpflow/matrix.hpp"

namespace mpf {

using Expo = std::vector<unsigned>;

/// Multivariate polynomial over Q, dense exponent vectors, lex order with
/// z1 > z2 > ... > z_{n-m}. The map is keyed descending so begin() is the
/// leading term.
class MultiPoly {
 public:
  MultiPoly() : nvars_(0) {}
  explicit MultiPoly(int nvars) : nvars_(nvars) {}

  static MultiPoly constant(int nvars, const Rat& c);
  static MultiPoly var(int nvars, int j);  // z_{j+1}, 0-based j

  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const {
    return terms_.empty() ||
           (terms_.size() == 1 && terms_.begin()->first == Expo(nvars_, 0));
  }

  const std::map<Expo, Rat, std::greater<Expo>>& terms() const { return terms_; }

  const Expo& lead_monomial() const;
  const Rat& lead_coeff() const;

  void add_term(const Expo& e, const Rat& c);

  MultiPoly operator+(const MultiPoly& rhs) const;
  MultiPoly operator-(const MultiPoly& rhs) const;
  MultiPoly operator*(const MultiPoly& rhs) const;
  MultiPoly operator*(const Rat& c) const;
  bool operator==(const MultiPoly& rhs) const = default;

  /// Multiply by c * z^e.
  MultiPoly times_monomial(const Rat& c, const Expo& e) const;

  MultiPoly monic() const;

  Rat eval(const IntVec& z) const;

  /// Substitute integer values for a subset of variables (assigned[j] set);
  /// result still lives in nvars variables.
  MultiPoly substitute(const std::vector<bool>& assigned, const IntVec& vals) const;

  /// Largest variable index with a nonzero exponent, or -1 for constants.
  int max_var() const;
  /// Smallest variable index with a nonzero exponent, or nvars for constants.
  int min_var() const;

  std::string str() const;  // for diagnostics and the text report

 private:
  int nvars_;
  std::map<Expo, Rat, std::greater<Expo>> terms_;
};

struct GroebnerBasis {
  std::vector<MultiPoly> polys;
  bool reduced = false;
};

/// q_i(z) = (d_i - h_i^T z)(d_i - h_i^T z - 1)...(d_i - h_i^T z - u_i).
MultiPoly build_q(int nvars, const Int& d_i, const IntVec& h_i, const Int& u_i);

/// r_j(z) = product over roots in D_j of (z_j - root).
MultiPoly build_r(int nvars, int j, const MinimizerSet& D_j);

/// Multivariate division: f = sum q_i * divisors_i + remainder, no monomial
/// of the remainder divisible by any divisor's leading monomial.
std::pair<std::vector<MultiPoly>, MultiPoly> poly_divide(
    const MultiPoly& f, const std::vector<MultiPoly>& divisors);

/// Buchberger with the coprime and chain pair criteria; result is the unique
/// reduced lex basis. Throws Error{resource_cap} when the number of S-pair
/// reductions exceeds budget.
GroebnerBasis buchberger(std::vector<MultiPoly> generators, long budget = 20000);

/// Weak-Nullstellensatz test: the system is solvable iff the reduced basis
/// is not {1}.
bool is_consistent(const GroebnerBasis& g);

/// Elimination cascade over the lex basis: solve the last variable's
/// univariate part, back-substitute, repeat; integer roots come from divisor
/// tests on the trailing coefficient. Dead branches are pruned. Points come
/// back lex-sorted and deduplicated.
std::vector<IntVec> extract_variety(const GroebnerBasis& g);

/// Direct filter: { z in D : 0 <= d_k - h_k^T z <= u_k for all k }.
/// u here is the PERMUTED capacity vector (basis arcs first).
std::vector<IntVec> brute_force_F(const ProductSet& D, const IntVec& d,
                                  const IntMatrix& H, const IntVec& u_perm);

}  // namespace mpf

#endif
