#include "mpflow/poly.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>

#include "mpflow/errors.hpp"

namespace mpf {

MultiPoly MultiPoly::constant(int nvars, const Rat& c) {
  MultiPoly p(nvars);
  p.add_term(Expo(nvars, 0), c);
  return p;
}

MultiPoly MultiPoly::var(int nvars, int j) {
  MultiPoly p(nvars);
  Expo e(nvars, 0);
  e[j] = 1;
  p.add_term(e, 1);
  return p;
}

const Expo& MultiPoly::lead_monomial() const {
  if (terms_.empty()) fail(Err::internal, "leading monomial of zero polynomial");
  return terms_.begin()->first;
}

const Rat& MultiPoly::lead_coeff() const {
  if (terms_.empty()) fail(Err::internal, "leading coefficient of zero polynomial");
  return terms_.begin()->second;
}

void MultiPoly::add_term(const Expo& e, const Rat& c) {
  if (c == 0) return;
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_.emplace(e, c);
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

MultiPoly MultiPoly::operator+(const MultiPoly& rhs) const {
  MultiPoly out = *this;
  for (const auto& [e, c] : rhs.terms_) out.add_term(e, c);
  return out;
}

MultiPoly MultiPoly::operator-(const MultiPoly& rhs) const {
  MultiPoly out = *this;
  for (const auto& [e, c] : rhs.terms_) out.add_term(e, Rat(-c));
  return out;
}

MultiPoly MultiPoly::operator*(const MultiPoly& rhs) const {
  MultiPoly out(nvars_);
  for (const auto& [e1, c1] : terms_)
    for (const auto& [e2, c2] : rhs.terms_) {
      Expo e = e1;
      for (int i = 0; i < nvars_; ++i) e[i] += e2[i];
      out.add_term(e, c1 * c2);
    }
  return out;
}

MultiPoly MultiPoly::operator*(const Rat& c) const {
  MultiPoly out(nvars_);
  if (c == 0) return out;
  for (const auto& [e, coeff] : terms_) out.terms_.emplace(e, coeff * c);
  return out;
}

MultiPoly MultiPoly::times_monomial(const Rat& c, const Expo& e) const {
  MultiPoly out(nvars_);
  if (c == 0) return out;
  for (const auto& [e1, c1] : terms_) {
    Expo m = e1;
    for (int i = 0; i < nvars_; ++i) m[i] += e[i];
    out.terms_.emplace(m, c1 * c);
  }
  return out;
}

MultiPoly MultiPoly::monic() const {
  if (terms_.empty()) return *this;
  return *this * Rat(1 / lead_coeff());
}

Rat MultiPoly::eval(const IntVec& z) const {
  if (static_cast<int>(z.size()) != nvars_)
    fail(Err::length_mismatch, "evaluation point has wrong length");
  Rat sum = 0;
  for (const auto& [e, c] : terms_) {
    Int mono = 1;
    for (int i = 0; i < nvars_; ++i)
      for (unsigned k = 0; k < e[i]; ++k) mono *= z[i];
    sum += c * Rat(mono);
  }
  sum.canonicalize();
  return sum;
}

MultiPoly MultiPoly::substitute(const std::vector<bool>& assigned,
                                const IntVec& vals) const {
  MultiPoly out(nvars_);
  for (const auto& [e, c] : terms_) {
    Int scale = 1;
    Expo rest = e;
    for (int i = 0; i < nvars_; ++i) {
      if (!assigned[i]) continue;
      for (unsigned k = 0; k < e[i]; ++k) scale *= vals[i];
      rest[i] = 0;
    }
    out.add_term(rest, c * Rat(scale));
  }
  return out;
}

int MultiPoly::max_var() const {
  int mv = -1;
  for (const auto& [e, c] : terms_)
    for (int i = 0; i < nvars_; ++i)
      if (e[i] > 0) mv = std::max(mv, i);
  return mv;
}

int MultiPoly::min_var() const {
  int mv = nvars_;
  for (const auto& [e, c] : terms_)
    for (int i = 0; i < nvars_; ++i)
      if (e[i] > 0) { mv = std::min(mv, i); break; }
  return mv;
}

std::string MultiPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << rat_string(c);
    for (int i = 0; i < nvars_; ++i)
      if (e[i] > 0) {
        os << "*z" << (i + 1);
        if (e[i] > 1) os << "^" << e[i];
      }
  }
  return os.str();
}

MultiPoly build_q(int nvars, const Int& d_i, const IntVec& h_i, const Int& u_i) {
  if (u_i < 0) fail(Err::schema_error, "negative capacity in q");
  // Linear part d_i - h_i^T z, shared by every factor.
  MultiPoly lin = MultiPoly::constant(nvars, Rat(d_i));
  for (int j = 0; j < nvars; ++j)
    if (h_i[j] != 0) lin = lin - MultiPoly::var(nvars, j) * Rat(h_i[j]);
  MultiPoly prod = lin;
  for (Int t = 1; t <= u_i; ++t)
    prod = prod * (lin - MultiPoly::constant(nvars, Rat(t)));
  return prod;
}

MultiPoly build_r(int nvars, int j, const MinimizerSet& D_j) {
  if (D_j.values.empty()) fail(Err::internal, "empty minimizer set");
  MultiPoly zj = MultiPoly::var(nvars, j);
  MultiPoly prod = MultiPoly::constant(nvars, 1);
  for (const Int& root : D_j.values)
    prod = prod * (zj - MultiPoly::constant(nvars, Rat(root)));
  return prod;
}

namespace {

bool divides(const Expo& a, const Expo& b) {
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

Expo expo_lcm(const Expo& a, const Expo& b) {
  Expo out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = std::max(a[i], b[i]);
  return out;
}

bool coprime(const Expo& a, const Expo& b) {
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] > 0 && b[i] > 0) return false;
  return true;
}

}  // namespace

std::pair<std::vector<MultiPoly>, MultiPoly> poly_divide(
    const MultiPoly& f, const std::vector<MultiPoly>& divisors) {
  for (const auto& d : divisors)
    if (d.is_zero()) fail(Err::internal, "division by zero polynomial");
  std::vector<MultiPoly> quot(divisors.size(), MultiPoly(f.nvars()));
  MultiPoly rem(f.nvars());
  MultiPoly p = f;
  while (!p.is_zero()) {
    const Expo& lm = p.lead_monomial();
    bool divided = false;
    for (size_t i = 0; i < divisors.size(); ++i) {
      if (!divides(divisors[i].lead_monomial(), lm)) continue;
      Expo q(lm.size());
      for (size_t k = 0; k < lm.size(); ++k)
        q[k] = lm[k] - divisors[i].lead_monomial()[k];
      Rat c = p.lead_coeff() / divisors[i].lead_coeff();
      MultiPoly mono(f.nvars());
      mono.add_term(q, c);
      quot[i] = quot[i] + mono;
      p = p - divisors[i].times_monomial(c, q);
      divided = true;
      break;
    }
    if (!divided) {
      MultiPoly mono(f.nvars());
      mono.add_term(lm, p.lead_coeff());
      rem = rem + mono;
      p = p - mono;
    }
  }
  return {std::move(quot), std::move(rem)};
}

namespace {

MultiPoly s_poly(const MultiPoly& f, const MultiPoly& g) {
  Expo l = expo_lcm(f.lead_monomial(), g.lead_monomial());
  Expo ef(l.size()), eg(l.size());
  for (size_t i = 0; i < l.size(); ++i) {
    ef[i] = l[i] - f.lead_monomial()[i];
    eg[i] = l[i] - g.lead_monomial()[i];
  }
  return f.times_monomial(Rat(1 / f.lead_coeff()), ef) -
         g.times_monomial(Rat(1 / g.lead_coeff()), eg);
}

// Full reduction of f modulo basis; remainder only.
MultiPoly reduce_mod(const MultiPoly& f, const std::vector<MultiPoly>& basis) {
  if (basis.empty()) return f;
  return poly_divide(f, basis).second;
}

// Interreduce in place: every polynomial fully reduced against the others,
// zeros dropped, all monic. Keeps the generated ideal.
void interreduce(std::vector<MultiPoly>& g) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t i = 0; i < g.size(); ++i) {
      std::vector<MultiPoly> others;
      for (size_t j = 0; j < g.size(); ++j)
        if (j != i && !g[j].is_zero()) others.push_back(g[j]);
      MultiPoly r = reduce_mod(g[i], others);
      if (!(r == g[i])) changed = true;
      g[i] = r;
    }
    g.erase(std::remove_if(g.begin(), g.end(),
                           [](const MultiPoly& p) { return p.is_zero(); }),
            g.end());
  }
  for (auto& p : g) p = p.monic();
  std::sort(g.begin(), g.end(), [](const MultiPoly& a, const MultiPoly& b) {
    return std::greater<Expo>()(a.lead_monomial(), b.lead_monomial());
  });
}

}  // namespace

GroebnerBasis buchberger(std::vector<MultiPoly> generators, long budget) {
  std::vector<MultiPoly> g;
  bool any_nonzero = false;
  for (auto& p : generators) {
    if (p.is_zero()) continue;
    any_nonzero = true;
    g.push_back(p.monic());
  }
  if (!any_nonzero) fail(Err::schema_error, "all generators are zero");

  interreduce(g);

  struct Pair { size_t i, j; };
  std::deque<Pair> queue;
  std::set<std::pair<size_t, size_t>> done;
  auto push_pairs_with = [&](size_t k) {
    for (size_t i = 0; i < k; ++i) queue.push_back({i, k});
  };
  for (size_t k = 1; k < g.size(); ++k) push_pairs_with(k);

  long steps = 0;
  while (!queue.empty()) {
    Pair pr = queue.front();
    queue.pop_front();
    const Expo& li = g[pr.i].lead_monomial();
    const Expo& lj = g[pr.j].lead_monomial();
    done.insert({pr.i, pr.j});
    if (coprime(li, lj)) continue;  // first criterion
    // chain criterion: some k with lt(g_k) | lcm and both pairs handled
    {
      Expo l = expo_lcm(li, lj);
      bool skip = false;
      for (size_t k = 0; k < g.size(); ++k) {
        if (k == pr.i || k == pr.j) continue;
        if (!divides(g[k].lead_monomial(), l)) continue;
        auto key1 = std::minmax(pr.i, k);
        auto key2 = std::minmax(k, pr.j);
        if (done.count({key1.first, key1.second}) &&
            done.count({key2.first, key2.second})) {
          skip = true;
          break;
        }
      }
      if (skip) continue;
    }
    if (++steps > budget)
      fail(Err::resource_cap,
           "S-pair budget of " + std::to_string(budget) + " exceeded");
    MultiPoly r = reduce_mod(s_poly(g[pr.i], g[pr.j]), g);
    if (r.is_zero()) continue;
    g.push_back(r.monic());
    push_pairs_with(g.size() - 1);
  }

  // Minimalize: drop members whose leading monomial another member divides.
  std::vector<MultiPoly> minimal;
  for (size_t i = 0; i < g.size(); ++i) {
    bool redundant = false;
    for (size_t j = 0; j < g.size(); ++j) {
      if (i == j) continue;
      if (divides(g[j].lead_monomial(), g[i].lead_monomial()) &&
          !(g[j].lead_monomial() == g[i].lead_monomial() && j > i)) {
        redundant = true;
        break;
      }
    }
    if (!redundant) minimal.push_back(g[i]);
  }
  // Reduce each tail against the rest for the unique reduced basis.
  std::vector<MultiPoly> reduced;
  for (size_t i = 0; i < minimal.size(); ++i) {
    std::vector<MultiPoly> others;
    for (size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    reduced.push_back(reduce_mod(minimal[i], others).monic());
  }
  std::sort(reduced.begin(), reduced.end(),
            [](const MultiPoly& a, const MultiPoly& b) {
              return std::greater<Expo>()(a.lead_monomial(), b.lead_monomial());
            });
  return GroebnerBasis{std::move(reduced), true};
}

bool is_consistent(const GroebnerBasis& g) {
  if (!g.reduced) fail(Err::internal, "consistency test needs a reduced basis");
  for (const auto& p : g.polys)
    if (p.is_constant() && !p.is_zero()) return false;
  return true;
}

namespace {

// Integer roots of a univariate polynomial given as (coefficient, degree)
// pairs with rational coefficients: clear denominators, strip the power of
// t dividing everything (0 is then a root), and test the +/- divisors of
// the trailing coefficient by exact evaluation.
std::vector<Int> integer_roots(const std::map<unsigned, Rat>& coeffs) {
  if (coeffs.empty()) fail(Err::internal, "integer roots of zero polynomial");
  Int denom_lcm = 1;
  for (const auto& [k, c] : coeffs) {
    Int l;
    mpz_lcm(l.get_mpz_t(), denom_lcm.get_mpz_t(),
            c.get_den().get_mpz_t());
    denom_lcm = l;
  }
  std::map<unsigned, Int> ic;
  unsigned low = 0;
  bool first = true;
  for (const auto& [k, c] : coeffs) {
    Rat scaled = c * Rat(denom_lcm);
    scaled.canonicalize();
    ic[k] = scaled.get_num();
    if (first || k < low) low = k;
    first = false;
  }
  std::vector<Int> roots;
  if (low > 0) roots.push_back(0);  // t^low factor

  Int trailing = ic.begin()->second;  // coefficient of t^low
  for (const auto& [k, c] : ic)
    if (k == low) trailing = c;
  if (trailing < 0) trailing = -trailing;

  auto value_at = [&](const Int& t) {
    Int sum = 0;
    for (const auto& [k, c] : ic) {
      Int p;
      mpz_pow_ui(p.get_mpz_t(), t.get_mpz_t(), k - low);
      sum += c * p;
    }
    return sum;
  };

  // Divisor enumeration by trial division up to sqrt(trailing).
  Int i = 1;
  for (; i * i <= trailing; ++i) {
    if (trailing % i != 0) continue;
    Int j = trailing / i;
    for (const Int& cand : {Int(i), Int(-i), j, Int(-j)})
      if (value_at(cand) == 0) roots.push_back(cand);
  }
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  return roots;
}

void extract_recursive(const GroebnerBasis& g, int nvars, int var,
                       std::vector<bool>& assigned, IntVec& partial,
                       std::vector<IntVec>& out) {
  if (var < 0) {
    // Verify the full assignment against every basis member.
    for (const auto& p : g.polys)
      if (p.eval(partial) != 0) return;
    out.push_back(partial);
    return;
  }
  // Gather members that, after substituting the already-fixed tail, involve
  // only z_{var+1} (0-based var). Constant nonzero residue kills the branch.
  std::vector<std::map<unsigned, Rat>> univariate;
  for (const auto& p : g.polys) {
    if (p.min_var() < var) continue;  // still involves freer variables
    MultiPoly s = p.substitute(assigned, partial);
    if (s.is_zero()) continue;
    if (s.is_constant()) return;  // inconsistent branch
    std::map<unsigned, Rat> coeffs;
    bool only_var = true;
    for (const auto& [e, c] : s.terms()) {
      unsigned deg = 0;
      for (int i = 0; i < nvars; ++i) {
        if (e[i] == 0) continue;
        if (i != var) { only_var = false; break; }
        deg = e[i];
      }
      if (!only_var) break;
      coeffs[deg] += c;
    }
    if (!only_var)
      fail(Err::internal, "substituted member not univariate in the level variable");
    for (auto it = coeffs.begin(); it != coeffs.end();)
      it = (it->second == 0) ? coeffs.erase(it) : std::next(it);
    if (!coeffs.empty()) univariate.push_back(std::move(coeffs));
  }
  std::vector<Int> candidates;
  if (univariate.empty()) {
    // No constraint at this level with a finite variety would be a bug for
    // our systems; treat as dead branch rather than enumerate all of Z.
    return;
  }
  // Smallest trailing coefficient generates candidates; the rest filter.
  size_t best = 0;
  auto trail_abs = [](const std::map<unsigned, Rat>& c) {
    Rat t = c.begin()->second;
    return t < 0 ? Rat(-t) : t;
  };
  for (size_t i = 1; i < univariate.size(); ++i)
    if (trail_abs(univariate[i]) < trail_abs(univariate[best]))
      best = i;  // heuristic only; correctness comes from verification below
  candidates = integer_roots(univariate[best]);
  for (const Int& cand : candidates) {
    bool ok = true;
    for (size_t i = 0; i < univariate.size() && ok; ++i) {
      Rat sum = 0;
      for (const auto& [k, c] : univariate[i]) {
        Int p;
        mpz_pow_ui(p.get_mpz_t(), cand.get_mpz_t(), k);
        sum += c * Rat(p);
      }
      if (sum != 0) ok = false;
    }
    if (!ok) continue;
    assigned[var] = true;
    partial[var] = cand;
    extract_recursive(g, nvars, var - 1, assigned, partial, out);
    assigned[var] = false;
    partial[var] = 0;
  }
}

}  // namespace

std::vector<IntVec> extract_variety(const GroebnerBasis& g) {
  if (!is_consistent(g))
    fail(Err::internal, "variety extraction on an inconsistent system");
  if (g.polys.empty()) return {};
  const int nvars = g.polys.front().nvars();
  std::vector<bool> assigned(nvars, false);
  IntVec partial(nvars, 0);
  std::vector<IntVec> out;
  extract_recursive(g, nvars, nvars - 1, assigned, partial, out);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<IntVec> brute_force_F(const ProductSet& D, const IntVec& d,
                                  const IntMatrix& H, const IntVec& u_perm) {
  const int m = H.rows();
  std::vector<IntVec> out;
  D.for_each([&](const IntVec& z) {
    IntVec hz = H * z;
    for (int k = 0; k < m; ++k) {
      Int x = d[k] - hz[k];
      if (x < 0 || x > u_perm[k]) return true;
    }
    out.push_back(z);
    return true;
  });
  return out;  // lex-sorted because for_each iterates lex ascending
}

}  // namespace mpf
