#include "mpflow/costfn.hpp"

#include <algorithm>

#include "mpflow/errors.hpp"

namespace mpf {

static Rat eval_body(const PolyAbsBody& b, const Int& v) {
  Rat sum = 0;
  // Horner over the polynomial part, then cross-check against naive powers.
  if (!b.poly.empty()) {
    unsigned maxk = 0;
    for (const auto& [c, k] : b.poly) maxk = std::max(maxk, k);
    std::vector<Rat> coeff(maxk + 1);
    for (const auto& [c, k] : b.poly) coeff[k] += c;
    Rat horner = coeff[maxk];
    for (unsigned k = maxk; k-- > 0;) horner = horner * Rat(v) + coeff[k];

    Rat naive = 0;
    for (const auto& [c, k] : b.poly) {
      Int p;
      mpz_pow_ui(p.get_mpz_t(), v.get_mpz_t(), k);
      naive += c * Rat(p);
    }
    if (horner != naive) fail(Err::internal, "Horner/naive evaluation mismatch");
    sum = horner;
  }
  for (const auto& [c, center] : b.abs) {
    Int a = v - center;
    if (a < 0) a = -a;
    sum += c * Rat(a);
  }
  sum.canonicalize();
  return sum;
}

Rat eval_cost(const CostExpr& f, const Int& v) {
  for (const auto& s : f.segments)
    if (s.contains(v)) return eval_body(s.body, v);
  fail(Err::out_of_domain, "no segment covers v = " + v.get_str());
}

static PolyAbsBody parse_body(const nlohmann::json& doc) {
  PolyAbsBody b;
  if (doc.contains("poly")) {
    if (!doc["poly"].is_array()) fail(Err::schema_error, "poly must be an array");
    for (const auto& t : doc["poly"]) {
      if (!t.is_array() || t.size() != 2 || !t[0].is_string() ||
          !t[1].is_number_unsigned())
        fail(Err::schema_error, "poly term must be [\"p/q\", k]");
      b.poly.emplace_back(parse_rat(t[0].get<std::string>()), t[1].get<unsigned>());
    }
  }
  if (doc.contains("abs")) {
    if (!doc["abs"].is_array()) fail(Err::schema_error, "abs must be an array");
    for (const auto& t : doc["abs"]) {
      if (!t.is_array() || t.size() != 2 || !t[0].is_string() ||
          !t[1].is_number_integer())
        fail(Err::schema_error, "abs term must be [\"p/q\", c]");
      b.abs.emplace_back(parse_rat(t[0].get<std::string>()),
                         Int(t[1].get<long>()));
    }
  }
  return b;
}

CostExpr parse_cost(const nlohmann::json& doc) {
  if (!doc.is_object()) fail(Err::schema_error, "cost must be an object");
  CostExpr f;
  if (doc.contains("segments")) {
    if (!doc["segments"].is_array() || doc["segments"].empty())
      fail(Err::schema_error, "segments must be a nonempty array");
    for (const auto& sdoc : doc["segments"]) {
      Segment s;
      if (sdoc.contains("lo")) {
        if (!sdoc["lo"].is_number_integer()) fail(Err::schema_error, "lo must be an integer");
        s.lo = Int(sdoc["lo"].get<long>());
      }
      if (sdoc.contains("hi")) {
        if (!sdoc["hi"].is_number_integer()) fail(Err::schema_error, "hi must be an integer");
        s.hi = Int(sdoc["hi"].get<long>());
      }
      if (s.lo && s.hi && *s.lo > *s.hi)
        fail(Err::schema_error, "segment with lo > hi");
      s.body = parse_body(sdoc);
      f.segments.push_back(std::move(s));
    }
  } else {
    f.segments.push_back(Segment{std::nullopt, std::nullopt, parse_body(doc)});
  }
  // Reject overlap between any two segments (integer ranges).
  for (size_t i = 0; i < f.segments.size(); ++i)
    for (size_t j = i + 1; j < f.segments.size(); ++j) {
      const Segment& a = f.segments[i];
      const Segment& b = f.segments[j];
      bool disjoint = (a.hi && b.lo && *a.hi < *b.lo) ||
                      (b.hi && a.lo && *b.hi < *a.lo);
      if (!disjoint)
        fail(Err::overlapping_segments,
             "segments " + std::to_string(i) + " and " + std::to_string(j) +
                 " overlap");
    }
  return f;
}

nlohmann::json cost_to_json(const CostExpr& f) {
  auto body_json = [](const PolyAbsBody& b) {
    nlohmann::json out = nlohmann::json::object();
    if (!b.poly.empty()) {
      nlohmann::json arr = nlohmann::json::array();
      for (const auto& [c, k] : b.poly) arr.push_back({rat_string(c), k});
      out["poly"] = arr;
    }
    if (!b.abs.empty()) {
      nlohmann::json arr = nlohmann::json::array();
      for (const auto& [c, center] : b.abs)
        arr.push_back({rat_string(c), center.get_si()});
      out["abs"] = arr;
    }
    return out;
  };
  if (f.segments.size() == 1 && !f.segments[0].lo && !f.segments[0].hi)
    return body_json(f.segments[0].body);
  nlohmann::json segs = nlohmann::json::array();
  for (const auto& s : f.segments) {
    nlohmann::json sj = body_json(s.body);
    if (s.lo) sj["lo"] = s.lo->get_si();
    if (s.hi) sj["hi"] = s.hi->get_si();
    segs.push_back(sj);
  }
  return nlohmann::json{{"segments", segs}};
}

void check_coverage(const CostExpr& f, const Int& u) {
  for (Int v = 0; v <= u; ++v) {
    bool covered = false;
    for (const auto& s : f.segments)
      if (s.contains(v)) { covered = true; break; }
    if (!covered)
      fail(Err::gap_in_segments, "no segment covers v = " + v.get_str());
  }
}

CostExpr scale_cost(const CostExpr& f, const Int& alpha) {
  if (alpha == 1) return f;
  CostExpr out;
  for (const auto& s : f.segments) {
    Segment t;
    if (s.lo) t.lo = *s.lo * alpha;
    if (s.hi) t.hi = *s.hi * alpha + alpha - 1;
    for (const auto& [c, k] : s.body.poly) {
      Int ak;
      mpz_pow_ui(ak.get_mpz_t(), alpha.get_mpz_t(), k);
      t.body.poly.emplace_back(c / Rat(ak), k);
    }
    for (const auto& [c, center] : s.body.abs)
      t.body.abs.emplace_back(c / Rat(alpha), Int(center * alpha));
    out.segments.push_back(std::move(t));
  }
  return out;
}

}  // namespace mpf
