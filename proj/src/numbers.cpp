#include "mpflow/numbers.hpp"

#include "mpflow/errors.hpp"

namespace mpf {

namespace {

bool looks_like_int(const std::string& s) {
  if (s.empty()) return false;
  size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (s[i] < '0' || s[i] > '9') return false;
  return true;
}

}  // namespace

Int parse_int(const std::string& s) {
  if (!looks_like_int(s)) fail(Err::malformed_rational, "not an integer: '" + s + "'");
  return Int(s);
}

Rat parse_rat(const std::string& s) {
  auto slash = s.find('/');
  if (slash == std::string::npos) {
    return Rat(parse_int(s));
  }
  std::string num = s.substr(0, slash);
  std::string den = s.substr(slash + 1);
  if (!looks_like_int(num) || !looks_like_int(den))
    fail(Err::malformed_rational, "bad rational: '" + s + "'");
  Int d(den);
  if (d == 0) fail(Err::malformed_rational, "zero denominator: '" + s + "'");
  Rat r(Int(num), d);
  r.canonicalize();
  return r;
}

std::string rat_string(const Rat& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

const char* err_name(Err e) {
  switch (e) {
    case Err::schema_error: return "SchemaError";
    case Err::malformed_rational: return "MalformedRational";
    case Err::gap_in_segments: return "GapInSegments";
    case Err::overlapping_segments: return "OverlappingSegments";
    case Err::unbalanced_supply: return "UnbalancedSupply";
    case Err::disconnected_graph: return "DisconnectedGraph";
    case Err::self_loop: return "SelfLoop";
    case Err::length_mismatch: return "LengthMismatch";
    case Err::out_of_domain: return "OutOfDomain";
    case Err::no_unimodular_basis: return "NoUnimodularBasis";
    case Err::not_unimodular: return "NotUnimodular";
    case Err::resource_cap: return "ResourceCap";
    case Err::cap_exceeded: return "CapExceeded";
    case Err::non_integer_root: return "NonIntegerRoot";
    case Err::internal: return "InternalError";
  }
  return "UnknownError";
}

}  // namespace mpf
