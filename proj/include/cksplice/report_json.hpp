#pragma once

#include <cstdint>
#include <limits>

#include <nlohmann/json.hpp>

#include "cksplice/classify.hpp"

// JSON views of invariants and reports. Integers that fit in 64 bits are
// numbers; larger ones are decimal strings. "undecided" is a string.

namespace cksplice {

inline nlohmann::json integer_json(const Integer& x) {
  if (x >= std::numeric_limits<std::int64_t>::min() && x <= std::numeric_limits<std::int64_t>::max()) {
    return static_cast<std::int64_t>(x);
  }
  return x.str();
}

inline nlohmann::json integers_json(const IntVector& v) {
  nlohmann::json arr = nlohmann::json::array();
  for (const Integer& x : v) arr.push_back(integer_json(x));
  return arr;
}

inline nlohmann::json verdict_json(Verdict v) {
  switch (v) {
    case Verdict::yes: return true;
    case Verdict::no: return false;
    case Verdict::undecided: return "undecided";
  }
  return "undecided";
}

/// {"factors": [...], "rank": r, "u": [...], "sign": s}; u lists torsion
/// coordinates then free coordinates.
inline nlohmann::json to_json(const InvariantTriple& t) {
  const GroupElement u = detail::normalized_point(t.u);
  IntVector coords = u.torsion;
  coords.insert(coords.end(), u.free.begin(), u.free.end());
  return {
      {"factors", integers_json(t.group.torsion())},
      {"rank", t.group.free_rank()},
      {"u", integers_json(coords)},
      {"sign", t.sign},
  };
}

inline nlohmann::json to_json(const ClassificationReport& r) {
  return {
      {"stable_isomorphic", verdict_json(r.stable_isomorphic)},
      {"isomorphic", verdict_json(r.isomorphic)},
      {"coe", verdict_json(r.coe)},
      {"flip_coe", verdict_json(r.flip_coe)},
      {"flip_flow_equivalent", verdict_json(r.flip_flow_equivalent)},
      {"flow_equivalent", verdict_json(r.flow_equivalent)},
      {"evidence", r.evidence},
  };
}

}  // namespace cksplice
