#pragma once

#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "cksplice/abelian.hpp"
#include "cksplice/binary_matrix.hpp"
#include "cksplice/dynamics.hpp"
#include "cksplice/errors.hpp"
#include "cksplice/exact_linalg.hpp"
#include "cksplice/surgery.hpp"

namespace cksplice {

/// (G(A), u_A, sgn det(1 - A)); det(1 - A) is kept alongside the sign.
struct InvariantTriple {
  FgAbelianGroup group;
  GroupElement u;
  int sign;
  Integer det_one_minus;

  PointedGroup pointed() const { return {group, u}; }
};

inline int sign_of(const Integer& x) { return x > 0 ? 1 : (x < 0 ? -1 : 0); }

/// Throws DomainError unless A is irreducible and not a permutation matrix.
inline void require_classifiable(const BinaryMatrix& a) {
  if (!is_irreducible(a)) {
    throw DomainError("matrix is reducible; the classification assumes irreducible, non-permutation matrices");
  }
  if (is_permutation_matrix(a)) {
    throw DomainError("matrix is a permutation matrix; the classification assumes irreducible, non-permutation matrices");
  }
}

/// The triple without the irreducibility/non-permutation check.
inline InvariantTriple invariant_triple_unchecked(const BinaryMatrix& a) {
  FgAbelianGroup g = g_group(a);
  const IntVector ones(a.size(), Integer(1));
  GroupElement u = project_element(g, ones);
  Integer d = det_one_minus(a);
  const int sign = sign_of(d);
  return {std::move(g), std::move(u), sign, std::move(d)};
}

inline InvariantTriple invariant_triple(const BinaryMatrix& a) {
  require_classifiable(a);
  return invariant_triple_unchecked(a);
}

/// BF(A) = Z^N / (1 - A) Z^N.
inline FgAbelianGroup bowen_franks(const BinaryMatrix& a) { return cokernel_group(one_minus(a)); }

inline Verdict flow_equivalent(const BinaryMatrix& a, const BinaryMatrix& b) {
  require_classifiable(a);
  require_classifiable(b);
  return verdict_from(groups_isomorphic(bowen_franks(a), bowen_franks(b)) &&
                      sign_of(det_one_minus(a)) == sign_of(det_one_minus(b)));
}

namespace detail {

inline std::string render_vector(const IntVector& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ')';
  return os.str();
}

// x -> -x on the free summand is an automorphism fixing the torsion part, so
// the free coordinates are shown with a positive leading entry.
inline GroupElement normalized_point(const GroupElement& u) {
  GroupElement out = u;
  for (const Integer& f : out.free) {
    if (f == 0) continue;
    if (f < 0) {
      for (Integer& x : out.free) x = -x;
    }
    break;
  }
  return out;
}

}  // namespace detail

/// The triple as an oriented isomorphism class, e.g.
/// "factors=[2,6], rank=0, u=(1,3), sign=-1".
inline std::string oriented_class(const InvariantTriple& t) {
  std::ostringstream os;
  os << "factors=[";
  for (std::size_t i = 0; i < t.group.torsion().size(); ++i) os << (i ? "," : "") << t.group.torsion()[i];
  os << "], rank=" << t.group.free_rank() << ", u=";
  const GroupElement u = detail::normalized_point(t.u);
  if (u.is_zero()) {
    os << '0';
  } else {
    IntVector coords = u.torsion;
    coords.insert(coords.end(), u.free.begin(), u.free.end());
    os << detail::render_vector(coords);
  }
  os << ", sign=" << (t.sign > 0 ? "+1" : (t.sign < 0 ? "-1" : "0"));
  return os.str();
}

inline std::string oriented_class(const BinaryMatrix& a) { return oriented_class(invariant_triple(a)); }

struct ClassifyOptions {
  PointedOptions pointed;
};

/// Pairwise decision of the equivalence relations determined by the invariants.
struct ClassificationReport {
  Verdict stable_isomorphic = Verdict::undecided;
  Verdict isomorphic = Verdict::undecided;
  Verdict coe = Verdict::undecided;
  Verdict flip_coe = Verdict::undecided;
  Verdict flip_flow_equivalent = Verdict::undecided;
  Verdict flow_equivalent = Verdict::undecided;
  /// Notes keyed by relation name.
  std::map<std::string, std::vector<std::string>> evidence;

  /// The implications every report must satisfy.
  bool implications_hold() const {
    auto implies = [](Verdict p, Verdict q) { return p != Verdict::yes || q == Verdict::yes; };
    return implies(isomorphic, stable_isomorphic) && implies(coe, isomorphic) && implies(coe, flip_coe) &&
           implies(flow_equivalent, flip_flow_equivalent);
  }

  friend bool operator==(const ClassificationReport&, const ClassificationReport&) = default;
};

inline const char* to_string(PointedStep s) {
  switch (s) {
    case PointedStep::group_type: return "group types differ";
    case PointedStep::element_order: return "orders of the distinguished elements differ";
    case PointedStep::divisibility: return "divisibility heights of the distinguished elements differ";
    case PointedStep::brute_force: return "settled by exhaustive automorphism search";
    case PointedStep::torsion_free: return "settled by gcd of coordinates in a free group";
    case PointedStep::mixed: return "settled by torsion-part automorphism search modulo the free gcd";
    case PointedStep::none: return "no complete procedure applies to this group type";
  }
  return "";
}

inline ClassificationReport compare(const BinaryMatrix& a, const BinaryMatrix& b, const ClassifyOptions& opts = {}) {
  const InvariantTriple ta = invariant_triple(a);
  const InvariantTriple tb = invariant_triple(b);
  ClassificationReport r;
  auto note = [&r](const std::string& key, std::string text) { r.evidence[key].push_back(std::move(text)); };

  const bool groups_match = groups_isomorphic(ta.group, tb.group);
  r.stable_isomorphic = verdict_from(groups_match);
  note("stable_isomorphic", groups_match ? "G(A) and G(B) are isomorphic" : "G(A) and G(B) are not isomorphic");

  const PointedDecision pd = decide_pointed(ta.pointed(), tb.pointed(), opts.pointed);
  r.isomorphic = pd.verdict;
  note("isomorphic", std::string("(G, u) comparison: ") + to_string(pd.step));
  if (pd.verdict == Verdict::undecided) {
    note("isomorphic", "undecided: not reported as a theorem");
  }

  const bool signs_match = ta.sign == tb.sign;
  r.coe = r.isomorphic && verdict_from(signs_match);
  note("coe", signs_match ? "signs of det(1-A) and det(1-B) agree" : "signs of det(1-A) and det(1-B) differ");

  // Flip COE collapses to isomorphism of (G, u); the triple-level witness is
  // recorded against B and against bar B.
  r.flip_coe = r.isomorphic;
  {
    const BinaryMatrix bbar = bar_construction(b);
    const InvariantTriple tbar = invariant_triple(bbar);
    const Verdict to_b = r.coe;
    const Verdict to_bbar =
        pointed_isomorphic(ta.pointed(), tbar.pointed(), opts.pointed) && verdict_from(ta.sign == tbar.sign);
    note("flip_coe", std::string("triple of A matches triple of B: ") + to_string(to_b));
    note("flip_coe", std::string("triple of A matches triple of bar B: ") + to_string(to_bbar));
    note("flip_coe", "equivalence conclusions rest on the classification theorems for Cuntz-Krieger algebras");
  }

  r.flip_flow_equivalent = r.stable_isomorphic;
  note("flip_flow_equivalent", "equivalent to stable isomorphism by the classification theorems for Cuntz-Krieger algebras");

  const bool bf_match = groups_isomorphic(bowen_franks(a), bowen_franks(b));
  r.flow_equivalent = verdict_from(bf_match && signs_match);
  note("flow_equivalent", bf_match ? "BF(A) and BF(B) are isomorphic" : "BF(A) and BF(B) are not isomorphic");
  note("flow_equivalent", signs_match ? "signs agree" : "signs differ");
  return r;
}

}  // namespace cksplice
