#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "cksplice/errors.hpp"
#include "cksplice/exact_linalg.hpp"
#include "cksplice/int_matrix.hpp"

namespace cksplice {

enum class Verdict { no, yes, undecided };

inline const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::no: return "false";
    case Verdict::yes: return "true";
    case Verdict::undecided: return "undecided";
  }
  return "undecided";
}

inline Verdict verdict_from(bool b) { return b ? Verdict::yes : Verdict::no; }

// Three-valued conjunction: a definite "no" wins over "undecided".
inline Verdict operator&&(Verdict a, Verdict b) {
  if (a == Verdict::no || b == Verdict::no) return Verdict::no;
  if (a == Verdict::undecided || b == Verdict::undecided) return Verdict::undecided;
  return Verdict::yes;
}

/// An element in canonical coordinates: torsion coordinates first, each
/// reduced into [0, d_i), then the free coordinates.
struct GroupElement {
  IntVector torsion;
  IntVector free;

  bool is_zero() const {
    auto zero = [](const Integer& x) { return x == 0; };
    return std::all_of(torsion.begin(), torsion.end(), zero) && std::all_of(free.begin(), free.end(), zero);
  }

  friend bool operator==(const GroupElement&, const GroupElement&) = default;
  friend bool operator<(const GroupElement& a, const GroupElement& b) {
    if (a.torsion != b.torsion) {
      return std::lexicographical_compare(a.torsion.begin(), a.torsion.end(), b.torsion.begin(), b.torsion.end());
    }
    return std::lexicographical_compare(a.free.begin(), a.free.end(), b.free.begin(), b.free.end());
  }
};

/// Finitely generated abelian group Z/d1 + ... + Z/dk + Z^r, d1 | ... | dk,
/// each di >= 2. When built as a cokernel it remembers the change of basis
/// from presentation coordinates to canonical coordinates.
class FgAbelianGroup {
 public:
  /// The group from arbitrary positive cyclic orders (not necessarily a
  /// divisibility chain) plus a free rank. Orders equal to 1 are allowed.
  static FgAbelianGroup from_cyclic_orders(std::span<const Integer> orders, std::size_t free_rank);

  const std::vector<Integer>& torsion() const noexcept { return torsion_; }
  std::size_t free_rank() const noexcept { return free_rank_; }
  bool is_finite() const noexcept { return free_rank_ == 0; }
  bool is_trivial() const noexcept { return free_rank_ == 0 && torsion_.empty(); }

  /// Product of the invariant factors; only meaningful for finite groups.
  std::optional<Integer> order() const {
    if (!is_finite()) return std::nullopt;
    Integer o = 1;
    for (const Integer& d : torsion_) o *= d;
    return o;
  }

  /// Number of coordinates of the presentation (the N of Z^N / M Z^k).
  std::size_t presentation_dim() const noexcept { return basis_map_.rows(); }
  const IntMatrix& basis_map() const noexcept { return basis_map_; }

  GroupElement zero() const { return {IntVector(torsion_.size()), IntVector(free_rank_)}; }

  /// Builds an element from canonical coordinates, reducing torsion entries.
  GroupElement element(IntVector torsion_coords, IntVector free_coords) const {
    if (torsion_coords.size() != torsion_.size() || free_coords.size() != free_rank_) {
      throw DimensionError("FgAbelianGroup::element: coordinate count mismatch");
    }
    GroupElement g{std::move(torsion_coords), std::move(free_coords)};
    reduce(g);
    return g;
  }

  GroupElement add(const GroupElement& a, const GroupElement& b) const {
    check(a);
    check(b);
    GroupElement s = a;
    for (std::size_t i = 0; i < s.torsion.size(); ++i) s.torsion[i] += b.torsion[i];
    for (std::size_t i = 0; i < s.free.size(); ++i) s.free[i] += b.free[i];
    reduce(s);
    return s;
  }

  GroupElement scale(const Integer& n, const GroupElement& a) const {
    check(a);
    GroupElement s = a;
    for (auto& x : s.torsion) x *= n;
    for (auto& x : s.free) x *= n;
    reduce(s);
    return s;
  }

  bool contains(const GroupElement& g) const {
    if (g.torsion.size() != torsion_.size() || g.free.size() != free_rank_) return false;
    for (std::size_t i = 0; i < torsion_.size(); ++i) {
      if (g.torsion[i] < 0 || g.torsion[i] >= torsion_[i]) return false;
    }
    return true;
  }

  /// Presentation diagonal, one entry per presentation coordinate: the Smith
  /// diagonal padded with zeros.
  const std::vector<Integer>& presentation_diagonal() const noexcept { return diag_; }

 private:
  friend FgAbelianGroup cokernel_group(const IntMatrix& m);
  FgAbelianGroup(std::vector<Integer> torsion, std::size_t free_rank, IntMatrix basis_map, std::vector<Integer> diag)
      : torsion_(std::move(torsion)), free_rank_(free_rank), basis_map_(std::move(basis_map)), diag_(std::move(diag)) {}

  void check(const GroupElement& g) const {
    if (g.torsion.size() != torsion_.size() || g.free.size() != free_rank_) {
      throw DimensionError("FgAbelianGroup: element does not belong to this group");
    }
  }

  void reduce(GroupElement& g) const {
    for (std::size_t i = 0; i < torsion_.size(); ++i) {
      g.torsion[i] %= torsion_[i];
      if (g.torsion[i] < 0) g.torsion[i] += torsion_[i];
    }
  }

  std::vector<Integer> torsion_;
  std::size_t free_rank_;
  IntMatrix basis_map_;
  std::vector<Integer> diag_;
};

/// coker(M) = Z^rows / M Z^cols.
inline FgAbelianGroup cokernel_group(const IntMatrix& m) {
  SnfDecomposition snf = smith_normal_form(m);
  std::vector<Integer> diag = snf.diagonal();
  diag.resize(m.rows(), Integer(0));
  std::vector<Integer> torsion;
  std::size_t free_rank = 0;
  for (const Integer& d : diag) {
    if (d > 1) torsion.push_back(d);
    if (d == 0) ++free_rank;
  }
  return FgAbelianGroup(std::move(torsion), free_rank, std::move(snf.U), std::move(diag));
}

inline FgAbelianGroup FgAbelianGroup::from_cyclic_orders(std::span<const Integer> orders, std::size_t free_rank) {
  const std::size_t n = std::max<std::size_t>(orders.size() + free_rank, 1);
  IntMatrix presentation(n, n);
  if (orders.empty() && free_rank == 0) {
    presentation(0, 0) = 1;
  }
  for (std::size_t i = 0; i < orders.size(); ++i) {
    if (orders[i] <= 0) throw std::invalid_argument("from_cyclic_orders: cyclic orders must be positive");
    presentation(i, i) = orders[i];
  }
  return cokernel_group(presentation);
}

/// Canonical coordinates of the class of v (given in presentation coordinates).
inline GroupElement project_element(const FgAbelianGroup& g, std::span<const Integer> v) {
  if (v.size() != g.presentation_dim()) {
    throw DimensionError("project_element: vector length does not match the presentation");
  }
  const IntVector w = g.basis_map() * v;
  IntVector torsion;
  IntVector free;
  const auto& diag = g.presentation_diagonal();
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (diag[i] == 0) {
      free.push_back(w[i]);
    } else if (diag[i] > 1) {
      torsion.push_back(w[i]);
    }
  }
  return g.element(std::move(torsion), std::move(free));
}

/// Least n >= 1 with n*g = 0; nullopt when g has infinite order.
inline std::optional<Integer> element_order(const FgAbelianGroup& g, const GroupElement& x) {
  if (!g.contains(x)) throw DimensionError("element_order: element does not belong to the group");
  for (const Integer& f : x.free) {
    if (f != 0) return std::nullopt;
  }
  Integer order = 1;
  for (std::size_t i = 0; i < x.torsion.size(); ++i) {
    const Integer& d = g.torsion()[i];
    Integer local = d / gcd(d, x.torsion[i]);
    order = lcm(order, local);
  }
  return order;
}

inline bool groups_isomorphic(const FgAbelianGroup& a, const FgAbelianGroup& b) {
  return a.free_rank() == b.free_rank() && a.torsion() == b.torsion();
}

/// An x with M x = v, if one exists over the integers.
inline std::optional<IntVector> solve_integer(const IntMatrix& m, std::span<const Integer> v) {
  if (v.size() != m.rows()) throw DimensionError("solve_integer: right-hand side length mismatch");
  const SnfDecomposition snf = smith_normal_form(m);
  const IntVector w = snf.U * v;
  IntVector y(m.cols());
  const auto diag = snf.diagonal();
  for (std::size_t i = 0; i < w.size(); ++i) {
    const Integer d = i < diag.size() ? diag[i] : Integer(0);
    if (d == 0) {
      if (w[i] != 0) return std::nullopt;
      continue;
    }
    if (w[i] % d != 0) return std::nullopt;
    y[i] = w[i] / d;
  }
  return snf.V * std::span<const Integer>(y);
}

struct PointedGroup {
  FgAbelianGroup group;
  GroupElement point;
};

struct PointedOptions {
  /// Largest finite group order for which automorphisms are enumerated.
  std::uint64_t max_group_order = 10000;
};

namespace detail {

inline std::vector<Integer> small_prime_factors(Integer n, std::uint64_t trial_limit = 1'000'000) {
  std::vector<Integer> primes;
  if (n < 0) n = -n;
  for (std::uint64_t p = 2; p <= trial_limit && n > 1; ++p) {
    if (Integer(p) * p > n) {
      primes.push_back(n);
      n = 1;
      break;
    }
    if (n % p == 0) {
      primes.emplace_back(p);
      while (n % p == 0) n /= p;
    }
  }
  // Any cofactor left above the trial limit is skipped; every prime that is
  // used still yields a sound necessary condition.
  return primes;
}

inline std::size_t valuation(Integer n, const Integer& p) {
  std::size_t v = 0;
  if (n == 0) return 0;
  while (n % p == 0) {
    n /= p;
    ++v;
  }
  return v;
}

// g in p^k G, coordinate by coordinate.
inline bool divisible_by_power(const FgAbelianGroup& g, const GroupElement& x, const Integer& pk) {
  for (std::size_t i = 0; i < x.torsion.size(); ++i) {
    if (x.torsion[i] % gcd(pk, g.torsion()[i]) != 0) return false;
  }
  for (const Integer& f : x.free) {
    if (f % pk != 0) return false;
  }
  return true;
}

// Mixed-radix indexing of a finite group in canonical coordinates.
class FiniteIndexer {
 public:
  explicit FiniteIndexer(const FgAbelianGroup& g) {
    size_ = 1;
    for (const Integer& d : g.torsion()) {
      radix_.push_back(static_cast<std::size_t>(d));
      size_ *= radix_.back();
    }
  }

  std::size_t size() const noexcept { return size_; }
  std::size_t rank() const noexcept { return radix_.size(); }
  std::size_t radix(std::size_t i) const { return radix_[i]; }

  std::vector<std::size_t> coords(std::size_t index) const {
    std::vector<std::size_t> c(radix_.size());
    for (std::size_t i = radix_.size(); i-- > 0;) {
      c[i] = index % radix_[i];
      index /= radix_[i];
    }
    return c;
  }

  std::size_t index(std::span<const std::size_t> c) const {
    std::size_t idx = 0;
    for (std::size_t i = 0; i < radix_.size(); ++i) idx = idx * radix_[i] + c[i] % radix_[i];
    return idx;
  }

  // sum_i coeff[i] * images[i]
  std::size_t combine(std::span<const std::size_t> coeff, std::span<const std::size_t> images) const {
    std::vector<std::size_t> acc(radix_.size(), 0);
    for (std::size_t i = 0; i < coeff.size(); ++i) {
      if (coeff[i] == 0) continue;
      const auto img = coords(images[i]);
      for (std::size_t j = 0; j < acc.size(); ++j) acc[j] = (acc[j] + coeff[i] * img[j]) % radix_[j];
    }
    return index(acc);
  }

  std::size_t order_of(std::size_t index) const {
    const auto c = coords(index);
    std::size_t ord = 1;
    for (std::size_t i = 0; i < c.size(); ++i) ord = std::lcm(ord, radix_[i] / std::gcd(radix_[i], c[i]));
    return ord;
  }

  // Whether the homomorphism sending generator i to images[i] is a bijection.
  bool is_bijective(std::span<const std::size_t> images) const {
    std::vector<char> hit(size_, 0);
    for (std::size_t idx = 0; idx < size_; ++idx) {
      const std::size_t img = combine(coords(idx), images);
      if (hit[img]) return false;
      hit[img] = 1;
    }
    return true;
  }

  GroupElement to_element(std::size_t index) const {
    GroupElement e;
    for (std::size_t c : coords(index)) e.torsion.emplace_back(c);
    return e;
  }

  std::vector<std::size_t> from_element(const GroupElement& e) const {
    std::vector<std::size_t> c;
    for (const Integer& x : e.torsion) c.push_back(static_cast<std::size_t>(x));
    return c;
  }

 private:
  std::vector<std::size_t> radix_;
  std::size_t size_ = 1;
};

inline void require_small_finite(const FgAbelianGroup& g, std::uint64_t bound) {
  if (!g.is_finite()) throw BoundError("group is infinite; automorphisms cannot be enumerated");
  if (*g.order() > bound) throw BoundError("group order exceeds the configured enumeration bound");
}

using AutomorphismList = std::vector<std::vector<std::size_t>>;

// All automorphisms of a finite group, as images of the canonical generators.
// Every tuple in G^k is tried; well-definedness is d_i * h_i = 0.
inline AutomorphismList enumerate_automorphisms(const FgAbelianGroup& g) {
  const FiniteIndexer ix(g);
  AutomorphismList autos;
  std::vector<std::size_t> images(ix.rank(), 0);
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == ix.rank()) {
      if (ix.is_bijective(images)) autos.push_back(images);
      return;
    }
    for (std::size_t h = 0; h < ix.size(); ++h) {
      if (ix.radix(i) % ix.order_of(h) != 0) continue;
      images[i] = h;
      rec(i + 1);
    }
  };
  rec(0);
  return autos;
}

inline std::shared_ptr<const AutomorphismList> cached_automorphisms(const FgAbelianGroup& g) {
  static std::mutex mutex;
  static std::map<std::vector<Integer>, std::shared_ptr<const AutomorphismList>> cache;
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(g.torsion()); it != cache.end()) return it->second;
  }
  auto autos = std::make_shared<const AutomorphismList>(enumerate_automorphisms(g));
  std::lock_guard lock(mutex);
  return cache.try_emplace(g.torsion(), std::move(autos)).first->second;
}

// Backtracking search for an automorphism carrying `from` to an element whose
// index satisfies `accept`. Generator images are restricted to elements of
// exactly the generator's order.
inline bool automorphism_reaches(const FgAbelianGroup& g, const GroupElement& from,
                                 const std::function<bool(std::size_t)>& accept) {
  const FiniteIndexer ix(g);
  const auto src = ix.from_element(from);
  std::vector<std::vector<std::size_t>> candidates(ix.rank());
  for (std::size_t h = 0; h < ix.size(); ++h) {
    const std::size_t ord = ix.order_of(h);
    for (std::size_t i = 0; i < ix.rank(); ++i) {
      if (ord == ix.radix(i)) candidates[i].push_back(h);
    }
  }
  std::vector<std::size_t> images(ix.rank(), 0);
  std::function<bool(std::size_t)> rec = [&](std::size_t i) -> bool {
    if (i == ix.rank()) {
      return accept(ix.combine(src, images)) && ix.is_bijective(images);
    }
    for (std::size_t h : candidates[i]) {
      images[i] = h;
      if (rec(i + 1)) return true;
    }
    return false;
  };
  return rec(0);
}

inline bool automorphism_exists(const FgAbelianGroup& g, const GroupElement& from, const GroupElement& to) {
  const std::size_t target = FiniteIndexer(g).index(FiniteIndexer(g).from_element(to));
  return automorphism_reaches(g, from, [target](std::size_t idx) { return idx == target; });
}

inline Integer free_content(const GroupElement& x) {
  Integer d = 0;
  for (const Integer& f : x.free) d = gcd(d, f);
  return d;
}

// For G = T + Z^r, Aut(G) acts by (t, f) -> (alpha t + beta f, gamma f) with
// alpha in Aut(T), beta in Hom(Z^r, T), gamma in GL_r(Z). With d the gcd of f,
// beta f ranges over dT, so (t, f) ~ (t', f') iff gcd f = gcd f' = d and
// alpha t = t' mod dT for some alpha.
inline bool mixed_pointed_match(const FgAbelianGroup& g, const GroupElement& x, const GroupElement& y) {
  const Integer d = free_content(x);
  if (d != free_content(y)) return false;
  const FgAbelianGroup torsion_part = FgAbelianGroup::from_cyclic_orders(g.torsion(), 0);
  const FiniteIndexer ix(torsion_part);
  const GroupElement tx = torsion_part.element(x.torsion, {});
  const GroupElement ty = torsion_part.element(y.torsion, {});
  const auto target = ix.from_element(ty);
  std::vector<std::size_t> moduli(ix.rank());
  for (std::size_t i = 0; i < ix.rank(); ++i) {
    moduli[i] = static_cast<std::size_t>(gcd(d, Integer(ix.radix(i))));
  }
  return automorphism_reaches(torsion_part, tx, [&](std::size_t idx) {
    const auto c = ix.coords(idx);
    for (std::size_t i = 0; i < c.size(); ++i) {
      const std::size_t diff = (c[i] + ix.radix(i) - target[i] % ix.radix(i)) % ix.radix(i);
      if (diff % moduli[i] != 0) return false;
    }
    return true;
  });
}

}  // namespace detail

/// The orbit {phi(g) : phi in Aut(G)} of a finite group of order at most
/// `bound`. Automorphism lists are memoized per isomorphism type.
inline std::set<GroupElement> automorphism_orbit(const FgAbelianGroup& g, const GroupElement& x,
                                                 std::uint64_t bound = PointedOptions{}.max_group_order) {
  detail::require_small_finite(g, bound);
  if (!g.contains(x)) throw DimensionError("automorphism_orbit: element does not belong to the group");
  const detail::FiniteIndexer ix(g);
  const auto coeff = ix.from_element(x);
  std::set<GroupElement> orbit;
  for (const auto& images : *detail::cached_automorphisms(g)) {
    orbit.insert(ix.to_element(ix.combine(coeff, images)));
  }
  return orbit;
}

/// Which step of the pointed decision settled the answer.
enum class PointedStep { group_type, element_order, divisibility, brute_force, torsion_free, mixed, none };

struct PointedDecision {
  Verdict verdict;
  PointedStep step;
};

/// Whether some isomorphism P.group -> Q.group carries P.point to Q.point.
inline PointedDecision decide_pointed(const PointedGroup& p, const PointedGroup& q, const PointedOptions& opts = {}) {
  if (!groups_isomorphic(p.group, q.group)) return {Verdict::no, PointedStep::group_type};
  const FgAbelianGroup& g = p.group;
  if (!g.contains(p.point) || !q.group.contains(q.point)) {
    throw DimensionError("pointed_isomorphic: point does not belong to its group");
  }
  if (element_order(g, p.point) != element_order(q.group, q.point)) {
    return {Verdict::no, PointedStep::element_order};
  }

  if (!g.torsion().empty()) {
    for (const Integer& prime : detail::small_prime_factors(g.torsion().back())) {
      std::size_t top = detail::valuation(g.torsion().back(), prime);
      std::size_t free_extra = 0;
      for (const auto* pt : {&p.point, &q.point}) {
        for (const Integer& f : pt->free) {
          if (f != 0) free_extra = std::max(free_extra, detail::valuation(f, prime) + 1);
        }
      }
      Integer pk = 1;
      for (std::size_t k = 1; k <= top + free_extra; ++k) {
        pk *= prime;
        if (detail::divisible_by_power(g, p.point, pk) != detail::divisible_by_power(q.group, q.point, pk)) {
          return {Verdict::no, PointedStep::divisibility};
        }
      }
    }
  }

  if (g.is_finite() && *g.order() <= opts.max_group_order) {
    return {verdict_from(detail::automorphism_exists(g, p.point, q.point)), PointedStep::brute_force};
  }
  if (g.torsion().empty()) {
    return {verdict_from(detail::free_content(p.point) == detail::free_content(q.point)), PointedStep::torsion_free};
  }
  Integer torsion_order = 1;
  for (const Integer& m : g.torsion()) torsion_order *= m;
  if (torsion_order <= opts.max_group_order) {
    return {verdict_from(detail::mixed_pointed_match(g, p.point, q.point)), PointedStep::mixed};
  }
  return {Verdict::undecided, PointedStep::none};
}

inline Verdict pointed_isomorphic(const PointedGroup& p, const PointedGroup& q, const PointedOptions& opts = {}) {
  return decide_pointed(p, q, opts).verdict;
}

}  // namespace cksplice
