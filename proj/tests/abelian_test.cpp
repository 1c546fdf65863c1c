#include <gtest/gtest.h>

#include <map>
#include <random>
#include <set>
#include <sstream>
#include <thread>

#include "cksplice/abelian.hpp"
#include "cksplice/surgery.hpp"
#include "oracles.hpp"

namespace cksplice {
namespace {

FgAbelianGroup group_of(std::initializer_list<long long> orders, std::size_t rank = 0) {
  std::vector<Integer> o(orders.begin(), orders.end());
  return FgAbelianGroup::from_cyclic_orders(o, rank);
}

std::string render(const GroupElement& x) {
  std::ostringstream os;
  for (const auto& v : x.torsion) os << v << ' ';
  os << '|';
  for (const auto& v : x.free) os << ' ' << v;
  return os.str();
}

const BinaryMatrix kOneBar{{0, 1, 0, 0}, {1, 0, 1, 0}, {0, 1, 1, 1}, {0, 0, 1, 1}};
const BinaryMatrix kOneSplice{{1, 1, 0}, {1, 1, 1}, {0, 1, 1}};

TEST(CokernelGroup, Examples) {
  const auto trivial = cokernel_group(IntMatrix{{0, -1}, {-1, 0}});
  EXPECT_TRUE(trivial.is_trivial());

  const auto one_bar = cokernel_group(one_minus(kOneBar.transposed()));
  EXPECT_EQ(one_bar.free_rank(), 1u);
  EXPECT_TRUE(one_bar.torsion().empty());

  const auto z = cokernel_group(IntMatrix(1, 1));
  EXPECT_EQ(z.free_rank(), 1u);
  EXPECT_TRUE(z.torsion().empty());
}

TEST(CokernelGroup, RectangularPresentation) {
  // Z^3 / span{(2,0,0)}: Z/2 + Z^2.
  const auto g = cokernel_group(IntMatrix{{2}, {0}, {0}});
  EXPECT_EQ(g.torsion(), std::vector<Integer>{2});
  EXPECT_EQ(g.free_rank(), 2u);
}

TEST(ProjectElement, Examples) {
  const auto one_bar = g_group(kOneBar);
  const auto zero = project_element(one_bar, IntVector(4));
  EXPECT_TRUE(zero.is_zero());

  const auto u = project_element(one_bar, IntVector(4, 1));
  ASSERT_EQ(u.free.size(), 1u);
  EXPECT_EQ(abs(u.free[0]), 1);

  const auto one_splice = g_group(kOneSplice);
  EXPECT_TRUE(project_element(one_splice, IntVector(3, 1)).is_zero());

  EXPECT_THROW(project_element(one_splice, IntVector(2, 1)), DimensionError);
}

TEST(ProjectElement, IsAHomomorphism) {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + trial % 6;
    const IntMatrix m = oracle::random_int_matrix(n, n, -4, 4, rng);
    const auto g = cokernel_group(m);
    const IntVector v = oracle::random_vector(n, -9, 9, rng);
    const IntVector w = oracle::random_vector(n, -9, 9, rng);
    IntVector sum(n);
    for (std::size_t i = 0; i < n; ++i) sum[i] = v[i] + w[i];
    ASSERT_EQ(project_element(g, sum), g.add(project_element(g, v), project_element(g, w)));
  }
}

// For nonsingular M, v is in M Z^n iff adj(M) v is divisible by det(M)
// (Cramer's rule, with cofactors from the Leibniz oracle).
bool in_column_span_cramer(const IntMatrix& m, const IntVector& v) {
  const std::size_t n = m.rows();
  const Integer d = oracle::leibniz_det(m);
  for (std::size_t j = 0; j < n; ++j) {
    IntMatrix mj = m;
    for (std::size_t i = 0; i < n; ++i) mj(i, j) = v[i];
    if (oracle::leibniz_det(mj) % d != 0) return false;
  }
  return true;
}

TEST(ProjectElement, ZeroExactlyOnTheColumnSpan) {
  std::mt19937_64 rng(22);
  int nonsingular = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 1 + trial % 5;
    const IntMatrix m = oracle::random_int_matrix(n, n, -3, 3, rng);
    const auto g = cokernel_group(m);
    IntVector v = oracle::random_vector(n, -3, 3, rng);
    if (trial % 2 == 0) {
      // Half the samples are forced into the column span.
      v = m * std::span<const Integer>(v);
    }
    const bool zero = project_element(g, v).is_zero();
    const auto solution = solve_integer(m, v);
    ASSERT_EQ(zero, solution.has_value());
    if (solution) {
      ASSERT_EQ(m * std::span<const Integer>(*solution), v);
    }
    if (oracle::leibniz_det(m) != 0) {
      ++nonsingular;
      ASSERT_EQ(zero, in_column_span_cramer(m, v)) << m;
    }
  }
  EXPECT_GT(nonsingular, 100);
}

TEST(ElementOrder, Examples) {
  const auto z = group_of({}, 1);
  EXPECT_EQ(element_order(z, z.zero()), Integer(1));
  EXPECT_EQ(element_order(z, z.element({}, {1})), std::nullopt);

  const auto g = group_of({2, 4});
  EXPECT_EQ(element_order(g, g.element({1, 0}, {})), Integer(2));
  EXPECT_EQ(element_order(g, g.element({1, 1}, {})), Integer(4));
  EXPECT_EQ(element_order(g, g.element({0, 2}, {})), Integer(2));
}

TEST(GroupsIsomorphic, Examples) {
  EXPECT_TRUE(groups_isomorphic(group_of({6}), group_of({2, 3})));
  EXPECT_FALSE(groups_isomorphic(group_of({}, 1), group_of({})));
  EXPECT_FALSE(groups_isomorphic(group_of({4}), group_of({2, 2})));
  EXPECT_EQ(group_of({2, 3}).torsion(), std::vector<Integer>{6});
}

TEST(GroupsIsomorphic, IsAnEquivalenceRelation) {
  std::mt19937_64 rng(23);
  std::vector<FgAbelianGroup> pool;
  for (int i = 0; i < 40; ++i) {
    pool.push_back(cokernel_group(oracle::random_int_matrix(1 + i % 3, 1 + i % 3, -2, 2, rng)));
  }
  for (const auto& a : pool) {
    ASSERT_TRUE(groups_isomorphic(a, a));
    for (const auto& b : pool) {
      ASSERT_EQ(groups_isomorphic(a, b), groups_isomorphic(b, a));
      for (const auto& c : pool) {
        if (groups_isomorphic(a, b) && groups_isomorphic(b, c)) {
          ASSERT_TRUE(groups_isomorphic(a, c));
        }
      }
    }
  }
}

TEST(GroupOrder, MatchesDeterminant) {
  std::mt19937_64 rng(24);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + trial % 6;
    const IntMatrix m = oracle::random_int_matrix(n, n, -4, 4, rng);
    const auto g = cokernel_group(m);
    const Integer d = oracle::leibniz_det(m);
    ASSERT_EQ(g.is_finite(), d != 0);
    if (d != 0) {
      ASSERT_EQ(*g.order(), abs(d));
    }
  }
}

TEST(PointedIsomorphic, Examples) {
  const auto z = group_of({}, 1);
  EXPECT_EQ(pointed_isomorphic({z, z.element({}, {1})}, {z, z.element({}, {-1})}), Verdict::yes);
  EXPECT_EQ(pointed_isomorphic({z, z.element({}, {1})}, {z, z.zero()}), Verdict::no);

  const auto g = group_of({2, 4});
  const auto d = decide_pointed({g, g.element({1, 0}, {})}, {g, g.element({0, 2}, {})});
  EXPECT_EQ(d.verdict, Verdict::no);
  EXPECT_EQ(d.step, PointedStep::divisibility);
}

TEST(PointedIsomorphic, FreeGroupsCompareCoordinateGcd) {
  const auto z2 = group_of({}, 2);
  EXPECT_EQ(pointed_isomorphic({z2, z2.element({}, {4, 6})}, {z2, z2.element({}, {0, -2})}), Verdict::yes);
  EXPECT_EQ(pointed_isomorphic({z2, z2.element({}, {4, 6})}, {z2, z2.element({}, {3, 0})}), Verdict::no);
}

TEST(PointedIsomorphic, MixedGroupExamples) {
  const auto g = group_of({2}, 1);
  // (0, 1) -> (1, 1) is the automorphism (t, f) -> (t + f, f).
  const auto d = decide_pointed({g, g.element({1}, {1})}, {g, g.element({0}, {1})});
  EXPECT_EQ(d.verdict, Verdict::yes);
  EXPECT_EQ(d.step, PointedStep::mixed);
  EXPECT_EQ(pointed_isomorphic({g, g.element({1}, {0})}, {g, g.element({0}, {1})}), Verdict::no);
  // With even free part the torsion coordinate can no longer be shifted.
  EXPECT_EQ(pointed_isomorphic({g, g.element({1}, {2})}, {g, g.element({0}, {2})}), Verdict::no);
  EXPECT_EQ(pointed_isomorphic({g, g.element({1}, {2})}, {g, g.element({1}, {-2})}), Verdict::yes);

  PointedOptions tight;
  tight.max_group_order = 1;
  EXPECT_EQ(pointed_isomorphic({g, g.element({1}, {1})}, {g, g.element({0}, {1})}, tight), Verdict::undecided);
}

TEST(PointedIsomorphic, MixedGroupsAgreeWithHomomorphismEnumeration) {
  const std::vector<std::vector<long long>> torsions{{2}, {3}, {4}, {6}, {2, 2}, {2, 4}};
  for (const auto& m : torsions) {
    std::vector<Integer> orders(m.begin(), m.end());
    const auto g = FgAbelianGroup::from_cyclic_orders(orders, 1);
    const detail::FiniteIndexer tix(FgAbelianGroup::from_cyclic_orders(orders, 0));
    std::vector<oracle::RankOnePoint> points;
    for (long long f = -4; f <= 4; ++f) {
      for (std::size_t t = 0; t < tix.size(); ++t) {
        const auto tc = tix.coords(t);
        points.emplace_back(std::vector<long long>(tc.begin(), tc.end()), f);
      }
    }
    auto to_element = [&](const oracle::RankOnePoint& p) {
      return g.element(IntVector(p.first.begin(), p.first.end()), IntVector{p.second});
    };
    for (const auto& x : points) {
      const auto orbit = oracle::rank_one_orbit(m, x);
      for (const auto& y : points) {
        const Verdict v = pointed_isomorphic({g, to_element(x)}, {g, to_element(y)});
        ASSERT_EQ(v, verdict_from(orbit.contains(y)))
            << "x=" << render(to_element(x)) << " y=" << render(to_element(y));
      }
    }
  }
}

// Equivalent points of G have images in one Aut(G/NG)-orbit.
TEST(PointedIsomorphic, MixedGroupVerdictsRespectFiniteQuotients) {
  struct Case {
    std::vector<Integer> torsion;
    std::size_t rank;
    long long box;
    long long modulus;
  };
  const std::vector<Case> cases{{{2}, 2, 2, 4}, {{3}, 1, 3, 9}, {{2, 4}, 1, 3, 8}};
  for (const Case& c : cases) {
    const auto g = FgAbelianGroup::from_cyclic_orders(c.torsion, c.rank);
    std::vector<Integer> quotient_orders = c.torsion;
    for (std::size_t i = 0; i < c.rank; ++i) quotient_orders.push_back(c.modulus);
    const auto q = FgAbelianGroup::from_cyclic_orders(quotient_orders, 0);

    std::vector<std::pair<GroupElement, GroupElement>> points;  // (in G, image in G/NG)
    const detail::FiniteIndexer tix(FgAbelianGroup::from_cyclic_orders(c.torsion, 0));
    std::vector<long long> f(c.rank, -c.box);
    for (;;) {
      for (std::size_t t = 0; t < tix.size(); ++t) {
        const auto tc = tix.coords(t);
        IntVector torsion(tc.begin(), tc.end());
        IntVector free(f.begin(), f.end());
        IntVector both = torsion;
        both.insert(both.end(), free.begin(), free.end());
        points.emplace_back(g.element(torsion, free), project_element(q, both));
      }
      std::size_t i = 0;
      while (i < c.rank && f[i] == c.box) f[i++] = -c.box;
      if (i == c.rank) break;
      ++f[i];
    }

    std::size_t equivalent_pairs = 0;
    for (const auto& [x, xq] : points) {
      const auto orbit = automorphism_orbit(q, xq);
      for (const auto& [y, yq] : points) {
        const Verdict v = pointed_isomorphic({g, x}, {g, y});
        ASSERT_NE(v, Verdict::undecided);
        if (v == Verdict::yes) {
          ++equivalent_pairs;
          ASSERT_TRUE(orbit.contains(yq)) << "x=" << render(x) << " y=" << render(y);
        }
      }
    }
    EXPECT_GT(equivalent_pairs, points.size());
  }
}

TEST(PointedIsomorphic, FiniteGroupsAboveTheBoundAreUndecided) {
  const auto g = group_of({2, 4});
  PointedOptions opts;
  opts.max_group_order = 4;
  EXPECT_EQ(pointed_isomorphic({g, g.element({1, 0}, {})}, {g, g.element({0, 2}, {})}, opts), Verdict::no);
  EXPECT_EQ(pointed_isomorphic({g, g.element({1, 1}, {})}, {g, g.element({0, 1}, {})}, opts), Verdict::undecided);
  EXPECT_EQ(pointed_isomorphic({g, g.element({1, 1}, {})}, {g, g.element({0, 1}, {})}), Verdict::yes);
}

TEST(AutomorphismOrbit, Examples) {
  const auto trivial = group_of({});
  EXPECT_EQ(automorphism_orbit(trivial, trivial.zero()), std::set<GroupElement>{trivial.zero()});

  const auto z3 = group_of({3});
  EXPECT_EQ(automorphism_orbit(z3, z3.element({1}, {})),
            (std::set<GroupElement>{z3.element({1}, {}), z3.element({2}, {})}));

  const auto v4 = group_of({2, 2});
  EXPECT_EQ(automorphism_orbit(v4, v4.element({1, 0}, {})),
            (std::set<GroupElement>{v4.element({1, 0}, {}), v4.element({0, 1}, {}), v4.element({1, 1}, {})}));
}

TEST(AutomorphismOrbit, BoundErrors) {
  const auto z = group_of({}, 1);
  EXPECT_THROW(automorphism_orbit(z, z.zero()), BoundError);
  const auto g = group_of({2, 4});
  EXPECT_THROW(automorphism_orbit(g, g.zero(), 7), BoundError);
}

TEST(AutomorphismOrbit, AutomorphismCountOfElementaryGroup) {
  // |GL(3, F_2)| = 168; the orbit of a nonzero vector is all 7 nonzero vectors.
  const auto g = group_of({2, 2, 2});
  EXPECT_EQ(automorphism_orbit(g, g.element({0, 0, 1}, {})).size(), 7u);
  EXPECT_EQ(detail::cached_automorphisms(g)->size(), 168u);
}

TEST(AutomorphismOrbit, ConcurrentCallsAgree) {
  const auto g = group_of({2, 8});
  const auto x = g.element({1, 2}, {});
  std::vector<std::set<GroupElement>> results(4);
  std::vector<std::thread> threads;
  for (std::size_t i = 0; i < results.size(); ++i) {
    threads.emplace_back([&, i] { results[i] = automorphism_orbit(g, x); });
  }
  for (auto& t : threads) t.join();
  for (const auto& r : results) EXPECT_EQ(r, results[0]);
}

TEST(FiniteAbelianTypes, CountsUpToSixteen) {
  // Number of abelian groups of order 1..16: 1,1,1,2,1,1,1,3,2,1,1,2,1,1,1,5.
  EXPECT_EQ(oracle::finite_abelian_types(16).size(), 25u);
}

TEST(PointedIsomorphic, FastPathsAreSound) {
  // With enumeration disabled only the structural filters run; whenever they
  // answer "no", the orbit oracle must agree.
  PointedOptions filters_only;
  filters_only.max_group_order = 0;
  for (const auto& type : oracle::finite_abelian_types(16)) {
    const auto g = FgAbelianGroup::from_cyclic_orders(type, 0);
    const detail::FiniteIndexer ix(g);
    for (std::size_t a = 0; a < ix.size(); ++a) {
      const auto x = ix.to_element(a);
      const auto orbit = automorphism_orbit(g, x);
      for (std::size_t b = 0; b < ix.size(); ++b) {
        const auto y = ix.to_element(b);
        const Verdict v = pointed_isomorphic({g, x}, {g, y}, filters_only);
        if (v == Verdict::no) {
          ASSERT_FALSE(orbit.contains(y));
        }
        if (orbit.contains(y)) {
          ASSERT_EQ(element_order(g, x), element_order(g, y));
        }
      }
    }
  }
}

}  // namespace
}  // namespace cksplice
