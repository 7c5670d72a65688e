#include <gtest/gtest.h>

#include <deque>
#include <set>

#include "coxwo/rootstore.hpp"
#include "support.hpp"

using namespace coxwo;
using testing_support::load;
using testing_support::vec;

namespace {

// Positive roots by plain BFS over vectors, with depth = number of raising reflections.
std::map<Vector, int, CanonicalLess> bfs_roots(const CoxeterSystem& sys, int max_depth) {
  std::map<Vector, int, CanonicalLess> depth;
  std::vector<Vector> layer;
  for (std::size_t s = 0; s < sys.rank(); ++s) {
    depth.emplace(sys.simple_root(s), 0);
    layer.push_back(sys.simple_root(s));
  }
  for (int d = 1; d <= max_depth; ++d) {
    std::vector<Vector> next;
    for (const auto& v : layer)
      for (std::size_t s = 0; s < sys.rank(); ++s) {
        Vector w = sys.reflect_simple(s, v);
        if (w.orientation() <= 0 || depth.count(w)) continue;
        depth.emplace(w, d);
        next.push_back(w);
      }
    layer = std::move(next);
  }
  return depth;
}

bool brute_in_cone(const Vector& a, const Vector& b, const Vector& g) {
  auto c = plane_coefficients(a, b, g);
  return c && c->first.sign() >= 0 && c->second.sign() >= 0;
}

}  // namespace

TEST(RootStore, FiniteA2) {
  RootStore store(load("a2"));
  store.ensure_depth(10);
  EXPECT_TRUE(store.exhausted());
  EXPECT_EQ(store.size(), 3u);
  EXPECT_TRUE(store.lookup(vec({1, 1})).has_value());
}

TEST(RootStore, UniversalRankThreeDoublesPerGeneration) {
  RootStore store(load("universal3"));
  for (int d = 0; d <= 7; ++d) {
    const std::size_t expected = 3 * ((std::size_t{1} << (d + 1)) - 1);
    EXPECT_EQ(store.count_up_to(d), expected) << "depth " << d;
  }
  EXPECT_EQ(store.count_up_to(4), 93u);
}

TEST(RootStore, SimpleRootsFirst) {
  RootStore store(load("a3tilde"));
  store.ensure_depth(3);
  for (int s = 0; s < 4; ++s) {
    EXPECT_EQ(store.vec(s), store.system().simple_root(static_cast<std::size_t>(s)));
    EXPECT_EQ(store.depth(s), 0);
  }
}

TEST(RootStore, BudgetExceeded) {
  RootStore store(load("universal3"), 50);
  EXPECT_THROW(store.ensure_depth(6), BudgetExceeded);
}

TEST(RootStore, FindOrExtendAndDescend) {
  RootStore store(load("dihedral_inf"));
  const int i = store.find_or_extend(vec({8, 7}));
  EXPECT_EQ(store.vec(i), vec({8, 7}));
  EXPECT_EQ(store.depth(i), 7);  // (k+1, k) has depth k
  EXPECT_THROW(store.find_or_extend(vec({2, 2})), InputError);
  EXPECT_FALSE(store.descend(vec({1, 3})).has_value());
  EXPECT_FALSE(store.descend(vec({-1, 0})).has_value());
}

TEST(RootStore, DihedralIntervalInfinite) {
  RootStore store(load("dihedral_inf"));
  auto iv = store.dihedral_interval(0, 1);
  EXPECT_TRUE(iv.infinite);
  EXPECT_EQ(iv.members.size(), store.count_up_to(4));  // every root lies in cone(α_s, α_t)
}

TEST(RootStore, DihedralIntervalFiniteLabels) {
  RootStore a(load("a2tilde"));
  auto iv = a.dihedral_interval(0, 1);
  EXPECT_FALSE(iv.infinite);
  EXPECT_EQ(iv.members.size(), 3u);
  RootStore c(load("c2tilde"));
  auto ivc = c.dihedral_interval(0, 1);
  EXPECT_FALSE(ivc.infinite);
  EXPECT_EQ(ivc.members.size(), 4u);
}

class RootStoreSystems : public ::testing::TestWithParam<const char*> {};

TEST_P(RootStoreSystems, MatchesPlainBreadthFirstSearch) {
  const auto sys = load(GetParam());
  const int depth = sys.rank() >= 4 ? 4 : 6;
  const auto oracle = bfs_roots(sys, depth);
  RootStore store(sys);
  ASSERT_EQ(store.count_up_to(depth), oracle.size());
  for (const auto& [v, d] : oracle) {
    auto i = store.lookup(v);
    ASSERT_TRUE(i.has_value()) << v.str();
    EXPECT_EQ(store.depth(*i), d);
  }
}

TEST_P(RootStoreSystems, ReflectionTableAndDescentLemma) {
  RootStore store(load(GetParam()));
  const auto& sys = store.system();
  const std::size_t count = store.count_up_to(3);
  for (std::size_t k = 0; k < count; ++k) {
    const int i = static_cast<int>(k);
    for (std::size_t s = 0; s < sys.rank(); ++s) {
      const SignedIndex r = store.reflect(i, s);
      EXPECT_EQ(store.signed_vec(r), sys.reflect_simple(s, store.vec(i)));
      EXPECT_EQ(store.reflect(r, s), i);
      if (!is_positive(r)) {
        EXPECT_EQ(i, static_cast<int>(s));
        continue;
      }
      const int b = sys.form_with_simple(s, store.vec(i)).sign();
      EXPECT_EQ(store.depth(r), store.depth(i) - b) << "descent lemma";
    }
  }
}

TEST_P(RootStoreSystems, DihedralIntervalsMatchScan) {
  RootStore store(load(GetParam()));
  const auto& sys = store.system();
  const int scan_depth = sys.rank() >= 4 ? 5 : 7;
  const auto pool = store.indices_up_to(2);
  const std::size_t all = store.count_up_to(scan_depth);
  for (std::size_t x = 0; x < pool.size(); ++x)
    for (std::size_t y = x + 1; y < pool.size(); ++y) {
      const int a = pool[x], b = pool[y];
      auto iv = store.dihedral_interval(a, b);
      EXPECT_EQ(iv.infinite, sys.bilinear(store.vec(a), store.vec(b)) <= Scalar(-1));
      std::set<int> got(iv.members.begin(), iv.members.end());
      for (std::size_t g = 0; g < all; ++g) {
        const bool in = brute_in_cone(store.vec(a), store.vec(b), store.vec(static_cast<int>(g)));
        if (iv.infinite && store.depth(static_cast<int>(g)) > std::max(store.depth(a), store.depth(b)) + 4)
          continue;
        EXPECT_EQ(got.count(static_cast<int>(g)) == 1, in) << a << "," << b << " root " << g;
      }
      if (!iv.infinite) {
        for (int m : iv.members) EXPECT_TRUE(brute_in_cone(store.vec(a), store.vec(b), store.vec(m)));
      }
    }
}

INSTANTIATE_TEST_SUITE_P(Systems, RootStoreSystems,
                         ::testing::Values("a2", "dihedral_inf", "a2tilde", "c2tilde", "universal3",
                                           "universal3_sixfifths", "a3tilde", "rank4_biclosed"));
