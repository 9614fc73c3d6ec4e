#include <symcone/errors.hpp>
#include <symcone/json_io.hpp>
#include <symcone/trees.hpp>

#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>

using namespace symcone;

namespace {

Partition P(std::vector<int> v) { return Partition::from_parts(std::move(v)); }
BigRational Q(long n, long d = 1) { return make_rational(n, d); }

FixedSector S(std::vector<std::vector<int>> comps) {
  std::vector<Partition> ps;
  for (auto &c : comps)
    ps.push_back(P(c));
  return FixedSector::make(Multipartition(std::move(ps)));
}

// e0 || e1 and e2 || e3, but e1 and e2 carry different q.
DecoratedTree two_disjoint_pairs() {
  return make_chain(S({{1, 1}, {}}), {{0, 1, P({1}), Q(1)},
                                      {0, 1, P({1}), Q(1)},
                                      {1, 0, P({1}), Q(2)},
                                      {1, 0, P({1}), Q(2)}});
}

DecoratedTree three_step_chain() {
  return make_chain(S({{1, 1, 1}, {}}), {{0, 1, P({1}), Q(1)},
                                         {0, 1, P({1}), Q(1)},
                                         {0, 1, P({1}), Q(1)}});
}

using PairList = std::vector<std::pair<int, int>>;

std::vector<PairList> subsets(const PairList &all) {
  std::vector<PairList> out;
  for (unsigned mask = 0; mask < (1u << all.size()); ++mask) {
    PairList s;
    for (std::size_t i = 0; i < all.size(); ++i)
      if (mask & (1u << i))
        s.push_back(all[i]);
    out.push_back(s);
  }
  return out;
}

} // namespace

TEST(Validate, OneEdgeTreesPass) {
  for (int d = 1; d <= 3; ++d)
    for (const auto &s : enumerate_sectors(d, 2))
      for (const auto &e : enumerate_edges(s, Q(2))) {
        auto t = tree_from_edge(e);
        auto rep = validate(t);
        EXPECT_TRUE(rep.pass) << e.to_string() << " "
                              << (rep.failures.empty() ? "" : rep.failures[0]);
        EXPECT_EQ(t.total_beta(), BigRational(e.beta));
        EXPECT_EQ(t.mov(0), e.mov);
        EXPECT_EQ(t.i_mov(0, 0), e.i1);
        EXPECT_EQ(t.i_mov(1, 0), e.i2);
      }
}

TEST(Validate, ThreeCoordinatesChangedFailsFirstCondition) {
  DecoratedTree t;
  t.d = 2;
  t.r = 2;
  t.vertices[0] = {{2, 0, 0}};
  t.vertices[1] = {{0, 1, 1}};
  auto m0 = Multipartition::ones({{2, 0, 0}});
  auto m1 = Multipartition::ones({{0, 1, 1}});
  t.edges[0] = TreeEdge{0, 1, Q(1), m0, m1};
  t.marks = {{0, m0}, {1, m1}};
  auto rep = validate(t);
  EXPECT_FALSE(rep.pass);
  ASSERT_FALSE(rep.failures.empty());
  EXPECT_EQ(rep.failures[0].rfind("condition 1:", 0), 0u);
}

TEST(Validate, UnequalFlagsAtBareMiddleVertexFailFifthCondition) {
  auto t = make_chain(S({{2}, {1}}), {{0, 1, P({2}), Q(1)}, {1, 0, P({1}), Q(1)}});
  ASSERT_TRUE(validate(t).pass);
  // vertex 1 = (0,3); replace its flag on edge 1 by a different monodromy
  t.edges[1].mon_u = Multipartition({Partition{}, P({1, 1, 1})});
  t.edges[1].mon_v = Multipartition({P({1}), P({1, 1})});
  auto rep = validate(t);
  EXPECT_FALSE(rep.pass);
  bool saw = false;
  for (const auto &f : rep.failures)
    saw = saw || f.rfind("condition 5:", 0) == 0;
  EXPECT_TRUE(saw);
}

TEST(Validate, BareLeafNeedsOnesMonodromy) {
  auto e = make_edge(S({{2}, {}}), 0, 1, P({2}), Q(1, 2));
  auto t = tree_from_edge(e);
  t.marks.pop_back();
  auto rep = validate(t);
  EXPECT_FALSE(rep.pass);
  EXPECT_EQ(rep.failures[0].rfind("condition 3:", 0), 0u);
}

TEST(Validate, NotATree) {
  auto t = three_step_chain();
  t.edges[7] = TreeEdge{0, 2, Q(1), t.edges[0].mon_u, t.edges[1].mon_v};
  EXPECT_FALSE(validate(t).pass);
  EXPECT_EQ(validate(t).failures[0].rfind("tree:", 0), 0u);
}

TEST(Combinable, ChainExamples) {
  auto t = three_step_chain();
  EXPECT_TRUE(combinable(t, 0, 1));
  EXPECT_TRUE(combinable(t, 1, 2));
  EXPECT_FALSE(combinable(t, 0, 2));
  EXPECT_THROW(combinable(t, 0, 9), BadEdge);

  auto u = two_disjoint_pairs();
  EXPECT_FALSE(combinable(u, 1, 2));
  EXPECT_EQ(combinable_pairs(u), (PairList{{0, 1}, {2, 3}}));
}

TEST(Combinable, DifferentQIsNotCombinable) {
  auto t = make_chain(S({{1, 1}, {}}), {{0, 1, P({1}), Q(1)},
                                        {0, 1, P({1}), Q(2)}});
  EXPECT_TRUE(validate(t).pass);
  EXPECT_FALSE(combinable(t, 0, 1));
}

TEST(Combinable, BackAndForthIsNotCombinable) {
  auto t = make_chain(S({{1}, {}}), {{0, 1, P({1}), Q(1)}, {1, 0, P({1}), Q(1)}});
  EXPECT_TRUE(validate(t).pass);
  EXPECT_FALSE(combinable(t, 0, 1));
}

TEST(Combine, ReplacesMiddleVertex) {
  auto t = three_step_chain();
  auto res = combine(t, 0, 1);
  const auto &c = res.tree;
  EXPECT_EQ(canonical_form(combine(t, 1, 0).tree), canonical_form(c));
  EXPECT_EQ(c.vertices.size(), 3u);
  EXPECT_FALSE(c.vertices.count(1));
  ASSERT_TRUE(c.edges.count(0));
  EXPECT_EQ(c.edges.at(0).u, 0);
  EXPECT_EQ(c.edges.at(0).v, 2);
  EXPECT_EQ(c.edges.at(0).mon_u, t.edges.at(0).mon_u);
  EXPECT_EQ(c.edges.at(0).mon_v, t.edges.at(1).mon_v);
  EXPECT_EQ(c.mov(0), P({1, 1}));
  EXPECT_EQ(c.mon_of_edge(0), t.mon_of_edge(0));
  EXPECT_EQ(c.total_beta(), t.total_beta());
  EXPECT_EQ(res.phi, (std::map<int, int>{{0, 0}, {1, 0}, {2, 2}}));
  EXPECT_TRUE(validate(c).pass);
  EXPECT_THROW(combine(t, 0, 2), NotCombinable);
}

TEST(CombineSet, EmptySetIsIdentity) {
  auto t = three_step_chain();
  auto res = combine_set(t, {});
  EXPECT_EQ(canonical_form(res.tree), canonical_form(t));
  for (const auto &[a, b] : res.phi)
    EXPECT_EQ(a, b);
}

TEST(CombineSet, DisjointPairsCommute) {
  auto t = two_disjoint_pairs();
  auto x = combine_set(t, {{0, 1}, {2, 3}});
  auto y = combine_set(t, {{2, 3}, {0, 1}});
  EXPECT_EQ(canonical_form(x.tree), canonical_form(y.tree));
  EXPECT_EQ(x.phi, y.phi);
  EXPECT_EQ(x.tree.edges.size(), 2u);
}

TEST(CombineSet, OverlappingPairsGiveOneEdge) {
  auto t = three_step_chain();
  auto x = combine_set(t, {{0, 1}, {1, 2}});
  auto y = combine_set(t, {{1, 2}, {0, 1}});
  EXPECT_EQ(x.tree.edges.size(), 1u);
  EXPECT_EQ(canonical_form(x.tree), canonical_form(y.tree));
  EXPECT_EQ(x.tree.mov(0), P({1, 1, 1}));
  auto e = make_edge(S({{1, 1, 1}, {}}), 0, 1, P({1, 1, 1}), Q(1));
  EXPECT_EQ(canonical_form(x.tree), canonical_form(tree_from_edge(e)));
  EXPECT_THROW(combine_set(t, {{0, 2}}), NotCombinable);
}

TEST(MinimalForm, ChainCollapsesToOneEdge) {
  auto m = minimal_form(three_step_chain());
  EXPECT_EQ(m.edges.size(), 1u);
  EXPECT_TRUE(combinable_pairs(m).empty());
  EXPECT_EQ(canonical_form(minimal_form(m)), canonical_form(m));
  auto single = tree_from_edge(make_edge(S({{1}, {}}), 0, 1, P({1}), Q(1)));
  EXPECT_EQ(canonical_form(minimal_form(single)), canonical_form(single));
}

TEST(MinimalForm, RejectsInvalidInput) {
  auto t = three_step_chain();
  t.edges[0].q = Q(1, 3);
  EXPECT_THROW(minimal_form(t), Invalid);
}

TEST(MinimalForm, RandomChainsAreIdempotentAndValid) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    int d = 1 + static_cast<int>(seed % 3);
    auto t = random_chain(d, 1 + static_cast<int>(seed % 2), 4, seed);
    ASSERT_TRUE(validate(t).pass) << seed;
    auto m = minimal_form(t);
    EXPECT_TRUE(validate(m).pass);
    EXPECT_TRUE(combinable_pairs(m).empty());
    EXPECT_EQ(canonical_form(minimal_form(m)), canonical_form(m));
    EXPECT_EQ(m.total_beta(), t.total_beta());
    // no bare valence-2 vertex whose flags could still combine
    for (const auto &[v, mu] : m.vertices)
      if (m.valence(v) == 2 && m.marks_at(v).empty()) {
        auto es = m.edges_at(v);
        EXPECT_FALSE(combinable(m, es[0], es[1]));
      }
  }
}

TEST(CombineSet, OrderIndependenceOnRandomChains) {
  std::mt19937_64 rng(99);
  int checked = 0;
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    auto t = random_chain(1 + static_cast<int>(seed % 2), 1, 4, seed);
    auto all = combinable_pairs(t);
    if (all.size() > 3)
      continue;
    for (const auto &sub : subsets(all)) {
      auto ref = combine_set(t, sub);
      EXPECT_TRUE(validate(ref.tree).pass);
      auto perm = sub;
      std::sort(perm.begin(), perm.end());
      do {
        auto other = combine_set(t, perm);
        EXPECT_EQ(canonical_form(other.tree), canonical_form(ref.tree));
        EXPECT_EQ(other.phi, ref.phi);
        ++checked;
      } while (std::next_permutation(perm.begin(), perm.end()));
    }
  }
  EXPECT_GT(checked, 100);
}

TEST(CombineSet, SubsetsBijectWithCoarserTrees) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    auto t = random_chain(2, 1, 4, seed);
    auto all = combinable_pairs(t);
    std::map<std::string, PairList> seen;
    for (const auto &sub : subsets(all)) {
      auto res = combine_set(t, sub);
      auto key = canonical_form(res.tree);
      EXPECT_FALSE(seen.count(key)) << "seed " << seed;
      seen[key] = sub;
      // the subset is recovered from the edge map
      PairList back;
      for (const auto &p : all)
        if (res.phi.at(p.first) == res.phi.at(p.second))
          back.push_back(p);
      EXPECT_EQ(back, sub);
      // order reversing: every superset is reached from this tree
      for (const auto &sup : subsets(all)) {
        if (!std::includes(sup.begin(), sup.end(), sub.begin(), sub.end()))
          continue;
        PairList rest;
        for (const auto &p : sup)
          if (!std::count(sub.begin(), sub.end(), p))
            rest.emplace_back(res.phi.at(p.first), res.phi.at(p.second));
        auto further = combine_set(res.tree, rest);
        EXPECT_EQ(canonical_form(further.tree),
                  canonical_form(combine_set(t, sup).tree));
      }
    }
  }
}

TEST(CanonicalForm, IgnoresIds) {
  auto t = three_step_chain();
  DecoratedTree u = t;
  u.vertices.clear();
  u.edges.clear();
  for (const auto &[v, mu] : t.vertices)
    u.vertices[v * 10 + 5] = mu;
  for (const auto &[id, e] : t.edges) {
    TreeEdge f = e;
    f.u = e.v * 10 + 5;
    f.v = e.u * 10 + 5;
    std::swap(f.mon_u, f.mon_v);
    u.edges[100 - id] = f;
  }
  for (auto &m : u.marks)
    m.vertex = m.vertex * 10 + 5;
  EXPECT_TRUE(validate(u).pass);
  EXPECT_EQ(canonical_form(u), canonical_form(t));
  EXPECT_NE(canonical_form(u), canonical_form(minimal_form(t)));
}

TEST(Enumerate, SmallFixtures) {
  for (int d = 1; d <= 2; ++d)
    for (int n = 1; n <= 2; ++n)
      for (int beta = 0; beta <= 1; ++beta) {
        auto trees = enumerate_trees(d, 1, n, beta);
        std::set<std::string> keys;
        for (const auto &t : trees) {
          EXPECT_TRUE(validate(t).pass);
          EXPECT_EQ(t.total_beta(), BigRational(beta));
          EXPECT_EQ(static_cast<int>(t.marks.size()), n);
          keys.insert(canonical_form(t));
        }
        EXPECT_EQ(keys.size(), trees.size());
        EXPECT_FALSE(trees.empty());
      }
  EXPECT_THROW(enumerate_trees(3, 1, 2, 1), CapExceeded);
  EXPECT_THROW(enumerate_trees(2, 2, 2, 1), CapExceeded);
}

TEST(Enumerate, DegreeOneLineWithTwoMarks) {
  // q = 1 edge between the two fixed points; marks on either end or both on one
  auto trees = enumerate_trees(1, 1, 2, 1);
  EXPECT_EQ(trees.size(), 4u);
  auto pts = enumerate_trees(1, 1, 2, 0);
  EXPECT_EQ(pts.size(), 2u);
}

TEST(Json, TreeRoundTrip) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    auto t = random_chain(2, 1, 4, seed);
    auto back = tree_from_json(Json::parse(to_json(t).dump()));
    EXPECT_EQ(canonical_form(back), canonical_form(t));
    EXPECT_EQ(to_json(back).dump(), to_json(t).dump());
  }
  EXPECT_THROW(tree_from_json(Json::parse(R"({"d": 1})")), Invalid);
}
