#include <symcone/errors.hpp>
#include <symcone/symgroup.hpp>

#include <gtest/gtest.h>

#include <algorithm>

using namespace symcone;

namespace {

Partition P(std::vector<int> v) { return Partition::from_parts(std::move(v)); }

// Size of the centralizer of a representative, by direct search.
long brute_centralizer(const Partition &type) {
  auto t = PermTable::get(type.sum());
  const Perm &g = t->perm(t->members(type).front());
  long n = 0;
  for (std::size_t i = 0; i < t->size(); ++i)
    if (compose(t->perm(i), g) == compose(g, t->perm(i)))
      ++n;
  return n;
}

// All class lists of length <= len over S_d.
std::vector<ClassList> lists_up_to(int d, std::size_t len) {
  auto classes = partitions_of(d);
  std::vector<ClassList> out;
  std::vector<std::vector<Partition>> frontier = {{}};
  for (std::size_t l = 1; l <= len; ++l) {
    std::vector<std::vector<Partition>> next;
    for (const auto &f : frontier)
      for (const auto &c : classes) {
        auto g = f;
        g.push_back(c);
        next.push_back(g);
        out.push_back(ClassList{d, g});
      }
    frontier = std::move(next);
  }
  return out;
}

} // namespace

TEST(Centralizer, Examples) {
  EXPECT_EQ(centralizer_order(4, P({2, 1, 1})), 4);
  EXPECT_EQ(centralizer_order(5, Partition::ones(5)), 120);
  EXPECT_EQ(centralizer_order(3, P({3})), 3);
  EXPECT_THROW(centralizer_order(4, P({2, 1})), ShapeMismatch);
}

TEST(Centralizer, MatchesDirectSearch) {
  for (int d = 1; d <= 5; ++d)
    for (const auto &s : partitions_of(d))
      EXPECT_EQ(centralizer_order(d, s), brute_centralizer(s)) << s.to_string();
}

TEST(ClassSize, Examples) {
  EXPECT_EQ(class_size(3, P({3})), 2);
  EXPECT_EQ(class_size(4, Partition::ones(4)), 1);
  EXPECT_EQ(class_size(4, P({2, 1, 1})), 6);
}

TEST(ClassSize, SumsToGroupOrder) {
  for (int d = 1; d <= 7; ++d) {
    BigInt total = 0;
    for (const auto &s : partitions_of(d))
      total += class_size(d, s);
    EXPECT_EQ(total, factorial(static_cast<unsigned>(d)));
  }
}

TEST(SectorCentralizer, Examples) {
  EXPECT_EQ(sector_centralizer_order(
                {{2, 0}}, Multipartition({P({2}), Partition{}})),
            2);
  EXPECT_EQ(sector_centralizer_order({{1, 1}}, Multipartition::ones({{1, 1}})), 1);
  EXPECT_EQ(sector_centralizer_order({{2, 2}},
                                     Multipartition({P({1, 1}), P({2})})),
            4);
  EXPECT_THROW(sector_centralizer_order({{2, 1}},
                                        Multipartition({P({2})})),
               ShapeMismatch);
}

TEST(PermTable, RankIsInverseOfIndex) {
  auto t = PermTable::get(4);
  ASSERT_EQ(t->size(), 24u);
  for (std::size_t i = 0; i < t->size(); ++i) {
    EXPECT_EQ(t->rank(t->perm(i)), i);
    EXPECT_EQ(t->cycle_type(i), cycle_type(t->perm(i)));
  }
  EXPECT_EQ(t.get(), PermTable::get(4).get());
}

TEST(Hurwitz, Examples) {
  EXPECT_EQ(hurwitz_count({2, {P({2}), P({2})}}), 1);
  EXPECT_EQ(hurwitz_count({4, {Partition::ones(4)}}), 1);
  EXPECT_EQ(hurwitz_count({3, {P({3}), P({3})}}), 2);
  EXPECT_EQ(hurwitz_count({3, {P({2, 1}), P({2, 1}), P({3})}}), 6);
}

TEST(Hurwitz, CapAndShapeErrors) {
  EXPECT_THROW(hurwitz({7, {Partition::ones(7)}}, HurwitzBackend::BruteForce),
               CapExceeded);
  EXPECT_THROW(hurwitz_count({3, {P({2})}}), ShapeMismatch);
  EXPECT_THROW(hurwitz_count({3, {}}), ShapeMismatch);
  auto big = hurwitz({7, {Partition::ones(7)}}, HurwitzBackend::Auto);
  EXPECT_EQ(big.count, 1);
  EXPECT_EQ(big.backend, "character");
}

TEST(Hurwitz, SingleClassIsIndicatorOfIdentity) {
  for (int d = 1; d <= 6; ++d)
    for (const auto &s : partitions_of(d))
      EXPECT_EQ(hurwitz_count({d, {s}}), s.is_ones() ? 1 : 0) << s.to_string();
}

TEST(Hurwitz, RotationAndReversalInvariant) {
  for (int d = 1; d <= 5; ++d)
    for (const auto &l : lists_up_to(d, 3)) {
      BigInt h = hurwitz_count(l);
      auto rot = l;
      std::rotate(rot.classes.begin(), rot.classes.begin() + 1, rot.classes.end());
      EXPECT_EQ(hurwitz_count(rot), h);
      auto rev = l;
      std::reverse(rev.classes.begin(), rev.classes.end());
      EXPECT_EQ(hurwitz_count(rev), h);
    }
}

TEST(Hurwitz, CharacterBackendAgreesWithBruteForce) {
  for (int d = 1; d <= 5; ++d)
    for (const auto &l : lists_up_to(d, 3))
      EXPECT_EQ(hurwitz(l, HurwitzBackend::Character).count,
                hurwitz(l, HurwitzBackend::BruteForce).count);
}

TEST(Characters, ColumnOrthogonality) {
  // sum_lambda chi(mu)^2 = z_mu
  for (int d = 1; d <= 6; ++d)
    for (const auto &mu : partitions_of(d)) {
      BigInt s = 0;
      for (const auto &lambda : partitions_of(d)) {
        BigInt c = character_value(lambda, mu);
        s += c * c;
      }
      EXPECT_EQ(s, centralizer_order(d, mu));
    }
}
