#include <symcone/coneverify.hpp>
#include <symcone/errors.hpp>

#include <gtest/gtest.h>

#include <algorithm>

using namespace symcone;

namespace {

Partition P(std::vector<int> v) { return Partition::from_parts(std::move(v)); }
AlphaPoly a(std::size_t i) { return AlphaPoly::variable(i); }
BigRational Q(long n, long d = 1) { return make_rational(n, d); }

FixedSector S(std::vector<std::vector<int>> comps) {
  std::vector<Partition> ps;
  for (auto &c : comps)
    ps.push_back(P(c));
  return FixedSector::make(Multipartition(std::move(ps)));
}

VerifyConfig config(int d, int r, int beta, int x,
                    RcNormalization n = RcNormalization::AsPrinted) {
  VerifyConfig c;
  c.d = d;
  c.r = r;
  c.caps = {beta, x, 0};
  c.normalization = n;
  return c;
}

} // namespace

TEST(ConditionI, DegreeOneLine) {
  auto s = S({{1}, {}});
  auto series = i_restricted(s, {3, 0, 0});
  auto edges = enumerate_edges(s, Q(3));
  auto rep = check_condition_I(series, edges);
  EXPECT_TRUE(rep.pass);
  std::set<LinearForm> seen;
  for (const auto &[i, ps] : rep.observed)
    for (const auto &[w, m] : ps.poles) {
      seen.insert(w);
      EXPECT_EQ(m, 1);
    }
  std::set<LinearForm> expect;
  for (int q = 1; q <= 3; ++q)
    expect.insert(LinearForm::difference(0, 1, Q(1, q)));
  EXPECT_EQ(seen, expect);
}

TEST(ConditionI, ZeroSeriesPasses) {
  RestrictedSeries empty;
  empty.sector = S({{1}, {}});
  EXPECT_TRUE(check_condition_I(empty, {}).pass);
}

TEST(ConditionI, InjectedStrayPoleFails) {
  auto s = S({{1}, {}});
  auto series = i_restricted(s, {2, 0, 0});
  SeriesIndex one;
  one.beta = 1;
  AlphaPoly stray = a(0) - a(1) * Q(2);
  series.coeffs[one] *= ZRat::inverse_linear(stray, 1);
  auto rep = check_condition_I(series, enumerate_edges(s, Q(2)));
  EXPECT_FALSE(rep.pass);
  ASSERT_EQ(rep.violations.size(), 1u);
  EXPECT_EQ(rep.violations[0].pole, LinearForm::from_poly(stray).to_string());
  EXPECT_EQ(rep.violations[0].index, one);
}

TEST(ConditionI, StableUnderRaisingCap) {
  for (const auto &s : enumerate_sectors(2, 1)) {
    auto small = i_restricted(s, {1, 1, 0});
    auto big_edges = enumerate_edges(s, Q(2));
    EXPECT_TRUE(check_condition_I(small, enumerate_edges(s, Q(1))).pass);
    EXPECT_TRUE(check_condition_I(small, big_edges).pass);
    EXPECT_TRUE(check_condition_I(i_restricted(s, {2, 1, 0}), big_edges).pass);
  }
}

TEST(ConditionII, DegreeOneAllOrders) {
  auto all = compute_all_series(1, 1, {3, 0, 0}, {});
  for (const auto &[s, series] : all) {
    std::set<LinearForm> poles;
    for (const auto &e : enumerate_edges(s, Q(3)))
      poles.insert(e.wbar);
    for (const auto &w : poles)
      for (int a = 1; a <= 2; ++a) {
        auto rep = check_condition_II(all, s, w, a);
        EXPECT_TRUE(rep.pass) << s.to_string() << " a=" << a;
        if (a == 2) {
          for (const auto &row : rep.rows) {
            EXPECT_TRUE(row.lhs.is_zero());
            EXPECT_TRUE(row.rhs.is_zero());
          }
        }
      }
  }
}

TEST(ConditionII, ZeroCapHasNothingToCompare) {
  auto all = compute_all_series(1, 1, {0, 0, 0}, {});
  auto s = S({{1}, {}});
  auto rep = check_condition_II(all, s, LinearForm::difference(0, 1), 1);
  EXPECT_TRUE(rep.pass);
  EXPECT_TRUE(rep.rows.empty());
}

TEST(ConditionII, MissingTargetIsIncomplete) {
  auto s = S({{1}, {}});
  SeriesMap partial;
  partial.emplace(s, i_restricted(s, {2, 0, 0}));
  EXPECT_THROW(check_condition_II(partial, s, LinearForm::difference(0, 1), 1),
               Incomplete);
  EXPECT_THROW(check_condition_II(partial, S({{}, {1}}),
                                  LinearForm::difference(1, 0), 1),
               Incomplete);
}

TEST(ConditionII, ScaledCoefficientPassesDegreeTwo) {
  auto res = run_verification(config(2, 1, 2, 1, RcNormalization::RSigmaScaled));
  EXPECT_TRUE(res.pass_I);
  EXPECT_TRUE(res.pass_II);
  EXPECT_FALSE(res.recursion.empty());
}

TEST(ConditionII, PrintedCoefficientFailsNonUniformly) {
  auto res = run_verification(config(2, 1, 2, 1));
  EXPECT_TRUE(res.pass_I);
  EXPECT_FALSE(res.pass_II);
  auto summary = summarize_probes(res.recursion);
  EXPECT_FALSE(summary.all_zero);
  EXPECT_FALSE(summary.uniform());
  EXPECT_GE(summary.r_sigma_powers.size(), 2u);
  for (const auto &r : res.recursion)
    if (!r.pass) {
      EXPECT_EQ(r.sector.r_sigma(), 2);
      ASSERT_TRUE(r.probe.has_value());
    }
}

TEST(ConditionII, PositiveLabelsFailTheRecursion) {
  auto c = config(2, 1, 2, 1, RcNormalization::RSigmaScaled);
  c.options.convention = LabelConvention::Pos;
  auto res = run_verification(c);
  EXPECT_FALSE(res.pass_II);
}

TEST(Probe, Examples) {
  RecursionReport rep;
  rep.sector = S({{2}, {}});
  AlphaRat x = AlphaRat(1) / AlphaRat(a(0) - a(1));
  AlphaRat y = AlphaRat(a(0)) / AlphaRat(a(1) - a(0) * Q(3));
  rep.rows.push_back({SeriesIndex{}, x, x, true});
  auto one = normalization_probe(rep);
  ASSERT_TRUE(one.has_value());
  EXPECT_EQ(one->factor, 1);
  EXPECT_EQ(one->r_sigma_power, 0);

  RecursionReport scaled = rep;
  SeriesIndex i2;
  i2.beta = 1;
  scaled.rows.push_back({i2, y * AlphaRat(4), y, false});
  scaled.rows[0].lhs = x * AlphaRat(4);
  auto sq = normalization_probe(scaled);
  ASSERT_TRUE(sq.has_value());
  EXPECT_EQ(sq->factor, 4);
  EXPECT_EQ(sq->r_sigma_power, 2);

  RecursionReport bad = scaled;
  bad.rows[1].lhs = y * AlphaRat(2);
  EXPECT_FALSE(normalization_probe(bad).has_value());

  RecursionReport nonconst = rep;
  nonconst.rows[0].lhs = x * AlphaRat(a(0));
  EXPECT_FALSE(normalization_probe(nonconst).has_value());
}

TEST(Crosscheck, AgreesWithSymbolicVerdict) {
  auto c = config(2, 1, 2, 1, RcNormalization::RSigmaScaled);
  c.crosscheck_points = 5;
  auto res = run_verification(c);
  EXPECT_TRUE(res.pass_crosscheck);
  ASSERT_EQ(res.crosscheck.size(), res.recursion.size());
  int injected = 0;
  for (const auto &r : res.recursion) {
    if (r.rows.empty())
      continue;
    auto broken = r;
    broken.rows[0].lhs += AlphaRat(AlphaPoly(a(0)) * Q(1, 7));
    EXPECT_FALSE(specialization_crosscheck(broken, 5, 9));
    ++injected;
  }
  EXPECT_GT(injected, 0);
}

TEST(Signsum, Examples) {
  using M = Membership;
  auto free = check_identity_signsum(P({1, 1}), {M::Free, M::Free}, 1);
  EXPECT_EQ(free.brute, 1);
  EXPECT_TRUE(free.pass);
  auto forced = check_identity_signsum(P({2, 1}), {M::In, M::Free}, 1);
  EXPECT_EQ(forced.brute, 0);
  EXPECT_TRUE(forced.pass);
  auto out = check_identity_signsum(P({2, 1, 1}), {M::Out, M::Free, M::Free}, 1);
  EXPECT_TRUE(out.pass);
}

TEST(Signsum, TopOrderWithoutConstraintsIsOne) {
  using M = Membership;
  for (int n = 1; n <= 5; ++n) {
    auto s = Partition::ones(n);
    auto res = check_identity_signsum(
        s, std::vector<M>(static_cast<std::size_t>(n), M::Free), n);
    EXPECT_EQ(res.brute, 1);
  }
}

TEST(Signsum, UnrealizablePatternsAreExcluded) {
  using M = Membership;
  EXPECT_FALSE(signsum_pattern_realizable(2, {M::In, M::Free}, 2));
  EXPECT_TRUE(signsum_pattern_realizable(2, {M::In, M::Free}, 1));
  // the excluded pattern genuinely disagrees with the closed form
  EXPECT_FALSE(check_identity_signsum(P({1, 1}), {M::In, M::Free}, 2).pass);
}

TEST(Signsum, ExhaustiveSweep) {
  auto res = sweep_signsum(4);
  EXPECT_GT(res.cases, 0);
  EXPECT_TRUE(res.pass());
}

TEST(PsiBinomial, SmallK) {
  for (int k = 1; k <= 8; ++k) {
    EXPECT_TRUE(check_psi_binomial(k)) << k;
    EXPECT_TRUE(check_psi_binomial_cleared(k)) << k;
  }
}

TEST(RatioIdentity, Examples) {
  auto e1 = make_edge(S({{1}, {}}), 0, 1, P({1}), Q(1));
  auto r1 = check_ratio_identity(e1);
  EXPECT_TRUE(r1.pass);
  EXPECT_EQ(r1.lhs, 1);
  auto e2 = make_edge(S({{1, 1}, {}}), 0, 1, P({1}), Q(1));
  auto r2 = check_ratio_identity(e2);
  EXPECT_EQ(r2.lhs, 2);
  EXPECT_EQ(r2.rhs, 2);
  EXPECT_TRUE(r2.pass);
}

TEST(RatioIdentity, AllSmallEdges) {
  for (int d = 1; d <= 4; ++d)
    for (const auto &s : enumerate_sectors(d, 1))
      for (const auto &e : enumerate_edges(s, Q(2)))
        EXPECT_TRUE(check_ratio_identity(e).pass) << e.to_string();
}

TEST(WTimesRc, AllSmallEdges) {
  for (int d = 1; d <= 3; ++d)
    for (int r = 1; r <= 2; ++r)
      for (const auto &s : enumerate_sectors(d, r))
        for (const auto &e : enumerate_edges(s, Q(2)))
          for (int k = 1; k <= e.mov_count(); ++k) {
            EXPECT_TRUE(check_w_times_rc(e, k));
            EXPECT_TRUE(check_w_times_rc(e, k, RcNormalization::RSigmaScaled));
          }
}

TEST(Verification, WorkerCountDoesNotChangeReports) {
  auto c = config(2, 1, 2, 1, RcNormalization::RSigmaScaled);
  setenv("SYMCONE_WORKERS", "1", 1);
  auto one = run_verification(c);
  setenv("SYMCONE_WORKERS", "3", 1);
  auto three = run_verification(c);
  unsetenv("SYMCONE_WORKERS");
  ASSERT_EQ(one.recursion.size(), three.recursion.size());
  for (std::size_t i = 0; i < one.recursion.size(); ++i) {
    EXPECT_EQ(one.recursion[i].sector, three.recursion[i].sector);
    EXPECT_EQ(one.recursion[i].wbar, three.recursion[i].wbar);
    EXPECT_EQ(one.recursion[i].a, three.recursion[i].a);
    EXPECT_EQ(one.recursion[i].rows.size(), three.recursion[i].rows.size());
  }
}
