#include <symcone/errors.hpp>
#include <symcone/exactalg.hpp>

#include <gtest/gtest.h>

#include <random>

using namespace symcone;

namespace {

AlphaPoly a(std::size_t i) { return AlphaPoly::variable(i); }

BigRational Q(long n, long d = 1) { return make_rational(n, d); }

// Random small polynomial in a0..a2 of degree <= 2.
AlphaPoly random_poly(std::mt19937_64 &rng) {
  std::uniform_int_distribution<int> c(-3, 3);
  AlphaPoly p = c(rng);
  for (std::size_t i = 0; i < 3; ++i) {
    p += a(i) * BigRational(c(rng));
    for (std::size_t j = i; j < 3; ++j)
      if (c(rng) > 1)
        p += a(i) * a(j) * BigRational(c(rng));
  }
  return p;
}

// Random rational function with linear-factor denominators.
AlphaRat random_rat(std::mt19937_64 &rng) {
  std::uniform_int_distribution<int> pick(0, 2);
  AlphaRat f = random_poly(rng);
  int nden = pick(rng);
  for (int k = 0; k < nden; ++k) {
    std::size_t i = static_cast<std::size_t>(pick(rng));
    std::size_t j = (i + 1 + static_cast<std::size_t>(pick(rng) % 2)) % 3;
    f /= AlphaRat(a(i) - a(j) + AlphaPoly(pick(rng)));
  }
  return f;
}

LinearForm diff01(const BigRational &s = 1) {
  return LinearForm::difference(0, 1, s);
}

// (w - z)^k for any integer k.
ZRat power_of_u(const LinearForm &w, int k) {
  if (k >= 0) {
    ZRat out = 1;
    ZRat u = ZRat(w.to_poly()) - ZRat::z();
    for (int i = 0; i < k; ++i)
      out *= u;
    return out;
  }
  ZRat p = ZRat::pole(w, -k);
  return (-k) % 2 ? -p : p;
}

// Random z-rational function with poles at a few multiples of a0 - a1.
ZRat random_zrat(std::mt19937_64 &rng) {
  std::uniform_int_distribution<int> pick(1, 3);
  ZRat f = ZRat(random_poly(rng)) + ZRat(random_poly(rng)) * ZRat::z();
  int n = pick(rng);
  for (int k = 0; k < n; ++k)
    f *= ZRat::inverse_linear(a(0) - a(1), Q(pick(rng)));
  if (pick(rng) == 1)
    f *= ZRat::z_power(-1);
  if (pick(rng) == 2)
    f *= ZRat::inverse_linear(a(1) - a(2), Q(1, pick(rng)));
  return f;
}

} // namespace

TEST(AlphaPoly, Examples) {
  EXPECT_TRUE(((a(0) - a(1)) + (a(1) - a(0))).is_zero());
  auto q = (a(0) * a(0) - a(1) * a(1)).divide_exact(a(0) - a(1));
  ASSERT_TRUE(q.has_value());
  EXPECT_EQ(*q, a(0) + a(1));
  EXPECT_EQ((a(0) - a(1)).evaluate({Q(0), Q(1)}), Q(-1));
  EXPECT_FALSE((a(0) * a(0) + 1).divide_exact(a(0) - a(1)).has_value());
  EXPECT_THROW((void)a(0).divide_exact(AlphaPoly()), DivByZero);
}

TEST(AlphaPoly, CanonicalRendering) {
  auto p = a(0) * a(0) * Q(2) - a(1) * Q(1, 3);
  EXPECT_EQ(p.to_string(), "2*a0^2 - 1/3*a1");
  EXPECT_EQ(AlphaPoly().to_string(), "0");
}

TEST(AlphaRat, Cancellation) {
  AlphaRat f = AlphaRat(a(0) * a(0) - a(1) * a(1)) / AlphaRat(a(0) - a(1));
  EXPECT_TRUE(f.is_polynomial());
  EXPECT_EQ(f, AlphaRat(a(0) + a(1)));
  EXPECT_THROW(AlphaRat(a(0)) / AlphaRat(), DivByZero);
  AlphaRat g = AlphaRat(1) / AlphaRat(a(0) - a(1));
  EXPECT_THROW((void)g.evaluate({Q(1), Q(1)}), DivByZero);
  EXPECT_EQ(g.evaluate({Q(0), Q(1)}), Q(-1));
}

TEST(AlphaRat, RingAxioms) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    AlphaRat x = random_rat(rng), y = random_rat(rng), z = random_rat(rng);
    EXPECT_EQ((x + y) + z, x + (y + z));
    EXPECT_EQ((x * y) * z, x * (y * z));
    EXPECT_EQ(x * (y + z), x * y + x * z);
    EXPECT_EQ(x + y, y + x);
    EXPECT_EQ(x * y, y * x);
    EXPECT_TRUE((x - x).is_zero());
    if (!y.is_zero()) {
      EXPECT_EQ((x * y) / y, x);
    }
  }
}

TEST(AlphaRat, AgreesWithEvaluation) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    AlphaRat x = random_rat(rng), y = random_rat(rng);
    auto pt = random_point(3, static_cast<std::uint64_t>(trial));
    try {
      BigRational vx = x.evaluate(pt), vy = y.evaluate(pt);
      EXPECT_EQ((x * y).evaluate(pt), vx * vy);
      EXPECT_EQ((x - y).evaluate(pt), vx - vy);
    } catch (const DivByZero &) {
    }
  }
}

TEST(LinearForm, ScaleAwareEquality) {
  auto w = diff01();
  auto w2 = diff01(Q(2));
  EXPECT_TRUE(w.same_direction(w2));
  EXPECT_FALSE(w == w2);
  EXPECT_EQ(LinearForm::from_poly((a(0) - a(1)) * Q(2)), w2);
  EXPECT_EQ(LinearForm::from_poly(a(1) * Q(-2) + a(0) * Q(2)), w2);
  EXPECT_THROW(LinearForm::from_poly(a(0) + 1), ShapeMismatch);
  EXPECT_THROW(LinearForm::from_poly(a(0) * a(1)), ShapeMismatch);
}

TEST(Laurent, Examples) {
  auto w = diff01();
  AlphaPoly wp = w.to_poly();
  ZRat f1 = ZRat::inverse_linear(wp, 1);
  EXPECT_EQ(laurent_at(f1, w, -1), AlphaRat(1));
  EXPECT_EQ(laurent_at(f1, w, -2), AlphaRat(0));

  ZRat f2 = f1 * f1 * ZRat::z_power(-1);
  EXPECT_EQ(laurent_at(f2, w, -2), AlphaRat(1) / AlphaRat(wp));

  EXPECT_EQ(laurent_at(ZRat::z(), w, 0), AlphaRat(wp));
  EXPECT_EQ(laurent_at(ZRat::z(), w, 1), AlphaRat(-1));
}

TEST(Laurent, DegeneratePole) {
  // z^2 - a0^2 passed as an unsplit denominator
  ZRat f = ZRat::from_parts({AlphaRat(1)}, {}, {AlphaRat(a(0) * a(0) * Q(-1)),
                                                AlphaRat(0), AlphaRat(1)});
  EXPECT_THROW(laurent_at(f, LinearForm::from_poly(a(0)), -1), DegeneratePole);
}

TEST(Laurent, ResubstitutionReconstructsPrincipalPart) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 30; ++trial) {
    ZRat f = random_zrat(rng);
    for (int s = 1; s <= 3; ++s) {
      LinearForm w = diff01(Q(1, s));
      int n = pole_order(f, w);
      int top = 2;
      auto coeffs = laurent_coefficients(f, w, -n - 1, top);
      EXPECT_TRUE(coeffs.front().is_zero());
      ZRat g = f;
      for (int k = -n; k <= top; ++k)
        g -= ZRat(coeffs[static_cast<std::size_t>(k + n + 1)]) * power_of_u(w, k);
      EXPECT_LE(pole_order(g, w), 0);
      for (int k = 0; k <= top; ++k)
        EXPECT_TRUE(laurent_at(g, w, k).is_zero());
      for (int k = -n - 3; k < -n; ++k)
        EXPECT_TRUE(laurent_at(f, w, k).is_zero());
    }
  }
}

TEST(Laurent, MatchesNumericTaylorAtSpecializedPoint) {
  // f = 1 / ((w - z)^2 (c - z)) with c = 2 a0: expansion coefficients are
  // 1/(c - w)^(k+3) up to sign-free form since f = u^-2 / ((c - w) + u).
  auto w = diff01();
  AlphaPoly c = a(0) * Q(2);
  ZRat f = ZRat::inverse_linear(w.to_poly(), 1);
  f = f * f * ZRat::inverse_linear(c, 1);
  AlphaRat gap = AlphaRat(c - w.to_poly());
  for (int k = -2; k <= 3; ++k) {
    AlphaRat expect = AlphaRat((k % 2) ? -1 : 1) * gap.pow(-(k + 3));
    EXPECT_EQ(laurent_at(f, w, k), expect) << k;
  }
}

TEST(ZRat, RingAxioms) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 25; ++trial) {
    ZRat x = random_zrat(rng), y = random_zrat(rng), z = random_zrat(rng);
    EXPECT_EQ((x + y) + z, x + (y + z));
    EXPECT_EQ(x * (y + z), x * y + x * z);
    EXPECT_EQ(x * y, y * x);
    EXPECT_TRUE((x - x).is_zero());
    EXPECT_EQ((x * y) / y, x);
  }
}

TEST(ZRat, EvaluationHomomorphism) {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 25; ++trial) {
    ZRat x = random_zrat(rng), y = random_zrat(rng);
    auto s = random_specialize(x * y, 3, static_cast<std::uint64_t>(trial));
    EXPECT_EQ(s.value, x.evaluate(s.alpha, s.z) * y.evaluate(s.alpha, s.z));
  }
}

TEST(PoleSupport, Examples) {
  auto w = diff01();
  ZRat f = ZRat::z_power(-1) * ZRat::inverse_linear(w.to_poly(), 1);
  auto ps = pole_support(f);
  EXPECT_EQ(ps.order_at_zero, 1);
  ASSERT_EQ(ps.poles.size(), 1u);
  EXPECT_EQ(ps.poles[0].first, w);
  EXPECT_EQ(ps.poles[0].second, 1);
  EXPECT_EQ(ps.degree_at_infinity, -2);

  auto none = pole_support(ZRat(a(0)));
  EXPECT_TRUE(none.poles.empty());
  EXPECT_EQ(none.order_at_zero, 0);

  ZRat g = ZRat::inverse_linear(w.to_poly(), 1);
  auto sq = pole_support(g * g);
  ASSERT_EQ(sq.poles.size(), 1u);
  EXPECT_EQ(sq.poles[0].second, 2);
}

TEST(PoleSupport, OrdersSumToDenominatorDegree) {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 30; ++trial) {
    ZRat f = random_zrat(rng);
    auto ps = pole_support(f);
    int total = ps.order_at_zero;
    for (const auto &[w, m] : ps.poles)
      total += m;
    EXPECT_EQ(total, f.denominator_degree());
  }
}

TEST(PoleSupport, IrregularDenominatorIsReported) {
  ZRat f = ZRat::from_parts({AlphaRat(1)}, {},
                            {AlphaRat(a(0) * a(1)), AlphaRat(0), AlphaRat(1)});
  EXPECT_THROW(pole_support(f), NonLinearPole);
}

TEST(Specialize, Examples) {
  EXPECT_EQ(specialize(AlphaRat(a(0) - a(1)), {Q(0), Q(1)}), Q(-1));
  AlphaRat g = AlphaRat(1) / AlphaRat(a(0) - a(1));
  EXPECT_THROW(specialize(g, {Q(1), Q(1)}), DivByZero);
  EXPECT_THROW(random_specialize(g, 2, 1, 0), SpecializationFailed);
  auto s = random_specialize(g, 2, 1);
  EXPECT_NE(s.alpha[0], s.alpha[1]);
  EXPECT_EQ(s.value, 1 / BigRational(s.alpha[0] - s.alpha[1]));
}

TEST(Specialize, PointsAreDistinctAndDeterministic) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    auto p = random_point(5, seed);
    EXPECT_EQ(p, random_point(5, seed));
    std::set<BigRational> s(p.begin(), p.end());
    EXPECT_EQ(s.size(), 5u);
  }
}
