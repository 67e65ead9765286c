#include <adamsops/fgl.hpp>

#include <gtest/gtest.h>

using namespace adamsops;

namespace {

GradedPoly m(std::size_t i, long long c = 1) { return GradedPoly::generator(i, BigRational(c)); }

// The one-variable series f(x) as a MultiSeries in a single variable.
MultiSeries as_multi(const GradedSeries& f) { return substitute(f, MultiSeries::variable(1, 0, f.order())); }

GradedSeries from_multi(const MultiSeries& s) {
  GradedSeries out(s.order());
  for (const auto& [e, c] : s.terms()) out[e[0]] = c;
  return out;
}

}  // namespace

TEST(GradedPoly, ArithmeticAndGrading) {
  const auto p = m(1) * m(1) - BigRational(3) * m(2);
  EXPECT_TRUE(p.is_homogeneous(2));
  EXPECT_FALSE((p + m(1)).is_homogeneous(2));
  EXPECT_EQ(p.degree(), 2);
  EXPECT_EQ((p - p).is_zero(), true);
  EXPECT_EQ(m(1).pow(3), m(1) * m(1) * m(1));
  EXPECT_EQ(p.evaluate([](std::size_t i) { return BigRational(static_cast<long long>(i)); }), BigRational(-5));
  EXPECT_EQ((m(3) * m(1)).truncated(3), GradedPoly());
}

TEST(KPolynomial, EvaluateAndMultiply) {
  const auto a = KPolynomial::monomial(0, m(1)) - KPolynomial::monomial(1, m(1));
  const auto sq = a * a;
  EXPECT_EQ(sq.kdegree(), 2u);
  EXPECT_EQ(sq.at(BigRational(1)), GradedPoly());
  EXPECT_EQ(sq.at(BigRational(3)), BigRational(4) * m(1) * m(1));
}

TEST(Series, LogSeriesDefinition) {
  const FglEngine engine(FglConfig{4, 3});
  const auto log = engine.log_series(3);
  EXPECT_EQ(log[1], GradedPoly(1));
  EXPECT_EQ(log[2], m(1));
  EXPECT_EQ(log[3], m(2));
  EXPECT_EQ(engine.log_series(2).order(), 2u);
}

TEST(Series, ExpCoefficientsByHandInversion) {
  const FglEngine engine;
  const auto exp = engine.exp_series(4);
  EXPECT_EQ(exp[1], GradedPoly(1));
  EXPECT_EQ(exp[2], m(1, -1));
  EXPECT_EQ(exp[3], BigRational(2) * m(1) * m(1) - m(2));
  // y^4: -5 m1^3 + 5 m1 m2 - m3.
  EXPECT_EQ(exp[4], BigRational(-5) * m(1).pow(3) + BigRational(5) * m(1) * m(2) - m(3));
}

TEST(Series, InversePairToOrderTwelve) {
  for (std::size_t t = 1; t <= 12; ++t) {
    const FglEngine engine(FglConfig{t, t - 1});
    const auto id = GradedSeries::identity(t);
    EXPECT_EQ(compose(engine.exp_series(t), engine.log_series(t)), id) << t;
    EXPECT_EQ(compose(engine.log_series(t), engine.exp_series(t)), id) << t;
  }
}

TEST(Series, CoefficientsAreHomogeneous) {
  const FglEngine engine(FglConfig{10, 9});
  const auto exp = engine.exp_series(10);
  const auto orient = engine.adams_orientation_series(10);
  for (std::size_t i = 1; i <= 10; ++i) {
    EXPECT_TRUE(exp[i].is_homogeneous(static_cast<int>(i) - 1)) << i;
    for (const auto& c : orient[i].coeffs()) EXPECT_TRUE(c.is_zero() || c.is_homogeneous(static_cast<int>(i) - 1));
  }
}

TEST(Law, LowCoefficients) {
  const FglEngine engine(FglConfig{6, 5});
  EXPECT_EQ(engine.fgl_coeff(1, 0), GradedPoly(1));
  EXPECT_EQ(engine.fgl_coeff(0, 1), GradedPoly(1));
  EXPECT_EQ(engine.fgl_coeff(1, 1), m(1, -2));
  const auto a21 = engine.fgl_coeff(2, 1);
  EXPECT_EQ(a21, engine.fgl_coeff(1, 2));
  EXPECT_TRUE(a21.is_homogeneous(2));
  EXPECT_EQ(a21, BigRational(4) * m(1) * m(1) - BigRational(3) * m(2));
  for (std::size_t i = 2; i <= 6; ++i) EXPECT_TRUE(engine.fgl_coeff(i, 0).is_zero());
}

TEST(Law, SymmetricUnitalAssociative) {
  const FglEngine engine(FglConfig{6, 5});
  const auto f = engine.fgl_series(6);
  for (const auto& [e, c] : f.terms()) {
    EXPECT_EQ(f.coeff({e[1], e[0]}), c);
    EXPECT_TRUE(c.is_homogeneous(e[0] + e[1] - 1));
  }
  const auto s = MultiSeries::variable(3, 0, 6);
  const auto t = MultiSeries::variable(3, 1, 6);
  const auto u = MultiSeries::variable(3, 2, 6);
  EXPECT_EQ(compose_law(f, compose_law(f, s, t), u), compose_law(f, s, compose_law(f, t, u)));
  EXPECT_EQ(compose_law(f, s, MultiSeries(3, 6)), s);
}

TEST(Law, MultiplicativeSpecialization) {
  // Under m_i -> (-1)^i/(i+1) the universal law becomes s + t + st.
  const FglEngine engine(FglConfig{7, 6});
  const auto f = engine.fgl_series(7);
  for (const auto& [e, c] : f.terms()) {
    const BigRational v = c.evaluate(multiplicative_log_coefficient);
    const bool linear = e[0] + e[1] == 1;
    const bool cross = e[0] == 1 && e[1] == 1;
    EXPECT_EQ(v, (linear || cross) ? BigRational(1) : BigRational(0));
  }
}

TEST(KSeries, HomomorphismAtIntegers) {
  constexpr std::size_t T = 6;
  const FglEngine engine(FglConfig{T, T - 1});
  const auto law = engine.fgl_series(T);
  for (int k = -3; k <= 3; ++k) {
    for (int l = -3; l <= 3; ++l) {
      const auto kl = engine.k_series(BigRational(k * l), T);
      EXPECT_EQ(compose(engine.k_series(k, T), engine.k_series(l, T)), kl) << k << " " << l;
      const auto sum = compose_law(law, as_multi(engine.k_series(k, T)), as_multi(engine.k_series(l, T)));
      EXPECT_EQ(from_multi(sum), engine.k_series(BigRational(k + l), T)) << k << " " << l;
    }
  }
  EXPECT_EQ(engine.k_series(1, T), GradedSeries::identity(T));
  EXPECT_TRUE(engine.k_series(0, T).coeffs()[1].is_zero());
}

TEST(Orientation, KnownCoefficients) {
  const FglEngine engine(FglConfig{8, 7});
  const auto b = engine.adams_orientation_series(8);
  EXPECT_EQ(b[1], KPolynomial::monomial(0));
  EXPECT_EQ(b[2], KPolynomial::monomial(0, m(1)) - KPolynomial::monomial(1, m(1)));
  for (std::size_t i = 2; i <= 8; ++i) EXPECT_TRUE(b[i].at(BigRational(1)).is_zero()) << i;
}

TEST(Orientation, SpecializesToScaledKSeries) {
  constexpr std::size_t T = 7;
  const FglEngine engine(FglConfig{T, T - 1});
  const auto b = engine.adams_orientation_series(T);
  for (int k = -3; k <= 3; ++k) {
    if (k == 0) continue;
    const auto ks = engine.k_series(k, T);
    for (std::size_t i = 1; i <= T; ++i) EXPECT_EQ(b[i].at(BigRational(k)), BigRational(1) / k * ks[i]) << k << " " << i;
  }
}

TEST(Engine, CapacityErrors) {
  EXPECT_THROW(FglEngine(FglConfig{30, 29}), CapacityError);
  EXPECT_THROW(FglEngine(FglConfig{6, 3}), CapacityError);
  const FglEngine engine(FglConfig{4, 3});
  EXPECT_THROW(engine.log_series(5), CapacityError);
  EXPECT_THROW(engine.fgl_coeff(3, 2), CapacityError);
  EXPECT_THROW(engine.adams_orientation_series(5), CapacityError);
}

TEST(Series, CompositionalInverseRejectsBadInput) {
  GradedSeries f(3);
  f[2] = GradedPoly(1);
  EXPECT_THROW(compositional_inverse(f), DomainError);
}
