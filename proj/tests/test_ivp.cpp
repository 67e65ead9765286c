#include <adamsops/ivp.hpp>
#include <adamsops/verify.hpp>

#include <gtest/gtest.h>

using namespace adamsops;

namespace {

RationalVector ints(std::initializer_list<long long> v) {
  RationalVector r;
  for (auto x : v) r.emplace_back(x);
  return r;
}

// Evaluates sum_i p_i w^i directly.
BigRational eval_power(const RationalVector& p, const BigRational& w) {
  BigRational acc = 0;
  for (std::size_t i = p.size(); i-- > 0;) acc = acc * w + p[i];
  return acc;
}

bool brute_force_integer_valued(const IvpPoly& f) {
  for (int w = -20; w <= 20; ++w) {
    if (!is_integer(f(BigRational(w)))) return false;
  }
  return true;
}

}  // namespace

TEST(IvpPoly, FromPowerBasisExamples) {
  EXPECT_EQ(IvpPoly::from_power_basis(ints({0, 0, 1})).binom_coeffs(), ints({0, 1, 2}));
  EXPECT_EQ(IvpPoly::from_power_basis(ints({1})).binom_coeffs(), ints({1}));
  EXPECT_EQ(IvpPoly::from_power_basis(ints({0, 0, 0, 1})).binom_coeffs(), ints({0, 1, 6, 6}));
  EXPECT_TRUE(IvpPoly::from_power_basis(ints({0})).is_zero());
}

TEST(IvpPoly, BasisChangeIsInvertible) {
  detail::Rng rng(21);
  for (int trial = 0; trial < 100; ++trial) {
    auto p = rng.rationals(static_cast<std::size_t>(rng.integer(1, 10)), 30, 10);
    const auto f = IvpPoly::from_power_basis(p);
    while (!p.empty() && p.back() == 0) p.pop_back();
    EXPECT_EQ(f.to_power_basis(), p);
    for (int w = -5; w <= 5; ++w) EXPECT_EQ(f(BigRational(w)), eval_power(p, BigRational(w)));
  }
}

TEST(IvpPoly, BinomialBasisEvaluation) {
  for (std::size_t n = 0; n <= 8; ++n) {
    const auto f = IvpPoly::binom(n);
    EXPECT_EQ(f.degree(), n);
    for (int w = -6; w <= 10; ++w) EXPECT_EQ(f(BigRational(w)), binomial_value(BigRational(w), static_cast<unsigned>(n)));
  }
  EXPECT_EQ(IvpPoly::binom(2)(BigRational(1, 2)), BigRational(-1, 8));
}

TEST(IvpPoly, IntegerValuedExamples) {
  EXPECT_TRUE(is_integer_valued(IvpPoly::from_power_basis({0, BigRational(-1, 2), BigRational(1, 2)})));
  EXPECT_FALSE(is_integer_valued(IvpPoly::from_power_basis({0, BigRational(1, 2)})));
  const auto cubic = IvpPoly::from_power_basis({0, BigRational(-1, 6), 0, BigRational(1, 6)});
  EXPECT_TRUE(is_integer_valued(cubic));
  EXPECT_EQ(cubic.binom_coeffs(), ints({0, 0, 1, 1}));
  EXPECT_TRUE(brute_force_integer_valued(cubic));
  EXPECT_THROW(assert_integer_valued(IvpPoly::from_power_basis({0, BigRational(1, 2)})), DomainError);
  EXPECT_NO_THROW(assert_integer_valued(cubic));
}

TEST(IvpPoly, FermatQuotientsAreIntegerValued) {
  for (long long p : {2, 3, 5, 7}) {
    RationalVector power(static_cast<std::size_t>(p) + 1, BigRational(0));
    power[1] = BigRational(-1, p);
    power[static_cast<std::size_t>(p)] = BigRational(1, p);
    EXPECT_TRUE(is_integer_valued(IvpPoly::from_power_basis(power))) << p;
  }
}

TEST(IvpPoly, CriterionAgreesWithBruteForce) {
  detail::Rng rng(23);
  int integer_valued = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const auto deg = static_cast<std::size_t>(rng.integer(0, 8));
    RationalVector coords(deg + 1);
    for (auto& c : coords) c = make_rational(BigInt(rng.integer(-30, 30)), BigInt(rng.integer(1, 3) == 1 ? 1 : rng.integer(1, 12)));
    const auto f = IvpPoly::from_power_basis(IvpPoly(coords).to_power_basis());
    const bool brute = brute_force_integer_valued(f);
    EXPECT_EQ(is_integer_valued(f), brute);
    integer_valued += brute;
  }
  EXPECT_GT(integer_valued, 0);
  EXPECT_LT(integer_valued, 300);
}

TEST(IvpPoly, ProductOfIntegerValuedIsIntegerValued) {
  detail::Rng rng(29);
  for (int trial = 0; trial < 100; ++trial) {
    IvpPoly f(rng.integers(static_cast<std::size_t>(rng.integer(1, 5)), 10));
    IvpPoly g(rng.integers(static_cast<std::size_t>(rng.integer(1, 5)), 10));
    const auto fg = f * g;
    EXPECT_TRUE(is_integer_valued(fg));
    for (int w = -4; w <= 4; ++w) EXPECT_EQ(fg(BigRational(w)), f(BigRational(w)) * g(BigRational(w)));
  }
}

TEST(IvpPoly, ArithmeticMatchesEvaluation) {
  const auto w = IvpPoly::variable();
  const auto f = w * w - w;
  EXPECT_EQ(f.binom_coeffs(), ints({0, 0, 2}));
  const auto g = BigRational(1, 2) * f + IvpPoly::constant(3);
  for (int x = -3; x <= 3; ++x) EXPECT_EQ(g(BigRational(x)), BigRational(x * x - x, 2) + 3);
  EXPECT_TRUE((f - f).is_zero());
}

TEST(Pairing, Examples) {
  const auto w2 = IvpPoly::from_power_basis(ints({0, 0, 1}));
  EXPECT_EQ(pairing(psi_sigma(3, 4), w2), 9);
  for (std::size_t n = 0; n <= 5; ++n) {
    for (std::size_t m = 0; m <= 5; ++m) EXPECT_EQ(pairing(sigma_basis(n, 5), IvpPoly::binom(m)), n == m ? 1 : 0);
  }
  EXPECT_EQ(pairing(sigma_basis(2, 4), w2), 2);
  EXPECT_THROW(pairing(psi_sigma(3, 1), w2), DomainError);
}

TEST(Pairing, AdamsOperationsEvaluate) {
  detail::Rng rng(31);
  for (int trial = 0; trial < 50; ++trial) {
    auto p = rng.rationals(static_cast<std::size_t>(rng.integer(1, 7)), 20, 6);
    const auto f = IvpPoly::from_power_basis(p);
    for (std::int64_t k = -4; k <= 4; ++k) EXPECT_EQ(pairing(psi_sigma(k, 8), f), f(BigRational(k)));
  }
}

TEST(Pairing, MatchesEigenvalues) {
  detail::Rng rng(37);
  for (int trial = 0; trial < 40; ++trial) {
    SigmaCoeffs a(rng.rationals(9, 20, 5));
    const auto lam = sigma_to_lambda(a);
    for (std::size_t h = 0; h <= 8; ++h) {
      RationalVector power(h + 1, BigRational(0));
      power[h] = 1;
      EXPECT_EQ(pairing(a, IvpPoly::from_power_basis(power)), lam[h]);
    }
  }
}

TEST(Pairing, IntegralOnIntegralInputs) {
  detail::Rng rng(41);
  for (int trial = 0; trial < 50; ++trial) {
    SigmaCoeffs a(rng.integers(7, 20));
    IvpPoly f(rng.integers(7, 20));
    EXPECT_TRUE(is_integer(pairing(a, f)));
  }
}

TEST(PiLambda, Examples) {
  EXPECT_EQ(pi_lambda(0, 3, psi_lambda(2, 4)), 8);
  const LambdaSeq lam(ints({5, 6, 7}));
  EXPECT_EQ(pi_lambda(5, 0, lam), 5);
  EXPECT_EQ(pi_lambda(-1, 1, sigma_lambda(1, 3)), 1);
  EXPECT_THROW(pi_lambda(0, 5, lam), DomainError);
}
