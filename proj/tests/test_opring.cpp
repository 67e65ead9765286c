#include <adamsops/opring.hpp>
#include <adamsops/verify.hpp>

#include <gtest/gtest.h>

#include <map>
#include <vector>

using namespace adamsops;

namespace {

RationalVector ints(std::initializer_list<long long> v) {
  RationalVector r;
  for (auto x : v) r.emplace_back(x);
  return r;
}

// sigma_n = sum_k (-1)^{n-k} C(n,k) Psi^k, expanded directly on eigenvalues.
LambdaSeq sigma_by_expansion(unsigned n, std::size_t truncation) {
  auto lam = LambdaSeq::zeros(truncation);
  for (unsigned k = 0; k <= n; ++k) {
    BigRational c(binomial(n, k));
    if ((n - k) % 2) c = -c;
    for (std::size_t m = 0; m <= truncation; ++m) lam[m] += c * rpow(BigRational(k), static_cast<unsigned>(m));
  }
  return lam;
}

// [s^i t^j] (s + t + st)^n by explicit trinomial expansion.
BigInt trinomial_coefficient(unsigned n, unsigned i, unsigned j) {
  BigInt total = 0;
  for (unsigned c = 0; c <= n; ++c) {   // copies of st
    if (c > i || c > j) break;
    unsigned a = i - c, b = j - c;      // copies of s and t
    if (a + b + c != n) continue;
    total += factorial(n) / (factorial(a) * factorial(b) * factorial(c));
  }
  return total;
}

}  // namespace

TEST(Transforms, SigmaToLambdaExamples) {
  EXPECT_EQ(sigma_to_lambda(SigmaCoeffs(ints({1, 0, 0, 0}))), LambdaSeq(ints({1, 0, 0, 0})));
  EXPECT_EQ(sigma_to_lambda(SigmaCoeffs(ints({1, 2, 1, 0, 0, 0}))), LambdaSeq(ints({1, 2, 4, 8, 16, 32})));
  for (std::size_t m = 0; m <= 10; ++m) {
    const auto lam = sigma_to_lambda(sigma_basis(m, 10));
    for (std::size_t j = 0; j < m; ++j) EXPECT_EQ(lam[j], 0);
    EXPECT_EQ(lam[m], BigRational(factorial(static_cast<unsigned>(m))));
  }
}

TEST(Transforms, LambdaToSigmaExamples) {
  EXPECT_EQ(lambda_to_sigma(psi_lambda(2, 4)), SigmaCoeffs(ints({1, 2, 1, 0, 0})));
  EXPECT_EQ(lambda_to_sigma(LambdaSeq(ints({1, 1, 1, 1, 1}))), SigmaCoeffs(ints({1, 1, 0, 0, 0})));
  EXPECT_EQ(lambda_to_sigma(LambdaSeq(ints({1, 0, 0}))), SigmaCoeffs(ints({1, 0, 0})));
}

TEST(Transforms, SigmaBasisMatchesAdamsExpansion) {
  for (unsigned n = 0; n <= 12; ++n) EXPECT_EQ(sigma_lambda(n, 14), sigma_by_expansion(n, 14)) << n;
}

TEST(Transforms, RoundTripRandom) {
  detail::Rng rng(101);
  for (int trial = 0; trial < 100; ++trial) {
    const auto n = static_cast<std::size_t>(rng.integer(0, 30));
    SigmaCoeffs a(rng.rationals(n + 1, 100, 30));
    LambdaSeq lam(rng.rationals(n + 1, 100, 30));
    EXPECT_EQ(lambda_to_sigma(sigma_to_lambda(a)), a);
    EXPECT_EQ(sigma_to_lambda(lambda_to_sigma(lam)), lam);
  }
}

TEST(Transforms, TriangularWithExpectedDiagonal) {
  constexpr std::size_t N = 12;
  for (std::size_t n = 0; n <= N; ++n) {
    const auto col = sigma_to_lambda(sigma_basis(n, N));
    for (std::size_t m = 0; m < n; ++m) EXPECT_EQ(col[m], 0);
    EXPECT_EQ(col[n], BigRational(factorial(static_cast<unsigned>(n))));
    const auto form = clarke_form(n);
    ASSERT_EQ(form.size(), n + 1);
    EXPECT_EQ(form[n], BigRational(BigInt(1), factorial(static_cast<unsigned>(n))));
  }
}

TEST(Transforms, ResizeZeroFillsSigmaCoordinates) {
  const auto lam = psi_lambda(3, 4);
  const auto longer = resize(lam, 8);
  EXPECT_EQ(longer, psi_lambda(3, 8));
  EXPECT_EQ(resize(longer, 4), lam);
  // A sequence that is not a finite Adams combination extends by its sigma coordinates.
  const LambdaSeq id(ints({0, 1, 2, 3}));
  EXPECT_EQ(lambda_to_sigma(resize(id, 6)), resize(lambda_to_sigma(id), 6));
}

TEST(ClarkeForms, PaperTable) {
  EXPECT_EQ(format_form(clarke_form(1)), "l1");
  EXPECT_EQ(format_form(clarke_form(2)), "(l2 - l1)/2");
  EXPECT_EQ(format_form(clarke_form(3)), "(l3 - 3*l2 + 2*l1)/6");
  EXPECT_EQ(format_form(clarke_form(4)), "(l4 - 6*l3 + 11*l2 - 6*l1)/24");
  EXPECT_EQ(format_form(clarke_form(0)), "l0");
}

TEST(Congruences, Examples) {
  EXPECT_TRUE(check_congruences(psi_lambda(2, 10)).verdict);
  const auto cert = check_congruences(LambdaSeq(ints({0, 1, 2, 3, 4})));
  EXPECT_FALSE(cert.verdict);
  ASSERT_TRUE(cert.first_failure().has_value());
  EXPECT_EQ(*cert.first_failure(), 2u);
  EXPECT_EQ(cert.records[2].value, BigRational(1, 2));
  EXPECT_TRUE(check_congruences(LambdaSeq(ints({7, 0, 0, 0}))).verdict);
  EXPECT_TRUE(check_congruences(LambdaSeq(ints({0}))).verdict);
}

TEST(Congruences, VerdictIsConjunctionOfRecords) {
  detail::Rng rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    const auto cert = check_congruences(LambdaSeq(rng.rationals(9, 20, 3)));
    bool all = true;
    for (const auto& r : cert.records) all = all && r.pass;
    EXPECT_EQ(cert.verdict, all);
  }
}

TEST(Congruences, MembershipMatchesIntegralSigmaCoordinates) {
  detail::Rng rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    LambdaSeq lam(rng.rationals(8, 30, 4));
    const auto cert = check_congruences(lam);
    const auto a = lambda_to_sigma(lam);
    for (std::size_t n = 0; n < a.size(); ++n) EXPECT_EQ(cert.records[n].value, a[n]);
    EXPECT_EQ(cert.verdict, a.all_integral());
  }
}

TEST(Congruences, AdamsOperationsPass) {
  for (std::int64_t k = -6; k <= 6; ++k) EXPECT_TRUE(check_congruences(psi_lambda(k, 20)).verdict) << k;
}

TEST(Product, Examples) {
  constexpr std::size_t N = 10;
  EXPECT_EQ(multiply(psi_lambda(2, N), psi_lambda(3, N)), psi_lambda(6, N));
  const auto lam = sigma_lambda(3, N);
  EXPECT_EQ(multiply(lam, psi_lambda(1, N)), lam);
  EXPECT_EQ(multiply(sigma_lambda(1, N), sigma_lambda(1, N)), sigma_lambda(1, N));
  EXPECT_THROW(multiply(psi_lambda(2, 3), psi_lambda(2, 4)), DomainError);
}

TEST(Product, RingClosureOnRandomOperations) {
  detail::Rng rng(13);
  for (int trial = 0; trial < 100; ++trial) {
    const auto x = sigma_to_lambda(SigmaCoeffs(rng.integers(11, 50)));
    const auto y = sigma_to_lambda(SigmaCoeffs(rng.integers(11, 50)));
    ASSERT_TRUE(check_congruences(x).verdict);
    EXPECT_TRUE(check_congruences(multiply(x, y)).verdict);
  }
}

TEST(Product, SigmaTableMatchesPointwiseRoute) {
  constexpr std::size_t N = 9;
  const auto table = sigma_product_table(N);
  for (std::size_t i = 0; i <= N; ++i) {
    for (std::size_t j = 0; j <= N; ++j) {
      const auto direct = lambda_to_sigma(multiply(sigma_lambda(i, N), sigma_lambda(j, N)));
      for (std::size_t n = 0; n <= N; ++n) EXPECT_EQ(BigRational(table[i][j][n]), direct[n]) << i << j << n;
    }
  }
  // sigma_1 is idempotent; sigma_0 sigma_4 = 0.
  EXPECT_EQ(multiply(sigma_basis(1, N), sigma_basis(1, N)), sigma_basis(1, N));
  EXPECT_EQ(multiply(sigma_basis(0, N), sigma_basis(4, N)), SigmaCoeffs::zeros(N));
}

TEST(Coproduct, SmallCases) {
  const auto d0 = coproduct_sigma(0);
  EXPECT_EQ(d0[0][0], 1);
  const auto d1 = coproduct_sigma(1);
  EXPECT_EQ(d1[0][0], 0);
  EXPECT_EQ(d1[0][1], 1);
  EXPECT_EQ(d1[1][0], 1);
  EXPECT_EQ(d1[1][1], 1);
}

TEST(Coproduct, MatchesMultiplicativeLawExpansion) {
  for (unsigned n = 0; n <= 10; ++n) {
    const auto d = coproduct_sigma(n);
    for (unsigned i = 0; i <= n; ++i) {
      for (unsigned j = 0; j <= n; ++j) EXPECT_EQ(d[i][j], trinomial_coefficient(n, i, j)) << n << i << j;
    }
  }
}

TEST(Coproduct, MatchesDoubleStirlingTransform) {
  // mu_{m,m'} = sum_k (-1)^{n+k} C(n,k) k^m k^m' is the eigenvalue array of
  // Delta sigma_n; transforming both indices gives d_ij.
  for (unsigned n = 0; n <= 6; ++n) {
    const unsigned N = n;
    std::vector<std::vector<BigRational>> mu(N + 1, std::vector<BigRational>(N + 1));
    for (unsigned m = 0; m <= N; ++m) {
      for (unsigned mp = 0; mp <= N; ++mp) {
        BigInt s = 0;
        for (unsigned k = 0; k <= n; ++k) {
          BigInt t = binomial(n, k) * ipow(BigInt(k), m + mp);
          s += ((n + k) % 2 == 0) ? t : BigInt(-t);
        }
        mu[m][mp] = BigRational(s);
      }
    }
    const auto d = coproduct_sigma(n);
    for (unsigned i = 0; i <= N; ++i) {
      for (unsigned j = 0; j <= N; ++j) {
        BigRational v = 0;
        const auto ci = clarke_form(i), cj = clarke_form(j);
        for (unsigned m = 0; m <= i; ++m) {
          for (unsigned mp = 0; mp <= j; ++mp) v += ci[m] * cj[mp] * mu[m][mp];
        }
        EXPECT_EQ(v, BigRational(d[i][j])) << n << i << j;
      }
    }
  }
}

TEST(Coproduct, AdamsOperationsAreGroupLike) {
  // Psi^k = sum_n C(k,n) sigma_n, so Delta Psi^k = Psi^k (x) Psi^k reads
  // sum_n C(k,n) d^(n)_ij = C(k,i) C(k,j).
  constexpr unsigned top = 5;
  std::vector<std::vector<std::vector<BigInt>>> d;
  for (unsigned n = 0; n <= 2 * top; ++n) d.push_back(coproduct_sigma(n));
  for (std::int64_t k = 0; k <= 6; ++k) {
    for (unsigned i = 0; i <= top; ++i) {
      for (unsigned j = 0; j <= top; ++j) {
        BigInt lhs = 0;
        for (unsigned n = 0; n <= 2 * top; ++n) {
          if (i <= n && j <= n) lhs += binomial(static_cast<unsigned>(k), n) * d[n][i][j];
        }
        EXPECT_EQ(lhs, binomial(static_cast<unsigned>(k), i) * binomial(static_cast<unsigned>(k), j)) << k << " " << i << " " << j;
      }
    }
  }
}

TEST(Coproduct, Counit) {
  // The counit takes sigma_j to delta_j0 (evaluation on pi_0).
  for (unsigned n = 0; n <= 10; ++n) {
    const auto d = coproduct_sigma(n);
    for (unsigned i = 0; i <= n; ++i) {
      EXPECT_EQ(d[i][0], i == n ? 1 : 0);
      EXPECT_EQ(d[0][i], i == n ? 1 : 0);
    }
  }
}

TEST(Homotopy, ActionExamples) {
  EXPECT_EQ(act_on_homotopy(psi_lambda(3, 4), 2, 1), 9);
  EXPECT_EQ(act_on_homotopy(sigma_lambda(0, 3), 0, 5), 5);
  EXPECT_EQ(act_on_homotopy(sigma_lambda(2, 5), 4, 1), 14);
  EXPECT_THROW(act_on_homotopy(psi_lambda(3, 2), 3, 1), DomainError);
}

TEST(Sequences, ArithmeticAndErrors) {
  const auto a = psi_lambda(2, 3), b = psi_lambda(3, 3);
  EXPECT_EQ(a + b, LambdaSeq(ints({2, 5, 13, 35})));
  EXPECT_EQ(b - a, LambdaSeq(ints({0, 1, 5, 19})));
  EXPECT_EQ(BigRational(2) * a, LambdaSeq(ints({2, 4, 8, 16})));
  EXPECT_THROW(a + psi_lambda(2, 4), DomainError);
  EXPECT_THROW(LambdaSeq(RationalVector{}), DomainError);
}

TEST(AdamsBasis, SigmaExpansionCoefficients) {
  const auto c = sigma_in_adams_basis(2);
  // sigma_2 = Psi^2 - 2 Psi^1 + Psi^0.
  ASSERT_EQ(c.size(), 3u);
  EXPECT_EQ(c[0], 1);
  EXPECT_EQ(c[1], -2);
  EXPECT_EQ(c[2], 1);
}
