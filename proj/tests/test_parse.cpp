#include <adamsops/parse.hpp>

#include <gtest/gtest.h>

using namespace adamsops;

namespace {

RationalVector ints(std::initializer_list<long long> v) {
  RationalVector r;
  for (auto x : v) r.emplace_back(x);
  return r;
}

OperationParseOptions at_truncation(std::size_t n) {
  OperationParseOptions o;
  o.truncation = n;
  return o;
}

}  // namespace

TEST(ParseOperation, AdamsAndSigma) {
  EXPECT_EQ(parse_operation("psi(2)", at_truncation(5)), psi_lambda(2, 5));
  EXPECT_EQ(parse_operation("psi(-3)", at_truncation(4)), psi_lambda(-3, 4));
  EXPECT_EQ(parse_operation("sigma(2)", at_truncation(6)), sigma_lambda(2, 6));
  EXPECT_EQ(parse_operation("psi(2)").truncation(), 10u);
}

TEST(ParseOperation, Arithmetic) {
  EXPECT_EQ(parse_operation("psi(2)*psi(3)", at_truncation(6)), psi_lambda(6, 6));
  EXPECT_EQ(parse_operation("3*sigma(1) + psi(-1)", at_truncation(4)),
            BigRational(3) * sigma_lambda(1, 4) + psi_lambda(-1, 4));
  EXPECT_EQ(parse_operation("-(psi(2) - psi(1))", at_truncation(3)), psi_lambda(1, 3) - psi_lambda(2, 3));
  EXPECT_EQ(parse_operation("2", at_truncation(3)), LambdaSeq(ints({2, 2, 2, 2})));
  EXPECT_EQ(parse_operation("1/2*psi(2)", at_truncation(2)), LambdaSeq({BigRational(1, 2), 1, 2}));
  // Psi^2 = sigma_0 + 2 sigma_1 + sigma_2.
  EXPECT_EQ(parse_operation("sigma(0) + 2*sigma(1) + sigma(2)", at_truncation(8)), psi_lambda(2, 8));
}

TEST(ParseOperation, ListLiterals) {
  const auto lam = parse_operation("[0, 1, 2, 3]");
  EXPECT_EQ(lam, LambdaSeq(ints({0, 1, 2, 3})));
  EXPECT_EQ(parse_operation("[1/2, -3/4]").entries(), (RationalVector{BigRational(1, 2), BigRational(-3, 4)}));
  EXPECT_EQ(parse_operation("[1,2,4] * psi(3)"), LambdaSeq(ints({1, 6, 36})));
  OperationParseOptions sigma;
  sigma.lists = ListMeaning::Sigma;
  EXPECT_EQ(parse_operation("[1, 2, 1, 0]", sigma), psi_lambda(2, 3));
  EXPECT_EQ(parse_operation("[0]"), LambdaSeq(ints({0})));
}

TEST(ParseOperation, Errors) {
  EXPECT_THROW(parse_operation("[]"), ParseError);
  EXPECT_THROW(parse_operation("[1,2] + [1,2,3]"), ParseError);
  EXPECT_THROW(parse_operation("[1,2,3]", at_truncation(5)), ParseError);
  EXPECT_THROW(parse_operation("psi(2"), ParseError);
  EXPECT_THROW(parse_operation("phi(2)"), ParseError);
  EXPECT_THROW(parse_operation("psi(2) psi(3)"), ParseError);
  EXPECT_THROW(parse_operation("[1, 1/0]"), ParseError);
  EXPECT_THROW(parse_operation("sigma(-1)"), ParseError);
  EXPECT_THROW(parse_operation(""), ParseError);
}

TEST(ParsePolynomial, Forms) {
  EXPECT_EQ(parse_polynomial("w^2 - w").binom_coeffs(), ints({0, 0, 2}));
  EXPECT_EQ(parse_polynomial("(1/6)w^3").to_power_basis(), (RationalVector{0, 0, 0, BigRational(1, 6)}));
  EXPECT_EQ(parse_polynomial("binom(w,2)").binom_coeffs(), ints({0, 0, 1}));
  EXPECT_EQ(parse_polynomial("3*binom(w,1)*w"), IvpPoly::from_power_basis(ints({0, 0, 3})));
  EXPECT_EQ(parse_polynomial("(w^3 - w)/6").binom_coeffs(), ints({0, 0, 1, 1}));
  EXPECT_EQ(parse_polynomial("-2").binom_coeffs(), ints({-2}));
  EXPECT_EQ(parse_polynomial("2w(w-1)"), parse_polynomial("4*binom(w,2)"));
}

TEST(ParsePolynomial, Errors) {
  EXPECT_THROW(parse_polynomial("w^"), ParseError);
  EXPECT_THROW(parse_polynomial("binom(x,2)"), ParseError);
  EXPECT_THROW(parse_polynomial("1/w"), ParseError);
  EXPECT_THROW(parse_polynomial("w +"), ParseError);
  EXPECT_THROW(parse_polynomial("z"), ParseError);
}

TEST(ParseMonomial, Forms) {
  const FglEngine engine(FglConfig{6, 6});
  const auto dict = Dictionary::standard(engine);
  const auto xi = parse_monomial("b(2)*etaR(x1)", dict);
  EXPECT_EQ(xi.alpha(), std::vector<std::size_t>{2});
  EXPECT_EQ(xi.t(), dict.at("x1").value);
  EXPECT_EQ(xi.t_half_degree(), 1u);

  const auto big = parse_monomial("b(3)^2*e^4*etaR(x1^2*a21)", dict);
  EXPECT_EQ(big.alpha(), (std::vector<std::size_t>{3, 3}));
  EXPECT_EQ(big.h(), 2u);
  EXPECT_EQ(big.t_half_degree(), 4u);
  EXPECT_EQ(big.to_string(), "b(3)^2*e^4*etaR(x1^2*a21)");

  const auto generic = parse_monomial("e^4*etaR(x:2)", dict);
  EXPECT_TRUE(generic.generic_t());
  EXPECT_EQ(generic.h(), 2u);
  EXPECT_EQ(generic.t_half_degree(), 2u);
  EXPECT_EQ(parse_monomial("b(2)*e^2*etaR(y)", dict).t_half_degree(), 2u);

  const auto unit = parse_monomial("b(1)*etaR(1)", dict);
  EXPECT_EQ(unit.t(), GradedPoly(1));
}

TEST(ParseMonomial, Errors) {
  const FglEngine engine(FglConfig{4, 4});
  const auto dict = Dictionary::standard(engine);
  EXPECT_THROW(parse_monomial("b(0)*etaR(x1)", dict), ParseError);
  EXPECT_THROW(parse_monomial("e^3*etaR(x)", dict), ParseError);
  EXPECT_THROW(parse_monomial("b(2)*etaR(x1)*etaR(x1)", dict), ParseError);
  EXPECT_THROW(parse_monomial("b(2)*etaR(x1*q7)", dict), ParseError);
  EXPECT_THROW(parse_monomial("etaR(2)", dict), ParseError);
  EXPECT_THROW(parse_monomial("c(2)", dict), ParseError);
}
