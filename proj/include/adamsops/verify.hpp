#pragma once

// Acceptance checks and the worked examples, each reported as a named
// pass/fail line. All comparisons are exact; random inputs use fixed seeds.

#include <adamsops/fgl.hpp>
#include <adamsops/hopfeval.hpp>
#include <adamsops/ivp.hpp>
#include <adamsops/opring.hpp>
#include <adamsops/rational.hpp>
#include <adamsops/split.hpp>
#include <adamsops/stirling.hpp>

#include <cstddef>
#include <cstdint>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace adamsops {

struct CheckResult {
  std::string id;
  std::string description;
  bool pass = false;
  std::string detail;
};

namespace detail {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  std::int64_t integer(std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(gen_);
  }

  BigRational rational(std::int64_t bound, std::int64_t max_den) {
    return make_rational(BigInt(integer(-bound, bound)), BigInt(integer(1, max_den)));
  }

  RationalVector rationals(std::size_t count, std::int64_t bound, std::int64_t max_den) {
    RationalVector v(count);
    for (auto& x : v) x = rational(bound, max_den);
    return v;
  }

  RationalVector integers(std::size_t count, std::int64_t bound) {
    RationalVector v(count);
    for (auto& x : v) x = BigRational(integer(-bound, bound));
    return v;
  }

 private:
  std::mt19937_64 gen_;
};

inline LambdaSeq unit_lambda(std::size_t m, std::size_t truncation) {
  auto lam = LambdaSeq::zeros(truncation);
  lam[m] = 1;
  return lam;
}

inline RationalVector padded(RationalVector v, std::size_t size) {
  v.resize(std::max(v.size(), size), BigRational(0));
  return v;
}

/// Runs `body`, turning an exception into a failing result.
inline CheckResult guarded(std::string id, std::string description, const std::function<bool(std::string&)>& body) {
  CheckResult r{std::move(id), std::move(description), false, ""};
  try {
    r.pass = body(r.detail);
  } catch (const std::exception& e) {
    r.pass = false;
    r.detail = std::string("exception: ") + e.what();
  }
  return r;
}

/// Shared capacity for the cobordism checks.
inline const FglEngine& verification_engine() {
  static const FglEngine engine(FglConfig{12, 12});
  return engine;
}

inline const Dictionary& verification_dictionary() {
  static const Dictionary dict = Dictionary::standard(verification_engine());
  return dict;
}

}  // namespace detail

// --- acceptance criteria ------------------------------------------------------

inline CheckResult criterion_congruence_table() {
  return detail::guarded("1", "congruence table forms for n = 2, 3, 4", [](std::string& d) {
    const std::vector<std::string> expected{"(l2 - l1)/2", "(l3 - 3*l2 + 2*l1)/6", "(l4 - 6*l3 + 11*l2 - 6*l1)/24"};
    const std::vector<RationalVector> vectors{
        {0, BigRational(-1, 2), BigRational(1, 2)},
        {0, BigRational(1, 3), BigRational(-1, 2), BigRational(1, 6)},
        {0, BigRational(-1, 4), BigRational(11, 24), BigRational(-1, 4), BigRational(1, 24)}};
    bool ok = true;
    for (std::size_t i = 0; i < 3; ++i) {
      const auto form = clarke_form(i + 2);
      const auto text = format_form(form);
      d += text + (i < 2 ? "; " : "");
      ok = ok && text == expected[i] && form == vectors[i];
    }
    return ok;
  });
}

inline CheckResult criterion_power_sum_identity() {
  return detail::guarded("2", "alternating power sum equals n! S(m,n) for n, m <= 25", [](std::string& d) {
    std::size_t mismatches = 0;
    for (unsigned n = 0; n <= 25; ++n) {
      for (unsigned m = 0; m <= 25; ++m) {
        const auto lhs = alternating_power_sum(n, m);
        if (lhs != factorial(n) * stirling2(m, n)) ++mismatches;
        if (n > m && lhs != 0) ++mismatches;
        if (n == m && lhs != factorial(m)) ++mismatches;
      }
    }
    d = std::to_string(mismatches) + " mismatches over 676 pairs";
    return mismatches == 0;
  });
}

inline CheckResult criterion_round_trip() {
  return detail::guarded("3", "lambda_to_sigma and sigma_to_lambda are mutually inverse", [](std::string& d) {
    detail::Rng rng(0x5eed0003);
    std::size_t failures = 0;
    for (int trial = 0; trial < 200; ++trial) {
      const auto n = static_cast<std::size_t>(rng.integer(0, 30));
      SigmaCoeffs a(rng.rationals(n + 1, 50, 12));
      LambdaSeq lam(rng.rationals(n + 1, 50, 12));
      if (lambda_to_sigma(sigma_to_lambda(a)) != a) ++failures;
      if (sigma_to_lambda(lambda_to_sigma(lam)) != lam) ++failures;
    }
    d = "200 random vectors per direction, " + std::to_string(failures) + " failures";
    return failures == 0;
  });
}

inline CheckResult criterion_adams_closure() {
  return detail::guarded("4", "Adams eigenvalue sequences pass all congruences, k in [-5,5], N = 30",
                         [](std::string& d) {
                           constexpr std::size_t N = 30;
                           bool ok = true;
                           for (std::int64_t k = -5; k <= 5; ++k) {
                             const auto lam = psi_lambda(k, N);
                             if (!check_congruences(lam).verdict) {
                               ok = false;
                               d += "k=" + std::to_string(k) + " fails; ";
                             }
                             if (k >= 0) {
                               const auto a = lambda_to_sigma(lam);
                               for (std::size_t n = 0; n <= N; ++n) {
                                 if (a[n] != BigRational(binomial(static_cast<unsigned>(k), static_cast<long long>(n)))) {
                                   ok = false;
                                   d += "sigma coordinates of k=" + std::to_string(k) + " differ; ";
                                   break;
                                 }
                               }
                             }
                           }
                           if (ok) d = "11 sequences pass; sigma coordinates are C(k,n) for k >= 0";
                           return ok;
                         });
}

inline CheckResult criterion_product_coherence() {
  return detail::guarded("5", "pointwise product agrees with the sigma-coordinate product", [](std::string& d) {
    constexpr std::size_t N = 10;
    const auto table = sigma_product_table(N);
    detail::Rng rng(0x5eed0005);
    std::size_t failures = 0;
    for (int trial = 0; trial < 100; ++trial) {
      SigmaCoeffs x(rng.rationals(N + 1, 20, 6));
      SigmaCoeffs y(rng.rationals(N + 1, 20, 6));
      if (sigma_to_lambda(multiply(x, y, table)) != multiply(sigma_to_lambda(x), sigma_to_lambda(y))) ++failures;
    }
    const bool adams_lambda = multiply(psi_lambda(2, N), psi_lambda(3, N)) == psi_lambda(6, N);
    const bool adams_sigma = multiply(psi_sigma(2, N), psi_sigma(3, N), table) == psi_sigma(6, N);
    d = "100 random pairs, " + std::to_string(failures) + " failures; Psi^2 Psi^3 = Psi^6: " +
        (adams_lambda && adams_sigma ? "yes" : "no");
    return failures == 0 && adams_lambda && adams_sigma;
  });
}

inline CheckResult criterion_sigma_mu_values() {
  return detail::guarded("6", "sigma_n^MU functional on e^{2h} etaR(x) equals n! S(h,n), n, h <= 15",
                         [](std::string& d) {
                           std::size_t mismatches = 0, below = 0;
                           for (unsigned n = 0; n <= 15; ++n) {
                             for (unsigned h = 0; h <= 15; ++h) {
                               const auto v = sigma_mu_functional(n, h);
                               const BigInt expected = h < n ? BigInt(0) : factorial(n) * stirling2(h, n);
                               if (v != expected) ++mismatches;
                               if (h < n && v == 0) ++below;
                             }
                           }
                           d = std::to_string(mismatches) + " mismatches; " + std::to_string(below) +
                               " vanishing values below the diagonal";
                           return mismatches == 0 && below == 120;
                         });
}

inline CheckResult criterion_worked_examples() {
  return detail::guarded("7", "b_2 and b_3 evaluations over the dictionary basis", [](std::string& d) {
    const auto& engine = detail::verification_engine();
    const auto& dict = detail::verification_dictionary();
    const auto b2 = b2_example(engine, dict);
    const auto b3 = b3_example(engine, dict);
    const bool ok2 = b2.basis == std::vector<std::string>{"x1^2"} &&
                     b2.forms[0] == RationalVector{0, BigRational(-1, 2), BigRational(1, 2)};
    const bool ok3 =
        b3.basis == std::vector<std::string>{"x1^3", "a21*x1"} &&
        detail::padded(b3.forms[0], 4) == RationalVector{0, BigRational(1, 3), BigRational(-1, 2), BigRational(1, 6)} &&
        detail::padded(b3.forms[1], 4) == RationalVector{0, BigRational(-1, 3), 0, BigRational(1, 3)};
    d = "b2: " + format_form(b2.forms[0]) + " on x1^2; b3: " + format_form(b3.forms[0]) + " on x1^3, " +
        format_form(b3.forms[1]) + " on a21*x1; " + dict.at("x1").convention;
    return ok2 && ok3;
  });
}

inline CheckResult criterion_two_paths() {
  return detail::guarded("8", "Hopf-ring path equals v_lambda = C_n . lambda for n <= 6", [](std::string& d) {
    const auto& engine = detail::verification_engine();
    const auto& dict = detail::verification_dictionary();
    bool ok = true;
    for (std::size_t n = 1; n <= 6; ++n) {
      const auto hopf = detail::padded(hopf_projection_form(engine, dict, n), n + 1);
      RationalVector via_pairing(hopf.size());
      for (std::size_t m = 0; m < hopf.size(); ++m) via_pairing[m] = v_lambda(n, detail::unit_lambda(m, hopf.size() - 1));
      const auto clarke = detail::padded(clarke_form(n), hopf.size());
      if (hopf != via_pairing || hopf != clarke) {
        ok = false;
        d += "n=" + std::to_string(n) + " differs; ";
      }
    }
    if (ok) d = "identical linear forms for n = 1..6";
    return ok;
  });
}

inline CheckResult criterion_solution_sets() {
  return detail::guarded("9", "MU-side and Clarke solution sets agree at N = 12", [](std::string& d) {
    constexpr std::size_t N = 12;
    const auto& engine = detail::verification_engine();
    const auto& dict = detail::verification_dictionary();
    const auto b3 = b3_example(engine, dict);
    const auto redundant = make_mu_form("b(3)*etaR(x1)", "a21*x1", b3.forms[1], 3);
    const auto report = solution_sets_equal(engine, dict, N);
    bool all_present = true;
    for (std::size_t n = 1; n <= N; ++n) all_present = all_present && report.clarke_present[n];

    detail::Rng rng(0x5eed0009);
    std::size_t violations = 0;
    for (int trial = 0; trial < 100; ++trial) {
      const auto lam = sigma_to_lambda(SigmaCoeffs(rng.integers(N + 1, 1000)));
      if (!check_congruences(lam).verdict) ++violations;
      for (const auto& f : report.forms) {
        if (!is_integer(evaluate_form(f.form, lam))) ++violations;
      }
    }
    std::ostringstream out;
    out << "(l3 - l1)/3 = " << to_string(redundant.clarke_combination[1]) << "*C1 + "
        << to_string(redundant.clarke_combination[2]) << "*C2 + " << to_string(redundant.clarke_combination[3])
        << "*C3; " << report.forms.size() << " MU-side forms, C_1..C_12 present: " << (all_present ? "yes" : "no")
        << "; lattices equal: " << (report.equal ? "yes" : "no") << "; " << violations
        << " violations over 100 random passing sequences";
    d = out.str();
    return redundant.integral && redundant.reconstructs && all_present && report.equal && violations == 0;
  });
}

inline CheckResult criterion_split() {
  return detail::guarded("10", "Adams idempotent, p-local closure and the summand basis at p = 3, N = 6",
                         [](std::string& d) {
                           detail::Rng rng(0x5eed0010);
                           bool algebra = true;
                           for (std::int64_t p : {3, 5, 7}) {
                             for (int trial = 0; trial < 30; ++trial) {
                               LambdaSeq x(rng.rationals(13, 30, 9));
                               LambdaSeq y(rng.rationals(13, 30, 9));
                               const auto ex = adams_idempotent(x, p);
                               algebra = algebra && adams_idempotent(ex) == ex;
                               algebra = algebra && adams_idempotent(multiply(x, y), p) ==
                                                        multiply(ex, adams_idempotent(y, p));
                             }
                           }
                           bool closure = true;
                           for (std::int64_t p : {3, 5, 7}) {
                             for (std::int64_t k = -3; k <= 3; ++k) {
                               closure = closure &&
                                         check_congruences_plocal(adams_idempotent(psi_lambda(k, 12), p)).verdict;
                             }
                           }
                           const auto report = spanning_set_reduce(3, 6);
                           const bool unit_minor = report.pivot_minor_valuation && *report.pivot_minor_valuation == 0;
                           std::ostringstream out;
                           out << "idempotent/multiplicative: " << (algebra ? "yes" : "no")
                               << "; e0 Psi^k p-local: " << (closure ? "pass" : "fail")
                               << "; pivot minor valuation "
                               << (report.pivot_minor_valuation ? std::to_string(*report.pivot_minor_valuation)
                                                                : std::string("inf"))
                               << "; reproduces all rows: " << (report.reproduces_all_rows ? "yes" : "no");
                           d = out.str();
                           return algebra && closure && unit_minor && report.reproduces_all_rows;
                         });
}

inline CheckResult criterion_ivp_oracle() {
  return detail::guarded("11", "binomial-coordinate criterion agrees with evaluation on [-20,20]", [](std::string& d) {
    detail::Rng rng(0x5eed0011);
    const std::vector<std::int64_t> denominators{1, 1, 1, 1, 1, 1, 2, 3, 4, 5, 6, 7};
    std::size_t disagreements = 0, integer_valued = 0;
    for (int trial = 0; trial < 200; ++trial) {
      const auto deg = static_cast<std::size_t>(rng.integer(0, 8));
      RationalVector coords(deg + 1);
      for (auto& c : coords) {
        const auto den = denominators[static_cast<std::size_t>(rng.integer(0, 11))];
        c = make_rational(BigInt(rng.integer(-40, 40)), BigInt(den));
      }
      // Feed the criterion a polynomial that arrives in the power basis.
      const auto f = IvpPoly::from_power_basis(IvpPoly(coords).to_power_basis());
      bool brute = true;
      for (int w = -20; w <= 20 && brute; ++w) brute = is_integer(f(BigRational(w)));
      if (brute != is_integer_valued(f)) ++disagreements;
      if (brute) ++integer_valued;
    }
    d = std::to_string(disagreements) + " disagreements over 200 polynomials (" + std::to_string(integer_valued) +
        " integer-valued)";
    return disagreements == 0 && integer_valued > 0 && integer_valued < 200;
  });
}

inline CheckResult criterion_fgl() {
  return detail::guarded("12", "formal group law: inverse pair, symmetry, associativity, calibration", [](std::string& d) {
    const FglEngine engine(FglConfig{12, 12});
    const auto x = GradedSeries::identity(12);
    const bool inverse = compose(engine.exp_series(12), engine.log_series(12)) == x &&
                         compose(engine.log_series(12), engine.exp_series(12)) == x;

    constexpr std::size_t T = 6;
    const auto f2 = engine.fgl_series(T);
    bool symmetric = true;
    for (const auto& [e, c] : f2.terms()) symmetric = symmetric && f2.coeff({e[1], e[0]}) == c;
    const auto s = MultiSeries::variable(3, 0, T);
    const auto t = MultiSeries::variable(3, 1, T);
    const auto u = MultiSeries::variable(3, 2, T);
    const auto left = compose_law(f2, compose_law(f2, s, t), u);
    const auto right = compose_law(f2, s, compose_law(f2, t, u));
    const bool associative = left == right;

    const auto& dict = detail::verification_dictionary();
    const auto a11 = engine.fgl_coeff(1, 1);
    const bool calibrated = a11 == GradedPoly::generator(1, BigRational(-2)) && dict.at("x1").value == a11;

    const auto orient = engine.adams_orientation_series(12);
    bool identity_at_one = orient[1] == KPolynomial::monomial(0);
    for (std::size_t i = 2; i <= 12; ++i) identity_at_one = identity_at_one && orient[i].at(BigRational(1)).is_zero();
    identity_at_one = identity_at_one && engine.k_series(1, 12) == x;

    std::ostringstream out;
    out << "exp o log = id: " << (inverse ? "yes" : "no") << "; symmetric: " << (symmetric ? "yes" : "no")
        << "; associative to order 6: " << (associative ? "yes" : "no") << "; a11 = " << a11.to_string()
        << "; B_1 = 1 and kappa = 1 gives x: " << (identity_at_one ? "yes" : "no");
    d = out.str();
    return inverse && symmetric && associative && calibrated && identity_at_one;
  });
}

inline std::vector<CheckResult> acceptance_criteria() {
  return {criterion_congruence_table(), criterion_power_sum_identity(), criterion_round_trip(),
          criterion_adams_closure(),    criterion_product_coherence(),  criterion_sigma_mu_values(),
          criterion_worked_examples(),  criterion_two_paths(),          criterion_solution_sets(),
          criterion_split(),            criterion_ivp_oracle(),         criterion_fgl()};
}

// --- worked examples ------------------------------------------------------------

inline std::vector<CheckResult> worked_examples() {
  std::vector<CheckResult> out;
  auto add = [&out](std::string id, std::string description, const std::function<bool(std::string&)>& body) {
    out.push_back(detail::guarded(std::move(id), std::move(description), body));
  };

  add("stirling1(4,2)", "unsigned Stirling number of the first kind is 11", [](std::string& d) {
    d = to_string(stirling1_unsigned(4, 2));
    return stirling1_unsigned(4, 2) == 11;
  });
  add("stirling1(4,1)", "unsigned Stirling number of the first kind is 6", [](std::string& d) {
    d = to_string(stirling1_unsigned(4, 1));
    return stirling1_unsigned(4, 1) == 6;
  });
  add("power-sum(3,2)", "alternating power sum vanishes for n > m", [](std::string& d) {
    d = to_string(alternating_power_sum(3, 2));
    return alternating_power_sum(3, 2) == 0;
  });
  add("power-sum(3,3)", "alternating power sum is m! for n = m", [](std::string& d) {
    d = to_string(alternating_power_sum(3, 3));
    return alternating_power_sum(3, 3) == 6;
  });
  add("sigma-to-lambda(a_m=1)", "a single sigma_m has lambda_j = 0 below m and lambda_m = m!", [](std::string& d) {
    bool ok = true;
    for (std::size_t m = 0; m <= 8; ++m) {
      const auto lam = sigma_to_lambda(sigma_basis(m, 8));
      for (std::size_t j = 0; j < m; ++j) ok = ok && lam[j] == 0;
      ok = ok && lam[m] == BigRational(factorial(static_cast<unsigned>(m)));
    }
    d = "m = 0..8";
    return ok;
  });
  add("check([0,1,2,3,...])", "identity sequence fails at n = 2 with value 1/2", [](std::string& d) {
    RationalVector v;
    for (int m = 0; m <= 6; ++m) v.emplace_back(m);
    const auto cert = check_congruences(LambdaSeq(v));
    const auto ff = cert.first_failure();
    d = ff ? "first failure n=" + std::to_string(*ff) + " value " + to_string(cert.records[*ff].value) : "passes";
    return !cert.verdict && ff && *ff == 2 && cert.records[2].value == BigRational(1, 2);
  });
  add("Psi^2*Psi^3", "product of Adams operations is Psi^6", [](std::string& d) {
    d = "N = 12";
    return multiply(psi_lambda(2, 12), psi_lambda(3, 12)) == psi_lambda(6, 12);
  });
  add("act(Psi^3,m=2,t=1)", "Psi^3 acts on pi_4 as multiplication by 9", [](std::string& d) {
    const auto v = act_on_homotopy(psi_lambda(3, 4), 2, 1);
    d = to_string(v);
    return v == 9;
  });
  add("pair(Psi^3,w^2)", "pairing of Psi^k with w^h is k^h", [](std::string& d) {
    IvpPoly w2 = IvpPoly::variable() * IvpPoly::variable();
    const auto v = pairing(psi_sigma(3, 4), w2);
    d = to_string(v);
    return v == 9;
  });
  add("pi_lambda(0,3,Psi^2)", "pi_lambda(u^0 v^3) on Psi^2 is 8", [](std::string& d) {
    const auto v = pi_lambda(0, 3, psi_lambda(2, 4));
    d = to_string(v);
    return v == 8;
  });
  add("psi_hat(e^4*etaR(x))", "e^{2h} etaR(x) with h = |x| = 2 evaluates to kappa^2 x", [](std::string& d) {
    const auto p = psi_hat(detail::verification_engine(), HopfMonomial::with_generic({}, 2, 2));
    d = p.to_string();
    return p == KPolynomial::monomial(2);
  });
  add("b2-example", "b_2 etaR(x1) gives (l2 - l1)/2 on x1^2", [](std::string& d) {
    const auto b2 = b2_example(detail::verification_engine(), detail::verification_dictionary());
    d = format_form(b2.forms[0]);
    return b2.forms[0] == RationalVector{0, BigRational(-1, 2), BigRational(1, 2)};
  });
  add("b3-example", "b_3 etaR(x1) gives the two congruence forms on {x1^3, a21*x1}", [](std::string& d) {
    const auto b3 = b3_example(detail::verification_engine(), detail::verification_dictionary());
    d = format_form(b3.forms[0]) + ", " + format_form(b3.forms[1]);
    return format_form(b3.forms[0]) == "(l3 - 3*l2 + 2*l1)/6" && format_form(b3.forms[1]) == "(l3 - l1)/3";
  });
  add("sigma_mu(3,2)", "sigma_3^MU vanishes on e^4 etaR(x)", [](std::string& d) {
    d = to_string(sigma_mu_functional(3, 2));
    return sigma_mu_functional(3, 2) == 0;
  });
  for (std::size_t n : {2u, 3u}) {
    add("v_lambda(n=" + std::to_string(n) + ")", "V_lambda(b_n etaR(x1)) as a linear form", [n](std::string& d) {
      RationalVector form(n + 1);
      for (std::size_t m = 0; m <= n; ++m) form[m] = v_lambda(n, detail::unit_lambda(m, n));
      d = format_form(form);
      return d == (n == 2 ? "(l2 - l1)/2" : "(l3 - 3*l2 + 2*l1)/6");
    });
  }
  add("redundant-form(N=3)", "(l3 - l1)/3 is an integer combination of C_1, C_2, C_3", [](std::string& d) {
    const auto b3 = b3_example(detail::verification_engine(), detail::verification_dictionary());
    const auto f = make_mu_form("b(3)*etaR(x1)", "a21*x1", b3.forms[1], 3);
    d = to_string(f.clarke_combination[1]) + "*C1 + " + to_string(f.clarke_combination[2]) + "*C2 + " +
        to_string(f.clarke_combination[3]) + "*C3";
    return f.integral && f.reconstructs;
  });
  add("families(N=2)", "MU-side and Clarke forms coincide at N = 2", [](std::string& d) {
    const auto r = solution_sets_equal(detail::verification_engine(), detail::verification_dictionary(), 2);
    d = std::to_string(r.forms.size()) + " MU-side forms";
    return r.equal;
  });
  add("plocal(p=2)", "p = 2 is rejected while the integral checker fails (l2 - l1)/2 = 1/2", [](std::string& d) {
    const LambdaSeq lam(RationalVector{0, 1, 2});
    bool rejected = false;
    try {
      (void)PLocalSeq(2, lam.entries(), PLocalFlavor::Full);
    } catch (const DomainError&) {
      rejected = true;
    }
    const auto cert = check_congruences(lam);
    d = std::string("p=2 rejected: ") + (rejected ? "yes" : "no") + "; integral verdict: " +
        (cert.verdict ? "pass" : "fail");
    return rejected && !cert.verdict && cert.first_failure() == std::optional<std::size_t>(2);
  });
  return out;
}

}  // namespace adamsops
