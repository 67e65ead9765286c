#pragma once

// Rational evaluation of Adams-type functionals on circle-product monomials
// b^alpha o e^{2h} o eta_R(t) in the indecomposable cooperations of MU.
//
// Psi^kappa is group-like, so on a monomial it factors as
//   Psi^kappa(b^alpha e^{2h} eta_R(t)) = prod_{i in alpha} B_i(kappa) * kappa^{|t|} * t
// where B_i(kappa) is the x^i coefficient of kappa^{-1} exp(kappa log x) and |t|
// is the half-degree of t. A diagonal operation with eigenvalues lambda is
// obtained by the linear substitution kappa^m -> lambda_m.

#include <adamsops/fgl.hpp>
#include <adamsops/ivp.hpp>
#include <adamsops/linalg.hpp>
#include <adamsops/opring.hpp>
#include <adamsops/rational.hpp>
#include <adamsops/stirling.hpp>

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace adamsops {

/// A named integral element of MU^* expressed in the rational generators m_i.
struct DictionaryEntry {
  std::string name;
  GradedPoly value;
  std::size_t half_degree = 0;
  std::string convention;
};

class HopfMonomial {
 public:
  HopfMonomial() = default;

  /// b^alpha o e^{2h} o eta_R(t) with t a polynomial of the given half-degree.
  HopfMonomial(std::vector<std::size_t> alpha, std::size_t h, GradedPoly t, std::size_t t_half_degree,
               std::string t_name)
      : alpha_(std::move(alpha)),
        h_(h),
        t_(std::move(t)),
        t_half_degree_(t_half_degree),
        t_name_(std::move(t_name)) {
    std::sort(alpha_.begin(), alpha_.end());
    for (auto i : alpha_) {
      if (i == 0) throw DomainError("b-indices start at 1");
    }
    if (!t_.is_homogeneous(static_cast<int>(t_half_degree_))) {
      throw DomainError("eta_R argument '" + t_name_ + "' is not homogeneous of half-degree " +
                        std::to_string(t_half_degree_));
    }
  }

  /// Same, with t a generic element of the given half-degree.
  static HopfMonomial with_generic(std::vector<std::size_t> alpha, std::size_t h, std::size_t t_half_degree,
                                   std::string t_name = "x") {
    HopfMonomial m(std::move(alpha), h, GradedPoly(1), 0, std::move(t_name));
    m.t_half_degree_ = t_half_degree;
    m.generic_ = true;
    return m;
  }

  const std::vector<std::size_t>& alpha() const { return alpha_; }
  std::size_t h() const { return h_; }
  const GradedPoly& t() const { return t_; }
  std::size_t t_half_degree() const { return t_half_degree_; }
  const std::string& t_name() const { return t_name_; }
  bool generic_t() const { return generic_; }

  /// Number of circle factors from the suspension side (b_i and e^2).
  std::size_t b_count() const { return alpha_.size() + h_; }

  /// The monomial lies in QMU_*(MU_0) exactly when the b-count matches |t|.
  bool in_zeroth_space() const { return b_count() == t_half_degree_; }

  std::string to_string() const {
    std::ostringstream out;
    std::map<std::size_t, std::size_t> counts;
    for (auto i : alpha_) ++counts[i];
    bool first = true;
    for (const auto& [i, c] : counts) {
      if (!first) out << "*";
      out << "b(" << i << ")";
      if (c > 1) out << "^" << c;
      first = false;
    }
    if (h_ > 0) {
      if (!first) out << "*";
      out << "e^" << 2 * h_;
      first = false;
    }
    if (!first) out << "*";
    out << "etaR(" << t_name_ << ")";
    return out.str();
  }

  friend HopfMonomial circle(const HopfMonomial& a, const HopfMonomial& b) {
    std::vector<std::size_t> alpha = a.alpha_;
    alpha.insert(alpha.end(), b.alpha_.begin(), b.alpha_.end());
    std::string name = a.t_name_ == "1" ? b.t_name_ : (b.t_name_ == "1" ? a.t_name_ : a.t_name_ + "*" + b.t_name_);
    if (a.generic_ || b.generic_) {
      HopfMonomial r = with_generic(std::move(alpha), a.h_ + b.h_, a.t_half_degree_ + b.t_half_degree_, name);
      return r;
    }
    return HopfMonomial(std::move(alpha), a.h_ + b.h_, a.t_ * b.t_, a.t_half_degree_ + b.t_half_degree_, name);
  }

 private:
  std::vector<std::size_t> alpha_;
  std::size_t h_ = 0;
  GradedPoly t_ = GradedPoly(1);
  std::size_t t_half_degree_ = 0;
  std::string t_name_ = "1";
  bool generic_ = false;
};

/// The generator-indexed monomial b_n o eta_R(t).
inline HopfMonomial b_eta(std::size_t n, const DictionaryEntry& t) {
  return HopfMonomial({n}, 0, t.value, t.half_degree, t.name);
}

// --- the functional Psi^kappa ------------------------------------------------

inline KPolynomial psi_hat(const FglEngine& engine, const HopfMonomial& xi) {
  std::size_t max_index = 0;
  int degree = xi.generic_t() ? 0 : static_cast<int>(xi.t_half_degree());
  for (auto i : xi.alpha()) {
    max_index = std::max(max_index, i);
    degree += static_cast<int>(i) - 1;
  }
  if (max_index > engine.config().order) {
    throw CapacityError("b-index " + std::to_string(max_index) + " exceeds series order " +
                        std::to_string(engine.config().order));
  }
  if (degree > static_cast<int>(engine.config().degree)) {
    throw CapacityError(xi.to_string() + " has degree " + std::to_string(degree) + " above the bound D = " +
                        std::to_string(engine.config().degree));
  }
  KPolynomial result = KPolynomial::monomial(xi.t_half_degree(), xi.t());
  if (xi.alpha().empty()) return result;
  const auto orientation = engine.adams_orientation_series(max_index);
  for (auto i : xi.alpha()) result = result * orientation[i];
  return result;
}

/// Sum_m c_m lambda_m with c_m in Q[m_1, ...], keyed by homotopy index m.
using LambdaLinear = std::map<std::size_t, GradedPoly>;

/// Symbolic substitution kappa^m -> lambda_m.
inline LambdaLinear linearize(const KPolynomial& p) {
  LambdaLinear out;
  for (std::size_t m = 0; m < p.coeffs().size(); ++m) {
    if (!p.coeffs()[m].is_zero()) out.emplace(m, p.coeffs()[m]);
  }
  return out;
}

/// Value of the diagonal functional with eigenvalues lambda.
inline GradedPoly substitute_lambda(const KPolynomial& p, const LambdaSeq& lam) {
  if (p.kdegree() > lam.truncation()) {
    throw DomainError("kappa-degree " + std::to_string(p.kdegree()) + " exceeds truncation " +
                      std::to_string(lam.truncation()));
  }
  GradedPoly r;
  for (std::size_t m = 0; m < p.coeffs().size(); ++m) r += lam[m] * p.coeffs()[m];
  return r;
}

/// Evaluates a linear form sum_m f_m lambda_m.
inline BigRational evaluate_form(const RationalVector& form, const LambdaSeq& lam) {
  if (form.size() > lam.size()) throw DomainError("form length exceeds sequence truncation");
  BigRational acc = 0;
  for (std::size_t m = 0; m < form.size(); ++m) acc += form[m] * lam[m];
  return acc;
}

// --- dictionary of integral coefficients ---------------------------------

class Dictionary {
 public:
  Dictionary() = default;
  explicit Dictionary(std::vector<DictionaryEntry> entries) : entries_(std::move(entries)) {}

  static Dictionary standard(const FglEngine& engine);

  const std::vector<DictionaryEntry>& entries() const { return entries_; }

  bool contains(const std::string& name) const {
    return std::any_of(entries_.begin(), entries_.end(), [&](const auto& e) { return e.name == name; });
  }

  const DictionaryEntry& at(const std::string& name) const {
    for (const auto& e : entries_) {
      if (e.name == name) return e;
    }
    throw DomainError("unknown dictionary element '" + name + "'");
  }

  /// All products of dictionary elements of the given half-degree, named like "x1^2*a21".
  std::vector<DictionaryEntry> product_basis(std::size_t half_degree) const {
    std::vector<DictionaryEntry> out;
    std::vector<std::size_t> exps(entries_.size(), 0);
    collect(0, half_degree, exps, out);
    return out;
  }

  /// Product sum_i exps[i] * entry_i, used by the parser for "x1^2*a21".
  DictionaryEntry product(const std::vector<std::pair<std::string, std::size_t>>& factors) const {
    DictionaryEntry r{"", GradedPoly(1), 0, ""};
    for (const auto& [name, e] : factors) {
      const auto& entry = at(name);
      r.value = r.value * entry.value.pow(static_cast<unsigned>(e));
      r.half_degree += entry.half_degree * e;
      if (!r.name.empty()) r.name += "*";
      r.name += e == 1 ? name : name + "^" + std::to_string(e);
    }
    if (r.name.empty()) r.name = "1";
    return r;
  }

 private:
  void collect(std::size_t idx, std::size_t remaining, std::vector<std::size_t>& exps,
               std::vector<DictionaryEntry>& out) const {
    if (idx == entries_.size()) {
      if (remaining != 0) return;
      std::vector<std::pair<std::string, std::size_t>> factors;
      for (std::size_t i = 0; i < entries_.size(); ++i) {
        if (exps[i] > 0) factors.emplace_back(entries_[i].name, exps[i]);
      }
      out.push_back(product(factors));
      return;
    }
    const std::size_t d = entries_[idx].half_degree;
    for (std::size_t e = 0; e * d <= remaining; ++e) {
      exps[idx] = e;
      collect(idx + 1, remaining - e * d, exps, out);
      if (d == 0) break;
    }
    exps[idx] = 0;
  }

  std::vector<DictionaryEntry> entries_;
};

// --- decomposition into congruence forms -----------------------------------

/// theta-bar(xi) written as sum_b form_b(lambda) * basis_b.
struct FormDecomposition {
  std::vector<std::string> basis;
  std::vector<RationalVector> forms;  // forms[b][m] multiplies lambda_m
};

/// Expresses every lambda-coefficient of `value` in the span of `basis`.
/// Returns nullopt when some coefficient lies outside that span.
inline std::optional<FormDecomposition> decompose(const LambdaLinear& value,
                                                  const std::vector<DictionaryEntry>& basis) {
  std::set<Monomial> monomials;
  for (const auto& b : basis) {
    for (const auto& [mono, c] : b.value.terms()) monomials.insert(mono);
  }
  for (const auto& [m, poly] : value) {
    for (const auto& [mono, c] : poly.terms()) monomials.insert(mono);
  }
  std::vector<Monomial> order(monomials.begin(), monomials.end());
  RationalMatrix a(order.size(), RationalVector(basis.size()));
  for (std::size_t r = 0; r < order.size(); ++r) {
    for (std::size_t c = 0; c < basis.size(); ++c) a[r][c] = basis[c].value.coeff(order[r]);
  }
  std::size_t length = value.empty() ? 1 : value.rbegin()->first + 1;
  FormDecomposition out;
  for (const auto& b : basis) out.basis.push_back(b.name);
  out.forms.assign(basis.size(), RationalVector(length, BigRational(0)));
  for (const auto& [m, poly] : value) {
    RationalVector rhs(order.size());
    for (std::size_t r = 0; r < order.size(); ++r) rhs[r] = poly.coeff(order[r]);
    auto sol = solve_exact(a, rhs);
    if (!sol) return std::nullopt;
    for (std::size_t c = 0; c < basis.size(); ++c) out.forms[c][m] = (*sol)[c];
  }
  return out;
}

/// Ring map Q[m_1, ...] -> Q sending the universal law to the multiplicative
/// law s + t + st. It takes x1 = a11 to 1 and kills a21, so on integral
/// elements it reads off the coefficient of the appropriate power of x1.
inline BigRational k_projection(const GradedPoly& p) { return p.evaluate(multiplicative_log_coefficient); }

inline Dictionary Dictionary::standard(const FglEngine& engine) {
  // The orientation sign of x1 is not fixed a priori. Choose the sign for
  // which theta-bar(b_2 eta_R(x1)) = (lambda_2 - lambda_1)/2 * x1^2.
  int chosen = 0;
  for (int sign : {1, -1}) {
    DictionaryEntry x1{"x1", GradedPoly::generator(1, BigRational(2 * sign)), 1, ""};
    auto x1_sq = DictionaryEntry{"x1^2", x1.value * x1.value, 2, ""};
    auto dec = decompose(linearize(psi_hat(engine, b_eta(2, x1))), {x1_sq});
    if (dec && dec->forms[0] == RationalVector{0, BigRational(-1, 2), BigRational(1, 2)}) {
      chosen = sign;
      break;
    }
  }
  if (chosen == 0) throw Error("orientation calibration failed: neither sign reproduces the b_2 form");
  std::vector<DictionaryEntry> entries;
  entries.push_back({"x1", GradedPoly::generator(1, BigRational(2 * chosen)), 1,
                     "x1 = " + std::string(chosen > 0 ? "+" : "-") +
                         "2*m1, sign calibrated on b(2)*etaR(x1); equals the law coefficient a11"});
  entries.push_back({"a21", engine.fgl_coeff(2, 1), 2,
                     "a21 = coefficient of s^2 t in F(s,t) = exp(log s + log t)"});
  return Dictionary(std::move(entries));
}

// --- the named computations -------------------------------------------------

/// theta-bar(b_2 eta_R(x1)) over the basis {x1^2}.
inline FormDecomposition b2_example(const FglEngine& engine, const Dictionary& dict) {
  const auto& x1 = dict.at("x1");
  auto dec = decompose(linearize(psi_hat(engine, b_eta(2, x1))), {dict.product({{"x1", 2}})});
  if (!dec) throw Error("b_2 example is not expressible over {x1^2}");
  return *dec;
}

/// theta-bar(b_3 eta_R(x1)) over the basis {x1^3, a21*x1}.
inline FormDecomposition b3_example(const FglEngine& engine, const Dictionary& dict) {
  const auto& x1 = dict.at("x1");
  auto dec = decompose(linearize(psi_hat(engine, b_eta(3, x1))),
                       {dict.product({{"x1", 3}}), dict.product({{"a21", 1}, {"x1", 1}})});
  if (!dec) throw Error("b_3 example is not expressible over {x1^3, a21*x1}");
  return *dec;
}

/// The linear form lambda -> k_projection(theta-bar(b_n eta_R(x1))).
inline RationalVector hopf_projection_form(const FglEngine& engine, const Dictionary& dict, std::size_t n) {
  const auto p = psi_hat(engine, b_eta(n, dict.at("x1")));
  RationalVector form(std::max<std::size_t>(p.kdegree() + 1, n + 1), BigRational(0));
  for (std::size_t m = 0; m < p.coeffs().size(); ++m) form[m] = k_projection(p.coeffs()[m]);
  return form;
}

/// V_lambda(b_n eta_R(x1)) computed through the pairing with C(w, n).
inline BigRational v_lambda(std::size_t n, const LambdaSeq& lam) {
  if (n == 0) throw DomainError("v_lambda: n must be positive");
  if (n > lam.truncation()) {
    throw DomainError("v_lambda: n = " + std::to_string(n) + " exceeds truncation " +
                      std::to_string(lam.truncation()));
  }
  return pairing(lambda_to_sigma(lam), IvpPoly::binom(n));
}

/// theta-bar(sigma_n)(e^{2h} eta_R(x)) / x, evaluated as sum_k c_k Psi^k-bar with
/// sigma_n = sum_k c_k Psi^k. Equals n! {h n}, and vanishes for h < n.
inline BigInt sigma_mu_functional(std::size_t n, std::size_t h) {
  static const FglEngine engine(FglConfig{1, 0});
  const auto p = psi_hat(engine, HopfMonomial::with_generic({}, h, h));
  const auto c = sigma_in_adams_basis(static_cast<unsigned>(n));
  BigRational acc = 0;
  for (std::size_t k = 0; k < c.size(); ++k) acc += BigRational(c[k]) * p.at(BigRational(k)).constant();
  return numerator(acc);
}

// --- comparison of the two congruence systems --------------------------------

struct MuSideForm {
  std::string source;         // monomial that produced the form
  std::string basis_element;  // dictionary basis element, or "K-projection"
  RationalVector form;        // coefficients on lambda_0..lambda_N
  RationalVector clarke_combination;  // g with form = sum_n g_n C_n
  bool integral = false;              // every g_n is an integer
  bool reconstructs = false;          // sum_n g_n C_n reproduces the form exactly
};

struct SolutionSetReport {
  std::size_t truncation = 0;
  std::vector<MuSideForm> forms;
  std::vector<std::string> skipped;  // monomials not expressible over the dictionary
  std::vector<bool> clarke_present;  // C_n occurs among the MU-side forms
  bool mu_within_clarke = false;
  bool clarke_within_mu = false;
  bool equal = false;
};

/// Coefficients g_n with form = sum_n g_n C_n; g_n = sum_m form_m n! {m n}.
inline RationalVector clarke_coordinates(const RationalVector& form, std::size_t truncation) {
  RationalVector g(truncation + 1, BigRational(0));
  for (unsigned n = 0; n <= truncation; ++n) {
    for (unsigned m = n; m < form.size(); ++m) {
      if (form[m] != 0) g[n] += form[m] * BigRational(factorial(n) * stirling2(m, n));
    }
  }
  return g;
}

inline MuSideForm make_mu_form(std::string source, std::string basis_element, RationalVector form,
                               std::size_t truncation) {
  MuSideForm f;
  f.source = std::move(source);
  f.basis_element = std::move(basis_element);
  form.resize(std::max(form.size(), truncation + 1), BigRational(0));
  f.form = std::move(form);
  f.clarke_combination = clarke_coordinates(f.form, truncation);
  f.integral = std::all_of(f.clarke_combination.begin(), f.clarke_combination.end(),
                           [](const BigRational& g) { return is_integer(g); });
  RationalVector rebuilt(f.form.size(), BigRational(0));
  for (std::size_t n = 0; n <= truncation; ++n) {
    if (f.clarke_combination[n] == 0) continue;
    const auto row = clarke_form(n);
    for (std::size_t k = 0; k < row.size(); ++k) rebuilt[k] += f.clarke_combination[n] * row[k];
  }
  f.reconstructs = rebuilt == f.form;
  return f;
}

/// Monomials b^alpha e^{2h} eta_R(t) in QMU_*(MU_0) with t a dictionary product,
/// b-indices in [2, max_index], |alpha| <= max_factors and h <= max_h.
inline std::vector<HopfMonomial> monomial_battery(const Dictionary& dict, std::size_t max_index,
                                                  std::size_t max_factors, std::size_t max_h) {
  std::vector<HopfMonomial> out;
  std::vector<std::vector<std::size_t>> alphas{{}};
  for (std::size_t size = 1; size <= max_factors; ++size) {
    std::vector<std::vector<std::size_t>> next;
    for (const auto& a : alphas) {
      if (a.size() != size - 1) continue;
      std::size_t start = a.empty() ? 2 : a.back();
      for (std::size_t i = start; i <= max_index; ++i) {
        auto b = a;
        b.push_back(i);
        next.push_back(std::move(b));
      }
    }
    alphas.insert(alphas.end(), next.begin(), next.end());
  }
  for (const auto& alpha : alphas) {
    for (std::size_t h = 0; h <= max_h; ++h) {
      for (const auto& t : dict.product_basis(alpha.size() + h)) {
        out.emplace_back(alpha, h, t.value, t.half_degree, t.name);
      }
    }
  }
  return out;
}

/// Compares, at truncation N, the lattice of linear forms produced on the MU
/// side (K-projections of b_n eta_R(x1), and exact dictionary decompositions of
/// a battery of monomials) with the lattice spanned by C_0, ..., C_N.
inline SolutionSetReport solution_sets_equal(const FglEngine& engine, const Dictionary& dict,
                                             std::size_t truncation) {
  if (truncation > engine.config().order || truncation > engine.config().degree) {
    throw CapacityError("truncation " + std::to_string(truncation) + " needs series order and degree >= " +
                        std::to_string(truncation));
  }
  SolutionSetReport report;
  report.truncation = truncation;

  for (std::size_t n = 1; n <= truncation; ++n) {
    report.forms.push_back(make_mu_form("b(" + std::to_string(n) + ")*etaR(x1)", "K-projection",
                                        hopf_projection_form(engine, dict, n), truncation));
  }

  const std::size_t max_index = std::min<std::size_t>(4, truncation);
  for (const auto& xi : monomial_battery(dict, max_index, 3, 2)) {
    KPolynomial p;
    try {
      p = psi_hat(engine, xi);
    } catch (const CapacityError&) {
      report.skipped.push_back(xi.to_string());
      continue;
    }
    if (p.kdegree() > truncation) {
      report.skipped.push_back(xi.to_string());
      continue;
    }
    std::size_t degree = xi.t_half_degree();
    for (auto i : xi.alpha()) degree += i - 1;
    auto dec = decompose(linearize(p), dict.product_basis(degree));
    if (!dec) {
      report.skipped.push_back(xi.to_string());
      continue;
    }
    for (std::size_t b = 0; b < dec->basis.size(); ++b) {
      bool nonzero = std::any_of(dec->forms[b].begin(), dec->forms[b].end(),
                                 [](const BigRational& v) { return v != 0; });
      if (nonzero) report.forms.push_back(make_mu_form(xi.to_string(), dec->basis[b], dec->forms[b], truncation));
    }
  }

  report.clarke_present.assign(truncation + 1, false);
  for (std::size_t n = 0; n <= truncation; ++n) {
    auto target = clarke_form(n);
    target.resize(truncation + 1, BigRational(0));
    for (const auto& f : report.forms) {
      if (f.form == target) {
        report.clarke_present[n] = true;
        break;
      }
    }
  }
  report.mu_within_clarke =
      std::all_of(report.forms.begin(), report.forms.end(), [](const auto& f) { return f.integral && f.reconstructs; });
  report.clarke_within_mu =
      std::all_of(report.clarke_present.begin(), report.clarke_present.end(), [](bool b) { return b; });
  report.equal = report.mu_within_clarke && report.clarke_within_mu;
  return report;
}

}  // namespace adamsops
