#pragma once

// Truncated formal group law machinery over Q[m_1, m_2, ...].
//
// The universal logarithm is log(x) = x + m_1 x^2 + m_2 x^3 + ..., with m_i of
// degree i. Everything else (exp, the law F(s,t) = exp(log s + log t), the
// k-series and the Adams orientation series k^{-1} exp(k log x)) is derived
// from it exactly. Coefficients are sparse in the m's, dense in x.

#include <adamsops/rational.hpp>

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace adamsops {

/// Exponent vector over m_1, m_2, ...; trailing zeros are always trimmed.
using Monomial = std::vector<std::uint16_t>;

inline int monomial_degree(const Monomial& mono) {
  int d = 0;
  for (std::size_t i = 0; i < mono.size(); ++i) d += static_cast<int>(i + 1) * mono[i];
  return d;
}

inline Monomial monomial_product(const Monomial& a, const Monomial& b) {
  Monomial r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  return r;
}

inline std::string monomial_to_string(const Monomial& mono) {
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = 0; i < mono.size(); ++i) {
    if (mono[i] == 0) continue;
    if (!first) out << "*";
    out << "m" << (i + 1);
    if (mono[i] > 1) out << "^" << mono[i];
    first = false;
  }
  return first ? "1" : out.str();
}

/// Polynomial over Q in the graded generators m_i (deg m_i = i).
class GradedPoly {
 public:
  using Terms = std::map<Monomial, BigRational>;

  GradedPoly() = default;
  GradedPoly(BigRational c) {  // NOLINT(google-explicit-constructor)
    if (c != 0) terms_.emplace(Monomial{}, std::move(c));
  }
  GradedPoly(int c) : GradedPoly(BigRational(c)) {}  // NOLINT(google-explicit-constructor)

  static GradedPoly generator(std::size_t i, BigRational scale = 1) {
    if (i == 0) throw DomainError("generators are m_1, m_2, ...");
    Monomial mono(i, 0);
    mono[i - 1] = 1;
    GradedPoly p;
    p.add_term(mono, std::move(scale));
    return p;
  }

  static GradedPoly from_terms(const Terms& terms) {
    GradedPoly p;
    for (const auto& [mono, c] : terms) p.add_term(mono, c);
    return p;
  }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  /// Coefficient of a monomial (zero when absent).
  BigRational coeff(const Monomial& mono) const {
    auto it = terms_.find(trimmed(mono));
    return it == terms_.end() ? BigRational(0) : it->second;
  }

  /// Constant term.
  BigRational constant() const { return coeff(Monomial{}); }

  /// Highest total degree of a term; -1 for the zero polynomial.
  int degree() const {
    int d = -1;
    for (const auto& [mono, c] : terms_) d = std::max(d, monomial_degree(mono));
    return d;
  }

  bool is_homogeneous(int d) const {
    for (const auto& [mono, c] : terms_) {
      if (monomial_degree(mono) != d) return false;
    }
    return true;
  }

  /// Largest generator index that occurs.
  std::size_t max_generator() const {
    std::size_t g = 0;
    for (const auto& [mono, c] : terms_) g = std::max(g, mono.size());
    return g;
  }

  /// Drops every term of total degree above max_degree.
  GradedPoly truncated(int max_degree) const {
    GradedPoly r;
    for (const auto& [mono, c] : terms_) {
      if (monomial_degree(mono) <= max_degree) r.terms_.emplace(mono, c);
    }
    return r;
  }

  /// Ring map m_i -> values[i-1].
  BigRational evaluate(const std::function<BigRational(std::size_t)>& value_of_generator) const {
    BigRational total = 0;
    for (const auto& [mono, c] : terms_) {
      BigRational t = c;
      for (std::size_t i = 0; i < mono.size(); ++i) {
        if (mono[i] > 0) t *= rpow(value_of_generator(i + 1), mono[i]);
      }
      total += t;
    }
    return total;
  }

  void add_term(const Monomial& mono, const BigRational& c) {
    if (c == 0) return;
    auto key = trimmed(mono);
    auto [it, inserted] = terms_.emplace(key, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  GradedPoly& operator+=(const GradedPoly& o) {
    for (const auto& [mono, c] : o.terms_) add_term(mono, c);
    return *this;
  }

  GradedPoly& operator-=(const GradedPoly& o) {
    for (const auto& [mono, c] : o.terms_) add_term(mono, -c);
    return *this;
  }

  friend GradedPoly operator+(GradedPoly a, const GradedPoly& b) { return a += b; }
  friend GradedPoly operator-(GradedPoly a, const GradedPoly& b) { return a -= b; }
  friend GradedPoly operator-(const GradedPoly& a) { return GradedPoly() - a; }

  friend GradedPoly operator*(const GradedPoly& a, const GradedPoly& b) {
    GradedPoly r;
    for (const auto& [ma, ca] : a.terms_) {
      for (const auto& [mb, cb] : b.terms_) r.add_term(monomial_product(ma, mb), ca * cb);
    }
    return r;
  }

  friend GradedPoly operator*(const BigRational& s, const GradedPoly& a) {
    if (s == 0) return GradedPoly();
    GradedPoly r = a;
    for (auto& [mono, c] : r.terms_) c *= s;
    return r;
  }

  GradedPoly pow(unsigned e) const {
    GradedPoly r(1);
    for (unsigned i = 0; i < e; ++i) r = r * *this;
    return r;
  }

  friend bool operator==(const GradedPoly&, const GradedPoly&) = default;

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    // Highest degree first, then by monomial order, for readable and stable output.
    std::vector<std::pair<Monomial, BigRational>> sorted(terms_.begin(), terms_.end());
    std::stable_sort(sorted.begin(), sorted.end(), [](const auto& x, const auto& y) {
      return monomial_degree(x.first) > monomial_degree(y.first);
    });
    for (const auto& [mono, c] : sorted) {
      BigRational mag = c < 0 ? BigRational(-c) : c;
      if (first) {
        if (c < 0) out << "-";
      } else {
        out << (c < 0 ? " - " : " + ");
      }
      if (mono.empty()) {
        out << adamsops::to_string(mag);
      } else {
        if (mag != 1) out << adamsops::to_string(mag) << "*";
        out << monomial_to_string(mono);
      }
      first = false;
    }
    return out.str();
  }

 private:
  static Monomial trimmed(Monomial mono) {
    while (!mono.empty() && mono.back() == 0) mono.pop_back();
    return mono;
  }

  Terms terms_;
};

/// Polynomial in the formal eigenvalue variable kappa with GradedPoly coefficients.
class KPolynomial {
 public:
  KPolynomial() = default;
  explicit KPolynomial(std::vector<GradedPoly> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }
  KPolynomial(GradedPoly c) : coeffs_{std::move(c)} { normalize(); }  // NOLINT(google-explicit-constructor)

  /// c * kappa^power.
  static KPolynomial monomial(std::size_t power, GradedPoly c = GradedPoly(1)) {
    std::vector<GradedPoly> v(power + 1);
    v[power] = std::move(c);
    return KPolynomial(std::move(v));
  }

  const std::vector<GradedPoly>& coeffs() const { return coeffs_; }
  GradedPoly coeff(std::size_t power) const {
    return power < coeffs_.size() ? coeffs_[power] : GradedPoly();
  }
  bool is_zero() const { return coeffs_.empty(); }

  /// kappa-degree; the zero polynomial reports 0.
  std::size_t kdegree() const { return coeffs_.empty() ? 0 : coeffs_.size() - 1; }

  /// Specialization kappa = k.
  GradedPoly at(const BigRational& k) const {
    GradedPoly r;
    BigRational kp = 1;
    for (const auto& c : coeffs_) {
      r += kp * c;
      kp *= k;
    }
    return r;
  }

  friend KPolynomial operator+(const KPolynomial& a, const KPolynomial& b) {
    std::vector<GradedPoly> v(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.coeff(i) + b.coeff(i);
    return KPolynomial(std::move(v));
  }

  friend KPolynomial operator-(const KPolynomial& a, const KPolynomial& b) {
    std::vector<GradedPoly> v(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.coeff(i) - b.coeff(i);
    return KPolynomial(std::move(v));
  }

  friend KPolynomial operator*(const KPolynomial& a, const KPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return KPolynomial();
    std::vector<GradedPoly> v(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (a.coeffs_[i].is_zero()) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return KPolynomial(std::move(v));
  }

  friend bool operator==(const KPolynomial&, const KPolynomial&) = default;

  std::string to_string() const {
    if (coeffs_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (std::size_t p = 0; p < coeffs_.size(); ++p) {
      if (coeffs_[p].is_zero()) continue;
      if (!first) out << " + ";
      out << "(" << coeffs_[p].to_string() << ")";
      if (p > 0) out << "*k^" << p;
      first = false;
    }
    return out.str();
  }

 private:
  void normalize() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
  }

  std::vector<GradedPoly> coeffs_;
};

/// Power series in one variable x truncated after x^order. Index 0 is the
/// constant term, which is zero for every series used in composition.
template <typename Coeff>
class TruncSeries {
 public:
  TruncSeries() = default;
  explicit TruncSeries(std::size_t order) : coeffs_(order + 1) {}
  explicit TruncSeries(std::vector<Coeff> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) coeffs_.resize(1);
  }

  static TruncSeries identity(std::size_t order) {
    TruncSeries s(order);
    if (order >= 1) s.coeffs_[1] = Coeff(1);
    return s;
  }

  std::size_t order() const { return coeffs_.size() - 1; }
  const Coeff& operator[](std::size_t i) const { return coeffs_[i]; }
  Coeff& operator[](std::size_t i) { return coeffs_[i]; }
  const std::vector<Coeff>& coeffs() const { return coeffs_; }

  friend TruncSeries operator+(const TruncSeries& a, const TruncSeries& b) {
    TruncSeries r(std::min(a.order(), b.order()));
    for (std::size_t i = 0; i <= r.order(); ++i) r.coeffs_[i] = a.coeffs_[i] + b.coeffs_[i];
    return r;
  }

  friend TruncSeries operator-(const TruncSeries& a, const TruncSeries& b) {
    TruncSeries r(std::min(a.order(), b.order()));
    for (std::size_t i = 0; i <= r.order(); ++i) r.coeffs_[i] = a.coeffs_[i] - b.coeffs_[i];
    return r;
  }

  friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
    TruncSeries r(std::min(a.order(), b.order()));
    for (std::size_t i = 0; i <= r.order(); ++i) {
      for (std::size_t j = 0; i + j <= r.order(); ++j) r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return r;
  }

  friend bool operator==(const TruncSeries&, const TruncSeries&) = default;

 private:
  std::vector<Coeff> coeffs_;
};

using GradedSeries = TruncSeries<GradedPoly>;
using KSeries = TruncSeries<KPolynomial>;

inline GradedSeries scale(const GradedSeries& s, const BigRational& c) {
  GradedSeries r(s.order());
  for (std::size_t i = 0; i <= s.order(); ++i) r[i] = c * s[i];
  return r;
}

/// f(g(x)) truncated to the common order; g must have zero constant term.
inline GradedSeries compose(const GradedSeries& f, const GradedSeries& g) {
  if (!g[0].is_zero()) throw DomainError("compose: inner series has a constant term");
  const std::size_t order = std::min(f.order(), g.order());
  GradedSeries result(order);
  GradedSeries power(order);
  power[0] = GradedPoly(1);
  for (std::size_t i = 0; i <= order; ++i) {
    if (i > 0) power = power * g;
    if (f[i].is_zero()) continue;
    for (std::size_t j = 0; j <= order; ++j) result[j] += f[i] * power[j];
  }
  return result;
}

/// Compositional inverse of a series x*c + ..., c a nonzero rational constant.
inline GradedSeries compositional_inverse(const GradedSeries& f) {
  const std::size_t order = f.order();
  if (order < 1 || !f[0].is_zero()) throw DomainError("inverse: series must start at x^1");
  const GradedPoly& lead = f[1];
  if (lead.is_zero() || lead.degree() != 0) {
    throw DomainError("inverse: linear coefficient must be a nonzero rational constant");
  }
  const BigRational inv_lead = BigRational(1) / lead.constant();
  // Solve f(g(y)) = y one coefficient at a time.
  GradedSeries g(order);
  g[1] = GradedPoly(inv_lead);
  for (std::size_t n = 2; n <= order; ++n) {
    GradedSeries trial = g;
    trial[n] = GradedPoly();
    GradedSeries composed = compose(f, trial);
    g[n] = -inv_lead * composed[n];
  }
  return g;
}

struct FglConfig {
  std::size_t order = 10;   // T: series are kept through x^T
  std::size_t degree = 9;   // D: largest total m-degree that may be produced
};

/// Sparse multivariate power series truncated by total order.
class MultiSeries {
 public:
  using Exponents = std::vector<std::uint16_t>;

  MultiSeries(std::size_t variables, std::size_t order) : vars_(variables), order_(order) {}

  static MultiSeries variable(std::size_t variables, std::size_t index, std::size_t order) {
    MultiSeries s(variables, order);
    Exponents e(variables, 0);
    e[index] = 1;
    if (order >= 1) s.terms_.emplace(e, GradedPoly(1));
    return s;
  }

  static MultiSeries constant(std::size_t variables, std::size_t order, GradedPoly c) {
    MultiSeries s(variables, order);
    if (!c.is_zero()) s.terms_.emplace(Exponents(variables, 0), std::move(c));
    return s;
  }

  std::size_t variables() const { return vars_; }
  std::size_t order() const { return order_; }
  const std::map<Exponents, GradedPoly>& terms() const { return terms_; }

  GradedPoly coeff(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? GradedPoly() : it->second;
  }

  void add(const Exponents& e, const GradedPoly& c) {
    if (c.is_zero()) return;
    std::size_t total = 0;
    for (auto x : e) total += x;
    if (total > order_) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  friend MultiSeries operator+(const MultiSeries& a, const MultiSeries& b) {
    MultiSeries r(a.vars_, std::min(a.order_, b.order_));
    for (const auto& [e, c] : a.terms_) r.add(e, c);
    for (const auto& [e, c] : b.terms_) r.add(e, c);
    return r;
  }

  friend MultiSeries operator*(const MultiSeries& a, const MultiSeries& b) {
    MultiSeries r(a.vars_, std::min(a.order_, b.order_));
    for (const auto& [ea, ca] : a.terms_) {
      for (const auto& [eb, cb] : b.terms_) {
        Exponents e(a.vars_);
        std::size_t total = 0;
        for (std::size_t i = 0; i < a.vars_; ++i) {
          e[i] = static_cast<std::uint16_t>(ea[i] + eb[i]);
          total += e[i];
        }
        if (total <= r.order_) r.add(e, ca * cb);
      }
    }
    return r;
  }

  friend MultiSeries operator*(const GradedPoly& s, const MultiSeries& a) {
    MultiSeries r(a.vars_, a.order_);
    for (const auto& [e, c] : a.terms_) r.add(e, s * c);
    return r;
  }

  friend bool operator==(const MultiSeries& a, const MultiSeries& b) { return a.terms_ == b.terms_; }

 private:
  std::size_t vars_;
  std::size_t order_;
  std::map<Exponents, GradedPoly> terms_;
};

/// f(s) with s a multivariate series without constant term.
inline MultiSeries substitute(const GradedSeries& f, const MultiSeries& s) {
  MultiSeries result(s.variables(), std::min(f.order(), s.order()));
  MultiSeries power = MultiSeries::constant(s.variables(), result.order(), GradedPoly(1));
  for (std::size_t i = 0; i <= f.order(); ++i) {
    if (i > 0) power = power * s;
    if (!f[i].is_zero()) result = result + f[i] * power;
  }
  return result;
}

/// F(A, B) for a two-variable law F and series A, B without constant terms.
inline MultiSeries compose_law(const MultiSeries& law, const MultiSeries& a, const MultiSeries& b) {
  if (law.variables() != 2) throw DomainError("compose_law expects a two-variable law");
  const std::size_t order = std::min({law.order(), a.order(), b.order()});
  std::vector<MultiSeries> a_pow{MultiSeries::constant(a.variables(), order, GradedPoly(1))};
  std::vector<MultiSeries> b_pow{MultiSeries::constant(b.variables(), order, GradedPoly(1))};
  for (std::size_t i = 1; i <= order; ++i) {
    a_pow.push_back(a_pow.back() * a);
    b_pow.push_back(b_pow.back() * b);
  }
  MultiSeries result(a.variables(), order);
  for (const auto& [e, c] : law.terms()) {
    if (e[0] + e[1] > order) continue;
    result = result + c * (a_pow[e[0]] * b_pow[e[1]]);
  }
  return result;
}

/// Engine holding the universal log/exp pair at a fixed capacity.
class FglEngine {
 public:
  static constexpr std::size_t kMaxOrder = 24;

  explicit FglEngine(FglConfig config = {}) : config_(config) {
    if (config_.order < 1 || config_.order > kMaxOrder) {
      throw CapacityError("series order must lie in [1, " + std::to_string(kMaxOrder) + "]");
    }
    if (config_.degree + 1 < config_.order) {
      throw CapacityError("degree bound D = " + std::to_string(config_.degree) +
                          " is too small for order T = " + std::to_string(config_.order) +
                          " (need D >= T - 1)");
    }
    log_ = GradedSeries(config_.order);
    log_[1] = GradedPoly(1);
    for (std::size_t i = 2; i <= config_.order; ++i) log_[i] = GradedPoly::generator(i - 1);
    exp_ = compositional_inverse(log_);
    log_powers_.push_back(GradedSeries(config_.order));
    log_powers_[0][0] = GradedPoly(1);
    for (std::size_t h = 1; h <= config_.order; ++h) log_powers_.push_back(log_powers_.back() * log_);
  }

  const FglConfig& config() const { return config_; }

  /// x + m_1 x^2 + ... + m_{T-1} x^T.
  GradedSeries log_series(std::size_t order) const { return truncate(log_, order); }

  /// Compositional inverse of log_series.
  GradedSeries exp_series(std::size_t order) const { return truncate(exp_, order); }

  /// Coefficient a_{ij} of s^i t^j in F(s,t) = exp(log s + log t).
  GradedPoly fgl_coeff(std::size_t i, std::size_t j) const {
    if (i + j > config_.order) {
      throw CapacityError("fgl_coeff(" + std::to_string(i) + "," + std::to_string(j) +
                          ") needs order " + std::to_string(i + j));
    }
    return fgl_series(i + j).coeff({static_cast<std::uint16_t>(i), static_cast<std::uint16_t>(j)});
  }

  /// F(s,t) through total order `order`.
  MultiSeries fgl_series(std::size_t order) const {
    require_order(order);
    MultiSeries sum = MultiSeries(2, order);
    for (std::size_t var = 0; var < 2; ++var) {
      const auto x = MultiSeries::variable(2, var, order);
      sum = sum + substitute(log_series(order), x);
    }
    return substitute(exp_series(order), sum);
  }

  /// The k-series [k](x) = exp(k log x) for a rational k.
  GradedSeries k_series(const BigRational& k, std::size_t order) const {
    require_order(order);
    return compose(exp_series(order), scale(log_series(order), k));
  }

  /// kappa^{-1} exp(kappa log x) with kappa formal: the coefficient of x^i is
  /// B_i(kappa) = sum_h e_h [x^i](log x)^h kappa^{h-1}, e_h the exp coefficients.
  KSeries adams_orientation_series(std::size_t order) const {
    require_order(order);
    KSeries s(order);
    for (std::size_t i = 1; i <= order; ++i) {
      std::vector<GradedPoly> by_power(i);
      for (std::size_t h = 1; h <= i; ++h) by_power[h - 1] = exp_[h] * log_powers_[h][i];
      s[i] = KPolynomial(std::move(by_power));
    }
    return s;
  }

 private:
  void require_order(std::size_t order) const {
    if (order > config_.order) {
      throw CapacityError("requested order " + std::to_string(order) + " exceeds configured order " +
                          std::to_string(config_.order));
    }
  }

  GradedSeries truncate(const GradedSeries& s, std::size_t order) const {
    require_order(order);
    std::vector<GradedPoly> c(s.coeffs().begin(), s.coeffs().begin() + static_cast<std::ptrdiff_t>(order + 1));
    return GradedSeries(std::move(c));
  }

  FglConfig config_;
  GradedSeries log_;
  GradedSeries exp_;
  std::vector<GradedSeries> log_powers_;
};

/// Logarithm coefficients of the multiplicative law s + t + st, i.e.
/// log(x) = ln(1 + x): m_i -> (-1)^i / (i + 1). Under this ring map the
/// coefficient a_{11} goes to 1 and a_{21} to 0.
inline BigRational multiplicative_log_coefficient(std::size_t i) {
  BigRational v(BigInt(1), BigInt(i + 1));
  return (i % 2 == 0) ? v : BigRational(-v);
}

}  // namespace adamsops
