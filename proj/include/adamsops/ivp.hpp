#pragma once

// Integer-valued polynomials in one variable w, stored in the binomial basis
// C(w, n). f maps Z into Z exactly when every binomial coordinate is an
// integer, and the sigma basis of operations is dual to this basis:
// <sigma_n, C(w, m)> = delta_{nm}.

#include <adamsops/opring.hpp>
#include <adamsops/rational.hpp>
#include <adamsops/stirling.hpp>

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>

namespace adamsops {

class IvpPoly {
 public:
  IvpPoly() = default;

  /// f(w) = sum_n coeffs[n] * C(w, n).
  explicit IvpPoly(RationalVector binom_coeffs) : coeffs_(std::move(binom_coeffs)) { normalize(); }

  static IvpPoly binom(std::size_t n, BigRational scale = 1) {
    RationalVector c(n + 1, BigRational(0));
    c[n] = std::move(scale);
    return IvpPoly(std::move(c));
  }

  static IvpPoly constant(BigRational c) { return IvpPoly(RationalVector{std::move(c)}); }

  /// The variable w = C(w, 1).
  static IvpPoly variable() { return binom(1); }

  /// Conversion from the power basis: w^h = sum_n n! {h n} C(w, n).
  static IvpPoly from_power_basis(const RationalVector& power) {
    RationalVector c(power.size(), BigRational(0));
    for (unsigned h = 0; h < power.size(); ++h) {
      if (power[h] == 0) continue;
      for (unsigned n = 0; n <= h; ++n) {
        c[n] += power[h] * BigRational(factorial(n) * stirling2(h, n));
      }
    }
    return IvpPoly(std::move(c));
  }

  /// Power-basis coefficients, via C(w, n) = (1/n!) sum_k s(n, k) w^k.
  RationalVector to_power_basis() const {
    RationalVector p(coeffs_.size(), BigRational(0));
    for (unsigned n = 0; n < coeffs_.size(); ++n) {
      if (coeffs_[n] == 0) continue;
      BigRational scale = coeffs_[n] / BigRational(factorial(n));
      for (unsigned k = 0; k <= n; ++k) p[k] += scale * BigRational(stirling1_signed(n, k));
    }
    return p;
  }

  const RationalVector& binom_coeffs() const { return coeffs_; }

  /// Degree of f; the zero polynomial reports degree 0.
  std::size_t degree() const { return coeffs_.empty() ? 0 : coeffs_.size() - 1; }
  bool is_zero() const { return coeffs_.empty(); }

  BigRational coeff(std::size_t n) const { return n < coeffs_.size() ? coeffs_[n] : BigRational(0); }

  BigRational operator()(const BigRational& w) const {
    BigRational acc = 0;
    for (unsigned n = 0; n < coeffs_.size(); ++n) {
      if (coeffs_[n] != 0) acc += coeffs_[n] * binomial_value(w, n);
    }
    return acc;
  }

  friend bool operator==(const IvpPoly&, const IvpPoly&) = default;

  friend IvpPoly operator+(const IvpPoly& f, const IvpPoly& g) {
    RationalVector c(std::max(f.coeffs_.size(), g.coeffs_.size()), BigRational(0));
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = f.coeff(i) + g.coeff(i);
    return IvpPoly(std::move(c));
  }

  friend IvpPoly operator-(const IvpPoly& f) {
    IvpPoly r = f;
    for (auto& c : r.coeffs_) c = -c;
    return r;
  }

  friend IvpPoly operator-(const IvpPoly& f, const IvpPoly& g) { return f + (-g); }

  friend IvpPoly operator*(const IvpPoly& f, const IvpPoly& g) {
    if (f.is_zero() || g.is_zero()) return IvpPoly();
    const auto pf = f.to_power_basis();
    const auto pg = g.to_power_basis();
    RationalVector prod(pf.size() + pg.size() - 1, BigRational(0));
    for (std::size_t i = 0; i < pf.size(); ++i) {
      if (pf[i] == 0) continue;
      for (std::size_t j = 0; j < pg.size(); ++j) prod[i + j] += pf[i] * pg[j];
    }
    return from_power_basis(prod);
  }

  friend IvpPoly operator*(const BigRational& s, const IvpPoly& f) {
    IvpPoly r = f;
    for (auto& c : r.coeffs_) c *= s;
    r.normalize();
    return r;
  }

 private:
  void normalize() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }

  RationalVector coeffs_;
};

/// Coordinate criterion: f(Z) is contained in Z iff all binomial coordinates are integers.
inline bool is_integer_valued(const IvpPoly& f) {
  for (const auto& c : f.binom_coeffs()) {
    if (!is_integer(c)) return false;
  }
  return true;
}

inline void assert_integer_valued(const IvpPoly& f) {
  if (!is_integer_valued(f)) throw DomainError("polynomial is not integer-valued");
}

/// Duality pairing <a, f> = sum_n a_n c_n; <theta, w^h> is lambda_h.
inline BigRational pairing(const SigmaCoeffs& a, const IvpPoly& f) {
  if (f.degree() > a.truncation()) {
    throw DomainError("pairing: polynomial degree " + std::to_string(f.degree()) +
                      " exceeds operation truncation " + std::to_string(a.truncation()));
  }
  BigRational acc = 0;
  const auto& c = f.binom_coeffs();
  for (std::size_t n = 0; n < c.size(); ++n) acc += a[n] * c[n];
  return acc;
}

/// The map u^a e^{2b} v^b -> lambda_b. The u-power does not affect the value.
inline BigRational pi_lambda(std::int64_t u_exp, std::size_t b_exp, const LambdaSeq& lam) {
  (void)u_exp;
  if (b_exp > lam.truncation()) {
    throw DomainError("pi_lambda: index " + std::to_string(b_exp) + " exceeds truncation " +
                      std::to_string(lam.truncation()));
  }
  return lam[b_exp];
}

}  // namespace adamsops
