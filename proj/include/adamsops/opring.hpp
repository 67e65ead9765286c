#pragma once

// Truncated model of the ring of additive degree-zero K-theory operations.
//
// An operation is stored either by its eigenvalues on the even homotopy
// groups (LambdaSeq, entry m acts on pi_{2m}) or by its coordinates in the
// sigma basis sigma_n = sum_k (-1)^(n+k) C(n,k) Psi^k (SigmaCoeffs). The two
// are related by the lower-triangular transforms
//
//   lambda_m = sum_{n<=m} a_n n! {m n}
//   a_n      = (1/n!) sum_{k<=n} (-1)^(n-k) [n k] lambda_k
//
// and an integer lambda-sequence is realized by an operation exactly when
// every a_n is an integer. Everything is "up to index N"; nothing here ever
// extends a sequence implicitly.

#include <adamsops/rational.hpp>
#include <adamsops/stirling.hpp>

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace adamsops {

template <typename Tag>
class TruncatedSequence {
 public:
  TruncatedSequence() : entries_(1, BigRational(0)) {}

  explicit TruncatedSequence(RationalVector entries) : entries_(std::move(entries)) {
    if (entries_.empty()) throw DomainError("a truncated sequence needs at least one entry");
  }

  static TruncatedSequence zeros(std::size_t truncation) {
    return TruncatedSequence(RationalVector(truncation + 1, BigRational(0)));
  }

  std::size_t truncation() const { return entries_.size() - 1; }
  std::size_t size() const { return entries_.size(); }

  const BigRational& operator[](std::size_t i) const { return entries_[i]; }
  BigRational& operator[](std::size_t i) { return entries_[i]; }

  const RationalVector& entries() const { return entries_; }

  bool all_integral() const {
    for (const auto& e : entries_) {
      if (!is_integer(e)) return false;
    }
    return true;
  }

  bool all_p_integral(std::int64_t p) const {
    for (const auto& e : entries_) {
      if (!is_p_integral(e, p)) return false;
    }
    return true;
  }

  friend bool operator==(const TruncatedSequence&, const TruncatedSequence&) = default;

  friend TruncatedSequence operator+(const TruncatedSequence& a, const TruncatedSequence& b) {
    require_same_truncation(a, b);
    TruncatedSequence r = a;
    for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
    return r;
  }

  friend TruncatedSequence operator-(const TruncatedSequence& a, const TruncatedSequence& b) {
    require_same_truncation(a, b);
    TruncatedSequence r = a;
    for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
    return r;
  }

  friend TruncatedSequence operator*(const BigRational& c, const TruncatedSequence& a) {
    TruncatedSequence r = a;
    for (auto& e : r.entries_) e *= c;
    return r;
  }

 private:
  static void require_same_truncation(const TruncatedSequence& a, const TruncatedSequence& b) {
    if (a.truncation() != b.truncation()) {
      throw DomainError("truncation mismatch: " + std::to_string(a.truncation()) + " vs " +
                        std::to_string(b.truncation()));
    }
  }

  RationalVector entries_;
};

struct LambdaTag {};
struct SigmaTag {};

/// Eigenvalues (lambda_0, ..., lambda_N) of an operation on pi_{2m}.
using LambdaSeq = TruncatedSequence<LambdaTag>;
/// Coordinates (a_0, ..., a_N) of an operation in the sigma basis.
using SigmaCoeffs = TruncatedSequence<SigmaTag>;

/// One line of a congruence certificate: the value C_n . lambda and its verdict.
struct CongruenceRecord {
  std::size_t n = 0;
  BigRational value;
  bool pass = false;
  // p-adic valuation of value (p-local certificates only; nullopt = +infinity).
  std::optional<int> valuation;
};

struct CongruenceCert {
  std::size_t truncation = 0;
  std::vector<CongruenceRecord> records;
  bool verdict = true;
  std::optional<std::int64_t> prime;
  std::string flavor = "integral";  // "integral", "plocal" or "summand"

  std::optional<std::size_t> first_failure() const {
    for (const auto& r : records) {
      if (!r.pass) return r.n;
    }
    return std::nullopt;
  }
};

// --- transforms ---------------------------------------------------------

/// Row n of the congruence system: coefficients of C_n on lambda_0..lambda_n,
/// (-1)^(n-k) [n k] / n!.
inline RationalVector clarke_form(std::size_t n) {
  RationalVector row(n + 1);
  BigRational inv_fact(BigInt(1), factorial(static_cast<unsigned>(n)));
  for (std::size_t k = 0; k <= n; ++k) {
    row[k] = inv_fact * BigRational(stirling1_signed(static_cast<unsigned>(n), static_cast<unsigned>(k)));
  }
  return row;
}

inline LambdaSeq sigma_to_lambda(const SigmaCoeffs& a) {
  auto lam = LambdaSeq::zeros(a.truncation());
  for (unsigned m = 0; m <= a.truncation(); ++m) {
    BigRational acc = 0;
    for (unsigned n = 0; n <= m; ++n) {
      if (a[n] == 0) continue;
      acc += a[n] * BigRational(factorial(n) * stirling2(m, n));
    }
    lam[m] = acc;
  }
  return lam;
}

inline SigmaCoeffs lambda_to_sigma(const LambdaSeq& lam) {
  auto a = SigmaCoeffs::zeros(lam.truncation());
  for (std::size_t n = 0; n <= lam.truncation(); ++n) {
    const auto row = clarke_form(n);
    BigRational acc = 0;
    for (std::size_t k = 0; k <= n; ++k) acc += row[k] * lam[k];
    a[n] = acc;
  }
  return a;
}

/// Explicit resize in sigma coordinates: extra coefficients are zero.
inline SigmaCoeffs resize(const SigmaCoeffs& a, std::size_t truncation) {
  RationalVector e(truncation + 1, BigRational(0));
  for (std::size_t i = 0; i <= std::min(truncation, a.truncation()); ++i) e[i] = a[i];
  return SigmaCoeffs(std::move(e));
}

/// Resizing a lambda sequence goes through sigma coordinates so that the
/// extension is the one with vanishing higher sigma coefficients.
inline LambdaSeq resize(const LambdaSeq& lam, std::size_t truncation) {
  return sigma_to_lambda(resize(lambda_to_sigma(lam), truncation));
}

// --- distinguished elements ---------------------------------------------

/// Eigenvalues of Psi^k: lambda_m = k^m (0^0 = 1).
inline LambdaSeq psi_lambda(std::int64_t k, std::size_t truncation) {
  auto lam = LambdaSeq::zeros(truncation);
  for (unsigned m = 0; m <= truncation; ++m) lam[m] = rpow(BigRational(k), m);
  return lam;
}

/// Sigma coordinates of Psi^k: a_n = C(k, n), valid for negative k as well.
inline SigmaCoeffs psi_sigma(std::int64_t k, std::size_t truncation) {
  auto a = SigmaCoeffs::zeros(truncation);
  for (unsigned n = 0; n <= truncation; ++n) a[n] = binomial_value(BigRational(k), n);
  return a;
}

inline SigmaCoeffs sigma_basis(std::size_t n, std::size_t truncation) {
  if (n > truncation) throw DomainError("sigma index exceeds truncation");
  auto a = SigmaCoeffs::zeros(truncation);
  a[n] = 1;
  return a;
}

inline LambdaSeq sigma_lambda(std::size_t n, std::size_t truncation) {
  return sigma_to_lambda(sigma_basis(n, truncation));
}

/// Coefficients of sigma_n in the Adams basis: sigma_n = sum_k c_k Psi^k.
inline std::vector<BigInt> sigma_in_adams_basis(unsigned n) {
  std::vector<BigInt> c(n + 1);
  for (unsigned k = 0; k <= n; ++k) {
    c[k] = ((n + k) % 2 == 0) ? binomial(n, k) : BigInt(-binomial(n, k));
  }
  return c;
}

// --- congruences --------------------------------------------------------

inline CongruenceCert check_congruences(const LambdaSeq& lam) {
  CongruenceCert cert;
  cert.truncation = lam.truncation();
  const auto a = lambda_to_sigma(lam);
  for (std::size_t n = 0; n <= lam.truncation(); ++n) {
    CongruenceRecord rec;
    rec.n = n;
    rec.value = a[n];
    rec.pass = is_integer(a[n]);
    cert.verdict = cert.verdict && rec.pass;
    cert.records.push_back(std::move(rec));
  }
  return cert;
}

// --- ring structure -----------------------------------------------------

/// Composition of diagonal operations: pointwise product of eigenvalues.
inline LambdaSeq multiply(const LambdaSeq& x, const LambdaSeq& y) {
  if (x.truncation() != y.truncation()) {
    throw DomainError("multiply: truncation mismatch " + std::to_string(x.truncation()) + " vs " +
                      std::to_string(y.truncation()));
  }
  auto r = x;
  for (std::size_t m = 0; m < r.size(); ++m) r[m] *= y[m];
  return r;
}

/// Structure constants of the sigma basis from Psi^k Psi^l = Psi^{kl}:
/// table[i][j][n] is the coefficient of sigma_n in sigma_i sigma_j.
inline std::vector<std::vector<std::vector<BigInt>>> sigma_product_table(std::size_t truncation) {
  const auto N = static_cast<unsigned>(truncation);
  std::vector<std::vector<BigInt>> adams(N + 1);
  for (unsigned i = 0; i <= N; ++i) adams[i] = sigma_in_adams_basis(i);

  std::vector<std::vector<std::vector<BigInt>>> table(
      N + 1, std::vector<std::vector<BigInt>>(N + 1, std::vector<BigInt>(N + 1)));
  for (unsigned i = 0; i <= N; ++i) {
    for (unsigned j = i; j <= N; ++j) {
      // Collect the Psi^{kl} content of sigma_i sigma_j first.
      std::map<unsigned, BigInt> psi;
      for (unsigned k = 0; k <= i; ++k) {
        for (unsigned l = 0; l <= j; ++l) psi[k * l] += adams[i][k] * adams[j][l];
      }
      for (unsigned n = 0; n <= N; ++n) {
        BigInt acc = 0;
        for (const auto& [r, c] : psi) {
          if (c != 0) acc += c * binomial(r, n);
        }
        table[i][j][n] = acc;
        table[j][i][n] = acc;
      }
    }
  }
  return table;
}

using SigmaProductTable = std::vector<std::vector<std::vector<BigInt>>>;

/// Product computed natively in sigma coordinates with a precomputed table.
inline SigmaCoeffs multiply(const SigmaCoeffs& x, const SigmaCoeffs& y, const SigmaProductTable& table) {
  if (x.truncation() != y.truncation()) {
    throw DomainError("multiply: truncation mismatch " + std::to_string(x.truncation()) + " vs " +
                      std::to_string(y.truncation()));
  }
  if (table.size() < x.size()) throw DomainError("multiply: product table is too small");
  auto r = SigmaCoeffs::zeros(x.truncation());
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < y.size(); ++j) {
      if (y[j] == 0) continue;
      BigRational c = x[i] * y[j];
      for (std::size_t n = 0; n < r.size(); ++n) {
        if (table[i][j][n] != 0) r[n] += c * BigRational(table[i][j][n]);
      }
    }
  }
  return r;
}

inline SigmaCoeffs multiply(const SigmaCoeffs& x, const SigmaCoeffs& y) {
  return multiply(x, y, sigma_product_table(std::max(x.truncation(), y.truncation())));
}

/// Coproduct of sigma_n: d[i][j] with Delta sigma_n = sum d_ij sigma_i (x) sigma_j,
/// obtained from the group-like Adams operations.
inline std::vector<std::vector<BigInt>> coproduct_sigma(unsigned n) {
  std::vector<std::vector<BigInt>> d(n + 1, std::vector<BigInt>(n + 1));
  const auto c = sigma_in_adams_basis(n);
  for (unsigned k = 0; k <= n; ++k) {
    for (unsigned i = 0; i <= k; ++i) {
      for (unsigned j = 0; j <= k; ++j) d[i][j] += c[k] * binomial(k, i) * binomial(k, j);
    }
  }
  return d;
}

/// Action of the operation on t in pi_{2m}: multiplication by lambda_m.
inline BigRational act_on_homotopy(const LambdaSeq& lam, std::size_t m, const BigRational& t) {
  if (m > lam.truncation()) {
    throw DomainError("homotopy index " + std::to_string(m) + " exceeds truncation " +
                      std::to_string(lam.truncation()));
  }
  return lam[m] * t;
}

// --- display ------------------------------------------------------------

/// Renders sum_k coeffs[k] * l_k over a common denominator, highest index
/// first: {0, -1, 1} -> "(l2 - l1)/2" style.
inline std::string format_form(const RationalVector& coeffs, const std::string& var = "l") {
  BigInt den = 1;
  for (const auto& c : coeffs) den = lcm(den, denominator(c));
  std::ostringstream out;
  bool first = true;
  for (std::size_t idx = coeffs.size(); idx-- > 0;) {
    if (coeffs[idx] == 0) continue;
    BigInt num = numerator(coeffs[idx] * BigRational(den));
    bool negative = num < 0;
    if (negative) num = -num;
    if (first) {
      if (negative) out << "-";
    } else {
      out << (negative ? " - " : " + ");
    }
    if (num != 1) out << num.str() << "*";
    out << var << idx;
    first = false;
  }
  if (first) return "0";
  if (den == 1) return out.str();
  return "(" + out.str() + ")/" + den.str();
}

}  // namespace adamsops
