#pragma once

// p-local split setting, p an odd prime.
//
// The Adams idempotent e_0 keeps the eigenvalues on pi_{2m} with (p-1) | m and
// zeroes the rest. Operations of the Adams summand G are recorded by their
// summand-indexed eigenvalues mu_n (on pi_{2(p-1)n}); mu belongs to S_G when
// its zero-extension satisfies every congruence C_n . lambda in Z_(p).

#include <adamsops/linalg.hpp>
#include <adamsops/opring.hpp>
#include <adamsops/rational.hpp>
#include <adamsops/stirling.hpp>

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace adamsops {

enum class PLocalFlavor { Full, Summand };

inline std::string to_string(PLocalFlavor f) { return f == PLocalFlavor::Full ? "full" : "summand"; }

class PLocalSeq {
 public:
  PLocalSeq(std::int64_t prime, RationalVector entries, PLocalFlavor flavor)
      : prime_(prime), entries_(std::move(entries)), flavor_(flavor) {
    require_odd_prime(prime_);
    if (entries_.empty()) throw DomainError("a p-local sequence needs at least one entry");
  }

  std::int64_t prime() const { return prime_; }
  const RationalVector& entries() const { return entries_; }
  PLocalFlavor flavor() const { return flavor_; }
  std::size_t truncation() const { return entries_.size() - 1; }
  const BigRational& operator[](std::size_t i) const { return entries_[i]; }

  friend bool operator==(const PLocalSeq&, const PLocalSeq&) = default;

 private:
  std::int64_t prime_;
  RationalVector entries_;
  PLocalFlavor flavor_;
};

inline PLocalSeq adams_idempotent(const LambdaSeq& lam, std::int64_t p) {
  require_odd_prime(p);
  RationalVector e(lam.size(), BigRational(0));
  const auto period = static_cast<std::size_t>(p - 1);
  for (std::size_t m = 0; m < lam.size(); ++m) {
    if (m % period == 0) e[m] = lam[m];
  }
  return PLocalSeq(p, std::move(e), PLocalFlavor::Full);
}

inline PLocalSeq adams_idempotent(const PLocalSeq& seq) {
  if (seq.flavor() != PLocalFlavor::Full) throw DomainError("adams_idempotent expects a full-flavor sequence");
  return adams_idempotent(LambdaSeq(seq.entries()), seq.prime());
}

/// Pointwise product (composition of diagonal operations).
inline PLocalSeq multiply(const PLocalSeq& a, const PLocalSeq& b) {
  if (a.prime() != b.prime() || a.flavor() != b.flavor() || a.truncation() != b.truncation()) {
    throw DomainError("multiply: p-local sequences differ in prime, flavor or truncation");
  }
  RationalVector e(a.entries().size());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = a[i] * b[i];
  return PLocalSeq(a.prime(), std::move(e), a.flavor());
}

inline CongruenceCert check_congruences_plocal(const PLocalSeq& seq) {
  if (seq.flavor() != PLocalFlavor::Full) {
    throw DomainError("check_congruences_plocal expects a full-flavor sequence; use summand_membership");
  }
  const auto a = lambda_to_sigma(LambdaSeq(seq.entries()));
  CongruenceCert cert;
  cert.truncation = seq.truncation();
  cert.prime = seq.prime();
  cert.flavor = "plocal";
  for (std::size_t n = 0; n < a.size(); ++n) {
    CongruenceRecord rec;
    rec.n = n;
    rec.value = a[n];
    rec.valuation = valuation(a[n], seq.prime());
    rec.pass = !rec.valuation || *rec.valuation >= 0;
    cert.verdict = cert.verdict && rec.pass;
    cert.records.push_back(std::move(rec));
  }
  return cert;
}

/// lambda_m = mu_{m/(p-1)} when (p-1) | m, else 0; truncation (p-1) * N.
inline LambdaSeq zero_extend(const PLocalSeq& mu) {
  if (mu.flavor() != PLocalFlavor::Summand) throw DomainError("zero_extend expects a summand-flavor sequence");
  const auto period = static_cast<std::size_t>(mu.prime() - 1);
  auto lam = LambdaSeq::zeros(period * mu.truncation());
  for (std::size_t n = 0; n <= mu.truncation(); ++n) lam[period * n] = mu[n];
  return lam;
}

/// Summand-indexed eigenvalues of a full-flavor sequence.
inline PLocalSeq restrict_to_summand(const PLocalSeq& full) {
  const auto period = static_cast<std::size_t>(full.prime() - 1);
  RationalVector e;
  for (std::size_t m = 0; m < full.entries().size(); m += period) e.push_back(full[m]);
  return PLocalSeq(full.prime(), std::move(e), PLocalFlavor::Summand);
}

/// Membership in S_G at truncation: every congruence on the zero-extension,
/// up to index (p-1) N, is p-integral.
inline CongruenceCert summand_membership(const PLocalSeq& mu) {
  auto cert = check_congruences_plocal(PLocalSeq(mu.prime(), zero_extend(mu).entries(), PLocalFlavor::Full));
  cert.flavor = "summand";
  return cert;
}

/// Summand-indexed eigenvalues of e_0 sigma_n: entry j is n! {(p-1)j n}.
inline PLocalSeq e0_sigma_summand(std::int64_t p, std::size_t n, std::size_t truncation) {
  require_odd_prime(p);
  RationalVector e(truncation + 1);
  const auto period = static_cast<unsigned>(p - 1);
  for (std::size_t j = 0; j <= truncation; ++j) {
    e[j] = BigRational(factorial(static_cast<unsigned>(n)) *
                       stirling2(period * static_cast<unsigned>(j), static_cast<unsigned>(n)));
  }
  return PLocalSeq(p, std::move(e), PLocalFlavor::Summand);
}

// --- lattice reduction over Z_(p) -------------------------------------------

struct PLocalEchelon {
  std::vector<std::size_t> selected;  // row index chosen for each pivot column, in column order
  std::vector<std::size_t> pivot_columns;
  std::vector<int> pivot_valuations;
  bool full_rank = false;
};

/// Greedy column-by-column reduction: in each column the live row whose
/// reduced entry has the least p-adic valuation becomes the pivot (lowest
/// row index on ties). Every multiplier used is therefore p-integral.
inline PLocalEchelon plocal_echelon(const RationalMatrix& rows, std::int64_t p) {
  PLocalEchelon out;
  if (rows.empty()) return out;
  const std::size_t cols = rows[0].size();
  RationalMatrix work = rows;
  std::vector<bool> alive(rows.size(), true);
  for (std::size_t c = 0; c < cols; ++c) {
    std::optional<std::size_t> best;
    int best_val = 0;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (!alive[r] || work[r][c] == 0) continue;
      int v = *valuation(work[r][c], p);
      if (!best || v < best_val) {
        best = r;
        best_val = v;
      }
    }
    if (!best) continue;
    alive[*best] = false;
    out.selected.push_back(*best);
    out.pivot_columns.push_back(c);
    out.pivot_valuations.push_back(best_val);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (!alive[r] || work[r][c] == 0) continue;
      BigRational f = work[r][c] / work[*best][c];
      for (std::size_t j = c; j < cols; ++j) work[r][j] -= f * work[*best][j];
    }
  }
  out.full_rank = out.selected.size() == cols;
  return out;
}

struct BasisReport {
  std::int64_t prime = 3;
  std::size_t truncation = 0;
  RationalMatrix rows;                // summand sequences of e_0 sigma_n, n = 0..(p-1)N
  std::vector<std::size_t> selected;  // sigma-hat_j = e_0 sigma_{selected[j]}
  std::vector<int> pivot_valuations;  // valuations of the summand-side pivots
  RationalMatrix change_of_basis;     // rows[n] = sum_j change_of_basis[n][j] * rows[selected[j]]
  bool reproduces_all_rows = false;   // every coefficient is p-integral and the identity is exact
  // Minor of the selected elements in the sigma coordinates of A(KU_(p)),
  // taken at the summand positions (p-1)j. A unit minor means the selected
  // elements form a Z_(p)-basis of e_0 A(KU_(p)) at this truncation.
  BigRational pivot_minor;
  std::optional<int> pivot_minor_valuation;
  // Index of the lattice S_G in Z_(p)^(N+1), computed twice: from the summand
  // pivots, and by duality from the lattice spanned by the congruence forms.
  int lattice_index_valuation = 0;
  int dual_index_valuation = 0;
  // Which choices above depend on the greedy pivot rule rather than on S_G.
  std::string basis_choice_note =
      "selected rows depend on greedy leading-index pivoting with minimal-valuation tie-break";
};

inline BasisReport spanning_set_reduce(std::int64_t p, std::size_t truncation) {
  require_odd_prime(p);
  BasisReport report;
  report.prime = p;
  report.truncation = truncation;
  const auto period = static_cast<std::size_t>(p - 1);
  const std::size_t row_count = period * truncation + 1;
  for (std::size_t n = 0; n < row_count; ++n) report.rows.push_back(e0_sigma_summand(p, n, truncation).entries());

  const auto ech = plocal_echelon(report.rows, p);
  if (!ech.full_rank) throw Error("spanning set does not have full rank");
  report.selected = ech.selected;
  report.pivot_valuations = ech.pivot_valuations;
  for (int v : ech.pivot_valuations) report.lattice_index_valuation += v;

  // Change of basis, solved independently of the elimination multipliers.
  const std::size_t dim = truncation + 1;
  RationalMatrix basis_t(dim, RationalVector(dim));
  for (std::size_t j = 0; j < dim; ++j) {
    for (std::size_t c = 0; c < dim; ++c) basis_t[c][j] = report.rows[report.selected[j]][c];
  }
  report.reproduces_all_rows = true;
  for (const auto& row : report.rows) {
    auto coeffs = solve_exact(basis_t, row);
    if (!coeffs) {
      report.reproduces_all_rows = false;
      report.change_of_basis.emplace_back(dim, BigRational(0));
      continue;
    }
    for (const auto& c : *coeffs) {
      if (!is_p_integral(c, p)) report.reproduces_all_rows = false;
    }
    RationalVector rebuilt(dim, BigRational(0));
    for (std::size_t j = 0; j < dim; ++j) {
      for (std::size_t c = 0; c < dim; ++c) rebuilt[c] += (*coeffs)[j] * report.rows[report.selected[j]][c];
    }
    if (rebuilt != row) report.reproduces_all_rows = false;
    report.change_of_basis.push_back(std::move(*coeffs));
  }

  RationalMatrix minor(dim, RationalVector(dim));
  for (std::size_t j = 0; j < dim; ++j) {
    PLocalSeq mu(p, report.rows[report.selected[j]], PLocalFlavor::Summand);
    const auto sigma = lambda_to_sigma(zero_extend(mu));
    for (std::size_t c = 0; c < dim; ++c) minor[j][c] = sigma[period * c];
  }
  report.pivot_minor = determinant(minor);
  report.pivot_minor_valuation = valuation(report.pivot_minor, p);

  // S_G = { mu : R mu is p-integral } with R the congruence forms restricted to
  // summand positions; its index is minus the valuation of the row lattice of R.
  RationalMatrix forms;
  for (std::size_t n = 0; n < row_count; ++n) {
    const auto c = clarke_form(n);
    RationalVector r(dim, BigRational(0));
    for (std::size_t j = 0; j < dim; ++j) {
      if (period * j < c.size()) r[j] = c[period * j];
    }
    forms.push_back(std::move(r));
  }
  const auto dual = plocal_echelon(forms, p);
  if (!dual.full_rank) throw Error("congruence forms do not have full rank");
  for (int v : dual.pivot_valuations) report.dual_index_valuation -= v;
  return report;
}

}  // namespace adamsops
