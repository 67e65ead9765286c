#pragma once

// Exact combinatorics kernel: binomials, Stirling numbers of both kinds and
// the alternating binomial power sum that links them.

#include <adamsops/rational.hpp>

#include <vector>

namespace adamsops {

namespace detail {

/// Grow-only triangular table filled row by row from a recurrence.
/// Instances are thread_local, so no synchronization is needed.
template <typename Recurrence>
class TriangleMemo {
 public:
  explicit TriangleMemo(Recurrence rec) : rec_(rec) {}

  const BigInt& at(unsigned n, unsigned k) {
    while (rows_.size() <= n) {
      unsigned r = static_cast<unsigned>(rows_.size());
      std::vector<BigInt> row(r + 1);
      for (unsigned c = 0; c <= r; ++c) row[c] = rec_(*this, r, c);
      rows_.push_back(std::move(row));
    }
    return rows_[n][k];
  }

  // Entry lookup for the recurrence; k > n yields zero.
  BigInt prev(unsigned n, unsigned k) const {
    if (k > n) return 0;
    return rows_[n][k];
  }

 private:
  Recurrence rec_;
  std::vector<std::vector<BigInt>> rows_;
};

template <typename Recurrence>
TriangleMemo(Recurrence) -> TriangleMemo<Recurrence>;

inline auto pascal_rule = [](const auto& t, unsigned n, unsigned k) -> BigInt {
  if (k == 0 || k == n) return 1;
  return t.prev(n - 1, k - 1) + t.prev(n - 1, k);
};

inline auto stirling2_rule = [](const auto& t, unsigned n, unsigned k) -> BigInt {
  if (n == 0) return k == 0 ? 1 : 0;
  if (k == 0) return 0;
  return BigInt(k) * t.prev(n - 1, k) + t.prev(n - 1, k - 1);
};

inline auto stirling1_rule = [](const auto& t, unsigned n, unsigned k) -> BigInt {
  if (n == 0) return k == 0 ? 1 : 0;
  if (k == 0) return 0;
  return t.prev(n - 1, k - 1) + BigInt(n - 1) * t.prev(n - 1, k);
};

}  // namespace detail

/// C(n, k); zero when k < 0 or k > n.
inline BigInt binomial(unsigned n, long long k) {
  if (k < 0 || k > static_cast<long long>(n)) return 0;
  thread_local detail::TriangleMemo table(detail::pascal_rule);
  return table.at(n, static_cast<unsigned>(k));
}

/// Generalized binomial C(w, n) = w(w-1)...(w-n+1)/n! for any rational w.
inline BigRational binomial_value(const BigRational& w, unsigned n) {
  BigRational r = 1;
  for (unsigned i = 0; i < n; ++i) r *= (w - i);
  return r / BigRational(factorial(n));
}

/// Stirling number of the second kind {m n}: partitions of an m-set into n blocks.
inline BigInt stirling2(unsigned m, unsigned n) {
  if (n > m) return 0;
  thread_local detail::TriangleMemo table(detail::stirling2_rule);
  return table.at(m, n);
}

/// Unsigned Stirling number of the first kind: permutations of n with k cycles.
inline BigInt stirling1_unsigned(unsigned n, unsigned k) {
  if (k > n) return 0;
  thread_local detail::TriangleMemo table(detail::stirling1_rule);
  return table.at(n, k);
}

/// Signed Stirling number of the first kind, (-1)^(n-k) times the unsigned one.
inline BigInt stirling1_signed(unsigned n, unsigned k) {
  BigInt s = stirling1_unsigned(n, k);
  return ((n - k) % 2 == 0) ? s : BigInt(-s);
}

/// Sum_{k=0..n} (-1)^(n+k) C(n,k) k^m by direct summation (0^0 = 1).
/// Equals n! * {m n}.
inline BigInt alternating_power_sum(unsigned n, unsigned m) {
  BigInt total = 0;
  for (unsigned k = 0; k <= n; ++k) {
    BigInt term = binomial(n, k) * ipow(BigInt(k), m);
    if ((n + k) % 2 == 0) {
      total += term;
    } else {
      total -= term;
    }
  }
  return total;
}

}  // namespace adamsops
