#pragma once

// Text front end for the three literal languages:
//
//   operations   psi(2), 3*sigma(1) + psi(-1), psi(2)*psi(3), [1, 2, 4, 8], [1/2, 0]
//   polynomials  w^2 - w, (1/6)w^3, binom(w,2), 3*binom(w,1)*w
//   monomials    b(2)*etaR(x1), b(3)^2*e^4*etaR(x1^2*a21), e^4*etaR(x:2)

#include <adamsops/hopfeval.hpp>
#include <adamsops/ivp.hpp>
#include <adamsops/opring.hpp>
#include <adamsops/rational.hpp>

#include <cctype>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace adamsops {

namespace detail {

class Cursor {
 public:
  explicit Cursor(std::string_view text) : text_(text) {}

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool at_end() {
    skip_ws();
    return pos_ >= text_.size();
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  bool accept(char c) {
    if (peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  bool accept_word(std::string_view w) {
    skip_ws();
    if (text_.substr(pos_, w.size()) != w) return false;
    std::size_t end = pos_ + w.size();
    if (end < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[end])) || text_[end] == '_')) return false;
    pos_ = end;
    return true;
  }

  bool peek_digit() {
    char c = peek();
    return c >= '0' && c <= '9';
  }

  BigInt integer() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a number");
    return BigInt(std::string(text_.substr(start, pos_ - start)));
  }

  std::int64_t signed_small_integer() {
    bool neg = accept('-');
    BigInt v = integer();
    if (v > 1000000) fail("integer argument too large");
    auto r = static_cast<std::int64_t>(v);
    return neg ? -r : r;
  }

  std::string identifier() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
      ++pos_;
    }
    if (start == pos_) fail("expected an identifier");
    return std::string(text_.substr(start, pos_ - start));
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what + " at position " + std::to_string(pos_) + " in '" + std::string(text_) + "'");
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace detail

// --- operation expressions -------------------------------------------------

/// How list literals inside an operation expression are read.
enum class ListMeaning { Lambda, Sigma };

struct OperationParseOptions {
  std::optional<std::size_t> truncation;  // required agreement with list literals when set
  std::size_t default_truncation = 10;
  ListMeaning lists = ListMeaning::Lambda;
};

namespace detail {

struct OpNode;
using OpNodePtr = std::shared_ptr<const OpNode>;

struct OpNode {
  enum class Kind { Scalar, Psi, Sigma, List, Add, Sub, Mul, Neg } kind;
  BigRational scalar;
  std::int64_t index = 0;
  RationalVector list;
  OpNodePtr lhs, rhs;
};

class OperationParser {
 public:
  explicit OperationParser(std::string_view text) : cur_(text) {}

  OpNodePtr parse() {
    auto node = expr();
    if (!cur_.at_end()) cur_.fail("unexpected trailing input");
    return node;
  }

 private:
  OpNodePtr make(OpNode n) { return std::make_shared<const OpNode>(std::move(n)); }

  OpNodePtr expr() {
    auto node = term();
    while (true) {
      if (cur_.accept('+')) {
        node = make({OpNode::Kind::Add, 0, 0, {}, node, term()});
      } else if (cur_.accept('-')) {
        node = make({OpNode::Kind::Sub, 0, 0, {}, node, term()});
      } else {
        return node;
      }
    }
  }

  OpNodePtr term() {
    auto node = unary();
    while (cur_.accept('*')) node = make({OpNode::Kind::Mul, 0, 0, {}, node, unary()});
    return node;
  }

  OpNodePtr unary() {
    if (cur_.accept('-')) return make({OpNode::Kind::Neg, 0, 0, {}, unary(), nullptr});
    return primary();
  }

  BigRational number() {
    BigInt num = cur_.integer();
    if (cur_.accept('/')) {
      BigInt den = cur_.integer();
      if (den == 0) cur_.fail("zero denominator");
      return BigRational(num, den);
    }
    return BigRational(num);
  }

  OpNodePtr primary() {
    if (cur_.peek_digit()) return make({OpNode::Kind::Scalar, number(), 0, {}, nullptr, nullptr});
    if (cur_.accept('(')) {
      auto node = expr();
      cur_.expect(')');
      return node;
    }
    if (cur_.accept('[')) {
      RationalVector items;
      if (!cur_.accept(']')) {
        do {
          bool neg = cur_.accept('-');
          BigRational v = number();
          items.push_back(neg ? BigRational(-v) : v);
        } while (cur_.accept(','));
        cur_.expect(']');
      }
      if (items.empty()) cur_.fail("empty sequence literal");
      return make({OpNode::Kind::List, 0, 0, std::move(items), nullptr, nullptr});
    }
    for (auto [word, kind] : {std::pair{"psi", OpNode::Kind::Psi}, std::pair{"sigma", OpNode::Kind::Sigma}}) {
      if (cur_.accept_word(word)) {
        cur_.expect('(');
        std::int64_t k = cur_.signed_small_integer();
        cur_.expect(')');
        if (kind == OpNode::Kind::Sigma && k < 0) cur_.fail("sigma index must be nonnegative");
        return make({kind, 0, k, {}, nullptr, nullptr});
      }
    }
    cur_.fail("expected psi(k), sigma(n), a number, a list or '('");
  }

  Cursor cur_;
};

inline void collect_list_lengths(const OpNode& n, std::vector<std::size_t>& out) {
  if (n.kind == OpNode::Kind::List) out.push_back(n.list.size());
  if (n.lhs) collect_list_lengths(*n.lhs, out);
  if (n.rhs) collect_list_lengths(*n.rhs, out);
}

using OpValue = std::variant<BigRational, LambdaSeq>;

inline LambdaSeq as_sequence(const OpValue& v, std::size_t truncation) {
  if (const auto* s = std::get_if<BigRational>(&v)) return *s * psi_lambda(1, truncation);
  return std::get<LambdaSeq>(v);
}

inline OpValue evaluate(const OpNode& n, std::size_t truncation, ListMeaning lists) {
  using K = OpNode::Kind;
  switch (n.kind) {
    case K::Scalar:
      return n.scalar;
    case K::Psi:
      return psi_lambda(n.index, truncation);
    case K::Sigma:
      if (static_cast<std::size_t>(n.index) > truncation) {
        throw DomainError("sigma(" + std::to_string(n.index) + ") exceeds truncation " + std::to_string(truncation));
      }
      return sigma_lambda(static_cast<std::size_t>(n.index), truncation);
    case K::List:
      if (lists == ListMeaning::Sigma) return sigma_to_lambda(SigmaCoeffs(n.list));
      return LambdaSeq(n.list);
    case K::Neg: {
      auto v = evaluate(*n.lhs, truncation, lists);
      if (auto* s = std::get_if<BigRational>(&v)) return BigRational(-*s);
      return BigRational(-1) * std::get<LambdaSeq>(v);
    }
    case K::Add:
    case K::Sub: {
      auto a = evaluate(*n.lhs, truncation, lists);
      auto b = evaluate(*n.rhs, truncation, lists);
      BigRational sign = n.kind == K::Add ? 1 : -1;
      if (std::holds_alternative<BigRational>(a) && std::holds_alternative<BigRational>(b)) {
        return std::get<BigRational>(a) + sign * std::get<BigRational>(b);
      }
      return as_sequence(a, truncation) + sign * as_sequence(b, truncation);
    }
    case K::Mul: {
      auto a = evaluate(*n.lhs, truncation, lists);
      auto b = evaluate(*n.rhs, truncation, lists);
      const auto* sa = std::get_if<BigRational>(&a);
      const auto* sb = std::get_if<BigRational>(&b);
      if (sa && sb) return *sa * *sb;
      if (sa) return *sa * std::get<LambdaSeq>(b);
      if (sb) return *sb * std::get<LambdaSeq>(a);
      return multiply(std::get<LambdaSeq>(a), std::get<LambdaSeq>(b));
    }
  }
  throw Error("unreachable");
}

}  // namespace detail

/// Parses an operation expression into its eigenvalue sequence. A bare
/// scalar c denotes c times the identity Psi^1. List literals fix the
/// truncation; mixing lists of different lengths, or a list with a
/// conflicting explicit truncation, is a parse error.
inline LambdaSeq parse_operation(std::string_view text, const OperationParseOptions& opts = {}) {
  auto root = detail::OperationParser(text).parse();
  std::vector<std::size_t> lengths;
  detail::collect_list_lengths(*root, lengths);
  std::size_t truncation = opts.truncation.value_or(opts.default_truncation);
  if (!lengths.empty()) {
    for (auto l : lengths) {
      if (l != lengths.front()) throw ParseError("sequence literals of different lengths in '" + std::string(text) + "'");
    }
    if (opts.truncation && *opts.truncation + 1 != lengths.front()) {
      throw ParseError("sequence literal of length " + std::to_string(lengths.front()) +
                       " conflicts with truncation " + std::to_string(*opts.truncation));
    }
    truncation = lengths.front() - 1;
  }
  return detail::as_sequence(detail::evaluate(*root, truncation, opts.lists), truncation);
}

// --- polynomial expressions ------------------------------------------------

namespace detail {

class PolyParser {
 public:
  explicit PolyParser(std::string_view text) : cur_(text) {}

  IvpPoly parse() {
    auto p = expr();
    if (!cur_.at_end()) cur_.fail("unexpected trailing input");
    return p;
  }

 private:
  IvpPoly expr() {
    IvpPoly p = cur_.accept('-') ? -term() : term();
    while (true) {
      if (cur_.accept('+')) {
        p = p + term();
      } else if (cur_.accept('-')) {
        p = p - term();
      } else {
        return p;
      }
    }
  }

  bool starts_factor() {
    char c = cur_.peek();
    return (c >= '0' && c <= '9') || c == '(' || c == 'w' || c == 'b';
  }

  IvpPoly term() {
    IvpPoly p = factor();
    while (true) {
      if (cur_.accept('*')) {
        p = p * factor();
      } else if (cur_.accept('/')) {
        IvpPoly d = factor();
        if (d.degree() != 0 || d.is_zero()) cur_.fail("division only by nonzero constants");
        p = (BigRational(1) / d.coeff(0)) * p;
      } else if (starts_factor()) {
        p = p * factor();
      } else {
        return p;
      }
    }
  }

  IvpPoly factor() {
    IvpPoly base = atom();
    if (cur_.accept('^')) {
      BigInt e = cur_.integer();
      if (e > 64) cur_.fail("exponent too large");
      IvpPoly r = IvpPoly::constant(1);
      for (int i = 0; i < static_cast<int>(e); ++i) r = r * base;
      return r;
    }
    return base;
  }

  IvpPoly atom() {
    if (cur_.peek_digit()) return IvpPoly::constant(BigRational(cur_.integer()));
    if (cur_.accept('(')) {
      auto p = expr();
      cur_.expect(')');
      return p;
    }
    if (cur_.accept_word("binom")) {
      cur_.expect('(');
      if (!cur_.accept_word("w")) cur_.fail("binom takes w as its first argument");
      cur_.expect(',');
      BigInt k = cur_.integer();
      if (k > 1000) cur_.fail("binomial index too large");
      cur_.expect(')');
      return IvpPoly::binom(static_cast<std::size_t>(k));
    }
    if (cur_.accept_word("w")) return IvpPoly::variable();
    cur_.fail("expected w, binom(w,k), a number or '('");
  }

  Cursor cur_;
};

}  // namespace detail

inline IvpPoly parse_polynomial(std::string_view text) { return detail::PolyParser(text).parse(); }

// --- Hopf monomials --------------------------------------------------------

/// Parses b(i), b(i)^k, e^K (K even) and a single etaR(arg) joined by '*'.
/// arg is 1, a product of dictionary elements such as x1^2*a21, or a generic
/// name with optional half-degree "x:2"; without one, the half-degree is the
/// value that places the monomial in QMU_*(MU_0).
inline HopfMonomial parse_monomial(std::string_view text, const Dictionary& dict) {
  detail::Cursor cur(text);
  std::vector<std::size_t> alpha;
  std::size_t h = 0;
  std::optional<std::vector<std::pair<std::string, std::size_t>>> factors;
  std::optional<std::string> generic_name;
  std::optional<std::size_t> generic_degree;
  bool saw_eta = false;
  do {
    if (cur.accept_word("b")) {
      cur.expect('(');
      BigInt i = cur.integer();
      cur.expect(')');
      if (i == 0 || i > 64) cur.fail("b-index must lie in [1, 64]");
      std::size_t reps = 1;
      if (cur.accept('^')) reps = static_cast<std::size_t>(cur.integer());
      for (std::size_t r = 0; r < reps; ++r) alpha.push_back(static_cast<std::size_t>(i));
    } else if (cur.accept_word("e")) {
      std::size_t e = 1;
      if (cur.accept('^')) e = static_cast<std::size_t>(cur.integer());
      if (e % 2 != 0) cur.fail("only even powers of e occur");
      h += e / 2;
    } else if (cur.accept_word("etaR")) {
      if (saw_eta) cur.fail("only one etaR factor is allowed");
      saw_eta = true;
      cur.expect('(');
      if (cur.peek_digit()) {
        if (cur.integer() != 1) cur.fail("the only numeric etaR argument is 1");
        factors.emplace();
      } else {
        std::string name = cur.identifier();
        if (dict.contains(name)) {
          factors.emplace();
          while (true) {
            std::size_t e = 1;
            if (cur.accept('^')) e = static_cast<std::size_t>(cur.integer());
            factors->emplace_back(name, e);
            if (!cur.accept('*')) break;
            name = cur.identifier();
            if (!dict.contains(name)) cur.fail("unknown dictionary element '" + name + "'");
          }
        } else {
          generic_name = name;
          if (cur.accept(':')) generic_degree = static_cast<std::size_t>(cur.integer());
        }
      }
      cur.expect(')');
    } else {
      cur.fail("expected b(i), e^K or etaR(...)");
    }
  } while (cur.accept('*'));
  if (!cur.at_end()) cur.fail("unexpected trailing input");

  if (generic_name) {
    std::size_t deg = generic_degree.value_or(alpha.size() + h);
    return HopfMonomial::with_generic(std::move(alpha), h, deg, *generic_name);
  }
  auto t = dict.product(factors.value_or(std::vector<std::pair<std::string, std::size_t>>{}));
  return HopfMonomial(std::move(alpha), h, t.value, t.half_degree, t.name);
}

}  // namespace adamsops
