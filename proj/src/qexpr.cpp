#include "parlab/qexpr.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <sstream>

namespace parlab {

ParseError::ParseError(std::string message, std::size_t offset, std::vector<std::string> expected)
    : std::runtime_error([&] {
        std::ostringstream os;
        os << "at offset " << offset << ": " << message;
        if (!expected.empty()) {
          os << " (expected ";
          for (std::size_t i = 0; i < expected.size(); ++i) os << (i ? ", " : "") << expected[i];
          os << ")";
        }
        return os.str();
      }()),
      offset_(offset),
      expected_(std::move(expected)) {}

Monomial Monomial::eta_quotient(std::size_t qshift, std::vector<EtaFactor> factors) {
  Monomial m{qshift, {}};
  for (const auto& f : factors) {
    auto it = std::find_if(m.factors.begin(), m.factors.end(), [&](const EtaFactor& g) { return g.t == f.t; });
    if (it == m.factors.end())
      m.factors.push_back(f);
    else
      it->e += f.e;
  }
  std::erase_if(m.factors, [](const EtaFactor& f) { return f.e == 0; });
  return m;
}

namespace {

enum class Tok { plus, star, slash, caret, lparen, rparen, q, f, uint, end };

struct Token {
  Tok kind;
  std::size_t offset;
  std::uint64_t value = 0;
};

std::vector<Token> lex(std::string_view s) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    const char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    const std::size_t at = i;
    switch (c) {
      case '+': out.push_back({Tok::plus, at}); ++i; continue;
      case '*': out.push_back({Tok::star, at}); ++i; continue;
      case '/': out.push_back({Tok::slash, at}); ++i; continue;
      case '^': out.push_back({Tok::caret, at}); ++i; continue;
      case '(': out.push_back({Tok::lparen, at}); ++i; continue;
      case ')': out.push_back({Tok::rparen, at}); ++i; continue;
      case 'q': out.push_back({Tok::q, at}); ++i; continue;
      case 'f': out.push_back({Tok::f, at}); ++i; continue;
      default: break;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::uint64_t v = 0;
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
        if (v > (std::numeric_limits<std::uint32_t>::max() - 9) / 10)
          throw ParseError("integer literal too large", at, {});
        v = v * 10 + static_cast<std::uint64_t>(s[i] - '0');
        ++i;
      }
      out.push_back({Tok::uint, at, v});
      continue;
    }
    throw ParseError(std::string("unexpected character '") + c + "'", at, {"q", "f", "(", "+", "*", "/", "^", ")"});
  }
  out.push_back({Tok::end, s.size()});
  return out;
}

struct Located {
  EtaFactor factor;
  std::size_t offset;
};

struct PartialMonomial {
  std::size_t qshift = 0;
  std::vector<Located> factors;
};

using PartialSum = std::vector<PartialMonomial>;

class Parser {
 public:
  explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

  QExpr run() {
    PartialSum sum = expr();
    if (peek().kind != Tok::end) fail("unexpected token", {"+", "*", "/", "end of input"});
    QExpr out;
    for (auto& pm : sum) out.terms.push_back(finish(pm));
    return out;
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  const Token& next() { return toks_[pos_++]; }

  [[noreturn]] void fail(const std::string& msg, std::vector<std::string> expected) const {
    throw ParseError(msg, peek().offset, std::move(expected));
  }

  PartialSum expr() {
    PartialSum sum = term();
    while (peek().kind == Tok::plus) {
      next();
      PartialSum rhs = term();
      sum.insert(sum.end(), rhs.begin(), rhs.end());
    }
    return sum;
  }

  PartialSum term() {
    PartialSum acc = factor();
    for (;;) {
      if (peek().kind == Tok::star) {
        next();
        acc = distribute(acc, factor());
      } else if (peek().kind == Tok::slash) {
        next();
        if (peek().kind != Tok::f) fail("only an f atom may follow '/'", {"f"});
        PartialMonomial den = f_atom();
        den.factors.front().factor.e = -den.factors.front().factor.e;
        acc = distribute(acc, PartialSum{den});
      } else {
        return acc;
      }
    }
  }

  PartialSum factor() {
    switch (peek().kind) {
      case Tok::q: {
        next();
        PartialMonomial m;
        m.qshift = 1;
        if (peek().kind == Tok::caret) {
          next();
          m.qshift = static_cast<std::size_t>(uint_literal());
        }
        return {m};
      }
      case Tok::f:
        return {f_atom()};
      case Tok::lparen: {
        next();
        PartialSum inner = expr();
        if (peek().kind != Tok::rparen) fail("unbalanced parenthesis", {")", "+", "*", "/"});
        next();
        return inner;
      }
      default:
        fail(peek().kind == Tok::end ? "unexpected end of input" : "unexpected token", {"q", "f", "("});
    }
  }

  PartialMonomial f_atom() {
    const std::size_t at = next().offset;
    if (peek().kind != Tok::uint) fail("f must be followed by its base index", {"uint"});
    const Token& base = next();
    if (base.value < 1 || base.value > static_cast<std::uint64_t>(kMaxEtaBase))
      throw ParseError("eta base must lie in 1.." + std::to_string(kMaxEtaBase), base.offset, {});
    std::int64_t e = 1;
    if (peek().kind == Tok::caret) {
      next();
      const std::size_t eat = peek().offset;
      const auto v = uint_literal();
      if (v == 0) throw ParseError("eta exponent must be nonzero; write the unit as q^0", eat, {});
      if (v > static_cast<std::uint64_t>(kMaxEtaExponent))
        throw ParseError("eta exponent exceeds " + std::to_string(kMaxEtaExponent), eat, {});
      e = static_cast<std::int64_t>(v);
    }
    PartialMonomial m;
    m.factors.push_back({{static_cast<std::int64_t>(base.value), e}, at});
    return m;
  }

  std::uint64_t uint_literal() {
    if (peek().kind != Tok::uint) fail("expected an unsigned integer", {"uint"});
    return next().value;
  }

  static PartialSum distribute(const PartialSum& a, const PartialSum& b) {
    PartialSum out;
    for (const auto& x : a)
      for (const auto& y : b) {
        PartialMonomial m = x;
        m.qshift += y.qshift;
        m.factors.insert(m.factors.end(), y.factors.begin(), y.factors.end());
        out.push_back(std::move(m));
      }
    return out;
  }

  static Monomial finish(const PartialMonomial& pm) {
    Monomial m{pm.qshift, {}};
    for (const auto& [f, at] : pm.factors) {
      if (std::any_of(m.factors.begin(), m.factors.end(), [&](const EtaFactor& g) { return g.t == f.t; }))
        throw ParseError("duplicate base f" + std::to_string(f.t) + " within one monomial", at, {});
      m.factors.push_back(f);
    }
    return m;
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

}  // namespace

QExpr parse(std::string_view text) { return Parser(lex(text)).run(); }

std::string render(const Monomial& m) {
  std::string s;
  if (m.qshift > 0) s = m.qshift == 1 ? "q" : "q^" + std::to_string(m.qshift);
  for (const auto& f : m.factors) {
    std::string atom = "f" + std::to_string(f.t);
    const std::int64_t mag = f.e < 0 ? -f.e : f.e;
    if (mag != 1) atom += "^" + std::to_string(mag);
    if (f.e < 0) {
      if (s.empty()) s = "q^0";
      s += "/" + atom;
    } else {
      s += (s.empty() ? "" : "*") + atom;
    }
  }
  return s.empty() ? "q^0" : s;
}

std::string render(const QExpr& e) {
  std::string s;
  for (std::size_t i = 0; i < e.terms.size(); ++i) s += (i ? " + " : "") + render(e.terms[i]);
  return s;
}

BitSeries evaluate(const Monomial& m, std::size_t trunc) {
  if (trunc == 0) throw std::invalid_argument("series truncation must be positive");
  if (m.qshift >= trunc) return BitSeries::zero(trunc);
  BitSeries acc = BitSeries::one(trunc);
  bool first = true;
  for (const auto& f : m.factors) {
    BitSeries p = eta_power(f.t, f.e, trunc);
    acc = first ? std::move(p) : mul(acc, p);
    first = false;
  }
  return shift(acc, m.qshift);
}

BitSeries evaluate(const QExpr& e, std::size_t trunc) {
  BitSeries acc = BitSeries::zero(trunc);
  for (const auto& m : e.terms) acc = add(acc, evaluate(m, trunc));
  return acc;
}

QExpr singular_parity_expr(std::int64_t k) {
  if (k < 1) throw std::invalid_argument("(4k, k) family needs k >= 1");
  return QExpr{{Monomial::eta_quotient(0, {{k, 3}, {1, -1}})}};
}

}  // namespace parlab
