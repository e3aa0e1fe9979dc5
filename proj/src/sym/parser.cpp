// Recursive-descent parser for the expression grammar:
//   expr  := term (('+'|'-') term)*
//   term  := unary (('*'|'/') unary)*
//   unary := ('-'|'+') unary | power
//   power := primary ('^' unary)?
//   primary := integer | ident | ident '\''* '(' expr ')' | '(' expr ')'

#include <algorithm>
#include <cctype>
#include <optional>

#include "bgg/sym/errors.hpp"
#include "bgg/sym/expr.hpp"

namespace bgg::sym {

namespace {

struct Sugar {
  const char* name;
  Func f;
  bool reciprocal;  // 1/f(u)
  std::optional<Func> numerator;
};

const Sugar kSugar[] = {
    {"cot", Func::Sin, false, Func::Cos},  {"csc", Func::Sin, true, std::nullopt},
    {"sec", Func::Cos, true, std::nullopt}, {"coth", Func::Sinh, false, Func::Cosh},
    {"csch", Func::Sinh, true, std::nullopt}, {"sech", Func::Cosh, true, std::nullopt},
    {"tanh", Func::Cosh, false, Func::Sinh},
};

std::optional<Func> core_func(std::string_view s) {
  if (s == "exp") return Func::Exp;
  if (s == "log") return Func::Log;
  if (s == "sin") return Func::Sin;
  if (s == "cos") return Func::Cos;
  if (s == "tan") return Func::Tan;
  if (s == "sinh") return Func::Sinh;
  if (s == "cosh") return Func::Cosh;
  return std::nullopt;
}

bool contains(const std::vector<std::string>& v, std::string_view s) {
  return std::find(v.begin(), v.end(), s) != v.end();
}

class Parser {
 public:
  Parser(std::string_view text, const ParseOptions& opts) : s_(text), opts_(opts) {}

  Expr run() {
    skip();
    if (pos_ == s_.size()) throw ParseError("empty expression", pos_);
    Expr e = expr();
    skip();
    if (pos_ != s_.size())
      throw ParseError(std::string("unexpected '") + s_[pos_] + "'", pos_);
    return e;
  }

 private:
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) {
      if (pos_ >= s_.size())
        throw ParseError(std::string("expected '") + c + "' but input ended", pos_);
      throw ParseError(std::string("expected '") + c + "'", pos_);
    }
  }

  Expr expr() {
    Expr e = term();
    while (true) {
      if (accept('+')) {
        e = Expr::binary(Expr::Kind::Add, e, term());
      } else if (accept('-')) {
        e = Expr::binary(Expr::Kind::Sub, e, term());
      } else {
        return e;
      }
    }
  }

  Expr term() {
    Expr e = unary();
    while (true) {
      if (accept('*')) {
        e = Expr::binary(Expr::Kind::Mul, e, unary());
      } else if (accept('/')) {
        e = Expr::binary(Expr::Kind::Div, e, unary());
      } else {
        return e;
      }
    }
  }

  Expr unary() {
    if (accept('-')) return Expr::neg(unary());
    if (accept('+')) return unary();
    return power();
  }

  Expr power() {
    Expr base = primary();
    skip();
    if (accept('^')) {
      std::size_t at = pos_;
      Expr ex = unary();
      auto q = to_ratexpr(ex).as_rational();
      if (!q || q->get_den() != 1 || !q->get_num().fits_slong_p())
        throw ParseError("exponent must be an integer constant", at);
      return Expr::power(base, q->get_num().get_si());
    }
    return base;
  }

  Expr primary() {
    skip();
    if (pos_ >= s_.size()) throw ParseError("unexpected end of input", pos_);
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      Expr e = expr();
      expect(')');
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (pos_ < s_.size() && s_[pos_] == '.')
        throw ParseError("decimal literals are not supported; use a ratio a/b", pos_);
      return Expr::number(mpq_class(mpz_class(std::string(s_.substr(start, pos_ - start)))));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < s_.size() &&
             (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
        ++pos_;
      std::string id(s_.substr(start, pos_ - start));
      unsigned primes = 0;
      while (pos_ < s_.size() && s_[pos_] == '\'') {
        ++primes;
        ++pos_;
      }
      skip();
      bool call = pos_ < s_.size() && s_[pos_] == '(';
      if (call) return application(id, primes, start);
      if (primes > 0) throw ParseError("expected '(' after derivative marks", pos_);
      return identifier(id, start);
    }
    throw ParseError(std::string("unexpected '") + c + "'", pos_);
  }

  Expr application(const std::string& id, unsigned primes, std::size_t start) {
    bool opaque = contains(opts_.functions, id);
    if (primes > 0 && !opaque)
      throw ParseError("derivative marks are only allowed on declared functions", start);
    expect('(');
    std::size_t arg_pos = pos_;
    Expr arg = expr();
    expect(')');
    if (opaque) return Expr::function(id, primes, arg);
    if (auto f = core_func(id)) return Expr::func(*f, arg);
    if (id == "sqrt") {
      auto q = to_ratexpr(arg).as_rational();
      if (!q || *q < 0)
        throw ParseError("sqrt takes a nonnegative rational constant", arg_pos);
      if (q->get_den() == 1) return Expr::sqrt(q->get_num());
      return Expr::binary(Expr::Kind::Div, Expr::sqrt(q->get_num() * q->get_den()),
                          Expr::number(mpq_class(q->get_den())));
    }
    for (const auto& s : kSugar) {
      if (id != s.name) continue;
      Expr den = Expr::func(s.f, arg);
      Expr num = s.numerator ? Expr::func(*s.numerator, arg) : Expr::number(1);
      return Expr::binary(Expr::Kind::Div, num, den);
    }
    throw UnknownIdentifier(id, start);
  }

  Expr identifier(const std::string& id, std::size_t start) {
    if (contains(opts_.chart, id)) return Expr::variable(id);
    if (contains(opts_.fields, id)) return Expr::field(id, {});
    // Field derivatives print as name_v1_v2...
    for (const auto& f : opts_.fields) {
      if (id.size() <= f.size() + 1 || id.compare(0, f.size(), f) != 0 || id[f.size()] != '_')
        continue;
      std::vector<std::string> parts;
      std::size_t i = f.size() + 1;
      bool ok = true;
      while (i <= id.size()) {
        std::size_t j = id.find('_', i);
        if (j == std::string::npos) j = id.size();
        std::string v = id.substr(i, j - i);
        if (!contains(opts_.chart, v)) {
          ok = false;
          break;
        }
        parts.push_back(v);
        i = j + 1;
      }
      if (ok) return Expr::field(f, parts);
    }
    throw UnknownIdentifier(id, start);
  }

  std::string_view s_;
  const ParseOptions& opts_;
  std::size_t pos_ = 0;
};

}  // namespace

Expr parse(std::string_view text, const ParseOptions& opts) { return Parser(text, opts).run(); }

}  // namespace bgg::sym
